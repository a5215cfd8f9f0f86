"""Named verification suites: every identity the toolkit can check, runnable
as a battery.  Symbolic suites are exact; numeric suites report the worst
relative residual over a seeded sample batch."""

from __future__ import annotations

from typing import Callable, Dict, List, Optional

from . import numeric, poisson, relations, surfaces, symmetry, words
from .numeric import ToleranceConfig, VerificationReport
from .poisson import SurfaceStructure, SymbolicCheck
from .polyring import NormalForm, t

Report = object  # VerificationReport | SymbolicCheck


def _sym(name: str, ok: bool, detail: str = "") -> SymbolicCheck:
    return SymbolicCheck(name, ok, detail)


def _structures(surface: Optional[str]) -> List[SurfaceStructure]:
    if surface in (None, "both"):
        return [SurfaceStructure("trinion"), SurfaceStructure("torus")]
    return [SurfaceStructure(surface)]


# -- numeric suites -----------------------------------------------------------------


def kernel_suite(cfg: ToleranceConfig, surface: Optional[str] = None) -> List[Report]:
    """The two kernel relations and the hypersurface relation at random samples."""
    big_p, big_q = relations.big_P(), relations.big_Q()
    worst_sum = worst_prod = 0.0
    for sample in numeric.sample_batch(cfg.seed, cfg.sample_count):
        c = sample.coords
        worst_sum = max(worst_sum, numeric.relative_residual(c[5] + c[-5], big_p.evaluate(c)))
        worst_prod = max(worst_prod, numeric.relative_residual(c[5] * c[-5], big_q.evaluate(c)))
    return [
        VerificationReport("kernel: t5 + t-5 = P", cfg.sample_count, worst_sum, worst_sum < cfg.relative_tol),
        VerificationReport("kernel: t5 * t-5 = Q", cfg.sample_count, worst_prod, worst_prod < cfg.relative_tol),
        numeric.check_polynomial_identity(
            relations.defining_relation(), 0, cfg, "hypersurface: t5^2 - P*t5 + Q = 0"
        ),
        _sym("hypersurface: reduce(defining relation) = 0", relations.defining_relation().reduce().is_zero),
    ]


def traces_suite(cfg: ToleranceConfig, surface: Optional[str] = None) -> List[Report]:
    """Every cached coordinate against a direct matrix-product evaluation."""
    reports = []
    for coord, word in sorted(words.COORDINATE_WORDS.items(), key=lambda kv: abs(kv[0]) * 2 - (kv[0] > 0)):
        reports.append(
            numeric.check_word_function_identity([(1, word)], t(coord), cfg, name=f"coordinate t{coord}")
        )
    reports.append(
        numeric.check_word_function_identity(
            [(1, words.COMMUTATOR_WORD)], t(5), cfg, name="coordinate t5"
        )
    )
    reports.append(
        numeric.check_word_function_identity(
            [(1, words.REVERSED_COMMUTATOR_WORD)],
            NormalForm.from_base(relations.big_P()) - t(5),
            cfg,
            name="alias t-5 = P - t5",
        )
    )
    return reports


#: words certifying each enabled rewrite rule
RULE_CERTIFICATION_WORDS = (
    ("free reduction", (1, -2, 2, -1, 1)),
    ("cyclic reduction", (1, 2, -1)),
    ("power rule tr(x1^2)", (1, 1)),
    ("power rule tr(x1^-2)", (-1, -1)),
    ("power rule tr(x1^2 x2)", (1, 1, 2)),
    ("power rule tr(x2^2 x1)", (2, 2, 1)),
    ("power rule tr(x2^-2 x1^-1)", (-2, -2, -1)),
    ("power rule tr(x1^3)", (1, 1, 1)),
    ("block power tr((x1 x2)^2)", (1, 2, 1, 2)),
    ("mixed identity tr(x1 x2 x1 x2^-1)", (1, 2, 1, -2)),
    ("mixed identity tr(x1^-1 x2 x1^-1 x2^-1)", (-1, 2, -1, -2)),
    ("mixed identity tr(x2 x1 x2 x1^-1)", (2, 1, 2, -1)),
    ("mixed identity tr(x2^-1 x1 x2^-1 x1^-1)", (-2, 1, -2, -1)),
    ("nielsen image tr(x1^-2 x2^-1)", (-1, -1, -2)),
)


def words_suite(cfg: ToleranceConfig, surface: Optional[str] = None) -> List[Report]:
    """Certify the symbolic rewrite rules against the matrix oracle, then the
    four-term trace-word expression for the trinion {t4, t5} coefficient."""
    reports = []
    for label, word in RULE_CERTIFICATION_WORDS:
        reports.append(
            numeric.check_word_function_identity([(1, word)], words.trace_of(word), cfg, name=label)
        )
    comment_terms = [
        (1, (1, -2, -1, -2, 1, 2)),
        (-1, (1, -2)),
        (1, (-2, -2, 1, 1, 2, -1)),
        (-1, (-2, 1, -2, 1, 2, -1)),
    ]
    reports.append(
        numeric.check_word_function_identity(
            comment_terms, poisson.trinion_a45(), cfg, name="four-term trace expression = a(4,5)"
        )
    )
    return reports


def sym_suite(cfg: ToleranceConfig, surface: Optional[str] = None) -> List[Report]:
    """Numeric certification of the dihedral and Nielsen action tables."""
    return symmetry.certify_dihedral_action(cfg) + symmetry.certify_nielsen_action(cfg)


# -- symbolic suites -----------------------------------------------------------------


def corollary_suite(cfg: ToleranceConfig, surface: Optional[str] = None) -> List[Report]:
    """Exact symmetrization identities tying p, q to P, Q, and invariance."""
    s_d = symmetry.s_dihedral()
    big_p = NormalForm.from_base(relations.big_P())
    big_q = NormalForm.from_base(relations.big_Q())
    checks = [
        _sym("S_D(p) - 3 = P", s_d.apply(NormalForm.from_base(relations.little_p())) - 3 == big_p),
        _sym("S_D(q) + 9 = Q", s_d.apply(NormalForm.from_base(relations.little_q())) + 9 == big_q),
    ]
    for g in symmetry.all_elements():
        checks.append(
            _sym(
                f"P, Q fixed by {g.name}",
                symmetry.apply_dihedral(g, big_p) == big_p and symmetry.apply_dihedral(g, big_q) == big_q,
            )
        )
        checks.append(
            _sym(
                f"defining relation fixed by {g.name}",
                symmetry.apply_dihedral(g, relations.defining_relation()).reduce().is_zero,
            )
        )
    half = symmetry.half_sigma1_sigma2()
    expected = symmetry.GroupRingOperator(
        {"e": 1, "i": 1, "i1": -1, "i2": -1, "t": -1, "it": -1, "i1t": 1, "i2t": 1}
    )
    checks.append(_sym("1/2 Sigma1 Sigma2 expands to the eight-term operator", half == expected))
    return checks


def jacobi_suite(cfg: ToleranceConfig, surface: Optional[str] = None) -> List[Report]:
    reports: List[Report] = []
    for structure in _structures(surface):
        reports.extend(poisson.jacobi_suite(poisson.bracket_table(structure)))
    return reports


def ideal_suite(cfg: ToleranceConfig, surface: Optional[str] = None) -> List[Report]:
    reports: List[Report] = []
    for structure in _structures(surface):
        reports.extend(poisson.poisson_ideal_check(poisson.bracket_table(structure)))
    return reports


def symmetry_suite(cfg: ToleranceConfig, surface: Optional[str] = None) -> List[Report]:
    reports: List[Report] = []
    for structure in _structures(surface):
        table = poisson.bracket_table(structure)
        if structure.surface == "trinion":
            reports.extend(poisson.check_trinion_consistency(table))
        else:
            reports.extend(poisson.check_torus_symmetry(table))
        report = poisson.bivector_report(structure)
        reports.append(
            _sym(
                f"{structure.surface} factored bi-vector reproduces the raw table "
                f"({report.covered_pairs} pairs)",
                report.matches,
                "; ".join(report.mismatches),
            )
        )
    return reports


def casimir_suite(cfg: ToleranceConfig, surface: Optional[str] = None) -> List[Report]:
    reports: List[Report] = []
    expected = {"trinion": [1, -1, 2, -2, 3, -3], "torus": [5]}
    found: Dict[str, List[int]] = {}
    for structure in _structures(surface):
        table = poisson.bracket_table(structure)
        cas = poisson.casimirs(table)
        found[structure.surface] = cas
        reports.append(
            _sym(
                f"{structure.surface} generator Casimirs = {{{', '.join('t%d' % c for c in expected[structure.surface])}}}",
                cas == expected[structure.surface],
                f"found {cas}",
            )
        )
        # boundary traces must be Casimir functions of the matching table
        topology = surfaces.TRINION if structure.surface == "trinion" else surfaces.ONE_HOLED_TORUS
        for word in surfaces.boundary_words(topology):
            trace = words.trace_of(word)
            ok = all(
                poisson.bracket(trace, t(j), table).is_zero for j in poisson.ALL_COORDINATES
            )
            reports.append(
                _sym(f"{structure.surface} boundary trace tr({words.word_to_str(word)}) is Casimir", ok)
            )
    if len(found) == 2:
        reports.append(
            _sym(
                "Casimir counts 6 vs 1 distinguish the two structures",
                len(found["trinion"]) == 6 and len(found["torus"]) == 1,
            )
        )
    return reports


def dims_suite(cfg: ToleranceConfig, surface: Optional[str] = None) -> List[Report]:
    checks = []
    for topology, leaf in ((surfaces.TRINION, 2), (surfaces.ONE_HOLED_TORUS, 6)):
        name = surfaces.surface_name(topology)
        checks.append(_sym(f"{name}: chi = -1", surfaces.euler_char(topology) == -1))
        checks.append(_sym(f"{name}: rank = 2", surfaces.rank(topology) == 2))
        checks.append(_sym(f"{name}: dim = 8", surfaces.dim_character_variety(topology) == 8))
        checks.append(_sym(f"{name}: generic leaf dim = {leaf}", surfaces.generic_leaf_dimension(topology) == leaf))
        checks.append(
            _sym(
                f"{name}: dim = leaf dim + 2 * boundaries",
                surfaces.dim_character_variety(topology)
                == surfaces.generic_leaf_dimension(topology) + 2 * topology.boundaries,
            )
        )
    return checks


SUITES: Dict[str, Callable[[ToleranceConfig, Optional[str]], List[Report]]] = {
    "kernel": kernel_suite,
    "traces": traces_suite,
    "words": words_suite,
    "sym": sym_suite,
    "corollary": corollary_suite,
    "jacobi": jacobi_suite,
    "ideal": ideal_suite,
    "symmetry": symmetry_suite,
    "casimir": casimir_suite,
    "dims": dims_suite,
}

SUITE_ORDER = tuple(SUITES)


def run_suite(name: str, cfg: ToleranceConfig, surface: Optional[str] = None) -> List[Report]:
    if name == "all":
        reports: List[Report] = []
        for suite in SUITE_ORDER:
            reports.extend(SUITES[suite](cfg, surface))
        return reports
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {('all',) + SUITE_ORDER}")
    return SUITES[name](cfg, surface)


def all_passed(reports: List[Report]) -> bool:
    return all(getattr(r, "passed", None) is True for r in reports)
