"""The two boundary Poisson structures on the rank-2 SL(3,C) trace ring.

Each structure is a 9x9 antisymmetric table of bracket coefficients over
the nine trace coordinates, extended to the whole coordinate ring as a
bi-derivation acting on canonical free-ring lifts.  The three-holed-sphere
table has six coordinate Casimirs and three nonzero entries; the
one-holed-torus table has t5 as its only coordinate Casimir and 24 nonzero
entries among the base coordinates.

The table entries are transcribed data.  Every derivable redundancy is
exposed as an executable check: the derivative formulation of the trinion
t5-column, the Leibniz-consistency of bracketing with the relation
constants, the Jacobi identity on all coordinate triples, preservation of
the defining ideal (which is what makes the quotient bracket well
defined), the dihedral operator relations among torus entries, and the
operator-factored bi-vector presentations.  A transcription typo cannot
survive this battery.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Tuple

from . import relations, symmetry
from .polyring import (
    ALL_COORDINATES,
    COORD_POSITION,
    BasePolynomial,
    FreePolynomial,
    NormalForm,
    T5,
    t,
)

SURFACES = ("trinion", "torus")

Pair = Tuple[int, int]

_THIRD = Fraction(1, 3)
_TWO_THIRDS = Fraction(2, 3)


@dataclass(frozen=True)
class SurfaceStructure:
    """A chi = -1 surface together with an orientation sign."""

    surface: str
    orientation: int = 1

    def __post_init__(self):
        if self.surface not in SURFACES:
            raise ValueError(f"unknown surface {self.surface!r}; expected one of {SURFACES}")
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")


def canonical_pair(i: int, j: int) -> Tuple[Pair, int]:
    """Order a coordinate pair by the fixed coordinate order; sign tracks swaps."""
    if i == j:
        raise ValueError("bracket pair must be distinct")
    if COORD_POSITION[i] < COORD_POSITION[j]:
        return (i, j), 1
    return (j, i), -1


class BracketTable:
    """Antisymmetric coefficient table; entries stored for ordered pairs only."""

    def __init__(self, structure: SurfaceStructure, entries: Mapping[Pair, NormalForm]):
        self.structure = structure
        self._entries: Dict[Pair, NormalForm] = {}
        for (i, j), value in entries.items():
            if COORD_POSITION[i] >= COORD_POSITION[j]:
                raise ValueError(f"entry ({i},{j}) is not in canonical order")
            if not value.is_zero:
                self._entries[(i, j)] = value

    def entry(self, i: int, j: int) -> NormalForm:
        """Coefficient of the ordered pair; antisymmetry served structurally."""
        if i == j:
            return NormalForm.zero()
        (a, b), sign = canonical_pair(i, j)
        value = self._entries.get((a, b))
        if value is None:
            return NormalForm.zero()
        return value if sign > 0 else -value

    def nonzero_pairs(self) -> List[Pair]:
        return sorted(self._entries, key=lambda p: (COORD_POSITION[p[0]], COORD_POSITION[p[1]]))

    def to_json(self) -> dict:
        return {
            "surface": self.structure.surface,
            "orientation": self.structure.orientation,
            "entries": [
                {"pair": [i, j], "text": self.entry(i, j).text(), "terms": self.entry(i, j).to_json()}
                for i, j in self.nonzero_pairs()
            ],
        }


# -- trinion entries -------------------------------------------------------------


@lru_cache(maxsize=1)
def trinion_a45() -> NormalForm:
    """{t4, t5}, stored as the explicit expansion."""
    return (
        t(4) * (t(1) * t(-1) + t(2) * t(-2) + t(3) * t(-3) - t(5) - 6)
        + t(-4) * (2 * t(1) * t(3) + 2 * t(-2) * t(-3) - 4 * t(-1) * t(2))
        + t(5) * t(1) * t(-2)
        + 3 * t(-4) ** 2
        - 3 * t(-1) * t(-3)
        - 3 * t(2) * t(3)
        + 3 * t(1) * t(-2)
        + t(-1) ** 2 * t(-2)
        + t(1) ** 2 * t(-3)
        + t(2) * t(-3) ** 2
        + t(1) * t(2) ** 2
        + t(3) * t(-2) ** 2
        + t(-1) * t(3) ** 2
        + t(-1) ** 2 * t(2) ** 2
        - t(1) * t(-1) * t(2) * t(3)
        - t(-3) * t(-2) * t(-1) * t(2)
        - t(1) * t(2) * t(-2) ** 2
        - t(-2) * t(-1) * t(1) ** 2
    )


@lru_cache(maxsize=1)
def trinion_am45() -> NormalForm:
    """{t-4, t5}, stored as the explicit expansion."""
    return (
        t(-4) * (t(5) - t(-1) * t(1) - t(2) * t(-2) - t(3) * t(-3) + 6)
        + t(4) * (4 * t(1) * t(-2) - 2 * t(-1) * t(-3) - 2 * t(2) * t(3))
        - t(5) * t(-1) * t(2)
        - 3 * t(4) ** 2
        + 3 * t(1) * t(3)
        + 3 * t(-2) * t(-3)
        - 3 * t(-1) * t(2)
        - t(1) ** 2 * t(2)
        - t(-1) ** 2 * t(3)
        - t(-2) * t(3) ** 2
        - t(-1) * t(-2) ** 2
        - t(-3) * t(2) ** 2
        - t(1) * t(-3) ** 2
        - t(1) ** 2 * t(-2) ** 2
        + t(-1) * t(1) * t(-2) * t(-3)
        + t(3) * t(2) * t(1) * t(-2)
        + t(-1) * t(-2) * t(2) ** 2
        + t(2) * t(1) * t(-1) ** 2
    )


@lru_cache(maxsize=1)
def _p_minus_2t5() -> NormalForm:
    return NormalForm.from_base(relations.big_P()) - 2 * t(5)


def trinion_bracket_with_P(sign: int) -> NormalForm:
    """Published {t(+/-4), P}: (P - 2 t5)(t4 - t1 t-2) and its mirror."""
    if sign > 0:
        return _p_minus_2t5() * (t(4) - t(1) * t(-2))
    return (-1) * _p_minus_2t5() * (t(-4) - t(-1) * t(2))


@lru_cache(maxsize=2)
def trinion_bracket_with_Q(sign: int) -> NormalForm:
    """Published {t(+/-4), Q} expansions."""
    if sign > 0:
        factor = (
            -6 * t(4)
            + 3 * t(-4) ** 2
            - 3 * t(-1) * t(-3)
            - 3 * t(2) * t(3)
            + 3 * t(1) * t(-2)
            + t(1) * t(-1) * t(4)
            + t(2) * t(-2) * t(4)
            + t(3) * t(-3) * t(4)
            + t(-1) ** 2 * t(-2)
            + t(1) ** 2 * t(-3)
            + t(2) * t(-3) ** 2
            + t(1) * t(2) ** 2
            + t(3) * t(-2) ** 2
            + t(-1) * t(3) ** 2
            + t(-1) ** 2 * t(2) ** 2
            - t(1) * t(-1) * t(2) * t(3)
            - t(-3) * t(-2) * t(-1) * t(2)
            - t(1) * t(2) * t(-2) ** 2
            - t(-2) * t(-1) * t(1) ** 2
            + 2 * t(1) * t(3) * t(-4)
            + 2 * t(-2) * t(-3) * t(-4)
            - 4 * t(-1) * t(2) * t(-4)
        )
        return _p_minus_2t5() * factor
    factor = (
        -6 * t(-4)
        + 3 * t(4) ** 2
        - 3 * t(1) * t(3)
        - 3 * t(-2) * t(-3)
        + 3 * t(-1) * t(2)
        + t(1) * t(-1) * t(-4)
        + t(2) * t(-2) * t(-4)
        + t(3) * t(-3) * t(-4)
        + t(1) ** 2 * t(2)
        + t(-1) ** 2 * t(3)
        + t(-2) * t(3) ** 2
        + t(-1) * t(-2) ** 2
        + t(-3) * t(2) ** 2
        + t(1) * t(-3) ** 2
        + t(1) ** 2 * t(-2) ** 2
        - t(1) * t(-1) * t(-2) * t(-3)
        - t(3) * t(-2) * t(1) * t(2)
        - t(-1) * t(-2) * t(2) ** 2
        - t(2) * t(1) * t(-1) ** 2
        + 2 * t(-1) * t(-3) * t(4)
        + 2 * t(2) * t(3) * t(4)
        - 4 * t(1) * t(-2) * t(4)
    )
    return (-1) * _p_minus_2t5() * factor


def derivative_form_a45(sign: int) -> NormalForm:
    """+/- d(Q - t5 P)/dt(-/+4): the derivative formulation of the t5 column."""
    q_minus_t5p = (
        FreePolynomial.from_base(relations.big_Q())
        - FreePolynomial.variable(T5) * FreePolynomial.from_base(relations.big_P())
    )
    if sign > 0:
        return q_minus_t5p.derivative(-4).reduce()
    return (-q_minus_t5p.derivative(4)).reduce()


# -- torus entries ----------------------------------------------------------------


@lru_cache(maxsize=1)
def _torus_entries() -> Dict[Pair, NormalForm]:
    third = _THIRD
    two_thirds = _TWO_THIRDS
    entries: Dict[Pair, NormalForm] = {
        # one intersection, single letters
        (1, 2): t(3) - third * t(1) * t(2),
        (-1, 2): -t(-4) + third * t(-1) * t(2),
        (1, -2): -t(4) + third * t(1) * t(-2),
        (-1, -2): t(-3) - third * t(-1) * t(-2),
        # one intersection, common letter
        (1, 3): -t(-1) * t(2) + t(-4) + two_thirds * t(1) * t(3),
        (-1, -3): -t(1) * t(-2) + t(4) + two_thirds * t(-1) * t(-3),
        (1, 4): t(-1) * t(-2) - t(-3) - two_thirds * t(1) * t(4),
        (-1, -4): t(1) * t(2) - t(3) - two_thirds * t(-1) * t(-4),
        (2, 3): t(-2) * t(1) - t(4) - two_thirds * t(2) * t(3),
        (-2, -3): t(2) * t(-1) - t(-4) - two_thirds * t(-2) * t(-3),
        (2, -4): -t(-2) * t(-1) + t(-3) + two_thirds * t(2) * t(-4),
        (-2, 4): -t(2) * t(1) + t(3) + two_thirds * t(-2) * t(4),
        # one intersection, cyclic cancellation
        (1, -3): -t(-2) + third * t(1) * t(-3),
        (-1, 3): -t(2) + third * t(-1) * t(3),
        (1, -4): t(2) - third * t(1) * t(-4),
        (-1, 4): t(-2) - third * t(-1) * t(4),
        (2, -3): t(-1) - third * t(2) * t(-3),
        (-2, 3): t(1) - third * t(-2) * t(3),
        (2, 4): -t(1) + third * t(2) * t(4),
        (-2, -4): -t(-1) + third * t(-2) * t(-4),
        # two intersections
        (3, 4): -t(1) ** 2 + t(-1) - t(-4) * t(-2) - t(2) * t(-3)
                + t(-1) * t(2) * t(-2) - third * t(3) * t(4),
        (-3, -4): -t(-1) ** 2 + t(1) - t(4) * t(2) - t(-2) * t(3)
                  + t(1) * t(-2) * t(2) - third * t(-3) * t(-4),
        (3, -4): t(2) ** 2 - t(-2) + t(4) * t(-1) + t(1) * t(-3)
                 - t(-2) * t(1) * t(-1) + third * t(3) * t(-4),
        (-3, 4): t(-2) ** 2 - t(2) + t(-4) * t(1) + t(-1) * t(3)
                 - t(2) * t(-1) * t(1) + third * t(-3) * t(4),
    }
    return entries


@lru_cache(maxsize=4)
def bracket_table(structure: SurfaceStructure) -> BracketTable:
    """The published coefficient table, scaled by the orientation sign."""
    if structure.surface == "trinion":
        raw: Dict[Pair, NormalForm] = {
            (4, -4): _p_minus_2t5(),
            (4, 5): trinion_a45(),
            (-4, 5): trinion_am45(),
        }
    else:
        raw = dict(_torus_entries())
    sign = structure.orientation
    return BracketTable(structure, {pair: sign * value for pair, value in raw.items()})


# -- the bracket as a bi-derivation -------------------------------------------------


def bracket(f: NormalForm, g: NormalForm, table: BracketTable) -> NormalForm:
    """Extend the coefficient table to arbitrary ring elements.

    Works on canonical free-ring lifts; well-definedness on the quotient is
    exactly what ``poisson_ideal_check`` verifies.
    """
    lifted_f = f.lift()
    lifted_g = g.lift()
    df = {c: lifted_f.derivative(c) for c in ALL_COORDINATES}
    dg = {c: lifted_g.derivative(c) for c in ALL_COORDINATES}
    total = FreePolynomial.zero()
    for i, j in table.nonzero_pairs():
        wedge = df[i] * dg[j] - df[j] * dg[i]
        if wedge.is_zero:
            continue
        total = total + table.entry(i, j).lift() * wedge
    return total.reduce()


def jacobiator(f: NormalForm, g: NormalForm, h: NormalForm, table: BracketTable) -> NormalForm:
    """{f,{g,h}} + {g,{h,f}} + {h,{f,g}}; zero iff the bracket is Poisson."""
    return (
        bracket(f, bracket(g, h, table), table)
        + bracket(g, bracket(h, f, table), table)
        + bracket(h, bracket(f, g, table), table)
    )


# -- symbolic checks ------------------------------------------------------------------


@dataclass(frozen=True)
class SymbolicCheck:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        out = {"identity": self.name, "kind": "symbolic", "pass": self.passed}
        if self.detail:
            out["detail"] = self.detail
        return out


def _check(name: str, value: NormalForm) -> SymbolicCheck:
    return SymbolicCheck(name, value.is_zero, "" if value.is_zero else f"residual {value.text()}")


def _surface_tag(table: BracketTable) -> str:
    s = table.structure
    return s.surface if s.orientation == 1 else f"{s.surface}(reversed)"


def jacobi_suite(table: BracketTable) -> List[SymbolicCheck]:
    """Jacobi identity on every coordinate triple.

    Triples containing a zero-row coordinate vanish for free; the
    interesting count is 1 for the trinion and 56 for the torus.
    """
    checks = []
    active = {c for pair in table.nonzero_pairs() for c in pair}
    tag = _surface_tag(table)
    for i, j, k in combinations(ALL_COORDINATES, 3):
        value = jacobiator(t(i), t(j), t(k), table)
        label = "nontrivial" if {i, j, k} <= active else "trivial"
        checks.append(_check(f"jacobi {tag} (t{i},t{j},t{k}) [{label}]", value))
    return checks


def poisson_ideal_check(table: BracketTable) -> List[SymbolicCheck]:
    """Bracketing each coordinate against the defining relation lands in 0.

    For the torus this refines to {t_j, P} = 0 and {t_j, Q} = 0 identically
    in the base ring.
    """
    checks = []
    tag = _surface_tag(table)
    gen = relations.defining_relation()
    d_gen = {c: gen.derivative(c) for c in ALL_COORDINATES}
    for j in ALL_COORDINATES:
        total = FreePolynomial.zero()
        for i in ALL_COORDINATES:
            if i == j:
                continue
            coeff = table.entry(j, i)
            if coeff.is_zero or d_gen[i].is_zero:
                continue
            total = total + coeff.lift() * d_gen[i]
        checks.append(_check(f"ideal {tag}: {{t{j}, relation}}", total.reduce()))
    if table.structure.surface == "torus":
        for name, poly in (("P", relations.big_P()), ("Q", relations.big_Q())):
            for j in ALL_COORDINATES:
                checks.append(
                    _check(
                        f"ideal {tag}: {{t{j}, {name}}}",
                        bracket(t(j), NormalForm.from_base(poly), table),
                    )
                )
    return checks


def casimirs(table: BracketTable) -> List[int]:
    """Coordinates whose bracket with every coordinate reduces to zero."""
    out = []
    for c in ALL_COORDINATES:
        if all(table.entry(c, j).is_zero for j in ALL_COORDINATES if j != c):
            out.append(c)
    return out


# -- published operator relations ---------------------------------------------------

#: (target pair, sign, dihedral element, source pair) for the torus table
TORUS_OPERATOR_RELATIONS: Tuple[Tuple[Pair, int, str, Pair], ...] = (
    ((-1, 2), -1, "i1", (1, 2)),
    ((1, -2), -1, "i2", (1, 2)),
    ((-1, -2), 1, "i", (1, 2)),
    ((-1, -3), 1, "i", (1, 3)),
    ((1, 4), -1, "i2", (1, 3)),
    ((-1, -4), -1, "i1", (1, 3)),
    ((2, 3), -1, "t", (1, 3)),
    ((-2, -3), -1, "it", (1, 3)),
    ((2, -4), 1, "i1t", (1, 3)),
    ((-2, 4), 1, "i2t", (1, 3)),
    ((-1, 3), 1, "i", (1, -3)),
    ((1, -4), -1, "i2", (1, -3)),
    ((-1, 4), -1, "i1", (1, -3)),
    ((2, -3), -1, "t", (1, -3)),
    ((-2, 3), -1, "it", (1, -3)),
    ((2, 4), 1, "i1t", (1, -3)),
    ((-2, -4), 1, "i2t", (1, -3)),
    ((-3, -4), 1, "i", (3, 4)),
    ((3, -4), -1, "t", (3, 4)),
    ((-3, 4), -1, "it", (3, 4)),
)


def check_torus_symmetry(table: BracketTable) -> List[SymbolicCheck]:
    """The 20 operator relations among torus entries, plus the Nielsen pair.

    Each relation is checked two ways: the operator applied to the source
    coefficient, and the bracket of the transformed coordinate pair.
    """
    checks = []
    for target, sign, op_name, source in TORUS_OPERATOR_RELATIONS:
        g = symmetry.element(op_name)
        expected = sign * symmetry.apply_dihedral(g, table.entry(*source))
        checks.append(
            _check(
                f"torus {{t{target[0]},t{target[1]}}} = {'-' if sign < 0 else ''}{op_name}{{t{source[0]},t{source[1]}}}",
                table.entry(*target) - expected,
            )
        )
        transformed = bracket(t(g.perm[source[0]]), t(g.perm[source[1]]), table)
        checks.append(
            _check(
                f"torus {{{op_name} t{source[0]}, {op_name} t{source[1]}}} matches table",
                table.entry(*target) - transformed,
            )
        )
    n2 = symmetry.nielsen("n2")
    nm2 = symmetry.nielsen("n-2")
    checks.append(
        _check("torus a(1,3) = n2(a(1,2))", table.entry(1, 3) - symmetry.apply_nielsen(n2, table.entry(1, 2)))
    )
    checks.append(
        _check("torus a(1,-3) = -n-2(a(1,2))", table.entry(1, -3) + symmetry.apply_nielsen(nm2, table.entry(1, 2)))
    )
    return checks


def check_trinion_consistency(table: BracketTable) -> List[SymbolicCheck]:
    """Redundant derivations of the trinion table agree exactly."""
    sign = table.structure.orientation
    checks = [
        _check("trinion a(4,5) = d(Q - t5 P)/dt-4", table.entry(4, 5) - sign * derivative_form_a45(+1)),
        _check("trinion a(-4,5) = -d(Q - t5 P)/dt4", table.entry(-4, 5) - sign * derivative_form_a45(-1)),
        _check(
            "trinion a(-4,5) = -i(a(4,5))",
            table.entry(-4, 5) + symmetry.apply_dihedral(symmetry.element("i"), table.entry(4, 5)),
        ),
    ]
    for s, label in ((1, "t4"), (-1, "t-4")):
        coord = t(4) if s > 0 else t(-4)
        for name, const, published in (
            ("P", relations.big_P(), trinion_bracket_with_P(s)),
            ("Q", relations.big_Q(), trinion_bracket_with_Q(s)),
        ):
            checks.append(
                _check(
                    f"trinion {{{label}, {name}}} matches published expansion",
                    bracket(coord, NormalForm.from_base(const), table) - sign * published,
                )
            )
        # (2 t5 - P) {t, t5} = t5 {t, P} - {t, Q}, the Leibniz route to the t5 column
        lhs = (2 * t(5) - NormalForm.from_base(relations.big_P())) * table.entry(s * 4, 5)
        rhs = t(5) * (sign * trinion_bracket_with_P(s)) - sign * trinion_bracket_with_Q(s)
        checks.append(_check(f"trinion Leibniz route for {{{label}, t5}}", lhs - rhs))
    return checks


# -- bi-vector reports ----------------------------------------------------------------


@dataclass(frozen=True)
class BivectorReport:
    surface: str
    orientation: int
    matches: bool
    covered_pairs: int
    factored_terms: Tuple[str, ...]
    mismatches: Tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "surface": self.surface,
            "orientation": self.orientation,
            "factored_terms": list(self.factored_terms),
            "covered_pairs": self.covered_pairs,
            "matches_raw_table": self.matches,
            "mismatches": list(self.mismatches),
        }


def _expand_operator(op: symmetry.GroupRingOperator, pair: Pair, seed: NormalForm) -> Dict[Pair, NormalForm]:
    """Apply a group-ring operator to coefficient and wedge indices alike."""
    out: Dict[Pair, NormalForm] = {}
    for name, coeff in op.terms():
        g = symmetry.element(name)
        indices = []
        for c in pair:
            if c == T5:
                if g.flips_t5:
                    raise ValueError("operator moves the t5 wedge index affinely")
                indices.append(T5)
            else:
                indices.append(g.perm[c])
        (i, j), sign = canonical_pair(indices[0], indices[1])
        value = (coeff * sign) * symmetry.apply_dihedral(g, seed)
        out[(i, j)] = out.get((i, j), NormalForm.zero()) + value
    return {pair: value for pair, value in out.items() if not value.is_zero}


def bivector_report(structure: SurfaceStructure) -> BivectorReport:
    """Expand the operator-factored bi-vector and compare with the raw table."""
    table = bracket_table(structure)
    expanded: Dict[Pair, NormalForm] = {}

    def accumulate(parts: Dict[Pair, NormalForm]):
        for pair, value in parts.items():
            expanded[pair] = expanded.get(pair, NormalForm.zero()) + value

    if structure.surface == "trinion":
        one_minus_i = symmetry.GroupRingOperator({"e": 1, "i": -1})
        accumulate({(4, -4): table.entry(4, -4)})
        accumulate(_expand_operator(one_minus_i, (4, 5), table.entry(4, 5)))
        factored = (
            "a(4,-4) d4^d-4",
            "(1 - i)(a(4,5) d4^d5)",
        )
    else:
        accumulate(_expand_operator(symmetry.sigma1(), (1, 2), table.entry(1, 2)))
        accumulate(_expand_operator(symmetry.sigma2(), (3, 4), table.entry(3, 4)))
        half = symmetry.half_sigma1_sigma2()
        accumulate(_expand_operator(half, (1, 3), table.entry(1, 3)))
        accumulate(_expand_operator(half, (1, -3), table.entry(1, -3)))
        factored = (
            "Sigma1(a(1,2) d1^d2)",
            "Sigma2(a(3,4) d3^d4)",
            "1/2 Sigma1 Sigma2 (a(1,3) d1^d3 + a(1,-3) d1^d-3)",
        )

    expanded = {pair: value for pair, value in expanded.items() if not value.is_zero}
    mismatches = []
    for pair in sorted(
        set(expanded) | set(table.nonzero_pairs()),
        key=lambda p: (COORD_POSITION[p[0]], COORD_POSITION[p[1]]),
    ):
        got = expanded.get(pair, NormalForm.zero())
        want = table.entry(*pair)
        if got != want:
            mismatches.append(f"({pair[0]},{pair[1]}): expected {want.text()}, got {got.text()}")
    return BivectorReport(
        surface=structure.surface,
        orientation=structure.orientation,
        matches=not mismatches,
        covered_pairs=len(expanded),
        factored_terms=factored,
        mismatches=tuple(mismatches),
    )
