"""Command-line surface: show, reduce, bracket, verify, sym, sample, dims, export.

Machine-readable JSON goes to stdout (one object per line for report
streams); human diagnostics go to stderr.  Fixed seed and flags give
byte-identical output.  Exit code 0 means every requested verification
passed; 1 means a check failed; 2 means bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import exprs, numeric, poisson, relations, surfaces, symmetry, verify, words
from .exprs import ParseError
from .numeric import ToleranceConfig
from .poisson import SurfaceStructure


def _default_seed() -> int:
    env = os.environ.get("CHARVAR_SEED")
    return int(env) if env else 42


def _emit(obj: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        parts = []
        for key, value in obj.items():
            parts.append(f"{key}={value}")
        print("  ".join(parts))


def _emit_reports(reports: List, fmt: str) -> int:
    for report in reports:
        d = report.to_dict()
        if fmt == "json":
            print(json.dumps(d, sort_keys=True))
        else:
            status = "PASS" if d["pass"] else "FAIL"
            extra = ""
            if d.get("max_residual") is not None:
                extra = f"  (n={d.get('n')}, max_residual={d['max_residual']:.3e})"
            detail = f"  [{d['detail']}]" if d.get("detail") else ""
            print(f"{status}  {d['identity']}{extra}{detail}")
    ok = verify.all_passed(reports)
    if not ok:
        failed = sum(1 for r in reports if not r.passed)
        print(f"{failed} of {len(reports)} checks failed", file=sys.stderr)
    return 0 if ok else 1


def _add_numeric_options(parser: argparse.ArgumentParser):
    parser.add_argument("--seed", type=int, default=_default_seed(), help="sample seed (default: CHARVAR_SEED or 42)")
    parser.add_argument("--n", type=int, default=1000, help="sample count")
    parser.add_argument("--tol", type=float, default=1e-8, help="relative tolerance")


def _add_format_option(parser: argparse.ArgumentParser):
    parser.add_argument("--format", choices=("json", "text"), default="json")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="charvar", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    show = sub.add_parser("show", help="print a named constant polynomial")
    show.add_argument("name", choices=sorted(relations.NAMED))
    _add_format_option(show)

    reduce_cmd = sub.add_parser("reduce", help="rewrite the trace of a word")
    reduce_cmd.add_argument("--word", required=True, help='e.g. "x1 x1 x2" or "x1 x2 x1^-1 x2^-1"')
    _add_format_option(reduce_cmd)

    bracket_cmd = sub.add_parser("bracket", help="Poisson bracket of two expressions")
    bracket_cmd.add_argument("--surface", choices=poisson.SURFACES, required=True)
    bracket_cmd.add_argument("--orientation", choices=("+", "-"), default="+")
    bracket_cmd.add_argument("--f", required=True, help="expression, e.g. 't1' or 'tr(x1 x2)'")
    bracket_cmd.add_argument("--g", required=True)
    _add_format_option(bracket_cmd)

    verify_cmd = sub.add_parser("verify", help="run a verification suite")
    verify_cmd.add_argument("--suite", default="all", choices=("all",) + verify.SUITE_ORDER)
    verify_cmd.add_argument("--surface", choices=("both",) + poisson.SURFACES, default="both")
    _add_numeric_options(verify_cmd)
    _add_format_option(verify_cmd)

    sym_cmd = sub.add_parser("sym", help="apply or certify the outer-automorphism action")
    sym_cmd.add_argument("--apply", choices=symmetry.ELEMENT_NAMES + tuple(symmetry.NIELSEN_IMAGES))
    sym_cmd.add_argument("--to", help="expression the element acts on")
    sym_cmd.add_argument("--certify", action="store_true", help="run the oracle certification")
    _add_numeric_options(sym_cmd)
    _add_format_option(sym_cmd)

    sample_cmd = sub.add_parser("sample", help="run numeric Monte-Carlo suites")
    sample_cmd.add_argument("--suite", choices=("kernel", "traces", "words"), default="kernel")
    _add_numeric_options(sample_cmd)
    _add_format_option(sample_cmd)

    dims_cmd = sub.add_parser("dims", help="dimension counts for a surface")
    dims_cmd.add_argument("--genus", type=int, required=True)
    dims_cmd.add_argument("--boundaries", type=int, required=True)
    _add_format_option(dims_cmd)

    export_cmd = sub.add_parser("export", help="export tables as JSON")
    export_cmd.add_argument("--what", choices=("bivector", "table", "constants"), required=True)
    export_cmd.add_argument("--surface", choices=poisson.SURFACES, default="torus")
    export_cmd.add_argument("--orientation", choices=("+", "-"), default="+")
    export_cmd.add_argument("--format", choices=("json",), default="json")
    return parser


def _cmd_show(args) -> int:
    value = relations.NAMED[args.name]()
    _emit({"name": args.name, "text": value.text(), "terms": value.to_json()}, args.format)
    return 0


def _cmd_reduce(args) -> int:
    try:
        word = words.parse_word(args.word)
    except words.WordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        nf = words.trace_of(word)
    except words.Irreducible:
        _emit({"word": args.word, "irreducible": True, "text": "IRREDUCIBLE"}, args.format)
        return 0
    _emit({"word": args.word, "irreducible": False, "text": nf.text(), "terms": nf.to_json()}, args.format)
    return 0


def _structure(args) -> SurfaceStructure:
    return SurfaceStructure(args.surface, 1 if args.orientation == "+" else -1)


def _cmd_bracket(args) -> int:
    table = poisson.bracket_table(_structure(args))
    try:
        f = exprs.lower_text(args.f)
        g = exprs.lower_text(args.g)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except words.Irreducible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    result = poisson.bracket(f, g, table)
    _emit(
        {
            "surface": args.surface,
            "orientation": table.structure.orientation,
            "f": args.f,
            "g": args.g,
            "text": result.text(),
            "terms": result.to_json(),
        },
        args.format,
    )
    return 0


def _cmd_verify(args) -> int:
    cfg = ToleranceConfig(relative_tol=args.tol, sample_count=args.n, seed=args.seed)
    surface = None if args.surface == "both" else args.surface
    reports = verify.run_suite(args.suite, cfg, surface)
    return _emit_reports(reports, args.format)


def _cmd_sym(args) -> int:
    cfg = ToleranceConfig(relative_tol=args.tol, sample_count=min(args.n, 200), seed=args.seed)
    if args.certify:
        return _emit_reports(verify.sym_suite(cfg), args.format)
    if not args.apply or args.to is None:
        print("error: need --apply NAME --to EXPR (or --certify)", file=sys.stderr)
        return 2
    try:
        value = exprs.lower_text(args.to)
    except (ParseError, words.Irreducible) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.apply in symmetry.NIELSEN_IMAGES:
        result = symmetry.apply_nielsen(symmetry.nielsen(args.apply), value)
    else:
        result = symmetry.apply_dihedral(symmetry.element(args.apply), value)
    _emit({"element": args.apply, "input": args.to, "text": result.text(), "terms": result.to_json()}, args.format)
    return 0


def _cmd_sample(args) -> int:
    cfg = ToleranceConfig(relative_tol=args.tol, sample_count=args.n, seed=args.seed)
    reports = verify.run_suite(args.suite, cfg)
    return _emit_reports(reports, args.format)


def _cmd_dims(args) -> int:
    try:
        topology = surfaces.SurfaceTopology(args.genus, args.boundaries)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = {
        "genus": args.genus,
        "boundaries": args.boundaries,
        "chi": surfaces.euler_char(topology),
        "rank": surfaces.rank(topology),
    }
    try:
        out["dim"] = surfaces.dim_character_variety(topology)
    except surfaces.RankTooSmall as exc:
        out["dim"] = None
        print(f"note: {exc}", file=sys.stderr)
    out["leaf_dim"] = surfaces.generic_leaf_dimension(topology)
    _emit(out, args.format)
    return 0


def _cmd_export(args) -> int:
    structure = SurfaceStructure(args.surface, 1 if args.orientation == "+" else -1)
    if args.what == "bivector":
        payload = poisson.bivector_report(structure).to_dict()
        payload["table"] = poisson.bracket_table(structure).to_json()
    elif args.what == "table":
        payload = poisson.bracket_table(structure).to_json()
    else:
        payload = {
            name: {"text": fn().text(), "terms": fn().to_json()} for name, fn in relations.NAMED.items()
        }
    print(json.dumps(payload, sort_keys=True))
    return 0


_COMMANDS = {
    "show": _cmd_show,
    "reduce": _cmd_reduce,
    "bracket": _cmd_bracket,
    "verify": _cmd_verify,
    "sym": _cmd_sym,
    "sample": _cmd_sample,
    "dims": _cmd_dims,
    "export": _cmd_export,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
