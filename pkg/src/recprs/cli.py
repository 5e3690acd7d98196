"""Command line entry point: ``recprs <command> ...``.

Exit codes: 0 success, 1 usage, 2 parse error, 3 singular ``U``,
4 verification failure, 5 internal invariant breach.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import bench as bench_mod
from . import suites
from .classic import subres_matrix, subresultant_poly, sylvester_matrix
from .errors import ParseError, RecPrsError, SingularU
from .nested import nested_matrix, nested_subresultant, verify_thm1
from .parse import parse_poly
from .poly import Poly, render
from .prs import DEFAULT_RULE, RULES, prs, recursive_prs
from .recursive import rec_subres_matrix, rec_subresultant
from .reduced import proportionality_check, reduced_matrix, reduced_subresultant, verify_thm2
from .report import poly_json, rat_str
from .sqfree import sqfree

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_SINGULAR, EXIT_VERIFY, EXIT_INTERNAL = range(6)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _stage_json(stage):
    return {
        "polys": [poly_json(p) for p in stage.polys],
        "alphas": [rat_str(a) for a in stage.alphas],
        "betas": [rat_str(b) for b in stage.betas],
        "degrees": list(stage.degrees),
        "complete": stage.complete,
        "normal": stage.normal,
        "equal_degree_start": stage.equal_degree_start,
    }


def _mat_json(mat):
    return {"rows": mat.rows, "cols": mat.cols,
            "entries": [[rat_str(e) for e in mat.row(i)] for i in range(mat.rows)]}


def _pair(args):
    return parse_poly(args.f), parse_poly(args.g)


def _chain(f, g, rule):
    return recursive_prs(f, g, rule).degree_chain


def _text(payload):
    """Plain-text rendering: polynomials in infix form, other values as-is."""
    lines = []

    def walk(prefix, value):
        if isinstance(value, dict) and set(value) == {"degree", "coeffs"}:
            p = Poly([Fraction(c) for c in value["coeffs"]])
            lines.append(f"{prefix}: {render(p)}")
        elif isinstance(value, dict):
            for key, v in value.items():
                walk(f"{prefix}.{key}" if prefix else str(key), v)
        elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
            for i, v in enumerate(value):
                walk(f"{prefix}[{i}]", v)
        else:
            lines.append(f"{prefix}: {value}")

    walk("", payload)
    return "\n".join(lines)


def cmd_prs(args):
    f, g = _pair(args)
    return _stage_json(prs(f, g, args.rule)), EXIT_OK


def cmd_rprs(args):
    f, g = _pair(args)
    r = recursive_prs(f, g, args.rule)
    return {
        "degree_chain": list(r.degree_chain),
        "depth": r.depth,
        "gammas": [rat_str(x) for x in r.gammas],
        "stages": [_stage_json(s) for s in r.stages],
    }, EXIT_OK


def cmd_subres(args):
    f, g = _pair(args)
    return {"j": args.j, "subresultant": poly_json(subresultant_poly(f, g, args.j))}, EXIT_OK


def _level_command(builder):
    def run(args):
        f, g = _pair(args)
        chain = _chain(f, g, args.rule)
        kwargs = {"strict": args.strict_layout} if builder is rec_subresultant else {}
        p = builder(f, g, chain, args.k, args.j, **kwargs)
        return {"degree_chain": list(chain), "k": args.k, "j": args.j,
                "subresultant": poly_json(p)}, EXIT_OK
    return run


def cmd_matrix(args):
    f, g = _pair(args)
    if args.kind == "sylvester":
        mat = sylvester_matrix(f, g)
    elif args.kind == "subres":
        mat = subres_matrix(f, g, args.j)
    else:
        chain = _chain(f, g, args.rule)
        if args.kind == "recursive":
            mat = rec_subres_matrix(f, g, chain, args.k, args.j, strict=args.strict_layout)
        elif args.kind == "nested":
            mat = nested_matrix(f, g, chain, args.k, args.j)
        else:
            mat = reduced_matrix(f, g, chain, args.k, args.j)
    return {"kind": args.kind, "k": args.k, "j": args.j, "matrix": _mat_json(mat)}, EXIT_OK


def cmd_verify(args):
    if args.f is not None:
        if args.g is None:
            raise UsageError("verify needs both polynomials or neither")
        f, g = _pair(args)
        if args.theorem == "prop":
            reports = proportionality_check(f, g, args.rule)
        else:
            check = verify_thm1 if args.theorem == "1" else verify_thm2
            reports = [check(f, g, args.k, args.j, args.rule)]
        code = EXIT_VERIFY if any(r.status == "fail" for r in reports) else EXIT_OK
        return {"theorem": args.theorem, "reports": [r.to_json(args.verbose) for r in reports]}, code
    levels = (args.k,) if args.k is not None else None
    if args.theorem == "1":
        result = suites.run_thm1(args.seed, args.trials, args.max_deg, levels or (2,), args.rule)
    elif args.theorem == "2":
        result = suites.run_thm2(args.seed, args.trials, args.max_deg, levels, args.rule)
    else:
        result = suites.run_proportionality(args.seed, args.trials, args.max_deg, args.rule)
    code = EXIT_VERIFY if result.failures else EXIT_OK
    return result.to_json(args.verbose), code


def cmd_sqfree(args):
    p = parse_poly(args.p)
    constant, factors = sqfree(p, args.rule)
    return {"constant": rat_str(constant),
            "factors": [{"factor": poly_json(q), "multiplicity": e} for q, e in factors]}, EXIT_OK


def cmd_bench(args):
    if args.family != "gcd-chain":
        raise UsageError(f"unknown family {args.family!r}")
    f, g = bench_mod.gcd_chain_family(args.depth)
    chain, records = bench_mod.bench(f, g, args.max_recursive_cols, timings=not args.no_timings)
    return {"family": args.family, "depth": args.depth, "f": render(f), "g": render(g),
            "degree_chain": list(chain), "m_plus_n": f.degree + g.degree,
            "records": [r.to_json() for r in records]}, EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rule", choices=RULES, default=DEFAULT_RULE)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--strict-layout", action="store_true",
                        help="refuse recursive matrices at k >= 3 unless the layout check passes")

    level = argparse.ArgumentParser(add_help=False)
    level.add_argument("--k", type=int, default=1)
    level.add_argument("--j", type=int, default=0)

    pair = argparse.ArgumentParser(add_help=False)
    pair.add_argument("f")
    pair.add_argument("g")

    parser = _Parser(prog="recprs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    sub.add_parser("prs", parents=[common, pair], help="polynomial remainder sequence").set_defaults(func=cmd_prs)
    sub.add_parser("rprs", parents=[common, pair], help="recursive PRS").set_defaults(func=cmd_rprs)
    p = sub.add_parser("subres", parents=[common, pair], help="classical j-th subresultant")
    p.add_argument("--j", type=int, default=0)
    p.set_defaults(func=cmd_subres)
    sub.add_parser("recsubres", parents=[common, level, pair],
                   help="recursive subresultant").set_defaults(func=_level_command(rec_subresultant))
    sub.add_parser("nested", parents=[common, level, pair],
                   help="nested subresultant").set_defaults(func=_level_command(nested_subresultant))
    sub.add_parser("reduced", parents=[common, level, pair],
                   help="reduced nested subresultant").set_defaults(func=_level_command(reduced_subresultant))

    p = sub.add_parser("matrix", parents=[common, level, pair], help="print one of the matrices")
    p.add_argument("--kind", choices=("sylvester", "subres", "recursive", "nested", "reduced"),
                   default="reduced")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", parents=[common], help="check the equivalence theorems")
    p.add_argument("f", nargs="?")
    p.add_argument("g", nargs="?")
    p.add_argument("--theorem", choices=("1", "2", "prop"), default="2")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--j", type=int, default=0)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-deg", type=int, default=8)
    p.add_argument("--verbose", action="store_true", help="include polynomials in reports")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sqfree", parents=[common], help="square-free decomposition")
    p.add_argument("p")
    p.set_defaults(func=cmd_sqfree)

    p = sub.add_parser("bench", parents=[common], help="matrix sizes and timings")
    p.add_argument("--family", default="gcd-chain")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--max-recursive-cols", type=int, default=60)
    p.add_argument("--no-timings", action="store_true", help="omit timings for byte-stable output")
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv=None, out=None):
    """Run one command; returns the exit code and writes the payload to ``out``."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify" and args.k is None and args.f is not None:
            args.k = 2
        payload, code = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SingularU as exc:
        print(f"singular U: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except AssertionError as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except RecPrsError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(_text(payload) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
