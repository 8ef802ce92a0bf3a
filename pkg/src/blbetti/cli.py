"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 applicability error,
4 internal verification mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from fractions import Fraction
from typing import Any, Callable, Sequence, TextIO

from .alhc import alhc_bl_closed, alhc_blcomp_closed, alhc_from_betti
from .betti import betti_bl_closed, betti_blcomp_closed, betti_oracle
from .boij_soderberg import coeffs_bl_closed, coeffs_blcomp_closed, coeffs_from_betti
from .booth_lueker import bl, bl_complement
from .errors import ApplicabilityError, ApplicabilityWarning, InconsistencyError, VerificationError
from .graphfile import GraphFileError, format_graph, read_graph
from .graphs import Graph, MultiGraph, degree_vector
from .invariant import Signature, compare_signatures, signature
from .verification import Report, run_graph_suite

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_APPLICABILITY, EXIT_MISMATCH = range(5)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with status 2
        raise UsageError(message)


# --- computation routes ------------------------------------------------------

def _simple(graph: Graph | MultiGraph, what: str) -> Graph:
    if isinstance(graph, Graph):
        return graph
    if graph.is_simple():
        return graph.to_graph()
    raise ApplicabilityError(f"{what} needs a simple graph; degree-vector formulas do not cover parallel edges")


def omega_closed(graph: Graph | MultiGraph, comp: bool) -> tuple[int, ...]:
    if comp:
        return betti_blcomp_closed(graph.n, graph.m)
    g = _simple(graph, "the closed-form Betti vector of BL(G)")
    if g.n == 0:
        return ()
    return betti_bl_closed(degree_vector(g), g.m)


def omega_oracle(graph: Graph | MultiGraph, comp: bool) -> tuple[int, ...]:
    return betti_oracle(bl_complement(graph) if comp else bl(graph).underlying)


def omega_any(graph: Graph | MultiGraph, comp: bool) -> tuple[int, ...]:
    """Closed form when it applies (it scales), otherwise subset enumeration."""
    try:
        return omega_closed(graph, comp)
    except ApplicabilityError:
        return omega_oracle(graph, comp)


def coeffs_closed(graph: Graph | MultiGraph, comp: bool) -> tuple[Fraction, ...]:
    if comp:
        return coeffs_blcomp_closed(graph.n, graph.m)
    g = _simple(graph, "the closed-form coefficients of BL(G)")
    return coeffs_bl_closed(degree_vector(g), g.m)


def coeffs_matrix(graph: Graph | MultiGraph, comp: bool) -> tuple[Fraction, ...]:
    return coeffs_from_betti(omega_any(graph, comp))


def alhc_closed(graph: Graph | MultiGraph, comp: bool) -> tuple[int, ...]:
    if comp:
        return alhc_blcomp_closed(graph.n, graph.m)
    g = _simple(graph, "the closed-form composition of BL(G)")
    return alhc_bl_closed(degree_vector(g), g.m)


def alhc_matrix(graph: Graph | MultiGraph, comp: bool) -> tuple[int, ...]:
    return alhc_from_betti(omega_any(graph, comp))


ROUTES: dict[str, dict[str, Callable]] = {
    "betti": {"closed": omega_closed, "oracle": omega_oracle},
    "bs": {"closed": coeffs_closed, "matrix": coeffs_matrix},
    "alhc": {"closed": alhc_closed, "matrix": alhc_matrix},
}
FIELD = {"betti": "omega", "bs": "coeffs", "alhc": "lambda"}


# --- rendering ---------------------------------------------------------------

def json_ints(values: Sequence[int]) -> list[str]:
    return [str(int(x)) for x in values]


def json_coeffs(coeffs: Sequence[Fraction]) -> list[dict[str, str]]:
    return [{"j": str(j), "num": str(c.numerator), "den": str(c.denominator)}
            for j, c in enumerate(coeffs, start=1)]


def json_value(field: str, value: Sequence) -> Any:
    return json_coeffs(value) if field == "coeffs" else json_ints(value)


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def signature_record(sig: Signature) -> dict[str, Any]:
    return {
        "n": str(sig.n),
        "m": str(sig.m),
        "omega": json_ints(sig.omega),
        "coeffs": json_coeffs(sig.coeffs),
        "lambda": json_ints(sig.lam),
    }


def fmt_fraction(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def fmt_vector(values: Sequence[int]) -> str:
    return "(" + ", ".join(str(x) for x in values) + ")"


def pretty_value(field: str, value: Sequence) -> list[str]:
    if field == "coeffs":
        lines = [f"c_{j} = {fmt_fraction(c)}" for j, c in enumerate(value, start=1) if c]
        return lines or ["all coefficients are 0"]
    return [f"{field} = {fmt_vector(value)}"]


def tsv_value(field: str, value: Sequence) -> list[str]:
    if field == "coeffs":
        return ["j\tnum\tden"] + [f"{j}\t{c.numerator}\t{c.denominator}"
                                  for j, c in enumerate(value, start=1)]
    head = "i\tbeta" if field == "omega" else "j\tlambda"
    return [head] + [f"{i}\t{x}" for i, x in enumerate(value, start=1)]


# --- subcommands -------------------------------------------------------------

def _load(args: argparse.Namespace, path: str) -> Graph | MultiGraph:
    return read_graph(path, multigraph=getattr(args, "multigraph", False))


def cmd_bl(args: argparse.Namespace, out: TextIO) -> int:
    graph = _load(args, args.file)
    result = bl_complement(graph) if args.complement else bl(graph).underlying
    if args.format == "json":
        out.write(dump_json({"n": str(result.n), "m": str(result.m),
                             "edges": [[str(u), str(v)] for u, v in result.sorted_edges()]}))
    else:
        out.write(format_graph(result, "\t" if args.format == "tsv" else " "))
    return EXIT_OK


def cmd_quantity(args: argparse.Namespace, out: TextIO) -> int:
    graph = _load(args, args.file)
    routes = ROUTES[args.command]
    field = FIELD[args.command]
    names = list(routes) if args.method == "both" else [args.method]
    results = {name: routes[name](graph, args.complement) for name in names}
    values = list(results.values())
    match = all(v == values[0] for v in values)

    if args.format == "json":
        record: dict[str, Any] = {"n": str(graph.n), "m": str(graph.m),
                                  field: json_value(field, values[0])}
        if len(names) > 1:
            record["match"] = "MATCH" if match else "MISMATCH"
        out.write(dump_json(record))
    elif args.format == "tsv":
        out.write("\n".join(tsv_value(field, values[0])) + "\n")
        if len(names) > 1:
            out.write(("MATCH" if match else "MISMATCH") + "\n")
    else:
        for name in names:
            if len(names) > 1:
                out.write(f"[{name}]\n")
            out.write("\n".join(pretty_value(field, results[name])) + "\n")
        if len(names) > 1:
            out.write(("MATCH" if match else "MISMATCH") + "\n")
    if not match:
        print(f"error: routes disagree: {results}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_compare(args: argparse.Namespace, out: TextIO) -> int:
    g1 = _simple(_load(args, args.file1), "compare")
    g2 = _simple(_load(args, args.file2), "compare")
    s1, s2 = signature(g1), signature(g2)
    verdict = compare_signatures(s1, s2)
    same_degrees = g1.n == g2.n and degree_vector(g1) == degree_vector(g2)
    if (verdict.value == "INDISTINGUISHABLE_BY_BL_BETTI") != same_degrees:
        raise VerificationError("signature verdict disagrees with degree vectors")
    if args.format == "json":
        out.write(dump_json({"verdict": verdict.value,
                             "left": signature_record(s1), "right": signature_record(s2)}))
    elif args.format == "tsv":
        out.write(f"verdict\t{verdict.value}\n")
        for label, s in (("left", s1), ("right", s2)):
            out.write(f"{label}\t{s.n}\t{s.m}\t{','.join(map(str, s.omega))}\t"
                      f"{','.join(fmt_fraction(c) for c in s.coeffs)}\t{','.join(map(str, s.lam))}\n")
    else:
        out.write(verdict.value + "\n")
        for label, s in ((args.file1, s1), (args.file2, s2)):
            out.write(f"{label}: n={s.n} m={s.m}\n")
            out.write(f"  omega = {fmt_vector(s.omega)}\n")
            nonzero = [f"c_{j}={fmt_fraction(c)}" for j, c in enumerate(s.coeffs, start=1) if c]
            out.write(f"  coeffs: {' '.join(nonzero) or 'none'}\n")
            out.write(f"  lambda = {fmt_vector(s.lam)}\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1")
    start = time.perf_counter()
    report: Report = run_graph_suite(args.max_n)
    elapsed = time.perf_counter() - start
    if args.format == "json":
        out.write(dump_json({
            "max_n": str(args.max_n),
            "ok": report.ok,
            "checks": {name: {"passed": str(t.passed), "failed": str(t.failed)}
                       for name, t in report.checks.items()},
        }))
    else:
        sep = "\t" if args.format == "tsv" else " "
        for line in report.lines():
            out.write(line.replace(" ", sep, 1) + "\n")
        total = sum(t.passed + t.failed for t in report.checks.values())
        out.write(f"{'OK' if report.ok else 'FAILED'}: {total} checks on all graphs "
                  f"with at most {args.max_n} vertices in {elapsed:.1f}s\n")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("pretty", "json", "tsv"), default="pretty")

    graph_opts = _Parser(add_help=False)
    graph_opts.add_argument("--multigraph", action="store_true",
                            help="allow parallel edges in the input file")
    graph_opts.add_argument("--complement", action="store_true",
                            help="work with the complement of BL(G)")

    parser = _Parser(prog="blbetti", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bl", parents=[common, graph_opts], help="print BL(G) or its complement")
    p.add_argument("file")
    p.set_defaults(func=cmd_bl)

    for name, methods, text in (("betti", ("closed", "oracle", "both"), "Betti vector"),
                                ("bs", ("closed", "matrix", "both"), "Boij-Soederberg coefficients"),
                                ("alhc", ("closed", "matrix", "both"), "anti-lecture-hall composition")):
        p = sub.add_parser(name, parents=[common, graph_opts], help=text)
        p.add_argument("file")
        p.add_argument("--method", choices=methods, default="closed")
        p.set_defaults(func=cmd_quantity)

    p = sub.add_parser("compare", parents=[common], help="compare BL-Betti signatures")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", parents=[common], help="oracle vs closed forms on all small graphs")
    p.add_argument("--max-n", type=int, default=5)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", ApplicabilityWarning)
            code = args.func(args, out)
        for w in caught:
            print(f"warning: {w.message}", file=err)
        return code
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except GraphFileError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except (ApplicabilityError, InconsistencyError) as exc:
        print(f"not applicable: {exc}", file=err)
        return EXIT_APPLICABILITY
    except VerificationError as exc:
        print(f"verification mismatch: {exc}", file=err)
        return EXIT_MISMATCH


def main() -> None:
    sys.exit(run())
