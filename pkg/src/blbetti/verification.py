"""Oracle-versus-closed-form property suites over exhaustive small corpora."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterable

from .alhc import alhc_bl_closed, alhc_blcomp_closed, alhc_from_betti
from .betti import (
    BettiVector,
    betti_bl_closed,
    betti_blcomp_closed,
    betti_oracle,
    recover_degree_vector,
)
from .boij_soderberg import coeffs_bl_closed, coeffs_blcomp_closed, coeffs_from_betti
from .booth_lueker import bl, bl_complement, move_edge, pineapple, toward_pineapple, valid_moves
from .graphs import Graph, MultiGraph, all_graphs, complement, degree_vector, is_chordal


@dataclass
class CheckTally:
    passed: int = 0
    failed: int = 0
    first_failure: str | None = None


@dataclass
class Report:
    checks: dict[str, CheckTally] = field(default_factory=dict)

    def record(self, name: str, ok: bool, detail: Callable[[], str] | str = "") -> None:
        tally = self.checks.setdefault(name, CheckTally())
        if ok:
            tally.passed += 1
        else:
            tally.failed += 1
            if tally.first_failure is None:
                tally.first_failure = detail() if callable(detail) else detail

    @property
    def ok(self) -> bool:
        return all(t.failed == 0 for t in self.checks.values())

    def lines(self) -> list[str]:
        out = []
        for name, t in self.checks.items():
            status = "PASS" if t.failed == 0 else "FAIL"
            line = f"{status} {name}: {t.passed} passed, {t.failed} failed"
            if t.first_failure:
                line += f" (first: {t.first_failure})"
            out.append(line)
        return out


def check_graph(g: Graph, report: Report) -> None:
    """Run every closed-form versus oracle/matrix comparison that applies to g."""
    n, m = g.n, g.m
    d = degree_vector(g)
    bl_graph = bl(g).underlying
    co_graph = bl_complement(g)

    report.record("bl_and_complement_chordal",
                  is_chordal(bl_graph) and is_chordal(complement(bl_graph)), lambda: f"{g}")
    report.record("complement_construction", co_graph == complement(bl_graph), lambda: f"{g}")

    omega = betti_oracle(bl_graph)
    closed = betti_bl_closed(d, m)
    report.record("bl_betti_closed_vs_oracle", closed == omega,
                  lambda: f"{sorted(g.edges)}: {closed} != {omega}")

    co_omega = betti_oracle(co_graph)
    co_closed = betti_blcomp_closed(n, m)
    report.record("blcomp_betti_closed_vs_oracle", co_closed == co_omega,
                  lambda: f"{sorted(g.edges)}: {co_closed} != {co_omega}")

    report.record("degree_vector_round_trip", recover_degree_vector(omega, n) == d,
                  lambda: f"{sorted(g.edges)}")

    if m >= n:
        report.record("bl_coeffs_closed_vs_matrix", coeffs_bl_closed(d, m) == coeffs_from_betti(omega),
                      lambda: f"{sorted(g.edges)}")
    else:
        coeffs_from_betti(omega)  # still must be non-negative
    if m >= n - 1:
        report.record("bl_alhc_closed_vs_matrix", alhc_bl_closed(d, m) == alhc_from_betti(omega),
                      lambda: f"{sorted(g.edges)}")
    if n >= 3 and m >= 1:
        report.record("blcomp_coeffs_closed_vs_matrix",
                      coeffs_blcomp_closed(n, m) == coeffs_from_betti(co_omega),
                      lambda: f"{sorted(g.edges)}")
    if n >= 3 or m == 0:
        report.record("blcomp_alhc_closed_vs_matrix",
                      alhc_blcomp_closed(n, m) == alhc_from_betti(co_omega),
                      lambda: f"{sorted(g.edges)}")


def graph_corpus(max_n: int, min_n: int = 1) -> Iterable[Graph]:
    for n in range(min_n, max_n + 1):
        yield from all_graphs(n)


def run_graph_suite(max_n: int = 5, report: Report | None = None) -> Report:
    report = Report() if report is None else report
    for g in graph_corpus(max_n):
        check_graph(g, report)
    return report


def all_multigraphs(n: int, max_m: int) -> Iterable[MultiGraph]:
    pairs = list(combinations(range(n), 2))
    for m in range(max_m + 1):
        if m and not pairs:
            break
        for edges in combinations_with_replacement(pairs, m):
            yield MultiGraph(n, edges)


def run_edge_move_suite(max_n: int = 5, max_m: int = 5, report: Report | None = None) -> Report:
    """Complement-BL Betti vectors are unchanged by every edge move, and along
    the move chain down to the pineapple."""
    report = Report() if report is None else report
    cache: dict[tuple, BettiVector] = {}

    def oracle(mg: MultiGraph) -> BettiVector:
        key = mg.canonical_key()
        if key not in cache:
            cache[key] = betti_oracle(bl_complement(mg))
        return cache[key]

    for n in range(1, max_n + 1):
        for mg in all_multigraphs(n, max_m):
            base = oracle(mg)
            report.record("multigraph_blcomp_closed_vs_oracle", base == betti_blcomp_closed(n, mg.m),
                          lambda: f"{mg}")
            for u, v, w in valid_moves(mg):
                moved = move_edge(mg, u, v, w)
                report.record("edge_move_invariance", oracle(moved) == base,
                              lambda: f"{mg} move {(u, v, w)}")
            chain = toward_pineapple(mg)
            end = chain[-1]
            report.record("reduction_to_pineapple",
                          n < 2 or (end.canonical_key() == pineapple(n, mg.m).canonical_key()
                                    and all(oracle(step) == base for step in chain)),
                          lambda: f"{mg}")
    return report


def run_pineapple_suite(n_range: Iterable[int] = range(3, 9), m_range: Iterable[int] = range(1, 9),
                        report: Report | None = None) -> Report:
    report = Report() if report is None else report
    m_values = list(m_range)
    for n in n_range:
        for m in m_values:
            got = betti_oracle(bl_complement(pineapple(n, m)))
            want = betti_blcomp_closed(n, m)
            report.record("pineapple_blcomp_betti", got == want, lambda: f"n={n}, m={m}: {got} != {want}")
    return report
