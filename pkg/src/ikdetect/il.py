"""Intrinsic linking through one linear system over all disjoint cycle pairs.

An embedding with every pairwise linking number even contains no
nontrivial link, so a graph is IL exactly when the system
``lk(A, B) + sum(x) == 0 (mod 2)`` over all disjoint pairs has no solution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificate import Certificate, check_universe
from .diagram import build_link_table, canonical_embedding
from .graph import Graph, enumerate_cycles, nonadjacent_edge_pairs
from .linsys import GF2, INTEGER, LinearSystem, Row, infeasible_core, solve_gf2, solve_integer
from .quads import pair_coefficients, variable_index
from .search import updated_linking_number


@dataclass
class ILResult:
    status: str  # "IL" / "NOT_IL" for parity, "INFEASIBLE" / "FEASIBLE" for zero linking
    certificate: Certificate | None
    stats: dict
    core: list[tuple[int, int]] | None = None  # cycle pairs of an infeasible subsystem


def il_system(g: Graph, cycles, link_table, ring: str = GF2):
    """Rows indexed like ``pairs``: one per disjoint cycle pair."""
    var_of = variable_index(g)
    pairs = sorted(link_table)
    rows = [
        Row(i, pair_coefficients(g, cycles[a], cycles[b], var_of), -link_table[(a, b)])
        for i, (a, b) in enumerate(pairs)
    ]
    return LinearSystem(len(var_of), rows, ring), pairs


def _stats(g, cycles, pairs, n_vars):
    return {"vertices": g.n, "edges": g.m, "cycles": len(cycles), "pairs": len(pairs), "variables": n_vars}


def detect_il(g: Graph) -> ILResult:
    cycles = enumerate_cycles(g)
    table = build_link_table(canonical_embedding(g), cycles)
    sys, pairs = il_system(g, cycles, table, GF2)
    stats = _stats(g, cycles, pairs, sys.n_vars)
    x = solve_gf2(sys)
    if x is None:
        core = [pairs[i] for i in infeasible_core(sys)]
        return ILResult("IL", None, stats, core)
    twists = {pair: x[i] for i, pair in enumerate(nonadjacent_edge_pairs(g))}
    return ILResult("NOT_IL", Certificate("il", "z2", g.digest(), twists), stats)


def detect_zero_linking(g: Graph) -> ILResult:
    """Integer crossing changes that make every linking number zero, if any."""
    cycles = enumerate_cycles(g)
    table = build_link_table(canonical_embedding(g), cycles)
    sys, pairs = il_system(g, cycles, table, INTEGER)
    stats = _stats(g, cycles, pairs, sys.n_vars)
    # parity first: it is cheaper and already settles K6-like graphs
    par, _ = il_system(g, cycles, table, GF2)
    x = solve_integer(sys) if solve_gf2(par) is not None else None
    if x is None:
        return ILResult("INFEASIBLE", None, stats)
    twists = {pair: x[i] for i, pair in enumerate(nonadjacent_edge_pairs(g))}
    return ILResult("FEASIBLE", Certificate("zero-linking", "z", g.digest(), twists), stats)


def verify_il_certificate(g: Graph, cycles, link_table, cert: Certificate) -> bool:
    """Every disjoint pair ends up with even (ring z2) or zero (ring z) linking."""
    check_universe(cert, nonadjacent_edge_pairs(g), g.digest())
    for a, b in link_table:
        lk = updated_linking_number(g, cycles, link_table, cert.twists, a, b)
        if (lk % 2 if cert.ring == "z2" else lk) != 0:
            return False
    return True
