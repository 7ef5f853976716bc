"""End-to-end IK detection: graph -> cycles -> diagram -> quads -> search."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .certificate import Certificate
from .diagram import Diagram, build_link_table, canonical_embedding
from .graph import Cycle, Graph, enumerate_cycles, nonadjacent_edge_pairs
from .quads import Equation, Quad, RelationSet, build_equations, enumerate_quads
from .search import Budget, SearchStats, Status, Z, Z2, indispensable_equations, search_d4less


@dataclass
class Problem:
    graph: Graph
    cycles: list[Cycle]
    diagram: Diagram
    link_table: dict[tuple[int, int], int]
    quads: list[Quad]
    equations: list[Equation]
    relations: RelationSet
    variables: list[tuple[int, int]]
    quad_mode: str
    timings: dict[str, float] = field(default_factory=dict)


def prepare(g: Graph, quad_mode: str = "all", strict: bool = False) -> Problem:
    if quad_mode not in ("all", "chordless"):
        raise ValueError(f"unknown quad mode {quad_mode!r}")
    timings = {}
    t = time.perf_counter()
    cycles = enumerate_cycles(g)
    timings["cycles"] = time.perf_counter() - t

    t = time.perf_counter()
    diagram = canonical_embedding(g)
    table = build_link_table(diagram, cycles)
    timings["diagram"] = time.perf_counter() - t

    t = time.perf_counter()
    quads = enumerate_quads(g, cycles, chordless_only=quad_mode == "chordless", strict=strict)
    eqs, rel = build_equations(g, cycles, quads, table)
    timings["quads"] = time.perf_counter() - t
    return Problem(g, cycles, diagram, table, quads, eqs, rel, nonadjacent_edge_pairs(g), quad_mode, timings)


@dataclass
class Verdict:
    status: Status
    certificate: Certificate | None
    stats: dict
    timings: dict[str, float]


def detect_ik(
    g: Graph,
    ring: str = Z,
    quad_mode: str = "all",
    strict: bool = False,
    compat: bool = False,
    indispensable: bool = True,
    skip: bool = True,
    budget: Budget | None = None,
    workers: int = 1,
    max_nogoods: int = 64,
    problem: Problem | None = None,
) -> Verdict:
    if ring not in (Z, Z2):
        raise ValueError(f"unknown ring {ring!r}")
    prob = problem or prepare(g, quad_mode, strict)
    timings = dict(prob.timings)
    n_vars = len(prob.variables)
    z = len(prob.equations)

    t = time.perf_counter()
    indisp, contradiction = (), False
    if indispensable and z:
        # always mod 2: an integer-only obstruction must still leave room for a D4LESS_Z2 answer
        indisp, contradiction = indispensable_equations(prob.equations, prob.relations, n_vars, Z2)
    timings["indispensable"] = time.perf_counter() - t

    t = time.perf_counter()
    if contradiction:
        # nothing left to examine: every valid string contains the indispensables
        res_status, res_solution, res_selection = Status.IK, None, None
        sstats = SearchStats(indispensable=len(indisp), strings_skipped=1 << z)
    else:
        res = search_d4less(
            prob.equations, prob.relations, n_vars, ring, indisp, budget, skip, compat, max_nogoods, workers
        )
        res_status, res_solution, res_selection, sstats = res.status, res.solution, res.selection, res.stats
    timings["search"] = time.perf_counter() - t

    cert = None
    if res_solution is not None:
        cert_ring = Z if res_status is Status.D4LESS_Z else Z2
        twists = {pair: int(res_solution.get(i, 0)) for i, pair in enumerate(prob.variables)}
        cert = Certificate(
            mode="ik",
            ring=cert_ring,
            graph_hash=g.digest(),
            twists=twists,
            quads=prob.quad_mode,
            selection=tuple(prob.equations[i].pair for i in res_selection),
        )
    stats = {
        "vertices": g.n,
        "edges": g.m,
        "cycles": len(prob.cycles),
        "quads": len(prob.quads),
        "z": z,
        "variables": n_vars,
        "indispensableContradiction": contradiction,
    }
    stats.update(_camel(sstats.as_dict()))
    return Verdict(res_status, cert, stats, timings)


def _camel(d: dict) -> dict:
    out = {}
    for k, v in d.items():
        head, *rest = k.split("_")
        out[head + "".join(w.title() for w in rest)] = v
    return out
