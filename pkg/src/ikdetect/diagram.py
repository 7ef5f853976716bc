"""The base spatial embedding: straight chords between points on a circle.

Vertex ``k`` sits at the rational circle point with parameter ``t = k``, so
the vertices are in strictly convex position, counterclockwise by index.
Chords cross exactly when their endpoints interleave.  At every crossing the
edge with the smaller index passes under the other one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graph import Cycle, Graph


@dataclass(frozen=True)
class Crossing:
    under: int
    over: int
    sign: int  # with both edges oriented from their lower to their higher vertex


@dataclass(frozen=True)
class Diagram:
    graph: Graph
    positions: tuple[tuple[Fraction, Fraction], ...]
    crossings: tuple[Crossing, ...]

    def to_json(self) -> dict:
        g = self.graph
        return {
            "vertices": [
                {"label": g.labels[v], "x": str(x), "y": str(y)} for v, (x, y) in enumerate(self.positions)
            ],
            "edges": [list(e) for e in g.edges],
            "crossings": [{"under": c.under, "over": c.over, "sign": c.sign} for c in self.crossings],
        }


def circle_point(t: int) -> tuple[Fraction, Fraction]:
    d = 1 + t * t
    return Fraction(1 - t * t, d), Fraction(2 * t, d)


def _interleave(e, f) -> bool:
    a, b = e
    c, d = f
    return a < c < b < d or c < a < d < b


def _cross_z(p, q) -> Fraction:
    return p[0] * q[1] - p[1] * q[0]


def crossing_sign(d: Diagram, c: Crossing, orientations=None) -> int:
    """Sign of ``(over direction) x (under direction)`` at the crossing.

    ``orientations`` maps an edge index to +1 (low-to-high vertex) or -1;
    edges missing from it keep the low-to-high orientation.
    """
    orientations = orientations or {}
    pos = d.positions

    def direction(e):
        u, v = d.graph.edges[e]
        s = orientations.get(e, 1)
        return (s * (pos[v][0] - pos[u][0]), s * (pos[v][1] - pos[u][1]))

    z = _cross_z(direction(c.over), direction(c.under))
    if z == 0:
        raise ValueError(f"edges {c.under} and {c.over} are parallel")
    return 1 if z > 0 else -1


def canonical_embedding(g: Graph) -> Diagram:
    positions = tuple(circle_point(k) for k in range(g.n))
    d = Diagram(g, positions, ())
    crossings = []
    for i, j in combinations(range(g.m), 2):
        if _interleave(g.edges[i], g.edges[j]):
            c = Crossing(under=i, over=j, sign=0)
            crossings.append(Crossing(i, j, crossing_sign(d, c)))
    return Diagram(g, positions, tuple(crossings))


def _check_disjoint(a: Cycle, b: Cycle):
    if a.vertex_mask & b.vertex_mask:
        raise ValueError(f"cycles {a.id} and {b.id} share a vertex")


def twisted(d: Diagram, twists) -> Diagram:
    """The diagram after inserting ``twists[(k, l)]`` full twists between edges.

    A full twist adds two crossings of the twist's sign, one with each edge
    on top.  Geometry is unchanged; only the crossing list grows.
    """
    extra = []
    for (k, l), x in sorted(twists.items()):
        s = 1 if x > 0 else -1
        for _ in range(abs(x)):
            extra.append(Crossing(k, l, s))
            extra.append(Crossing(l, k, s))
    return Diagram(d.graph, d.positions, d.crossings + tuple(extra))


def linking_number(d: Diagram, a: Cycle, b: Cycle) -> int:
    """Sum of signs of the crossings where ``a`` passes over ``b``."""
    _check_disjoint(a, b)
    sa, sb = a.edge_signs(d.graph), b.edge_signs(d.graph)
    total = 0
    for c in d.crossings:
        if c.over in sa and c.under in sb:
            total += c.sign * sa[c.over] * sb[c.under]
    return total


def linking_number_half_total(d: Diagram, a: Cycle, b: Cycle) -> int:
    """Half the signed count of all crossings between ``a`` and ``b``."""
    _check_disjoint(a, b)
    sa, sb = a.edge_signs(d.graph), b.edge_signs(d.graph)
    total = 0
    for c in d.crossings:
        if c.over in sa and c.under in sb:
            total += c.sign * sa[c.over] * sb[c.under]
        elif c.over in sb and c.under in sa:
            total += c.sign * sb[c.over] * sa[c.under]
    if total % 2:
        raise AssertionError("odd crossing count between two closed curves")
    return total // 2


def disjoint_pairs(cycles) -> list[tuple[int, int]]:
    return [(a.id, b.id) for a, b in combinations(cycles, 2) if not a.vertex_mask & b.vertex_mask]


def build_link_table(d: Diagram, cycles) -> dict[tuple[int, int], int]:
    """``{(i, j): lk(C_i, C_j)}`` over disjoint cycle pairs with ``i < j``."""
    g = d.graph
    signs = [c.edge_signs(g) for c in cycles]
    # per-cycle crossing contributions keyed by the other edge
    over_of = [dict() for _ in cycles]
    for cyc, sa in zip(cycles, signs):
        acc = over_of[cyc.id]
        for c in d.crossings:
            if c.over in sa:
                acc[c.under] = acc.get(c.under, 0) + c.sign * sa[c.over]
    table = {}
    for i, j in disjoint_pairs(cycles):
        acc = over_of[i]
        table[(i, j)] = sum(acc.get(e, 0) * s for e, s in signs[j].items())
    return table
