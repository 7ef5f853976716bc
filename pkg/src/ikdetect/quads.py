"""Quads, their connecting paths, and the equations they induce.

A quad is a cyclic 4-tuple of distinct cycles ``(C1, C2, C3, C4)`` with
``C1, C3`` disjoint and ``C2, C4`` disjoint, where each consecutive pair
either meets in a nonempty connected subgraph or is joined by a connecting
path.  The eight dihedral relabelings of a quad give the same two diagonal
pairs, so only one representative per class is kept: ``(A, C, B, D)`` with
``A`` the smallest cycle id, ``B`` its diagonal partner and ``C < D``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .diagram import disjoint_pairs
from .graph import Cycle, Graph, IntersectionKind, cycle_intersection, is_chordless, nonadjacent_edge_pairs
from .linsys import Row


@dataclass(frozen=True)
class Quad:
    cycles: tuple[int, int, int, int]
    # witnesses[i] joins cycles[i] to cycles[i+1]; a 1-tuple is a shared vertex
    witnesses: tuple[tuple[int, ...], ...]

    @property
    def diagonals(self) -> tuple[tuple[int, int], tuple[int, int]]:
        a, c, b, d = self.cycles
        return (min(a, b), max(a, b)), (min(c, d), max(c, d))

    def key(self):
        return self.cycles


@dataclass(frozen=True)
class Equation:
    """``lk(A, B) + sum(coeffs[v] * x_v) == 0`` for a disjoint cycle pair."""

    id: int
    pair: tuple[int, int]
    coeffs: dict[int, int]
    lk: int

    def row(self) -> Row:
        return Row(self.id, self.coeffs, -self.lk)


@dataclass(frozen=True)
class RelationSet:
    pairs: frozenset[tuple[int, int]]
    neighbors: tuple[frozenset[int], ...]

    @classmethod
    def from_pairs(cls, n_eqs: int, pairs) -> "RelationSet":
        pairs = frozenset((min(a, b), max(a, b)) for a, b in pairs)
        nb = [set() for _ in range(n_eqs)]
        for a, b in pairs:
            nb[a].add(b)
            nb[b].add(a)
        return cls(pairs, tuple(frozenset(s) for s in nb))


class _Intersections:
    def __init__(self, cycles):
        self.cycles = cycles
        self._cache = {}

    def __call__(self, i, j):
        key = (i, j) if i < j else (j, i)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = cycle_intersection(self.cycles[key[0]], self.cycles[key[1]])
        return hit


def _candidate_paths(g: Graph, start: set, end: set, interior_mask: int):
    """Vertex sequences of induced paths ``start -> interior* -> end``.

    A path with a chord has a shortcut on a subset of its vertices, so only
    induced paths matter for a disjointness search.  Results are sorted by
    length, then lexicographically.
    """
    adj = g.adjacency
    out = []
    for s in sorted(start):
        path = [s]
        used = 1 << s

        def extend(u):
            nonlocal used
            for w in sorted(adj[u]):
                if used >> w & 1:
                    continue
                # induced: w may touch the path only at its last vertex
                if any(x in adj[w] for x in path[:-1]):
                    continue
                if w in end:
                    out.append(tuple(path) + (w,))
                elif interior_mask >> w & 1:
                    path.append(w)
                    used |= 1 << w
                    extend(w)
                    path.pop()
                    used &= ~(1 << w)

        extend(s)
    out.sort(key=lambda p: (len(p), p))
    # drop paths whose vertex set contains another candidate's
    masks = []
    kept = []
    for p in out:
        m = sum(1 << v for v in p)
        if any(k & m == k for k in masks):
            continue
        masks.append(m)
        kept.append((p, m))
    return kept


def find_connecting_paths(g: Graph, quad: tuple[Cycle, Cycle, Cycle, Cycle], strict: bool = False, inter=None):
    """Witnesses for a quad candidate, or ``None`` if it is not a quad.

    Empty consecutive intersections get genuine paths, searched jointly by
    backtracking so that they are pairwise vertex-disjoint.  Connected
    intersections get one shared vertex (the smallest).  With ``strict`` the
    shared vertices must also avoid every other witness.
    """
    inter = inter or (lambda i, j: cycle_intersection(quad[i], quad[j]))
    union = 0
    for c in quad:
        union |= c.vertex_mask
    free = ((1 << g.n) - 1) & ~union
    vsets = [set(c.vertices) for c in quad]

    slots = []
    shared = {}
    for i in range(4):
        j = (i + 1) % 4
        ic = inter(i, j)
        if ic.kind is IntersectionKind.DISCONNECTED:
            return None
        if ic.kind is IntersectionKind.CONNECTED:
            shared[i] = min(ic.vertices)
            continue
        start = vsets[i] - vsets[(i + 3) % 4]
        end = vsets[j] - vsets[(i + 2) % 4]
        cands = _candidate_paths(g, start, end, free)
        if not cands:
            return None
        slots.append((i, cands))

    chosen = {}

    def place(k, used):
        if k == len(slots):
            return True
        i, cands = slots[k]
        for p, m in cands:
            if m & used:
                continue
            chosen[i] = p
            if place(k + 1, used | m):
                return True
        chosen.pop(i, None)
        return False

    if not place(0, 0):
        return None

    if strict:
        used = 0
        for p in chosen.values():
            used |= sum(1 << v for v in p)
        for i in sorted(shared):
            ic = inter(i, (i + 1) % 4)
            options = sorted(v for v in ic.vertices if not used >> v & 1)
            if not options:
                return None
            shared[i] = options[0]
            used |= 1 << options[0]

    return tuple(chosen[i] if i in chosen else (shared[i],) for i in range(4))


def check_witnesses(g: Graph, quad: tuple[Cycle, Cycle, Cycle, Cycle], witnesses) -> bool:
    """Direct check of the quad conditions for a given witness family."""
    vs = [set(c.vertices) for c in quad]
    if vs[0] & vs[2] or vs[1] & vs[3]:
        return False
    genuine = []
    for i, p in enumerate(witnesses):
        j = (i + 1) % 4
        ic = cycle_intersection(quad[i], quad[j])
        if ic.kind is IntersectionKind.DISCONNECTED:
            return False
        if ic.kind is IntersectionKind.CONNECTED:
            if len(p) != 1 or p[0] not in ic.vertices:
                return False
            continue
        if len(p) < 2 or len(set(p)) != len(p):
            return False
        if any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
            return False
        if p[0] not in vs[i] or p[-1] not in vs[j]:
            return False
        if set(p[1:-1]) & (vs[i] | vs[j]):
            return False
        if set(p) & (vs[(i + 2) % 4] | vs[(i + 3) % 4]):
            return False
        genuine.append(set(p))
    return all(not a & b for a, b in combinations(genuine, 2))


def canonical_order(a: int, b: int, c: int, d: int) -> tuple[int, int, int, int]:
    """Least dihedral relabeling of a quad whose diagonals are {a,b}, {c,d}."""
    pairs = sorted([tuple(sorted((a, b))), tuple(sorted((c, d)))])
    (p, q), (r, s) = pairs
    return (p, r, q, s)


def enumerate_quads(g: Graph, cycles: list[Cycle], chordless_only: bool = False, strict: bool = False) -> list[Quad]:
    eligible = [c for c in cycles if not chordless_only or is_chordless(g, c)]
    pairs = disjoint_pairs(eligible)
    inter = _Intersections(cycles)
    out = []
    for (a, b), (c, d) in combinations(pairs, 2):
        if len({a, b, c, d}) < 4:
            continue
        order = canonical_order(a, b, c, d)
        if any(
            inter(order[i], order[(i + 1) % 4]).kind is IntersectionKind.DISCONNECTED for i in range(4)
        ):
            continue
        four = tuple(cycles[k] for k in order)
        wit = find_connecting_paths(g, four, strict, inter=lambda i, j: inter(order[i], order[j]))
        if wit is not None:
            out.append(Quad(order, wit))
    out.sort(key=Quad.key)
    return out


def variable_index(g: Graph) -> dict[tuple[int, int], int]:
    return {kl: i for i, kl in enumerate(nonadjacent_edge_pairs(g))}


def pair_coefficients(g: Graph, a: Cycle, b: Cycle, var_of=None) -> dict[int, int]:
    """Coefficient of each crossing-change variable in ``lk(a, b)``.

    A +1 twist between two edges, each oriented from its lower to its higher
    vertex, raises their linking contribution by one; the cycles' traversal
    directions then contribute a sign each.
    """
    var_of = var_of or variable_index(g)
    sa, sb = a.edge_signs(g), b.edge_signs(g)
    out = {}
    for k, s in sa.items():
        for l, t in sb.items():
            out[var_of[(min(k, l), max(k, l))]] = s * t
    return out


def build_equations(g: Graph, cycles: list[Cycle], quads: list[Quad], link_table):
    """Deduplicated equations keyed by cycle pair, plus the relation pairs."""
    keys = sorted({d for q in quads for d in q.diagonals})
    var_of = variable_index(g)
    eqs = [
        Equation(i, (a, b), pair_coefficients(g, cycles[a], cycles[b], var_of), link_table[(a, b)])
        for i, (a, b) in enumerate(keys)
    ]
    eq_of = {k: i for i, k in enumerate(keys)}
    rel = RelationSet.from_pairs(len(eqs), [(eq_of[d1], eq_of[d2]) for d1, d2 in (q.diagonals for q in quads)])
    return eqs, rel
