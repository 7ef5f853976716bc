"""Brute-force references that share no code with the package under test."""

from __future__ import annotations

import itertools
from math import factorial

import networkx as nx


def complete_cycle_count(n: int) -> int:
    return sum(factorial(n) // (2 * k * factorial(n - k)) for k in range(3, n + 1))


def brute_cycles(n, edges) -> set[frozenset]:
    """Edge sets of all simple cycles, by trying every vertex subset and ordering."""
    es = {frozenset(e) for e in edges}
    found = set()
    for k in range(3, n + 1):
        for subset in itertools.combinations(range(n), k):
            first, rest = subset[0], subset[1:]
            for perm in itertools.permutations(rest):
                seq = (first,) + perm
                cyc = [frozenset((seq[i], seq[(i + 1) % k])) for i in range(k)]
                if all(c in es for c in cyc):
                    found.add(frozenset(cyc))
    return found


def brute_nonadjacent(edges) -> int:
    return sum(1 for a, b in itertools.combinations(edges, 2) if not set(a) & set(b))


def _shared_connected(a: list, b: list) -> str:
    va, vb = set(a), set(b)
    ea = {frozenset((a[i], a[(i + 1) % len(a)])) for i in range(len(a))}
    eb = {frozenset((b[i], b[(i + 1) % len(b)])) for i in range(len(b))}
    shared_v = va & vb
    if not shared_v:
        return "empty"
    h = nx.Graph()
    h.add_nodes_from(shared_v)
    h.add_edges_from(tuple(e) for e in ea & eb)
    return "connected" if nx.is_connected(h) else "disconnected"


def brute_quad_classes(n, edges, cycles: list[list[int]], chordless_only=False):
    """Unordered pairs of diagonal pairs of every quad, from ordered 4-tuples.

    Cycles are vertex sequences.  Paths come from networkx's simple-path
    enumeration and are checked against the three conditions literally.
    """
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    if chordless_only:
        cycles = [c for c in cycles if g.subgraph(c).number_of_edges() == len(c)]
    idx = range(len(cycles))
    vs = [set(c) for c in cycles]
    dis = [(i, j) for i in idx for j in idx if i != j and not vs[i] & vs[j]]
    classes = set()
    for (c1, c3) in dis:
        for (c2, c4) in dis:
            quad = (c1, c2, c3, c4)
            if len(set(quad)) < 4:
                continue
            key = frozenset([frozenset((c1, c3)), frozenset((c2, c4))])
            if key in classes:
                continue
            if _is_quad(g, [cycles[k] for k in quad]):
                classes.add(key)
    return classes


def _is_quad(g, cyc) -> bool:
    vs = [set(c) for c in cyc]
    slot_paths = []
    for i in range(4):
        j = (i + 1) % 4
        kind = _shared_connected(cyc[i], cyc[j])
        if kind == "disconnected":
            return False
        if kind == "connected":
            continue
        others = vs[(i + 2) % 4] | vs[(i + 3) % 4]
        options = []
        for s in vs[i]:
            for t in vs[j]:
                for p in nx.all_simple_paths(g, s, t):
                    if set(p[1:-1]) & (vs[i] | vs[j]):
                        continue
                    if set(p) & others:
                        continue
                    options.append(set(p))
        if not options:
            return False
        slot_paths.append(options)
    for combo in itertools.product(*slot_paths):
        if all(not a & b for a, b in itertools.combinations(combo, 2)):
            return True
    return False


def gf2_brute(n_vars, rows):
    """rows: list of (coeffs dict, const). Returns True if some 0/1 vector satisfies all."""
    for bits in itertools.product((0, 1), repeat=n_vars):
        if all((sum(c * bits[v] for v, c in co.items()) - k) % 2 == 0 for co, k in rows):
            return True
    return False


def int_box_brute(n_vars, rows, bound=5):
    for xs in itertools.product(range(-bound, bound + 1), repeat=n_vars):
        if all(sum(c * xs[v] for v, c in co.items()) == k for co, k in rows):
            return True
    return False


def gf2_rank(matrix) -> int:
    from sympy.polys.domains import GF
    from sympy.polys.matrices import DomainMatrix

    if not matrix or not matrix[0]:
        return 0
    return DomainMatrix([[GF(2)(v % 2) for v in row] for row in matrix], (len(matrix), len(matrix[0])), GF(2)).rank()


def integer_solvable(matrix, rhs) -> bool:
    """Ax = b over Z iff A and [A | b] share rank and invariant factors."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import invariant_factors

    if not matrix:
        return True
    a = Matrix(matrix)
    ab = a.row_join(Matrix(rhs))
    if a.rank() != ab.rank():
        return False
    fa = [f for f in invariant_factors(a, domain=ZZ) if f]
    fb = [f for f in invariant_factors(ab, domain=ZZ) if f]
    return [abs(f) for f in fa] == [abs(f) for f in fb]
