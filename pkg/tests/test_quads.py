import itertools

import networkx as nx
import pytest

from ikdetect import generators as gen
from ikdetect.diagram import build_link_table, canonical_embedding
from ikdetect.graph import Graph, enumerate_cycles, is_chordless
from ikdetect.quads import (
    RelationSet,
    build_equations,
    canonical_order,
    check_witnesses,
    enumerate_quads,
    find_connecting_paths,
    pair_coefficients,
    variable_index,
)

from .oracles import _is_quad, brute_quad_classes


def classes(quads):
    return {frozenset(frozenset(d) for d in q.diagonals) for q in quads}


def nxgraph(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def ring_of_triangles(shared_hub=False):
    """Four triangles A..D; A-B and C-D joined either by edges or through one hub."""
    tri = [(0, 1, 2), (3, 4, 5), (6, 7, 8), (9, 10, 11)]
    edges = [e for t in tri for e in itertools.combinations(t, 2)]
    edges += [(5, 6), (11, 0)]  # B-C, D-A
    if shared_hub:
        edges += [(1, 12), (12, 3), (7, 12), (12, 10)]
        n = 13
    else:
        edges += [(1, 3), (7, 10)]
        n = 12
    return Graph(n, edges), tri


@pytest.mark.parametrize(
    "name,count",
    [("k4", 0), ("bridged-triangles", 0), ("two-triangles", 0), ("k5", 0), ("k6", 45), ("cube", 3), ("petersen", 15)],
)
def test_quad_counts(name, count):
    g = gen.from_name(name)
    assert len(enumerate_quads(g, enumerate_cycles(g))) == count


@pytest.mark.parametrize("name", ["k6", "cube", "prism", "petersen", "wheel:6"])
def test_matches_brute_force(name):
    g = gen.from_name(name)
    cs = enumerate_cycles(g)
    seqs = [list(c.vertices) for c in cs]
    for chordless in (False, True):
        got = classes(enumerate_quads(g, cs, chordless_only=chordless))
        assert got == brute_quad_classes(g.n, g.edges, seqs, chordless_only=chordless)


def test_chordless_subset_and_counts_k7():
    g = gen.complete(7)
    cs = enumerate_cycles(g)
    allq = enumerate_quads(g, cs)
    cl = enumerate_quads(g, cs, chordless_only=True)
    assert len(cl) == 2205 and len(allq) == 7875
    assert classes(cl) <= classes(allq)
    for q in cl:
        assert all(is_chordless(g, cs[k]) for k in q.cycles)


@pytest.mark.parametrize("name", ["k6", "petersen", "cube", "k3311"])
def test_witnesses_valid_and_canonical(name):
    g = gen.from_name(name)
    cs = enumerate_cycles(g)
    quads = enumerate_quads(g, cs)
    assert len({q.cycles for q in quads}) == len(quads)
    for q in quads[:400]:
        four = tuple(cs[k] for k in q.cycles)
        assert check_witnesses(g, four, q.witnesses)
        a, c, b, d = q.cycles
        assert q.cycles == canonical_order(a, b, c, d)
        assert a == min(q.cycles) and c < d


def test_dihedral_relabelings_are_quads():
    g = gen.complete(6)
    cs = enumerate_cycles(g)
    h = nxgraph(g)
    for q in enumerate_quads(g, cs)[:15]:
        a, b, c, d = q.cycles
        rots = [(a, b, c, d), (b, c, d, a), (c, d, a, b), (d, a, b, c)]
        for r in rots + [tuple(reversed(x)) for x in rots]:
            four = tuple(cs[k] for k in r)
            w = find_connecting_paths(g, four)
            assert w is not None and check_witnesses(g, four, w)
            assert _is_quad(h, [list(cs[k].vertices) for k in r])


def test_ring_of_triangles_paths():
    g, tri = ring_of_triangles()
    cs = enumerate_cycles(g)
    by = {frozenset(c.vertices): c for c in cs}
    four = tuple(by[frozenset(t)] for t in tri)
    w = find_connecting_paths(g, four)
    assert w == ((1, 3), (5, 6), (7, 10), (11, 0))
    assert check_witnesses(g, four, w)
    # a witness that reuses a vertex of another path is rejected
    assert not check_witnesses(g, four, ((1, 3), (5, 6), (7, 10), (11, 0, 1)))


def test_shared_hub_blocks_quad():
    g, tri = ring_of_triangles(shared_hub=True)
    cs = enumerate_cycles(g)
    by = {frozenset(c.vertices): c for c in cs}
    four = tuple(by[frozenset(t)] for t in tri)
    assert find_connecting_paths(g, four) is None
    assert not _is_quad(nxgraph(g), [list(t) for t in tri])


def test_disconnected_intersection_is_not_quad():
    # C2 = 0-1-2-3 and C1 = 0-4-2-5 meet in {0, 2} without a shared edge
    g = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2), (2, 5), (5, 0), (6, 7)])
    cs = enumerate_cycles(g)
    assert enumerate_quads(g, cs) == []


@pytest.mark.parametrize("name", ["k6", "petersen", "cube", "k3311", "random:8:0.6:1"])
def test_strict_witness_mode_agrees(name):
    g = gen.from_name(name)
    cs = enumerate_cycles(g)
    loose = enumerate_quads(g, cs)
    strict = enumerate_quads(g, cs, strict=True)
    assert [q.cycles for q in loose] == [q.cycles for q in strict]


@pytest.fixture(scope="module")
def k6():
    g = gen.complete(6)
    cs = enumerate_cycles(g)
    quads = enumerate_quads(g, cs)
    table = build_link_table(canonical_embedding(g), cs)
    eqs, rel = build_equations(g, cs, quads, table)
    return g, cs, quads, table, eqs, rel


class TestEquations:

    def test_k6_sizes(self, k6):
        g, cs, quads, table, eqs, rel = k6
        assert len(eqs) == 10  # each pair of disjoint triangles
        assert all(len(cs[e.pair[0]]) == len(cs[e.pair[1]]) == 3 for e in eqs)
        assert len(rel.pairs) == 45
        assert all(len(nb) == 9 for nb in rel.neighbors)

    def test_variable_scan(self, k6):
        g, cs, quads, table, eqs, rel = k6
        var_of = variable_index(g)
        names = {i: kl for kl, i in var_of.items()}
        for e in eqs:
            a, b = cs[e.pair[0]], cs[e.pair[1]]
            expected = {tuple(sorted((k, l))) for k in a.edges for l in b.edges}
            assert {names[v] for v in e.coeffs} == expected
            assert set(e.coeffs.values()) <= {1, -1}
            assert e.lk == table[e.pair]
            row = e.row()
            assert row.const == -e.lk and row.coeffs == e.coeffs

    def test_relations_are_quad_diagonals(self, k6):
        g, cs, quads, table, eqs, rel = k6
        eq_of = {e.pair: e.id for e in eqs}
        want = {tuple(sorted((eq_of[d1], eq_of[d2]))) for d1, d2 in (q.diagonals for q in quads)}
        assert rel.pairs == want

    def test_coefficients_symmetric(self, k6):
        g, cs, *_ = k6
        a, b = cs[0], next(c for c in cs if not c.vertex_mask & cs[0].vertex_mask)
        assert pair_coefficients(g, a, b) == pair_coefficients(g, b, a)

    def test_relation_set_normalises(self):
        rel = RelationSet.from_pairs(3, [(2, 0), (0, 2), (1, 2)])
        assert rel.pairs == {(0, 2), (1, 2)}
        assert rel.neighbors == (frozenset({2}), frozenset({2}), frozenset({0, 1}))

    def test_no_quads_no_equations(self):
        g = gen.complete(5)
        cs = enumerate_cycles(g)
        eqs, rel = build_equations(g, cs, [], {})
        assert eqs == [] and rel.pairs == frozenset()


def test_mixed_shared_vertices_and_paths():
    # A, B share vertex 2; C, D share vertex 7; B-C and D-A are joined by single edges
    tri = [(0, 1, 2), (2, 3, 4), (5, 6, 7), (7, 8, 9)]
    edges = [e for t in tri for e in itertools.combinations(t, 2)] + [(4, 5), (9, 0)]
    g = Graph(10, edges)
    cs = enumerate_cycles(g)
    by = {frozenset(c.vertices): c for c in cs}
    four = tuple(by[frozenset(t)] for t in tri)
    assert find_connecting_paths(g, four) == ((2,), (4, 5), (7,), (9, 0))
    quads = enumerate_quads(g, cs)
    assert len(quads) == 1 and classes(quads) == brute_quad_classes(g.n, g.edges, [list(c.vertices) for c in cs])
