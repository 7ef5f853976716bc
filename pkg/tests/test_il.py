import pytest

from ikdetect import generators as gen
from ikdetect.certificate import Certificate
from ikdetect.diagram import build_link_table, canonical_embedding
from ikdetect.graph import enumerate_cycles, nonadjacent_edge_pairs
from ikdetect.il import detect_il, detect_zero_linking, il_system, verify_il_certificate
from ikdetect.linsys import GF2, INTEGER

from .corpus import PLANAR
from .oracles import gf2_rank, integer_solvable


def setup(g):
    cs = enumerate_cycles(g)
    return cs, build_link_table(canonical_embedding(g), cs)


def dense(system):
    a = [[r.coeffs.get(v, 0) for v in range(system.n_vars)] for r in system.rows]
    return a, [r.const for r in system.rows]


@pytest.mark.parametrize("name", ["k6", "k7", "petersen", "k3,3,1", "k3311"])
def test_intrinsically_linked(name):
    res = detect_il(gen.from_name(name))
    assert res.status == "IL" and res.certificate is None
    assert res.core


@pytest.mark.parametrize("name", ["k5", *PLANAR])
def test_not_il_with_verified_certificate(name):
    g = gen.complete(5) if name == "k5" else PLANAR[name]()
    res = detect_il(g)
    assert res.status == "NOT_IL"
    cs, table = setup(g)
    assert verify_il_certificate(g, cs, table, res.certificate)
    assert res.certificate.ring == "z2" and set(res.certificate.twists.values()) <= {0, 1}


def test_k6_conway_gordon_witness():
    # summing the ten triangle-pair rows kills every variable but leaves constant 1
    g = gen.complete(6)
    cs, table = setup(g)
    sys, pairs = il_system(g, cs, table, GF2)
    assert len(pairs) == 10
    acc = {}
    for r in sys.rows:
        for v, c in r.coeffs.items():
            acc[v] = acc.get(v, 0) + c
    assert all(c % 2 == 0 for c in acc.values())
    assert sum(r.const for r in sys.rows) % 2 == 1
    assert sorted(detect_il(g).core) == pairs


def test_core_rows_are_dependent():
    g = gen.petersen()
    cs, table = setup(g)
    sys, pairs = il_system(g, cs, table, GF2)
    core = set(detect_il(g).core)
    rows = [r for r, p in zip(sys.rows, pairs) if p in core]
    a = [[r.coeffs.get(v, 0) for v in range(sys.n_vars)] for r in rows]
    ab = [row + [r.const] for row, r in zip(a, rows)]
    assert gf2_rank(ab) == gf2_rank(a) + 1


@pytest.mark.parametrize("name", ["petersen", "k6", "k3,3,1", "cube", "prism", "k5", "wheel:6"])
def test_rank_criterion(name):
    g = gen.from_name(name)
    cs, table = setup(g)
    sys, _ = il_system(g, cs, table, GF2)
    a, b = dense(sys)
    inconsistent = gf2_rank([row + [k] for row, k in zip(a, b)]) > gf2_rank(a)
    assert (detect_il(g).status == "IL") == inconsistent


@pytest.mark.parametrize("name", ["cube", "prism", "k5", "wheel:6", "grid:3x3", "two-triangles", "k3,3"])
def test_zero_linking_feasible(name):
    g = gen.from_name(name)
    res = detect_zero_linking(g)
    assert res.status == "FEASIBLE"
    cs, table = setup(g)
    assert verify_il_certificate(g, cs, table, res.certificate)
    sys, _ = il_system(g, cs, table, INTEGER)
    assert integer_solvable(*dense(sys))


@pytest.mark.parametrize("name", ["k6", "petersen"])
def test_zero_linking_infeasible(name):
    g = gen.from_name(name)
    assert detect_zero_linking(g).status == "INFEASIBLE"
    cs, table = setup(g)
    sys, _ = il_system(g, cs, table, INTEGER)
    assert not integer_solvable(*dense(sys))


def test_two_triangles_all_zero_certificate():
    g = gen.disjoint_triangles()
    for res in (detect_il(g), detect_zero_linking(g)):
        assert set(res.certificate.twists.values()) == {0}
        assert len(res.certificate.twists) == 9


def test_monotone_in_complete_graphs():
    verdicts = [detect_il(gen.complete(n)).status for n in (4, 5, 6, 7)]
    assert verdicts == ["NOT_IL", "NOT_IL", "IL", "IL"]


@pytest.mark.parametrize("name", ["cube", "prism", "random:8:0.6:1", "random:8:0.6:2", "random:8:0.6:3", "tree:9:1"])
def test_integer_feasible_implies_parity_feasible(name):
    g = gen.from_name(name)
    z = detect_zero_linking(g)
    if z.status == "FEASIBLE":
        assert detect_il(g).status == "NOT_IL"
        cs, table = setup(g)
        cert = z.certificate
        parity = Certificate("il", "z2", cert.graph_hash, {k: v % 2 for k, v in cert.twists.items()})
        assert verify_il_certificate(g, cs, table, parity)


def test_tampered_certificate_fails():
    g = gen.prism()
    cs, table = setup(g)
    cert = detect_zero_linking(g).certificate
    assert table
    flips = 0
    for pair in nonadjacent_edge_pairs(g):
        tw = dict(cert.twists)
        tw[pair] += 1
        if not verify_il_certificate(g, cs, table, Certificate("zero-linking", "z", cert.graph_hash, tw)):
            flips += 1
    assert flips > 0
