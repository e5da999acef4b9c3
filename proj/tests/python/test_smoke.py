import pytest

import eqcolor


def star(leaves):
    return eqcolor.Graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def k33():
    return eqcolor.Graph(6, [(i, j) for i in range(3) for j in range(3, 6)])


def test_graph_sides():
    g = star(5)
    assert (g.n, g.m, g.a, g.b, g.max_degree) == (6, 5, 1, 5, 5)
    assert g.sides() == "ABBBBB"
    assert g.neighbors(0) == [1, 2, 3, 4, 5]


def test_odd_cycle_is_rejected():
    with pytest.raises(eqcolor.OddCycle):
        eqcolor.Graph(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(eqcolor.InvalidEdge):
        eqcolor.Graph(2, [(0, 0)])


def test_star_theorem_mode():
    g = star(5)
    res = eqcolor.color_equitably(g, "theorem")
    assert isinstance(res, eqcolor.Coloring)
    assert res.cover.classes == [[0], [1], [2, 3], [4, 5]]
    assert res.cover.kinds[0] == "A-pure"
    assert (res.params.k, res.params.q, res.params.r, res.params.t) == (4, 1, 2, 1)
    rep = eqcolor.verify(g, res.cover, 4, 1, 2)
    assert rep.ok() and rep.exact_profile_ok


def test_k33_infeasible_but_two_colorable():
    g = k33()
    res = eqcolor.color_equitably(g)
    assert isinstance(res, eqcolor.Infeasible)
    assert [r.params.t for r in res.reports] == [0, 1, 2]
    assert eqcolor.brute_equitable_k(g, 3) is None
    assert eqcolor.brute_equitable_k(g, 2) is not None
    assert eqcolor.brute_chi_e(g) == 2


def test_arithmetic():
    nf = eqcolor.normalize(20, 10, 5, 4)
    assert (nf.x, nf.u, nf.M, nf.branch) == (1, 0, 10, "corrected")
    assert (1, 0, 10) in eqcolor.brute_normal_forms(20, 10, 5, 4)
    assert eqcolor.split(7, 3, 3) == [3, 2, 2]
    with pytest.raises(eqcolor.InfeasibleSplit):
        eqcolor.split(10, 3, 3)
    assert eqcolor.derive_parameters(800, 74) == (38, 21, 2)


def test_constants():
    c = eqcolor.compute_constants("21")
    assert (c.K0, c.K, c.c) == (1538, 1538, 3076)
    with pytest.raises(eqcolor.ZetaTooSmall):
        eqcolor.compute_constants("41/2")


def test_generated_instance_round_trip():
    n, edges = eqcolor.generate(50, 150, 12, "1/8", seed=3)
    assert (n, edges) == eqcolor.generate(50, 150, 12, "1/8", seed=3)
    g = eqcolor.Graph(n, edges)
    assert g.max_degree <= 12
    res = eqcolor.color_equitably(g)
    if isinstance(res, eqcolor.Coloring):
        assert eqcolor.verify_colors(g, res.cover.colors(g.n)).ok()
