import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import perm_and_hess
from hesspat.gkm import (
    EdgeSet,
    edge_set,
    fixed_points,
    gamma_h_neighbors,
    induced_subgraph,
    is_regular,
    isomorphism_check,
    phi,
    to_dot,
)
from hesspat.hessenberg import (
    HessenbergFunction,
    corresponding_generator,
    dimension_dh,
    ell_h,
    enumerate_hessenberg,
    generators,
    is_generator,
)
from hesspat.order import bruhat_interval, h_bruhat_leq, saturated_chain
from hesspat.perm_core import Permutation, Transposition, all_permutations

P = Permutation.parse
H = HessenbergFunction.parse
FIG_H = H("3,3,4,4")
FIG_W = P("2134")
BLACK = {"2341", "2431", "3241", "4231", "3421", "4321"}


def pairs_of(e: EdgeSet):
    return e.pairs()


def test_neighbors_examples():
    for u in all_permutations(4):
        assert gamma_h_neighbors(u, HessenbergFunction.minimal(4)) == []
    nb = [str(v) for _, v in gamma_h_neighbors(P("123"), HessenbergFunction.full(3))]
    assert sorted(nb) == ["132", "213", "321"]
    nb = [str(v) for _, v in gamma_h_neighbors(P("123"), H("2,3,3"))]
    assert sorted(nb) == ["132", "213"]


@given(perm_and_hess(max_n=6))
def test_gamma_h_is_regular(wh):
    u, h = wh
    assert len(gamma_h_neighbors(u, h)) == len(h.pairs)


def test_fixed_points_examples():
    omega = fixed_points(FIG_W, FIG_H)
    assert omega == set(bruhat_interval(FIG_W, Permutation.longest(4)))
    assert len(omega) == 18
    omega = fixed_points(P("1324"), FIG_H)
    assert P("4321") in omega and P("1432") not in omega
    for h in enumerate_hessenberg(4):
        assert fixed_points(Permutation.longest(4), h) == {Permutation.longest(4)}


@pytest.mark.parametrize("n", range(1, 5))
def test_fixed_points_match_oracle(n):
    for h in enumerate_hessenberg(n):
        for w in all_permutations(n):
            got = {u.word for u in fixed_points(w, h)}
            assert got == oracles.fixed_points(w.word, h.values)


def test_fixed_points_bfs_path_for_large_n():
    h = HessenbergFunction.full(8)
    w = P("87654312")
    assert fixed_points(w, h) == {w, Permutation.longest(8)}


def test_edge_set_examples():
    assert pairs_of(edge_set(P("2314"), FIG_W, FIG_H)) == {(1, 2), (2, 3), (3, 4)}
    assert pairs_of(edge_set(P("2341"), FIG_W, FIG_H)) == {(1, 2), (1, 3), (2, 3), (3, 4)}
    e = edge_set(FIG_W, FIG_W, FIG_H)
    assert pairs_of(e) == {(i, j) for i, j in FIG_H.pairs if FIG_W[i] < FIG_W[j]} == {(1, 3), (2, 3), (3, 4)}
    assert len(e) == dimension_dh(FIG_H) - ell_h(FIG_W, FIG_H) == 3
    assert (1, 3) in e and Transposition(1, 2) not in e
    with pytest.raises(ValueError):
        edge_set(P("1234"), FIG_W, FIG_H)


def test_edge_set_for_non_generator_uses_translation():
    w = P("1324")
    g, sigma_w = corresponding_generator(w, FIG_H), w
    for u in fixed_points(w, FIG_H):
        e = edge_set(u, w, FIG_H)
        omega = fixed_points(w, FIG_H)
        assert pairs_of(e) == {(i, j) for i, j in FIG_H.pairs if u.swap(i, j) in omega}
    assert g == P("1423") and sigma_w == w


def test_example_graph_2134():
    g = induced_subgraph(FIG_W, FIG_H)
    degs = g.degree_map()
    assert len(g) == 18
    assert sorted(degs.values()) == [3] * 12 + [4] * 6
    assert {str(u) for u, d in degs.items() if d == 4} == BLACK
    assert is_regular(g) == (False, (3, 4))
    for u in g.vertices:
        assert g.degree(u) == len(edge_set(u, FIG_W, FIG_H))
    for a, b, t in g.edges():
        assert a.swap(t.i, t.j) == b


def test_induced_subgraph_examples():
    single = induced_subgraph(Permutation.longest(4), FIG_H)
    assert len(single) == 1 and single.edges() == [] and is_regular(single) == (True, (0, 0))
    full = HessenbergFunction.full(4)
    g = induced_subgraph(Permutation.identity(4), full)
    assert len(g) == 24 and set(g.degrees) == {6}
    with pytest.raises(ValueError):
        induced_subgraph(Permutation.identity(8), HessenbergFunction.full(8))


@pytest.mark.parametrize("n", range(1, 6))
def test_permutohedral_always_regular(n):
    h = HessenbergFunction.permutohedral(n)
    for w in all_permutations(n):
        assert is_regular(induced_subgraph(w, h))[0]


@pytest.mark.parametrize("n", range(1, 5))
def test_degrees_match_oracle(n):
    for h in enumerate_hessenberg(n):
        for w in all_permutations(n):
            g = induced_subgraph(w, h)
            verts = oracles.fixed_points(w.word, h.values)
            assert {u.word: d for u, d in g.degree_map().items()} == oracles.degrees(verts, h.values)


def test_phi_examples():
    m = phi(P("3124"), P("3214"), FIG_W, FIG_H)
    assert m == {Transposition(1, 3): Transposition(1, 2), Transposition(2, 3): Transposition(2, 3),
                 Transposition(3, 4): Transposition(3, 4)}
    m = phi(P("2314"), P("2341"), FIG_W, FIG_H)
    assert {(k.i, k.j) for k in m} == {(1, 2), (2, 3), (3, 4)}
    assert all(k == v for k, v in m.items())


def test_phi_rejects_bad_input():
    with pytest.raises(ValueError):
        phi(P("3124"), P("3214"), P("1324"), FIG_H)  # not a generator
    with pytest.raises(ValueError):
        phi(P("3214"), P("3124"), FIG_W, FIG_H)  # downward step
    with pytest.raises(ValueError):
        phi(P("3124"), P("4123"), FIG_W, FIG_H)  # (1,4) not admissible
    with pytest.raises(ValueError):
        phi(P("1234"), P("2134"), FIG_W, FIG_H)  # u outside Gamma_{w,h}


@pytest.mark.parametrize("h", enumerate_hessenberg(4), ids=str)
def test_phi_injective_into_target_s4(h):
    for w in generators(h):
        omega = fixed_points(w, h)
        for u in omega:
            for t in edge_set(u, w, h).transpositions:
                v = u.swap(t.i, t.j)
                if u[t.i] > u[t.j]:
                    continue
                m = phi(u, v, w, h)
                target = edge_set(v, w, h).transpositions
                assert set(m.values()) <= set(target)
                assert len(set(m.values())) == len(m)


@given(perm_and_hess(max_n=5))
def test_degree_of_generator_is_cell_dimension(wh):
    w, h = wh
    if is_generator(w, h):
        assert induced_subgraph(w, h).degree(w) == dimension_dh(h) - ell_h(w, h)


@given(perm_and_hess(max_n=5))
def test_fixed_point_count_matches_generator(wh):
    w, h = wh
    assert len(fixed_points(w, h)) == len(fixed_points(corresponding_generator(w, h), h))


@given(perm_and_hess(max_n=5), st.data())
def test_degree_monotone_along_h_order(wh, data):
    w, h = wh
    if not is_generator(w, h):
        return
    g = induced_subgraph(w, h)
    verts = g.vertices
    u = data.draw(st.sampled_from(verts))
    v = data.draw(st.sampled_from(verts))
    if h_bruhat_leq(u, v, h):
        assert g.degree(u) <= g.degree(v)


@given(perm_and_hess(max_n=5))
def test_phi_composed_along_chain_injects(wh):
    w, h = wh
    if not is_generator(w, h):
        return
    w0 = Permutation.longest(w.n)
    chain = saturated_chain(w, w0, h)
    current = {t: t for t in edge_set(w, w, h).transpositions}
    for u, v in zip(chain, chain[1:]):
        step = phi(u, v, w, h)
        current = {k: step[t] for k, t in current.items()}
    image = list(current.values())
    assert len(set(image)) == len(image)
    assert set(image) <= set(edge_set(w0, w, h).transpositions)


def test_isomorphism_examples():
    assert corresponding_generator(P("1324"), FIG_H) == P("1423")
    assert isomorphism_check(P("1324"), FIG_H)
    for w in generators(FIG_H):
        assert isomorphism_check(w, FIG_H)


@given(perm_and_hess(max_n=5))
def test_isomorphism_property(wh):
    assert isomorphism_check(*wh)


def test_dot_export():
    g = induced_subgraph(FIG_W, FIG_H)
    dot = to_dot(g)
    assert dot.startswith("graph Gamma {") and dot.endswith("}\n")
    assert dot.count("irregular=true") == 6
    assert '"2134" [degree=3, fillcolor=firebrick, shape=doublecircle]' in dot
    assert '"4321" [degree=4' in dot and "shape=box" in dot
    assert "excluded=true" not in dot
    full = to_dot(g, show_excluded=True)
    assert full.count("excluded=true") == 6
    assert to_dot(g) == dot
