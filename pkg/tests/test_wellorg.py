import pytest
from hypothesis import given

from conftest import perm_and_hess, perms
from hesspat.hessenberg import HessenbergFunction, enumerate_hessenberg, generators, is_generator
from hesspat.patterns import find_pattern
from hesspat.perm_core import Permutation
from hesspat.wellorg import (
    WellOrgProfile,
    check_lemma_1324,
    check_lemma_kind,
    check_lemma_y,
    check_prop_chain_w,
    check_prop_organized,
    check_prop_size_e,
    check_prop_wbar,
    kind_of,
    profile,
    reduce_to_smaller,
    y_values,
)

P = Permutation.parse
H = HessenbergFunction.parse


def test_profile_examples():
    p = profile(P("213654"))
    assert p.y_values == (1, 3, 4) and p.is_well_organized and p.kind == "neither"
    assert [str(Permutation(c)) for c in p.wbar_chain] == ["213654", "231654", "234651"]
    assert profile(P("461523")).kind == "first"
    assert profile(P("426135")).kind == "second"
    p = profile(Permutation.longest(5))
    assert p.y_values == (1,) and p.r == 0 and p.is_well_organized and p.wbar == Permutation.longest(5)


def test_profile_json_roundtrip():
    import json

    d = json.loads(profile(P("213654")).to_json())
    assert d == {
        "word": "213654",
        "y_values": [1, 3, 4],
        "r": 2,
        "is_well_organized": True,
        "kind": "neither",
        "wbar_chain": ["213654", "231654", "234651"],
    }


def test_not_well_organized_has_no_chain():
    p = profile(P("1324"))
    assert not p.is_well_organized and p.wbar_chain == () and p.wbar is None and p.kind == "neither"


def test_lemma_y_examples():
    h = H("3,3,4,4")
    assert y_values(P("2134").word) == (1, 3, 4)
    assert check_lemma_y(P("2134"), h)
    assert check_lemma_y(Permutation.longest(4), h)
    with pytest.raises(ValueError):
        check_lemma_y(P("1324"), h)


def test_prop_wbar_examples():
    h = H("3,3,4,4")
    w = P("2134")
    assert check_prop_wbar(w, h)
    assert profile(w).wbar == P("2341")
    assert check_prop_wbar(Permutation.longest(4), h)
    with pytest.raises(ValueError):
        check_prop_wbar(P("1324"), h)


def test_prop_organized_examples():
    h = H("3,3,4,4")
    assert check_prop_organized(P("2134"), h, 1) in (True, None)
    with pytest.raises(ValueError):
        check_prop_organized(P("2134"), h, 3)
    with pytest.raises(ValueError):
        check_prop_organized(Permutation.longest(4), h, 1)


def test_lemma_1324_converse_fails():
    w = P("4651273")
    h = HessenbergFunction.full(7)
    assert profile(w).is_well_organized
    assert find_pattern(w, h, "1324h") is not None
    assert check_lemma_1324(w, h) is None


def test_reduce_to_smaller():
    w2, h2 = reduce_to_smaller(P("2341"), H("3,3,4,4"))
    assert w2 == P("123") and h2 == H("3,3,3")
    with pytest.raises(ValueError):
        reduce_to_smaller(P("2134"), H("3,3,4,4"))


@given(perms())
def test_profile_invariants(w):
    p = profile(w)
    assert isinstance(p, WellOrgProfile)
    assert p.y_values[0] == 1 and p.y_values[-1] == w[w.n]
    pos = [w.inverse()[y] for y in p.y_values]
    assert p.is_well_organized == (pos == sorted(pos) and pos[-1] == w.n)
    if p.is_well_organized:
        chain = [Permutation(c) for c in p.wbar_chain]
        assert chain[0] == w and chain[-1][w.n] == 1
        assert all(a.length() < b.length() for a, b in zip(chain, chain[1:]))
    assert p.kind == kind_of(w.word)


@pytest.mark.parametrize("n", range(1, 6))
def test_well_organized_statements(n):
    for h in enumerate_hessenberg(n):
        for w in generators(h):
            assert check_lemma_y(w, h)
            assert check_lemma_1324(w, h) in (True, None)
            assert check_lemma_kind(w, h) in (True, None)
            assert check_prop_size_e(w, h) in (True, None)
            assert check_prop_chain_w(w, h) in (True, None)
            p = profile(w, h)
            if p.is_well_organized:
                assert check_prop_wbar(w, h)
                for m in range(1, p.r + 1):
                    assert check_prop_organized(w, h, m) in (True, None)


@given(perm_and_hess(max_n=6))
def test_first_kind_chain_keeps_edges(wh):
    w, h = wh
    if not is_generator(w, h):
        return
    p = profile(w, h)
    if p.kind in ("first", "both"):
        for m in range(1, p.r + 1):
            assert check_prop_organized(w, h, m) is not False
