import itertools
import json

import pytest

from frobenius.interval import beat_point_core, down_set, half_open_interval, open_interval, restrict_to
from frobenius.monoid import (
    MonoidError,
    element,
    elements_in_box,
    free,
    leq,
    numerical_semigroup,
    subtract,
    three_gen,
    two_gen,
    zero,
)

from oracles import brute_leq

SPECS = [two_gen(2, 2), two_gen(2, 3), three_gen(1, 1, 2), three_gen(2, 3, 2), three_gen(1, 2, 2)]


def test_interval_example_two22():
    s = two_gen(2, 2)
    poset = open_interval(s, element(s, 1, 2))
    assert [e.coords for e in poset.elements] == [(0, 1), (0, 2), (1, 0), (1, 1)]
    names = {(0, 1): "b", (0, 2): "2b", (1, 0): "a", (1, 1): "a+b"}
    rels = {(names[poset.elements[i].coords], names[poset.elements[j].coords]) for i, j in poset.relations()}
    assert rels == {("b", "2b"), ("b", "a+b"), ("a", "2b"), ("a", "a+b")}


def test_interval_of_zero_rejected():
    s = two_gen(2, 2)
    with pytest.raises(MonoidError):
        open_interval(s, zero(s))
    with pytest.raises(MonoidError):
        open_interval(two_gen(2, 3), element(s, 1, 0))


def test_interval_json_schema():
    s = two_gen(2, 2)
    data = json.loads(open_interval(s, element(s, 1, 2)).to_json())
    assert set(data) == {"elements", "lt"}
    assert data["elements"][0] == [0, 1]
    assert all(len(pair) == 2 for pair in data["lt"])


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_interval_complete_and_contained(spec):
    z = zero(spec)
    pool = elements_in_box(spec, (5,) * spec.arity)
    for lam in elements_in_box(spec, (2,) * spec.arity):
        if lam == z:
            continue
        poset = open_interval(spec, lam)
        members = set(poset.elements)
        for mu in members:
            assert mu != z and mu != lam and leq(mu, lam)
        # every normal element strictly between 0 and lam shows up
        for mu in pool:
            if mu not in (z, lam) and leq(mu, lam):
                assert mu in members
        for i, j in itertools.product(range(len(poset)), repeat=2):
            x, y = poset.elements[i], poset.elements[j]
            assert poset.lt[i][j] == (x != y and leq(x, y))


def test_down_set_matches_brute_force():
    spec = three_gen(2, 3, 2)
    lam = element(spec, 1, 2, 2)
    want = [
        mu for mu in elements_in_box(spec, (6, 6, 3)) if brute_leq(spec.kind, spec.params, mu.coords, lam.coords)
    ]
    assert down_set(lam) == want


def test_numerical_semigroup_interval():
    s = numerical_semigroup(3, 5)
    poset = open_interval(s, element(s, 11))
    assert [e.coords[0] for e in poset.elements] == [3, 5, 6, 8]
    assert [(poset.elements[i].coords[0], poset.elements[j].coords[0]) for i, j in poset.relations()] == [
        (3, 6),
        (3, 8),
        (5, 8),
    ]


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_shift_isomorphism(spec):
    # [mu, lam) is isomorphic to [0, lam - mu) via nu -> nu - mu
    box = elements_in_box(spec, (2,) * spec.arity)
    for lam, mu in itertools.product(box, repeat=2):
        if mu == lam or not leq(mu, lam):
            continue
        half = half_open_interval(spec, mu, lam)
        shifted = [subtract(nu, mu) for nu in half.elements]
        diff = subtract(lam, mu)
        below = [x for x in down_set(diff) if x != diff]
        assert sorted(shifted, key=lambda e: e.coords) == below
        for i, j in itertools.product(range(len(half)), repeat=2):
            assert half.lt[i][j] == (shifted[i] != shifted[j] and leq(shifted[i], shifted[j]))


def test_half_open_requires_order():
    s = two_gen(2, 2)
    with pytest.raises(MonoidError):
        half_open_interval(s, element(s, 1, 0), element(s, 0, 1))


def test_restrict_to():
    s = free(2)
    poset = open_interval(s, element(s, 2, 2))
    sub = restrict_to(poset, lambda e: e.coords[0] == 1)
    assert [e.coords for e in sub.elements] == [(1, 0), (1, 1), (1, 2)]
    assert sub.relations() == [(0, 1), (0, 2), (1, 2)]


def test_beat_point_core_examples():
    s = free(2)
    # (0, 2a + 2b) in N^2 is a 3x3 grid minus its corners: contractible
    assert len(beat_point_core(open_interval(s, element(s, 2, 2)))) == 1
    # (0, a + b) is two incomparable points: no beat points
    assert len(beat_point_core(open_interval(s, element(s, 1, 1)))) == 2
    t = two_gen(2, 2)
    # the 4-cycle of (0, a + 2b) is already minimal
    assert len(beat_point_core(open_interval(t, element(t, 1, 2)))) == 4


def test_generator_interval_is_empty():
    s = two_gen(2, 2)
    assert len(open_interval(s, element(s, 1, 0))) == 0


def test_half_open_examples():
    s = two_gen(2, 2)
    a, b = element(s, 1, 0), element(s, 0, 1)
    assert [e.coords for e in half_open_interval(s, a, a + b).elements] == [(1, 0)]
    t = three_gen(1, 1, 2)
    c = element(t, 0, 0, 1)
    assert [e.coords for e in half_open_interval(t, c, c + c).elements] == [(0, 0, 1)]
    lam = element(s, 1, 3)
    assert zero(s) in half_open_interval(s, zero(s), lam)


def test_restrict_examples():
    s = two_gen(2, 2)
    poset = open_interval(s, element(s, 1, 2))
    assert restrict_to(poset, lambda e: True) == poset
    assert len(restrict_to(poset, lambda e: False)) == 0
    t = three_gen(1, 1, 2)
    c = element(t, 0, 0, 1)
    poset = open_interval(t, c + c)
    assert [e.coords for e in poset.elements] == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert poset.relations() == []
    assert [e.coords for e in restrict_to(poset, lambda e: leq(c, e)).elements] == [(0, 0, 1)]
