import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobenius.monoid import (
    MonoidError,
    add,
    element,
    elements_in_box,
    free,
    is_normal,
    leq,
    normalize,
    numerical_semigroup,
    numsg_iso,
    parse_spec,
    recognize_submonoid,
    representations,
    subtract,
    three_gen,
    two_gen,
    zero,
)

from oracles import brute_leq, orbit, relation_steps

SMALL_SPECS = [two_gen(2, 2), two_gen(2, 3), two_gen(3, 2), three_gen(1, 1, 2), three_gen(2, 3, 2), three_gen(1, 2, 3)]


def test_parse_spec_roundtrip():
    for text in ("free:2", "two:3,5", "three:1,1,2", "numsg:3,5"):
        assert str(parse_spec(text)) == text


@pytest.mark.parametrize("text", ["", "two", "two:", "two:2", "three:1,2", "numsg:2,4", "two:0,3", "foo:1", "two:a,b"])
def test_parse_spec_rejects(text):
    with pytest.raises(MonoidError):
        parse_spec(text)


# -- normalize -------------------------------------------------------------------


def test_normalize_examples():
    # frozen from the brute-force orbit in oracles.orbit
    assert normalize(three_gen(2, 3, 2), (5, 4, 1)).coords == (3, 1, 3)
    assert normalize(two_gen(2, 2), (2, 0)).coords == (0, 2)
    for spec in SMALL_SPECS + [free(3), numerical_semigroup(3, 5)]:
        assert normalize(spec, (0,) * spec.arity) == zero(spec)


def test_normalize_errors():
    with pytest.raises(MonoidError):
        normalize(two_gen(2, 2), (1, 2, 3))
    with pytest.raises(MonoidError):
        normalize(numerical_semigroup(3, 5), (7,))
    with pytest.raises(MonoidError):
        normalize(two_gen(2, 2), (-1, 0))


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=str)
def test_normalize_constant_on_orbits(spec):
    d = spec.arity
    for raw in itertools.product(range(7 if d == 3 else 13), repeat=d):
        x = normalize(spec, raw)
        assert normalize(spec, x.coords) == x
        assert is_normal(spec, x.coords)
        cls = orbit(spec.kind, spec.params, raw)
        assert {normalize(spec, t) for t in cls} == {x}
        assert representations(x) == cls


def test_normal_form_condition():
    s = three_gen(2, 3, 2)
    for x in elements_in_box(s, (6, 6, 6)):
        m, n, _ = x.coords
        assert m <= 1 or n <= 2
    s = two_gen(3, 5)
    assert all(x.coords[0] <= 2 for x in elements_in_box(s, (6, 6)))


# -- add -------------------------------------------------------------------------


def test_add_examples():
    s = two_gen(2, 2)
    a = element(s, 1, 0)
    assert (a + a).coords == (0, 2)
    assert a + zero(s) == a
    t = three_gen(1, 1, 2)
    assert (element(t, 1, 0, 0) + element(t, 0, 1, 0)).coords == (0, 0, 2)


def test_add_spec_mismatch():
    with pytest.raises(MonoidError):
        add(element(two_gen(2, 2), 1, 0), element(two_gen(2, 3), 1, 0))


@pytest.mark.parametrize("spec", [two_gen(2, 2), two_gen(2, 3), three_gen(1, 1, 2), three_gen(2, 3, 2)], ids=str)
def test_add_laws_exhaustive(spec):
    elems = elements_in_box(spec, (3,) * spec.arity)
    z = zero(spec)
    for x, y in itertools.product(elems, repeat=2):
        assert x + y == y + x
        assert x + z == x
    for x, y, w in itertools.product(elems[:20], repeat=3):
        assert (x + y) + w == x + (y + w)


def test_add_independent_of_representative():
    s = three_gen(2, 3, 2)
    for raw1 in itertools.product(range(6), repeat=3):
        for raw2 in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 3, 0)]:
            x, y = normalize(s, raw1), normalize(s, raw2)
            summed = tuple(u + v for u, v in zip(raw1, raw2))
            assert x + y == normalize(s, summed)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL_SPECS), st.data())
def test_cancellation(spec, data):
    coords = st.tuples(*[st.integers(0, 6)] * spec.arity)
    x, y, z = (normalize(spec, data.draw(coords)) for _ in range(3))
    if x + z == y + z:
        assert x == y
    assert subtract(x + z, z) == x


# -- representations / leq / subtract --------------------------------------------


def test_representations_examples():
    assert representations(element(three_gen(1, 1, 2), 0, 0, 2)) == {(0, 0, 2), (1, 1, 0)}
    assert representations(element(free(2), 3, 4)) == {(3, 4)}
    assert representations(element(two_gen(2, 2), 1, 2)) == {(1, 2), (3, 0)}


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=str)
def test_representations_closed_under_rewriting(spec):
    lhs, rhs = relation_steps(spec.kind, spec.params)
    for x in elements_in_box(spec, (4,) * spec.arity):
        reps = representations(x)
        assert x.coords in reps
        for t in reps:
            for a, b in ((lhs, rhs), (rhs, lhs)):
                if all(u >= v for u, v in zip(t, a)):
                    assert tuple(u - v + w for u, v, w in zip(t, a, b)) in reps


def test_leq_examples():
    s = two_gen(2, 2)
    assert leq(element(s, 0, 1), element(s, 2, 0))
    for x in elements_in_box(s, (1, 5)):
        assert leq(zero(s), x)
    t = three_gen(1, 1, 2)
    assert not leq(element(t, 1, 0, 0), element(t, 0, 0, 1))


@pytest.mark.parametrize("spec", [two_gen(2, 2), two_gen(2, 3), three_gen(1, 1, 2), three_gen(2, 3, 2)], ids=str)
def test_leq_matches_brute_force(spec):
    elems = elements_in_box(spec, (2,) * spec.arity)
    for x, y in itertools.product(elems, repeat=2):
        assert leq(x, y) == brute_leq(spec.kind, spec.params, x.coords, y.coords)


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=str)
def test_leq_is_partial_order(spec):
    elems = elements_in_box(spec, (2,) * spec.arity)
    for x in elems:
        assert leq(x, x)
    for x, y in itertools.product(elems, repeat=2):
        if leq(x, y) and leq(y, x):
            assert x == y
        nu = subtract(y, x)
        assert (nu is not None) == leq(x, y)
        if nu is not None:
            assert x + nu == y
    for x, y, z in itertools.product(elems[:12], repeat=3):
        if leq(x, y) and leq(y, z):
            assert leq(x, z)


def test_subtract_examples():
    s = two_gen(2, 2)
    assert subtract(element(s, 1, 2), element(s, 1, 0)).coords == (0, 2)
    x = element(s, 1, 3)
    assert subtract(x, zero(s)) == x
    t = three_gen(2, 3, 2)
    assert subtract(element(t, 3, 1, 3), element(t, 0, 0, 1)).coords == (3, 1, 2)
    assert subtract(element(t, 1, 0, 0), element(t, 0, 1, 0)) is None


def test_numerical_semigroup_order():
    s = numerical_semigroup(3, 5)
    assert leq(element(s, 3), element(s, 8))
    assert not leq(element(s, 5), element(s, 9))
    assert subtract(element(s, 13), element(s, 5)).coords == (8,)


# -- recognition -------------------------------------------------------------------


def test_recognize_examples():
    assert recognize_submonoid((2, 1), (1, 2), (1, 1))[:3] == (1, 1, 3)
    assert recognize_submonoid((2, 1), (1, 2), (1, 1))[3] == (0, 1, 2)
    assert recognize_submonoid((1, 0), (0, 1), (1, 1))[:3] == (1, 1, 1)
    assert recognize_submonoid((3, 0), (0, 3), (1, 1))[:3] == (1, 1, 3)


def test_recognize_rejects_dependent():
    with pytest.raises(MonoidError):
        recognize_submonoid((1, 1), (2, 2), (1, 0))


@settings(max_examples=300, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9)), min_size=3, max_size=3))
def test_recognize_identity(gens):
    u, v, w = gens
    dets = [u[0] * v[1] - u[1] * v[0], v[0] * w[1] - v[1] * w[0], u[0] * w[1] - u[1] * w[0]]
    if 0 in dets:
        with pytest.raises(MonoidError):
            recognize_submonoid(u, v, w)
        return
    p, q, r, perm = recognize_submonoid(u, v, w)
    assert min(p, q, r) >= 1 and p <= q
    g = [gens[i] for i in perm]
    assert all(p * g[0][i] + q * g[1][i] == r * g[2][i] for i in range(2))


# -- numerical semigroup isomorphism -------------------------------------------------


def test_numsg_iso_examples():
    iso = numsg_iso(3, 5)
    s = two_gen(3, 5)
    assert iso(element(s, 1, 0)).coords == (5,)
    assert iso(element(s, 0, 1)).coords == (3,)
    assert iso(zero(s)).coords == (0,)
    assert iso(element(s, 2, 1)).coords == (13,)
    with pytest.raises(MonoidError):
        numsg_iso(2, 4)


@pytest.mark.parametrize("p,q", [(2, 3), (3, 5), (3, 4), (1, 4), (5, 2)])
def test_numsg_iso_is_order_isomorphism(p, q):
    iso = numsg_iso(p, q)
    elems = elements_in_box(two_gen(p, q), (p - 1, 8))
    images = [iso(x).coords[0] for x in elems]
    assert len(set(images)) == len(images)
    target = numerical_semigroup(p, q)
    for x, y in itertools.product(elems, repeat=2):
        assert iso(x + y) == add(iso(x), iso(y))
        assert leq(x, y) == leq(iso(x), iso(y))
        assert iso.inverse(iso(x)) == x
    for v in range(60):
        if is_normal(target, (v,)):
            assert iso(iso.inverse(v)).coords == (v,)
