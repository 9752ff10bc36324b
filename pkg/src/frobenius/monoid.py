"""Presentations, normal forms and the divisibility order.

Four kinds of commutative monoid are supported:

* ``free:d``      -- the free monoid N^d,
* ``two:p,q``     -- <a, b | p a = q b>,
* ``three:p,q,r`` -- <a, b, c | p a + q b = r c>,
* ``numsg:p,q``   -- the numerical semigroup N p + N q (gcd(p, q) = 1),
  whose elements are plain integers.

Elements are stored in normal form.  For ``two`` the a-coordinate is pushed
below p by the rewrite ``p a -> q b``; for ``three`` the rule
``p a + q b -> r c`` is applied until either ``m < p`` or ``n < q``.  Both
rewritings terminate and are confluent, so the normal form is unique.

>>> s = parse_spec("three:2,3,2")
>>> normalize(s, (5, 4, 1)).coords
(3, 1, 3)
>>> x = element(s, 3, 1, 3)
>>> sorted(representations(x))
[(3, 1, 3), (5, 4, 1)]
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Sequence

__all__ = [
    "MonoidSpec",
    "MonoidElement",
    "MonoidError",
    "free",
    "two_gen",
    "three_gen",
    "numerical_semigroup",
    "parse_spec",
    "parse_coords",
    "element",
    "zero",
    "generators",
    "normalize",
    "is_normal",
    "add",
    "representations",
    "leq",
    "lt",
    "subtract",
    "in_numerical_semigroup",
    "recognize_submonoid",
    "NumericalSemigroupIso",
    "numsg_iso",
    "elements_in_box",
]


class MonoidError(ValueError):
    """Raised for malformed presentations or elements."""


FREE, TWO, THREE, NUMSG = "free", "two", "three", "numsg"
_KINDS = (FREE, TWO, THREE, NUMSG)


@dataclass(frozen=True)
class MonoidSpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise MonoidError(f"unknown monoid kind {self.kind!r}")
        expected = {FREE: 1, TWO: 2, THREE: 3, NUMSG: 2}[self.kind]
        if len(self.params) != expected:
            raise MonoidError(f"{self.kind} takes {expected} parameter(s), got {len(self.params)}")
        if any(not isinstance(v, int) or v < 1 for v in self.params):
            raise MonoidError(f"parameters must be positive integers: {self.params}")
        if self.kind == NUMSG and gcd(*self.params) != 1:
            raise MonoidError(f"numsg parameters must be coprime: {self.params}")

    @property
    def arity(self) -> int:
        if self.kind == FREE:
            return self.params[0]
        return {TWO: 2, THREE: 3, NUMSG: 1}[self.kind]

    def __str__(self):
        return f"{self.kind}:{','.join(map(str, self.params))}"


def free(d: int) -> MonoidSpec:
    return MonoidSpec(FREE, (d,))


def two_gen(p: int, q: int) -> MonoidSpec:
    return MonoidSpec(TWO, (p, q))


def three_gen(p: int, q: int, r: int) -> MonoidSpec:
    return MonoidSpec(THREE, (p, q, r))


def numerical_semigroup(p: int, q: int) -> MonoidSpec:
    return MonoidSpec(NUMSG, (p, q))


def parse_coords(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise MonoidError(f"malformed coordinate list {text!r}") from None


def parse_spec(text: str) -> MonoidSpec:
    """Parse ``kind:p,q,...`` into a :class:`MonoidSpec`."""
    kind, sep, rest = text.strip().partition(":")
    if not sep or not rest:
        raise MonoidError(f"malformed monoid spec {text!r}; expected kind:params")
    return MonoidSpec(kind, parse_coords(rest))


@dataclass(frozen=True)
class MonoidElement:
    coords: tuple[int, ...]
    spec: MonoidSpec

    def __add__(self, other):
        return add(self, other)

    def __str__(self):
        if self.spec.kind == NUMSG:
            return str(self.coords[0])
        names = "abc" if self.spec.kind != FREE or self.spec.arity <= 3 else None
        terms = []
        for i, v in enumerate(self.coords):
            if v == 0:
                continue
            name = names[i] if names else f"e{i}"
            terms.append(name if v == 1 else f"{v}{name}")
        return " + ".join(terms) or "0"


def _check_raw(spec: MonoidSpec, raw: Sequence[int]) -> tuple[int, ...]:
    raw = tuple(raw)
    if len(raw) != spec.arity:
        raise MonoidError(f"{spec} expects {spec.arity} coordinate(s), got {len(raw)}")
    if any(v < 0 for v in raw):
        raise MonoidError(f"coordinates must be nonnegative: {raw}")
    return raw


def in_numerical_semigroup(n: int, p: int, q: int) -> bool:
    if n < 0:
        return False
    return any((n - m * p) % q == 0 for m in range(n // p + 1))


def _normal_coords(spec: MonoidSpec, raw: tuple[int, ...]) -> tuple[int, ...]:
    kind = spec.kind
    if kind == TWO:
        p, q = spec.params
        m, n = raw
        s = m // p
        return (m - s * p, n + s * q)
    if kind == THREE:
        p, q, r = spec.params
        m, n, k = raw
        s = min(m // p, n // q)
        return (m - s * p, n - s * q, k + s * r)
    if kind == NUMSG:
        if not in_numerical_semigroup(raw[0], *spec.params):
            raise MonoidError(f"{raw[0]} is not in N{spec.params[0]} + N{spec.params[1]}")
    return raw


def normalize(spec: MonoidSpec, raw: Sequence[int]) -> MonoidElement:
    return MonoidElement(_normal_coords(spec, _check_raw(spec, raw)), spec)


def element(spec: MonoidSpec, *coords: int) -> MonoidElement:
    """Shorthand: ``element(s, 1, 2)`` is ``normalize(s, (1, 2))``."""
    return normalize(spec, coords)


def zero(spec: MonoidSpec) -> MonoidElement:
    return MonoidElement((0,) * spec.arity, spec)


def generators(spec: MonoidSpec) -> list[MonoidElement]:
    if spec.kind == NUMSG:
        return [MonoidElement((v,), spec) for v in sorted(set(spec.params))]
    d = spec.arity
    return [MonoidElement(tuple(int(i == j) for j in range(d)), spec) for i in range(d)]


def is_normal(spec: MonoidSpec, raw: Sequence[int]) -> bool:
    raw = _check_raw(spec, raw)
    if spec.kind == NUMSG:
        return in_numerical_semigroup(raw[0], *spec.params)
    return _normal_coords(spec, raw) == raw


def _same_spec(x: MonoidElement, y: MonoidElement):
    if x.spec != y.spec:
        raise MonoidError(f"spec mismatch: {x.spec} vs {y.spec}")


def add(x: MonoidElement, y: MonoidElement) -> MonoidElement:
    _same_spec(x, y)
    return MonoidElement(
        _normal_coords(x.spec, tuple(u + v for u, v in zip(x.coords, y.coords))), x.spec
    )


def _reps(spec: MonoidSpec, coords: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    kind = spec.kind
    if kind == TWO:
        p, q = spec.params
        m, n = coords
        for s in range(n // q + 1):
            yield (m + s * p, n - s * q)
    elif kind == THREE:
        p, q, r = spec.params
        m, n, k = coords
        for s in range(k // r + 1):
            yield (m + s * p, n + s * q, k - s * r)
    else:
        yield coords


def representations(x: MonoidElement) -> set[tuple[int, ...]]:
    """All coordinate tuples in the rewrite class of ``x``."""
    return set(_reps(x.spec, x.coords))


def _diff_coords(spec, y_coords, x_coords):
    """Coordinates of some representative of y - x, or None when x is not below y."""
    if spec.kind == NUMSG:
        d = y_coords[0] - x_coords[0]
        return (d,) if in_numerical_semigroup(d, *spec.params) else None
    # Comparing every representative of y against the normal form of x is
    # enough: shifting a dominating pair by the relation keeps domination.
    for rep in _reps(spec, y_coords):
        diff = tuple(u - v for u, v in zip(rep, x_coords))
        if all(v >= 0 for v in diff):
            return diff
    return None


def leq(x: MonoidElement, y: MonoidElement) -> bool:
    _same_spec(x, y)
    return _diff_coords(x.spec, y.coords, x.coords) is not None


def lt(x: MonoidElement, y: MonoidElement) -> bool:
    return x != y and leq(x, y)


def subtract(y: MonoidElement, x: MonoidElement) -> MonoidElement | None:
    """The unique ``nu`` with ``x + nu == y``, or None if ``x`` does not divide ``y``."""
    _same_spec(x, y)
    diff = _diff_coords(x.spec, y.coords, x.coords)
    if diff is None:
        return None
    return MonoidElement(_normal_coords(x.spec, diff), x.spec)


def elements_in_box(spec: MonoidSpec, bounds: Sequence[int]) -> list[MonoidElement]:
    """Normal-form elements with ``coords[i] <= bounds[i]``, in lexicographic order."""
    bounds = tuple(bounds)
    if len(bounds) != spec.arity:
        raise MonoidError(f"box {bounds} does not match arity of {spec}")
    out = []
    for raw in itertools.product(*(range(b + 1) for b in bounds)):
        if is_normal(spec, raw):
            out.append(MonoidElement(raw, spec))
    return out


# -- recognition of three-generated submonoids of N^2 ------------------------


def _det(u, v):
    return u[0] * v[1] - u[1] * v[0]


def recognize_submonoid(u, v, w) -> tuple[int, int, int, tuple[int, int, int]]:
    """Identify ``N u + N v + N w`` in N^2 with some ``three:p,q,r``.

    Returns ``(p, q, r, perm)`` where ``perm`` indexes into ``(u, v, w)`` so
    that ``p*g[perm[0]] + q*g[perm[1]] == r*g[perm[2]]``.

    >>> recognize_submonoid((2, 1), (1, 2), (1, 1))
    (1, 1, 3, (0, 1, 2))
    """
    gens = (tuple(u), tuple(v), tuple(w))
    for g in gens:
        if len(g) != 2 or any(c < 0 for c in g):
            raise MonoidError(f"generators must lie in N^2, got {g}")
    dets = (_det(gens[1], gens[2]), _det(gens[2], gens[0]), _det(gens[0], gens[1]))
    if 0 in dets:
        raise MonoidError("generators must be pairwise linearly independent")
    g = gcd(*dets)
    kernel = [d // g for d in dets]
    if sum(1 for c in kernel if c < 0) == 2:
        kernel = [-c for c in kernel]
    neg = next(i for i, c in enumerate(kernel) if c < 0)
    pos = [i for i in range(3) if i != neg]
    candidates = []
    for i, j in (pos, pos[::-1]):
        candidates.append((kernel[i], kernel[j], -kernel[neg], (i, j, neg)))
    p, q, r, perm = min(candidates)
    for axis in range(2):
        lhs = p * gens[perm[0]][axis] + q * gens[perm[1]][axis]
        assert lhs == r * gens[perm[2]][axis]
    return p, q, r, perm


# -- two-generator monoids as numerical semigroups ---------------------------


@dataclass(frozen=True)
class NumericalSemigroupIso:
    """``two:p,q`` -> ``numsg:p,q``, sending a to q and b to p."""

    p: int
    q: int

    @property
    def source(self) -> MonoidSpec:
        return two_gen(self.p, self.q)

    @property
    def target(self) -> MonoidSpec:
        return numerical_semigroup(self.p, self.q)

    def forward(self, x: MonoidElement) -> MonoidElement:
        if x.spec != self.source:
            raise MonoidError(f"expected an element of {self.source}, got {x.spec}")
        m, n = x.coords
        return MonoidElement((m * self.q + n * self.p,), self.target)

    def inverse(self, y: MonoidElement | int) -> MonoidElement:
        value = y if isinstance(y, int) else y.coords[0]
        # normal form has m < p, so m is determined by value * q^{-1} mod p
        m = value * pow(self.q, -1, self.p) % self.p if self.p > 1 else 0
        rest = value - m * self.q
        if rest < 0 or rest % self.p:
            raise MonoidError(f"{value} is not in N{self.p} + N{self.q}")
        return MonoidElement((m, rest // self.p), self.source)

    __call__ = forward


def numsg_iso(p: int, q: int) -> NumericalSemigroupIso:
    if gcd(p, q) != 1:
        raise MonoidError(f"p and q must be coprime, got {p}, {q}")
    return NumericalSemigroupIso(p, q)
