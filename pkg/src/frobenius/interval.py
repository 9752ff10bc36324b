"""Finite intervals of the divisibility order as explicit posets."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Callable

from .monoid import (
    NUMSG,
    MonoidElement,
    MonoidError,
    MonoidSpec,
    in_numerical_semigroup,
    leq,
    normalize,
    representations,
    zero,
)

__all__ = [
    "IntervalPoset",
    "down_set",
    "open_interval",
    "half_open_interval",
    "restrict_to",
    "beat_point_core",
]


@dataclass(frozen=True)
class IntervalPoset:
    """Elements in lexicographic order plus the strict order as an index table.

    ``lt[i][j]`` is True iff ``elements[i] < elements[j]``.
    """

    elements: tuple[MonoidElement, ...]
    lt: tuple[tuple[bool, ...], ...]
    lower: MonoidElement | None = None
    upper: MonoidElement | None = None
    lower_closed: bool = False
    upper_closed: bool = False
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __len__(self):
        return len(self.elements)

    def index(self, x: MonoidElement) -> int:
        if self._index is None:
            object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.elements)})
        return self._index[x]

    def __contains__(self, x):
        try:
            self.index(x)
        except KeyError:
            return False
        return True

    def relations(self) -> list[tuple[int, int]]:
        n = len(self.elements)
        return [(i, j) for i in range(n) for j in range(n) if self.lt[i][j]]

    def strictly_above(self) -> list[list[int]]:
        """For each element, the indices of strictly larger elements."""
        return [[j for j, b in enumerate(row) if b] for row in self.lt]

    def to_json(self) -> str:
        return json.dumps(
            {"elements": [list(e.coords) for e in self.elements], "lt": [list(r) for r in self.relations()]}
        )


def _build(elements, **endpoints) -> IntervalPoset:
    elements = tuple(sorted(set(elements), key=lambda e: e.coords))
    lt = tuple(
        tuple(x != y and leq(x, y) for y in elements)
        for x in elements
    )
    return IntervalPoset(elements, lt, **endpoints)


def down_set(lam: MonoidElement) -> list[MonoidElement]:
    """Every ``mu <= lam``, sorted lexicographically."""
    spec = lam.spec
    if spec.kind == NUMSG:
        p, q = spec.params
        return [
            MonoidElement((v,), spec)
            for v in range(lam.coords[0] + 1)
            if in_numerical_semigroup(v, p, q) and in_numerical_semigroup(lam.coords[0] - v, p, q)
        ]
    # mu <= lam iff some representative of lam dominates the normal form of mu,
    # so the union of the boxes below the representatives holds every candidate.
    found = set()
    for rep in representations(lam):
        for raw in itertools.product(*(range(v + 1) for v in rep)):
            found.add(raw)
    out = set()
    for raw in found:
        mu = normalize(spec, raw)
        if leq(mu, lam):
            out.add(mu)
    return sorted(out, key=lambda e: e.coords)


def open_interval(spec: MonoidSpec, lam: MonoidElement) -> IntervalPoset:
    """The poset ``(0, lam)``; its order complex is the Frobenius complex of ``lam``."""
    if lam.spec != spec:
        raise MonoidError(f"element of {lam.spec} passed with spec {spec}")
    z = zero(spec)
    if lam == z:
        raise MonoidError("open interval (0, 0) is undefined; lambda must be nonzero")
    members = [mu for mu in down_set(lam) if mu != z and mu != lam]
    return _build(members, lower=z, upper=lam)


def half_open_interval(spec: MonoidSpec, mu: MonoidElement, lam: MonoidElement) -> IntervalPoset:
    """The poset ``[mu, lam)``."""
    if mu.spec != spec or lam.spec != spec:
        raise MonoidError("elements do not belong to the given spec")
    if mu == lam or not leq(mu, lam):
        raise MonoidError(f"need mu < lam, got mu={mu.coords}, lam={lam.coords}")
    members = [nu for nu in down_set(lam) if nu != lam and leq(mu, nu)]
    return _build(members, lower=mu, upper=lam, lower_closed=True)


def restrict_to(poset: IntervalPoset, predicate: Callable[[MonoidElement], bool]) -> IntervalPoset:
    """Induced subposet on the elements satisfying ``predicate``."""
    keep = [i for i, e in enumerate(poset.elements) if predicate(e)]
    return IntervalPoset(
        tuple(poset.elements[i] for i in keep),
        tuple(tuple(poset.lt[i][j] for j in keep) for i in keep),
        poset.lower,
        poset.upper,
        poset.lower_closed,
        poset.upper_closed,
    )


def beat_point_core(poset: IntervalPoset) -> IntervalPoset:
    """Remove beat points until none remain.

    An element with exactly one upper cover, or exactly one lower cover, is a
    beat point; deleting it is a strong deformation retraction of the order
    complex, so the core has the same homotopy type as ``poset``.  Sweeps run
    in index order until one removes nothing, so the result is deterministic.
    """
    n = len(poset)
    up = [sum(1 << j for j, b in enumerate(row) if b) for row in poset.lt]
    down = [0] * n
    for i in range(n):
        for j in range(n):
            if poset.lt[i][j]:
                down[j] |= 1 << i
    alive = (1 << n) - 1

    def has_one_cover(x, rel, inverse):
        cand = rel[x] & alive
        covers = 0
        while cand:
            y = cand.bit_length() - 1
            cand &= ~(1 << y)
            # y covers x iff nothing alive lies strictly between them
            if not (inverse[y] & rel[x] & alive):
                covers += 1
                if covers > 1:
                    return False
        return covers == 1

    removed = True
    while removed:
        removed = False
        for x in range(n):
            if alive >> x & 1 and (has_one_cover(x, up, down) or has_one_cover(x, down, up)):
                alive &= ~(1 << x)
                removed = True
    return restrict_to(poset, lambda e, keep={poset.elements[i] for i in range(n) if alive >> i & 1}: e in keep)
