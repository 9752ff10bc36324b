"""Truncated multigraded Poincare series of the monoid algebras K[three:p,q,r].

A series is a finite map ``(i, lam) -> coefficient`` standing for the terms
``coeff * t^i z^lam`` with ``i <= i_max`` and ``lam`` inside a coordinate box.
Comparisons only look at the region both operands claim to know.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable

from .homology import GF2, FieldSpec, local_betti
from .monoid import (
    THREE,
    MonoidElement,
    MonoidError,
    MonoidSpec,
    add,
    elements_in_box,
    generators,
    zero,
)
from .transition import predicted_betti, transition_map

__all__ = [
    "MultigradedSeries",
    "series_computed",
    "series_closed_form",
    "pushforward",
    "series_diff",
    "default_box",
]

Key = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class MultigradedSeries:
    spec: MonoidSpec
    i_max: int
    box: tuple[int, ...]
    terms: dict[Key, int]
    collisions: tuple[Key, ...] = field(default=(), compare=False)

    def coeff(self, i: int, lam) -> int:
        coords = lam.coords if isinstance(lam, MonoidElement) else tuple(lam)
        return self.terms.get((i, coords), 0)

    def in_region(self, i: int, coords) -> bool:
        return 0 <= i <= self.i_max and all(v <= b for v, b in zip(coords, self.box))

    def sorted_terms(self) -> list[tuple[int, tuple[int, ...], int]]:
        return [(i, lam, c) for (i, lam), c in sorted(self.terms.items())]

    def to_json(self) -> str:
        return json.dumps(
            {
                "spec": str(self.spec),
                "i_max": self.i_max,
                "terms": [{"i": i, "lambda": list(lam), "coeff": c} for i, lam, c in self.sorted_terms()],
            }
        )


def _make(spec, i_max, box, acc, collisions=()) -> MultigradedSeries:
    if i_max < 0:
        raise ValueError("i_max must be nonnegative")
    box = tuple(box)
    if len(box) != spec.arity:
        raise MonoidError(f"box {box} does not match arity of {spec}")
    s = MultigradedSeries(spec, i_max, box, {}, tuple(collisions))
    for (i, lam), c in acc.items():
        if c and s.in_region(i, lam):
            s.terms[(i, lam)] = c
    return s


def default_box(spec: MonoidSpec, i_max: int) -> tuple[int, int, int]:
    """Box holding every exponent of the closed form up to ``t^i_max``, plus a margin of one."""
    if spec.kind != THREE:
        raise MonoidError(f"default_box needs a three-generator spec, got {spec}")
    r = spec.params[2]
    return (2, 2, r * -(-i_max // 2) + 2)


def series_computed(
    spec: MonoidSpec,
    i_max: int,
    box,
    mode: str = "homology",
    field: FieldSpec = GF2,
) -> MultigradedSeries:
    """Sum of ``beta_i(lam) t^i z^lam`` over the box, from homology or from the prediction."""
    if mode not in ("homology", "oracle"):
        raise ValueError(f"mode must be 'homology' or 'oracle', got {mode!r}")
    acc = {}
    for lam in elements_in_box(spec, box):
        if mode == "homology":
            betti = local_betti(spec, lam, field, i_max=i_max)
        else:
            betti = predicted_betti(spec, lam)
        for i, b in betti.items():
            acc[(i, lam.coords)] = b
    return _make(spec, i_max, box, acc)


def series_closed_form(spec: MonoidSpec, i_max: int, box) -> MultigradedSeries:
    """Expand the rational closed form, normalizing every exponent.

    ``r == 1``: (1 + t z^a)(1 + t z^b).
    ``r >= 2``: (1 + t z^a)(1 + t z^b)(1 + t z^c) / (1 - t^2 z^{rc}), with the
    denominator expanded as a geometric series.
    """
    if spec.kind != THREE:
        raise MonoidError(f"closed form is only known for three-generator specs, got {spec}")
    r = spec.params[2]
    a, b, c = generators(spec)
    factors = [a, b] if r == 1 else [a, b, c]
    # numerator: product of (1 + t z^g)
    numerator = {(0, zero(spec)): 1}
    for g in factors:
        nxt = defaultdict(int)
        for (i, lam), coef in numerator.items():
            nxt[(i, lam)] += coef
            nxt[(i + 1, add(lam, g))] += coef
        numerator = nxt
    acc = defaultdict(int)
    rc = MonoidElement((0, 0, r), spec)
    step = [zero(spec)]
    ells = range(i_max // 2 + 1) if r >= 2 else range(1)
    for ell in ells:
        if ell:
            step.append(add(step[-1], rc))
        for (i, lam), coef in numerator.items():
            acc[(i + 2 * ell, add(lam, step[ell]).coords)] += coef
    return _make(spec, i_max, box, acc)


def pushforward(
    s: MultigradedSeries,
    target: MonoidSpec,
    box=None,
    mapping: Callable[[MonoidElement], MonoidElement] | None = None,
) -> MultigradedSeries:
    """Send ``t^i z^mu`` to ``t^i z^{T(mu)}``; T defaults to the transition map.

    The result is truncated to ``box`` (default: the source box).  It is only
    complete there if every preimage of that region lies in the source box;
    for transition maps whose parameters do not decrease this is automatic.
    Keys hit more than once are summed and listed in ``collisions``.
    """
    if mapping is None:

        def mapping(mu):
            return transition_map(s.spec, target, mu)

    acc = defaultdict(int)
    hits = defaultdict(int)
    for (i, coords), coef in s.terms.items():
        image = mapping(MonoidElement(coords, s.spec))
        if image.spec != target:
            raise MonoidError(f"mapping produced an element of {image.spec}, expected {target}")
        acc[(i, image.coords)] += coef
        hits[(i, image.coords)] += 1
    collisions = sorted(k for k, v in hits.items() if v > 1)
    return _make(target, s.i_max, s.box if box is None else box, acc, collisions)


def series_diff(s1: MultigradedSeries, s2: MultigradedSeries) -> list[tuple[int, tuple[int, ...], int, int]]:
    """Keys in the common truncation region where the coefficients differ."""
    if s1.spec != s2.spec:
        raise MonoidError(f"cannot compare series over {s1.spec} and {s2.spec}")
    out = []
    for key in sorted(set(s1.terms) | set(s2.terms)):
        i, lam = key
        if s1.in_region(i, lam) and s2.in_region(i, lam):
            c1, c2 = s1.terms.get(key, 0), s2.terms.get(key, 0)
            if c1 != c2:
                out.append((i, lam, c1, c2))
    return out
