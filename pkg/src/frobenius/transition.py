"""Transition functions and maps, downward closure operators, and the
theorem-driven prediction of Frobenius complex homotopy types.

The prediction never builds a complex: it pushes ``lam`` to one of the small
base monoids with transition maps and reads off a sphere, a wedge of two
spheres, or a point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .monoid import (
    FREE,
    NUMSG,
    THREE,
    TWO,
    MonoidElement,
    MonoidError,
    MonoidSpec,
    elements_in_box,
    free,
    generators,
    leq,
    normalize,
    numsg_iso,
    three_gen,
    two_gen,
    zero,
)

__all__ = [
    "tau",
    "transition_map",
    "ClosureOp",
    "composed_t",
    "f_112",
    "g_122",
    "h_222",
    "free_clamp",
    "is_fixed",
    "ClosureReport",
    "verify_closure",
    "HomotopyType",
    "predicted_homotopy_type",
    "base_table_type",
    "predicted_betti",
]


def tau(p: int, q: int, n: int) -> int:
    """tau^p_q(m p + t) = m q + min(t, q - 1) for 0 <= t < p."""
    if p < 1 or q < 1:
        raise ValueError("tau needs p, q >= 1")
    m, t = divmod(n, p)
    return m * q + min(t, q - 1)


def transition_map(source: MonoidSpec, target: MonoidSpec, x: MonoidElement) -> MonoidElement:
    """Apply tau coordinatewise (``source.params`` -> ``target.params``), then normalize."""
    if source.kind != target.kind or source.kind not in (TWO, THREE):
        raise MonoidError(f"transition maps need two two-/three-generator specs, got {source}, {target}")
    if x.spec != source:
        raise MonoidError(f"element of {x.spec} passed with source {source}")
    raw = tuple(tau(p, q, v) for p, q, v in zip(source.params, target.params, x.coords))
    return normalize(target, raw)


@dataclass(frozen=True)
class ClosureOp:
    name: str
    spec: MonoidSpec
    rule: Callable[[MonoidElement], MonoidElement]

    def __call__(self, x: MonoidElement) -> MonoidElement:
        if x.spec != self.spec:
            raise MonoidError(f"{self.name} acts on {self.spec}, got an element of {x.spec}")
        return self.rule(x)


def composed_t(source: MonoidSpec, target: MonoidSpec) -> ClosureOp:
    """``T(target -> source) . T(source -> target)`` as an operator on ``source``."""

    def rule(x):
        return transition_map(target, source, transition_map(source, target, x))

    return ClosureOp(f"composedT({source}->{target})", source, rule)


def _min_rule(spec, a_of, b_of):
    def rule(x):
        m, n, k = x.coords
        return normalize(spec, (a_of(m, n), b_of(m, n), k))

    return rule


def f_112() -> ClosureOp:
    s = three_gen(1, 1, 2)
    return ClosureOp("f_112", s, _min_rule(s, lambda m, n: min(m, n + 1), lambda m, n: min(m + 1, n)))


def g_122() -> ClosureOp:
    s = three_gen(1, 2, 2)
    return ClosureOp("g_122", s, _min_rule(s, lambda m, n: min(m, n // 2 + 1), lambda m, n: min(2 * m + 1, n)))


def h_222() -> ClosureOp:
    s = three_gen(2, 2, 2)
    return ClosureOp("h_222", s, _min_rule(s, lambda m, n: min(m, n + 1), lambda m, n: min(m + 1, n)))


def free_clamp(d: int = 2) -> ClosureOp:
    s = free(d)
    return ClosureOp("free_clamp", s, lambda x: normalize(s, tuple(min(v, 1) for v in x.coords)))


def is_fixed(x: MonoidElement, op: ClosureOp) -> bool:
    return op(x) == x


@dataclass(frozen=True)
class ClosureReport:
    op: str
    checked: int
    passed: bool
    law: str | None = None
    counterexample: tuple | None = None


def verify_closure(op: ClosureOp, bound: int) -> ClosureReport:
    """Check the downward-closure laws on every normal element with coords <= bound.

    Monotonicity is tested on ``x <= x + g`` for each generator g: the order
    is the transitive closure of these steps, so that suffices.
    """
    spec = op.spec
    box = elements_in_box(spec, (bound,) * spec.arity)
    inside = set(box)
    gens = generators(spec)
    z = zero(spec)
    for x in box:
        fx = op(x)
        if not leq(fx, x):
            return ClosureReport(op.name, len(box), False, "below identity", (x.coords, fx.coords))
        if op(fx) != fx:
            return ClosureReport(op.name, len(box), False, "idempotent", (x.coords, fx.coords))
        if x != z and fx == z:
            return ClosureReport(op.name, len(box), False, "preimage of zero", (x.coords,))
        for g in gens:
            y = x + g
            if y in inside and not leq(fx, op(y)):
                return ClosureReport(op.name, len(box), False, "order-preserving", (x.coords, y.coords))
    if op(z) != z:
        return ClosureReport(op.name, len(box), False, "preimage of zero", (z.coords,))
    return ClosureReport(op.name, len(box), True)


# -- predicted homotopy types -----------------------------------------------


@dataclass(frozen=True)
class HomotopyType:
    """``point``, ``sphere`` of dimension ``dim`` (-1 is empty), or ``wedge`` of two ``dim``-spheres."""

    kind: str
    dim: int | None = None

    @property
    def betti(self) -> dict[int, int]:
        """Local Betti vector: an S^d contributes to beta_{d+2}."""
        if self.kind == "point":
            return {}
        return {self.dim + 2: 2 if self.kind == "wedge" else 1}

    def __str__(self):
        if self.kind == "point":
            return "pt"
        if self.kind == "sphere":
            return f"S^{self.dim}"
        return f"S^{self.dim} v S^{self.dim}"


POINT = HomotopyType("point")


def _sphere(d):
    return HomotopyType("sphere", d)


def _free_type(coords) -> HomotopyType:
    # (0, lam) in N^d is a boolean lattice minus its ends when lam is 0/1
    if max(coords) >= 2:
        return POINT
    return _sphere(sum(coords) - 2)


def _natural_type(n: int) -> HomotopyType:
    return _sphere(-1) if n == 1 else POINT


def _two_gen_type(p, q, coords) -> HomotopyType:
    if p == 1 or q == 1:
        x = numsg_iso(p, q).forward(MonoidElement(coords, two_gen(p, q)))
        return _natural_type(x.coords[0])
    src, base = two_gen(p, q), two_gen(2, 2)
    lam = MonoidElement(coords, src)
    image = transition_map(src, base, lam)
    if transition_map(base, src, image) != lam:
        return POINT
    return _sphere(sum(image.coords) - 2)


def base_table_type(params, coords) -> HomotopyType:
    """Homotopy type in three:1,1,2, three:1,2,2 or three:2,2,2, read from normal-form coords."""
    m, n, k = coords
    if params == (1, 1, 2):
        if m == n == 0:
            return _sphere(-1) if k == 1 else HomotopyType("wedge", k - 2)
        if (m, n) in ((1, 0), (0, 1)):
            return _sphere(k - 1)
        return POINT
    if m <= 1 and n <= 1:
        return _sphere(m + n + k - 2)
    return POINT


def _three_gen_type(p, q, r, coords) -> HomotopyType:
    m, n, k = coords
    if r == 1:
        return _free_type((m + k * p, n + k * q))
    if p > q:
        p, q, m, n = q, p, n, m
        coords = (m, n, k)
    src = three_gen(p, q, r)
    base = three_gen(min(2, p), min(2, q), 2)
    lam = MonoidElement(coords, src)
    image = transition_map(src, base, lam)
    if transition_map(base, src, image) != lam:
        return POINT
    return base_table_type(base.params, image.coords)


def predicted_homotopy_type(spec: MonoidSpec, lam: MonoidElement) -> HomotopyType:
    if lam.spec != spec:
        raise MonoidError(f"element of {lam.spec} passed with spec {spec}")
    if lam == zero(spec):
        raise MonoidError("the Frobenius complex of 0 is undefined")
    if spec.kind == FREE:
        return _free_type(lam.coords)
    if spec.kind == NUMSG:
        iso = numsg_iso(*spec.params)
        return _two_gen_type(*spec.params, iso.inverse(lam).coords)
    if spec.kind == TWO:
        return _two_gen_type(*spec.params, lam.coords)
    return _three_gen_type(*spec.params, lam.coords)


def predicted_betti(spec: MonoidSpec, lam: MonoidElement) -> dict[int, int]:
    """Local Betti vector predicted by the homotopy-type theorems (0 -> {0: 1})."""
    if lam.spec == spec and lam == zero(spec):
        return {0: 1}
    return predicted_homotopy_type(spec, lam).betti
