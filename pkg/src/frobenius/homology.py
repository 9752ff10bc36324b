"""Reduced simplicial homology over a field, and local Betti numbers.

Everything is exact: GF(2) columns are Python ints used as bitsets, GF(p)
columns are dicts of residues, rational columns are dicts of Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .interval import beat_point_core, open_interval
from .monoid import MonoidElement, MonoidError, MonoidSpec, zero
from .order_complex import SimplicialComplex, order_complex

__all__ = [
    "FieldSpec",
    "GF2",
    "GF3",
    "RATIONALS",
    "parse_field",
    "SparseMatrix",
    "boundary_matrices",
    "rank",
    "reduced_betti",
    "frobenius_complex",
    "local_betti",
    "local_betti_from_reduced",
]


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class FieldSpec:
    """GF(p) for prime ``characteristic``; characteristic 0 means the rationals."""

    characteristic: int

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"GF({self.characteristic}) is not a field")

    def __str__(self):
        if self.characteristic == 0:
            return "rational"
        if self.characteristic == 2:
            return "gf2"
        return f"gf:{self.characteristic}"


GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
RATIONALS = FieldSpec(0)


def parse_field(text: str) -> FieldSpec:
    text = text.strip().lower()
    if text in ("gf2", "gf:2"):
        return GF2
    if text in ("rational", "rationals", "q"):
        return RATIONALS
    if text.startswith("gf:"):
        try:
            return FieldSpec(int(text[3:]))
        except ValueError as exc:
            raise ValueError(f"bad field {text!r}: {exc}") from None
    raise ValueError(f"unknown field {text!r}; use gf2, gf:p or rational")


@dataclass(frozen=True)
class SparseMatrix:
    """Column-major sparse matrix; ``columns[j]`` maps row index to a nonzero entry."""

    nrows: int
    ncols: int
    columns: tuple[dict[int, int], ...]

    def triplets(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, v) for j, col in enumerate(self.columns) for i, v in col.items())

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, j, v in self.triplets():
            out[i][j] = v
        return out


def boundary_matrices(c: SimplicialComplex, field: FieldSpec = GF2) -> list[SparseMatrix]:
    """``[d_0, d_1, ...]`` where ``d_0`` is the augmentation to the empty face.

    Entries are signed integers reduced into the field (mod p, or left as
    integers for the rationals).
    """
    p = field.characteristic
    mats = []
    prev_index = {(): 0}
    for faces in c.faces_by_dim:
        cols = []
        for face in faces:
            col = {}
            for pos in range(len(face)):
                v = -1 if pos % 2 else 1
                if p:
                    v %= p
                if v:
                    col[prev_index[face[:pos] + face[pos + 1:]]] = v
            cols.append(col)
        mats.append(SparseMatrix(len(prev_index), len(faces), tuple(cols)))
        prev_index = {f: i for i, f in enumerate(faces)}
    return mats


def _rank_gf2(columns) -> int:
    pivots: dict[int, int] = {}
    r = 0
    for col in columns:
        v = 0
        for i in col:
            v ^= 1 << i
        while v:
            low = v.bit_length() - 1
            other = pivots.get(low)
            if other is None:
                pivots[low] = v
                r += 1
                break
            v ^= other
    return r


def _rank_field(columns, p: int) -> int:
    # Column reduction keyed on the largest row index; each pivot column is
    # scaled so its pivot entry is 1.
    pivots: dict[int, dict] = {}
    r = 0
    for col in columns:
        v = {i: (x % p if p else Fraction(x)) for i, x in col.items()}
        v = {i: x for i, x in v.items() if x}
        while v:
            low = max(v)
            piv = pivots.get(low)
            if piv is None:
                inv = pow(v[low], -1, p) if p else 1 / v[low]
                pivots[low] = {i: (x * inv % p if p else x * inv) for i, x in v.items()}
                r += 1
                break
            factor = v[low]
            for i, x in piv.items():
                y = v.get(i, 0) - factor * x
                if p:
                    y %= p
                if y:
                    v[i] = y
                else:
                    v.pop(i, None)
    return r


def rank(m: SparseMatrix, field: FieldSpec = GF2) -> int:
    if field.characteristic == 2:
        return _rank_gf2(m.columns)
    return _rank_field(m.columns, field.characteristic)


def reduced_betti(c: SimplicialComplex, field: FieldSpec = GF2) -> dict[int, int]:
    """Reduced Betti numbers ``{degree: dim}`` (zeros omitted), degrees from -1.

    For a skeleton (``c.complete_to == k``) only degrees below k are reported.
    """
    mats = boundary_matrices(c, field)
    ranks = [rank(m, field) for m in mats] + [0]
    dims = [1] + [len(fs) for fs in c.faces_by_dim]
    top = len(dims) - 2
    if c.complete_to is not None:
        top = min(top, c.complete_to - 1)
    out = {}
    for d in range(-1, top + 1):
        # C_d sits at dims[d + 1]; d_d is mats[d] (d_{-1} = 0)
        b = dims[d + 1] - (ranks[d] if d >= 0 else 0) - ranks[d + 1]
        if b:
            out[d] = b
    return out


def frobenius_complex(
    spec: MonoidSpec, lam: MonoidElement, *, core: bool = True, max_dim: int | None = None
) -> SimplicialComplex:
    """Order complex of ``(0, lam)``, optionally of its beat-point core."""
    poset = open_interval(spec, lam)
    if core:
        poset = beat_point_core(poset)
    return order_complex(poset, max_dim)


def local_betti_from_reduced(reduced: dict[int, int]) -> dict[int, int]:
    return {d + 2: b for d, b in reduced.items()}


def local_betti(
    spec: MonoidSpec,
    lam: MonoidElement,
    field: FieldSpec = GF2,
    *,
    core: bool = True,
    i_max: int | None = None,
) -> dict[int, int]:
    """Local Betti numbers ``{i: beta_i(lam)}``; ``beta_i = dim H~_{i-2}`` of the Frobenius complex.

    With ``i_max`` only ``i <= i_max`` are computed (from a skeleton).
    """
    if lam.spec != spec:
        raise MonoidError(f"element of {lam.spec} passed with spec {spec}")
    if lam == zero(spec):
        return {0: 1}
    max_dim = None if i_max is None else max(i_max - 1, 0)
    cx = frobenius_complex(spec, lam, core=core, max_dim=max_dim)
    out = local_betti_from_reduced(reduced_betti(cx, field))
    if i_max is not None:
        out = {i: b for i, b in out.items() if i <= i_max}
    return out
