"""Exhaustive checks of the transition-function and transition-map laws.

The map checks are vectorized with numpy over all target parameters at once.
They use their own closed-form divisibility test: for ``x`` in normal form,
``x <= y`` in three:p,q,r iff some shift ``y + s(p, q, -r)`` with
``0 <= s <= y_k // r`` dominates ``x``, i.e. iff

    max(0, ceil((x_m - y_m) / p), ceil((x_n - y_n) / q)) <= floor((y_k - x_k) / r).

The two-generator case is the same with the k-coordinate dropped and the
shift ``(p, -q)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .transition import tau

__all__ = ["LawReport", "check_tau_laws", "check_two_gen_map_laws", "check_three_gen_map_laws"]


@dataclass
class LawReport:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def fail(self, *info):
        if len(self.violations) < 20:
            self.violations.append(info)
        else:
            self.violations[-1] = ("...",)


def check_tau_laws(max_param: int = 5, max_arg: int = 200) -> LawReport:
    rep = LawReport("tau")
    ns = range(max_arg + 1)
    for p, q in itertools.product(range(1, max_param + 1), repeat=2):
        fwd = [tau(p, q, n) for n in range(max_arg + p + 1)]
        for n in ns:
            rep.checked += 1
            if fwd[n + p] != fwd[n] + q:
                rep.fail("shift", p, q, n)
            if n and fwd[n - 1] > fwd[n]:
                rep.fail("order-preserving", p, q, n)
            back = tau(q, p, fwd[n])
            if back > n:
                rep.fail("round trip below identity", p, q, n)
            if p <= q and back != n:
                rep.fail("round trip is identity", p, q, n)
            if (p == q == 1 or (p >= 2 and q >= 2)) and n and fwd[n] == 0:
                rep.fail("preimage of zero", p, q, n)
    return rep


# -- numpy arithmetic ----------------------------------------------------------


def _tau(p, q, n):
    m, t = np.divmod(n, p)
    return m * q + np.minimum(t, q - 1)


def _ceil_div(a, b):
    return -((-a) // b)


def _norm3(m, n, k, p, q, r):
    s = np.minimum(m // p, n // q)
    return m - s * p, n - s * q, k + s * r


def _leq3(x, y, p, q, r):
    lo = np.maximum(np.maximum(0, _ceil_div(x[0] - y[0], p)), _ceil_div(x[1] - y[1], q))
    return lo <= (y[2] - x[2]) // r


def _norm2(m, n, p, q):
    s = m // p
    return m - s * p, n + s * q


def _leq2(x, y, p, q):
    lo = np.maximum(0, _ceil_div(x[0] - y[0], p))
    return lo <= (y[1] - x[1]) // q


def _first(mask, *arrays):
    i = int(np.flatnonzero(mask)[0])
    return tuple(int(np.broadcast_to(a, mask.shape).flat[i]) for a in arrays)


# -- two generators -------------------------------------------------------------


def check_two_gen_map_laws(max_param: int = 5, box: int = 10) -> LawReport:
    """Laws of T^{p,q}_{r,s} for all parameters <= max_param on normal elements <= box."""
    rep = LawReport("T two-generator")
    rng = np.arange(1, max_param + 1)
    R, S = (a.ravel() for a in np.meshgrid(rng, rng, indexing="ij"))
    for p, q in itertools.product(range(1, max_param + 1), repeat=2):
        pts = [(m, n) for m in range(min(p - 1, box) + 1) for n in range(box + 1)]
        m0 = np.array([u for u, _ in pts])[None, :]
        n0 = np.array([v for _, v in pts])[None, :]
        r, s = R[:, None], S[:, None]
        rep.checked += m0.size * R.size

        def T(m, n):
            return _norm2(_tau(p, r, m), _tau(q, s, n), r, s)

        def Tback(m, n):
            return _norm2(_tau(r, p, m), _tau(s, q, n), p, q)

        img = T(m0, n0)
        # well-defined: every representative (m + j p, n - j q) has the same image
        for j in range(1, box // q + 1):
            ok = n0 - j * q >= 0
            other = T(m0 + j * p, np.maximum(n0 - j * q, 0))
            bad = ok & ((other[0] != img[0]) | (other[1] != img[1]))
            if bad.any():
                rep.fail("well-defined", p, q, *_first(bad, r, s, m0, n0))
        # order-preserving on generator steps
        for dm, dn in ((1, 0), (0, 1)):
            y = _norm2(m0 + dm, n0 + dn, p, q)
            bad = ~_leq2(img, T(*y), r, s)
            if bad.any():
                rep.fail("order-preserving", p, q, *_first(bad, r, s, m0, n0))
        back = Tback(*img)
        bad = ~_leq2(back, (m0, n0), p, q)
        if bad.any():
            rep.fail("round trip below identity", p, q, *_first(bad, r, s, m0, n0))
        ident = (p <= r) & (q <= s)
        bad = ident & ((back[0] != m0) | (back[1] != n0))
        if bad.any():
            rep.fail("round trip is identity", p, q, *_first(bad, r, s, m0, n0))
        if p >= 2 and q >= 2:
            nonzero = (m0 + n0) > 0
            bad = (r >= 2) & (s >= 2) & nonzero & (img[0] == 0) & (img[1] == 0)
            if bad.any():
                rep.fail("preimage of zero", p, q, *_first(bad, r, s, m0, n0))
    return rep


# -- three generators -----------------------------------------------------------


def _pair_ok(a, b):
    return ((a == 1) & (b == 1)) | ((a >= 2) & (b >= 2))


def check_three_gen_map_laws(max_param: int = 5, box: int = 10) -> LawReport:
    """Laws of T^{p,q,r}_{s,t,u} for all parameters <= max_param on normal elements <= box."""
    rep = LawReport("T three-generator")
    rng = np.arange(1, max_param + 1)
    S, T_, U = (a.ravel()[:, None] for a in np.meshgrid(rng, rng, rng, indexing="ij"))
    for p, q, r in itertools.product(range(1, max_param + 1), repeat=3):
        pts = [
            (m, n, k)
            for m, n, k in itertools.product(range(box + 1), repeat=3)
            if m < p or n < q
        ]
        m0, n0, k0 = (np.array(c)[None, :] for c in zip(*pts))
        x = (m0, n0, k0)
        rep.checked += m0.size * S.size

        def T(m, n, k):
            return _norm3(_tau(p, S, m), _tau(q, T_, n), _tau(r, U, k), S, T_, U)

        def Tback(m, n, k):
            return _norm3(_tau(S, p, m), _tau(T_, q, n), _tau(U, r, k), p, q, r)

        def where(mask):
            return _first(mask, S, T_, U, m0, n0, k0)

        img = T(*x)
        for j in range(1, box // r + 1):
            ok = k0 - j * r >= 0
            other = T(m0 + j * p, n0 + j * q, np.maximum(k0 - j * r, 0))
            diff = (other[0] != img[0]) | (other[1] != img[1]) | (other[2] != img[2])
            bad = ok & diff
            if bad.any():
                rep.fail("well-defined", p, q, r, *where(bad))
        for g in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
            y = _norm3(m0 + g[0], n0 + g[1], k0 + g[2], p, q, r)
            bad = ~_leq3(img, T(*y), S, T_, U)
            if bad.any():
                rep.fail("order-preserving", p, q, r, *where(bad))
        back = Tback(*img)
        bad = ~_leq3(back, x, p, q, r)
        if bad.any():
            rep.fail("round trip below identity", p, q, r, *where(bad))
        ident = (p <= S) & (q <= T_) & (r <= U)
        bad = ident & ((back[0] != m0) | (back[1] != n0) | (back[2] != k0))
        if bad.any():
            rep.fail("round trip is identity", p, q, r, *where(bad))
        cond = _pair_ok(p, S) & _pair_ok(q, T_) & _pair_ok(r, U)
        nonzero = (m0 + n0 + k0) > 0
        bad = cond & nonzero & (img[0] == 0) & (img[1] == 0) & (img[2] == 0)
        if bad.any():
            rep.fail("preimage of zero", p, q, r, *where(bad))
    return rep
