"""Named verification suites run by ``frobenius verify`` and the acceptance tests.

Each suite compares homology computed from actual Frobenius complexes with an
exact expectation and returns a :class:`SuiteResult`.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from .homology import GF2, GF3, RATIONALS, FieldSpec, frobenius_complex, local_betti, reduced_betti
from .interval import open_interval
from .laws import check_tau_laws, check_three_gen_map_laws, check_two_gen_map_laws
from .monoid import (
    MonoidElement,
    element,
    elements_in_box,
    free,
    generators,
    in_numerical_semigroup,
    leq,
    numerical_semigroup,
    numsg_iso,
    subtract,
    three_gen,
    two_gen,
    zero,
)
from .poincare import default_box, pushforward, series_closed_form, series_computed, series_diff
from .transition import (
    HomotopyType,
    base_table_type,
    composed_t,
    f_112,
    free_clamp,
    g_122,
    h_222,
    predicted_betti,
    verify_closure,
)

__all__ = ["SuiteResult", "SUITES", "run_suite"]


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def expect(self, ok: bool, *info):
        self.checked += 1
        if not ok:
            self.failures.append(info)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checked} checks, {len(self.failures)} failures, {self.seconds:.1f}s"


def _reduced(spec, lam, field=GF2, core=True):
    return reduced_betti(frobenius_complex(spec, lam, core=core), field)


def _sphere(d):
    return {d: 1}


# -- criterion 1 ---------------------------------------------------------------


def _sphere22_elements():
    spec = two_gen(2, 2)
    return spec, [element(spec, m, n) for m in (0, 1) for n in range(10) if 1 <= m + n <= 9]


def sphere22(res: SuiteResult, field: FieldSpec = GF2):
    spec, lams = _sphere22_elements()
    for lam in lams:
        got = _reduced(spec, lam, field, core=False)
        res.expect(got == _sphere(sum(lam.coords) - 2), lam.coords, got)


# -- criterion 2 ---------------------------------------------------------------


def two_gen_reduction(res: SuiteResult):
    for p, q in ((2, 3), (3, 4), (3, 5)):
        spec = two_gen(p, q)
        for lam in elements_in_box(spec, (p - 1, 7)):
            if lam == zero(spec):
                continue
            got, want = local_betti(spec, lam), predicted_betti(spec, lam)
            res.expect(got == want, str(spec), lam.coords, got, want)
        # the same intervals computed inside N p + N q: order isomorphism for
        # every integer <= 45, homology for every integer the sweep reaches
        iso = numsg_iso(p, q)
        ns = numerical_semigroup(p, q)
        sweep = {iso(lam).coords[0] for lam in elements_in_box(spec, (p - 1, 7))}
        for v in range(1, 46):
            if not in_numerical_semigroup(v, p, q):
                continue
            y = MonoidElement((v,), ns)
            x = iso.inverse(y)
            direct = open_interval(ns, y)
            mapped = open_interval(spec, x)
            same = [e.coords[0] for e in direct.elements] == sorted(iso(e).coords[0] for e in mapped.elements)
            if same:
                order = {e: i for i, e in enumerate(direct.elements)}
                same = all(
                    direct.lt[order[iso(a)]][order[iso(b)]] == mapped.lt[i][j]
                    for i, a in enumerate(mapped.elements)
                    for j, b in enumerate(mapped.elements)
                )
            res.expect(same, "interval iso", str(ns), v)
            if v in sweep:
                got = local_betti(ns, y)
                res.expect(got == local_betti(spec, x) == predicted_betti(ns, y), str(ns), v, got)


# -- criterion 3 ---------------------------------------------------------------


def _wedge_cases():
    spec = three_gen(1, 1, 2)
    cases = []
    for k in range(1, 7):
        cases.append((element(spec, 0, 0, k), {-1: 1} if k == 1 else {k - 2: 2}))
    for k in range(0, 7):
        cases.append((element(spec, 1, 0, k), {k - 1: 1}))
    return spec, cases


def wedge112(res: SuiteResult, field: FieldSpec = GF2):
    spec, cases = _wedge_cases()
    for lam, want in cases:
        got = _reduced(spec, lam, field, core=False)
        res.expect(got == want, lam.coords, got, want)


# -- criterion 4 ---------------------------------------------------------------


def _base_elements():
    for pqr in ((1, 2, 2), (2, 2, 2)):
        spec = three_gen(*pqr)
        for lam in elements_in_box(spec, (3, 3, 5)):
            if lam != zero(spec):
                yield spec, lam


def _table_reduced(t: HomotopyType):
    return {d - 2: b for d, b in t.betti.items()}


def base_tables(res: SuiteResult, field: FieldSpec = GF2):
    for spec, lam in _base_elements():
        got = _reduced(spec, lam, field)
        want = _table_reduced(base_table_type(spec.params, lam.coords))
        res.expect(got == want, str(spec), lam.coords, got, want)


# -- criterion 5 ---------------------------------------------------------------


def three_gen_reduction(res: SuiteResult):
    for pqr in ((2, 3, 4), (1, 3, 2)):
        spec = three_gen(*pqr)
        for lam in elements_in_box(spec, (3, 4, 5)):
            if lam == zero(spec):
                continue
            got, want = local_betti(spec, lam), predicted_betti(spec, lam)
            res.expect(got == want, str(spec), lam.coords, got, want)


# -- criterion 6 ---------------------------------------------------------------


def _free_table(m, n):
    if (m, n) in ((1, 0), (0, 1)):
        return {-1: 1}
    if (m, n) == (1, 1):
        return {0: 1}
    return {}


def free_case(res: SuiteResult):
    spec, plane = three_gen(2, 3, 1), free(2)
    for m in range(4):
        for n in range(4):
            if m == n == 0:
                continue
            want = _free_table(m, n)
            got = _reduced(spec, element(spec, m, n, 0), core=False)
            res.expect(got == want, str(spec), (m, n), got, want)
            got = _reduced(plane, element(plane, m, n), core=False)
            res.expect(got == want, str(plane), (m, n), got, want)


# -- criterion 7 ---------------------------------------------------------------

POINCARE_SPECS = ((2, 3, 1), (1, 1, 2), (1, 2, 2), (2, 2, 2), (2, 3, 3), (1, 3, 2))


def _base_of(p, q):
    return three_gen(min(2, p), min(2, q), 2)


def poincare(res: SuiteResult, i_max: int = 6):
    for pqr in POINCARE_SPECS:
        spec = three_gen(*pqr)
        box = default_box(spec, i_max)
        computed = series_computed(spec, i_max, box, "homology")
        closed = series_closed_form(spec, i_max, box)
        diff = series_diff(computed, closed)
        res.expect(not diff, str(spec), "closed form", diff)
        oracle = series_computed(spec, i_max, box, "oracle")
        res.expect(not series_diff(computed, oracle), str(spec), "oracle mode")
        res.expect(computed.coeff(0, zero(spec)) == 1, str(spec), "constant term")
        p, q, r = pqr
        if r >= 2:
            base = _base_of(p, q)
            pushed = pushforward(series_closed_form(base, i_max, box), spec, box)
            diff = series_diff(computed, pushed)
            res.expect(not diff and not pushed.collisions, str(spec), "pushforward", diff, pushed.collisions)


# -- criterion 8 ---------------------------------------------------------------

USED_COMPOSED_T = (
    (two_gen(2, 3), two_gen(2, 2)),
    (two_gen(3, 4), two_gen(2, 2)),
    (two_gen(3, 5), two_gen(2, 2)),
    (three_gen(2, 3, 4), three_gen(2, 2, 2)),
    (three_gen(1, 3, 2), three_gen(1, 2, 2)),
    (three_gen(2, 3, 3), three_gen(2, 2, 2)),
    (three_gen(1, 1, 2), three_gen(1, 1, 2)),
    (three_gen(1, 2, 2), three_gen(1, 2, 2)),
    (three_gen(2, 2, 2), three_gen(2, 2, 2)),
)


def laws(res: SuiteResult):
    for report in (check_tau_laws(5, 200), check_two_gen_map_laws(5, 10), check_three_gen_map_laws(5, 10)):
        res.expect(report.passed, report.name, report.violations)
    ops = [f_112(), g_122(), h_222(), free_clamp(2)] + [composed_t(s, t) for s, t in USED_COMPOSED_T]
    for op in ops:
        report = verify_closure(op, 10)
        res.expect(report.passed, op.name, report.law, report.counterexample)


# -- criterion 9 ---------------------------------------------------------------


def _shifted(b):
    return {d + 1: v for d, v in b.items()}


def suspension(res: SuiteResult):
    spec, lams = _sphere22_elements()
    a = generators(spec)[0]
    for lam in lams:
        rest = subtract(lam, a)
        if rest is None or rest == zero(spec):
            continue
        got = _reduced(spec, lam, core=False)
        res.expect(got == _shifted(_reduced(spec, rest, core=False)), str(spec), lam.coords)
    elems = [(s, lam) for s, lam in _base_elements()]
    s112, cases = _wedge_cases()
    elems += [(s112, lam) for lam, _ in cases]
    for spec, lam in elems:
        a, b, c = generators(spec)
        if not (leq(c, lam) and c != lam and leq(a + b, lam) and a + b != lam):
            continue
        got = _reduced(spec, lam)
        res.expect(got == _shifted(_reduced(spec, subtract(lam, c))), str(spec), lam.coords)


# -- criterion 10 ---------------------------------------------------------------


def fields(res: SuiteResult):
    _, lams = _sphere22_elements()
    spec = two_gen(2, 2)
    jobs = [(spec, lam, False) for lam in lams]
    s112, cases = _wedge_cases()
    jobs += [(s112, lam, False) for lam, _ in cases]
    jobs += [(s, lam, True) for s, lam in _base_elements()]
    for spec, lam, core in jobs:
        cx = frobenius_complex(spec, lam, core=core)
        ref = reduced_betti(cx, GF2)
        for f in (GF3, RATIONALS):
            got = reduced_betti(cx, f)
            res.expect(got == ref, str(spec), lam.coords, str(f), got, ref)


SUITES: dict[str, tuple[str, Callable[[SuiteResult], None]]] = {
    "sphere22": ("1. two:2,2 sphere law", sphere22),
    "two_gen": ("2. two-generator reduction", two_gen_reduction),
    "wedge112": ("3. three:1,1,2 wedge case", wedge112),
    "base_tables": ("4. base tables three:1,2,2 / three:2,2,2", base_tables),
    "three_gen": ("5. three-generator reduction", three_gen_reduction),
    "free": ("6. free case three:2,3,1", free_case),
    "poincare": ("7. Poincare series", poincare),
    "laws": ("8. transition and closure laws", laws),
    "suspension": ("9. suspension recursions", suspension),
    "fields": ("10. field independence", fields),
}


def run_suite(name: str) -> SuiteResult:
    title, fn = SUITES[name]
    res = SuiteResult(title)
    start = time.perf_counter()
    fn(res)
    res.seconds = time.perf_counter() - start
    return res
