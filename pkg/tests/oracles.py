"""Brute-force references used to freeze expected values.

Nothing here imports the normal-form or divisibility code under test.
"""

import itertools
from collections import deque
from fractions import Fraction


def relation_steps(kind, params):
    """The defining relation as a pair of coordinate vectors (lhs ~ rhs)."""
    if kind == "two":
        p, q = params
        return (p, 0), (0, q)
    p, q, r = params
    return (p, q, 0), (0, 0, r)


def orbit(kind, params, raw):
    """Every tuple reachable from ``raw`` by rewriting lhs <-> rhs in either direction."""
    lhs, rhs = relation_steps(kind, params)
    seen = {tuple(raw)}
    todo = deque(seen)
    while todo:
        t = todo.popleft()
        for a, b in ((lhs, rhs), (rhs, lhs)):
            if all(x >= y for x, y in zip(t, a)):
                u = tuple(x - y + z for x, y, z in zip(t, a, b))
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
    return seen


def brute_leq(kind, params, x, y):
    """x <= y iff x + nu lies in the orbit of y for some nu in the bounding box."""
    target = orbit(kind, params, y)
    bound = max(max(t) for t in target)
    for nu in itertools.product(range(bound + 1), repeat=len(x)):
        if tuple(a + b for a, b in zip(x, nu)) in target:
            return True
    return False


def brute_chains(elements, less):
    """All nonempty chains of a finite poset given as a strict-order predicate."""
    out = set()
    n = len(elements)
    for size in range(1, n + 1):
        found = False
        for combo in itertools.combinations(range(n), size):
            ordered = sorted(combo, key=lambda i: sum(1 for j in combo if less(elements[j], elements[i])))
            if all(less(elements[ordered[i]], elements[ordered[i + 1]]) for i in range(size - 1)):
                out.add(combo)
                found = True
        if not found:
            break
    return out


def fraction_rank(rows):
    """Dense Gaussian elimination over the rationals."""
    m = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank
