"""Order complexes of finite posets."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .interval import IntervalPoset

__all__ = ["SimplicialComplex", "order_complex", "f_vector", "reduced_euler", "simplex_boundary"]


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract complex; ``faces_by_dim[d]`` lists the sorted d-faces.

    ``complete_to`` is the top dimension that is known to be complete.  It is
    None for a full complex and ``k`` for a k-skeleton.
    """

    vertex_count: int
    faces_by_dim: tuple[tuple[tuple[int, ...], ...], ...]
    complete_to: int | None = None

    @property
    def dim(self) -> int:
        return len(self.faces_by_dim) - 1

    def facets(self) -> list[tuple[int, ...]]:
        covered = set()
        for faces in self.faces_by_dim[1:]:
            for f in faces:
                for i in range(len(f)):
                    covered.add(f[:i] + f[i + 1:])
        return [f for faces in self.faces_by_dim for f in faces if f not in covered]

    def to_facet_text(self) -> str:
        return "".join(" ".join(map(str, f)) + "\n" for f in self.facets())

    def to_json(self) -> str:
        return json.dumps(
            {"vertex_count": self.vertex_count, "faces_by_dim": [[list(f) for f in fs] for fs in self.faces_by_dim]}
        )


def order_complex(poset: IntervalPoset, max_dim: int | None = None) -> SimplicialComplex:
    """All chains ``x_0 < ... < x_d`` of ``poset`` (only ``d <= max_dim`` if given)."""
    n = len(poset)
    above = poset.strictly_above()
    faces: list[list[tuple[int, ...]]] = []

    def extend(chain, top):
        d = len(chain) - 1
        while len(faces) <= d:
            faces.append([])
        faces[d].append(tuple(sorted(chain)))
        if max_dim is not None and d >= max_dim:
            return
        for j in above[top]:
            chain.append(j)
            extend(chain, j)
            chain.pop()

    for i in range(n):
        extend([i], i)
    return SimplicialComplex(n, tuple(tuple(sorted(fs)) for fs in faces), max_dim)


def simplex_boundary(d: int) -> SimplicialComplex:
    """Boundary of the d-simplex on vertices ``0..d`` (a (d-1)-sphere)."""
    faces = tuple(tuple(combinations(range(d + 1), k + 1)) for k in range(d))
    return SimplicialComplex(d + 1, faces)


def f_vector(c: SimplicialComplex) -> list[int]:
    return [len(fs) for fs in c.faces_by_dim]


def reduced_euler(c: SimplicialComplex) -> int:
    # the empty face contributes -1
    return sum((-1) ** d * f for d, f in enumerate(f_vector(c))) - 1
