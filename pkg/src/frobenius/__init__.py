"""Frobenius complexes of the monoids <a, b | pa = qb> and <a, b, c | pa + qb = rc>.

Build open intervals of the divisibility order, take their order complexes,
compute reduced homology over a field, and compare the results with the
homotopy types predicted through transition maps and with the rational
multigraded Poincare series of K[x, y, z]/(x^p y^q - z^r).
"""

from .homology import GF2, GF3, RATIONALS, FieldSpec, local_betti, reduced_betti
from .interval import IntervalPoset, half_open_interval, open_interval, restrict_to
from .monoid import (
    MonoidElement,
    MonoidError,
    MonoidSpec,
    add,
    element,
    free,
    leq,
    normalize,
    numerical_semigroup,
    parse_spec,
    subtract,
    three_gen,
    two_gen,
)
from .order_complex import SimplicialComplex, order_complex
from .poincare import MultigradedSeries, pushforward, series_closed_form, series_computed, series_diff
from .transition import predicted_betti, predicted_homotopy_type, tau, transition_map

__version__ = "0.1.0"

__all__ = [
    "GF2",
    "GF3",
    "RATIONALS",
    "FieldSpec",
    "local_betti",
    "reduced_betti",
    "IntervalPoset",
    "half_open_interval",
    "open_interval",
    "restrict_to",
    "MonoidElement",
    "MonoidError",
    "MonoidSpec",
    "add",
    "element",
    "free",
    "leq",
    "normalize",
    "numerical_semigroup",
    "parse_spec",
    "subtract",
    "three_gen",
    "two_gen",
    "SimplicialComplex",
    "order_complex",
    "MultigradedSeries",
    "pushforward",
    "series_closed_form",
    "series_computed",
    "series_diff",
    "predicted_betti",
    "predicted_homotopy_type",
    "tau",
    "transition_map",
]
