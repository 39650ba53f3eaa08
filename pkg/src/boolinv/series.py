"""
Truncated multivariate power series with exact integer coefficients, and
the closed-form rational generating functions for Boolean involution
counts.

Three series are provided.  Writing b(n, l, a) for the number of Boolean
involutions of S_n with l inversions and a excedances:

  * inv_exc_series:  sum b(n, l, a) x^n y^l z^a
        = (x^2yz + x - x^2y^2 - x^3y^3z)
          / (1 - x - x^2yz - xy^2 + x^2y^2 - x^2y^3z + x^3y^3z)
  * rank_series:     sum over ranks k, coefficient of x^n t^k
        = x(1 - x^2t^2) / ((1 - x^2t^2)(1 - x) - xt)
  * total_series:    sum of totals, coefficient of x^n
        = x(1 - x^2) / (1 - 2x - x^2 + x^3)

Expansion is by series division: with a denominator of constant term 1
whose other terms all carry a positive power of x, the coefficients in x
degree n depend only on lower degrees.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

Monomial = tuple[int, ...]
Terms = dict[Monomial, int]


@dataclass(frozen=True)
class SeriesExpansion:
    """Nonzero coefficients of a series truncated to the given bounds."""

    variables: tuple[str, ...]
    truncation: tuple[int, ...]
    coefficients: dict[Monomial, int]

    def coefficient(self, exponents: Monomial) -> int:
        if len(exponents) != len(self.variables):
            raise ValueError(f"expected {len(self.variables)} exponents")
        if any(e > bound for e, bound in zip(exponents, self.truncation)):
            raise ValueError(f"{exponents} outside truncation {self.truncation}")
        return self.coefficients.get(tuple(exponents), 0)

    def to_json(self) -> str:
        return json.dumps(
            {
                "variables": list(self.variables),
                "truncation": list(self.truncation),
                "coefficients": {
                    ",".join(str(e) for e in key): value
                    for key, value in sorted(self.coefficients.items())
                },
            },
            sort_keys=True,
        )


def expand_rational(numerator: Terms, denominator: Terms, bounds: tuple[int, ...]) -> Terms:
    """
    Coefficients of numerator/denominator up to the bounds (inclusive).
    The denominator must have constant term 1, with every other term of
    positive degree in the first variable.
    """
    if denominator.get((0,) * len(bounds), 0) != 1:
        raise ValueError("denominator constant term must be 1")
    tail = [(t, c) for t, c in denominator.items() if any(t)]
    if any(t[0] == 0 for t, _ in tail):
        raise ValueError("denominator tail must have positive first-variable degree")
    coeffs: Terms = {}
    ranges = [range(bound + 1) for bound in bounds]
    for mono in itertools.product(*ranges):
        value = numerator.get(mono, 0)
        for t, c in tail:
            source = tuple(m - d for m, d in zip(mono, t))
            if all(e >= 0 for e in source):
                value -= c * coeffs.get(source, 0)
        if value:
            coeffs[mono] = value
    return coeffs


def inv_exc_series(n_max: int, inv_max: int | None = None, exc_max: int | None = None) -> SeriesExpansion:
    """Series in (x, y, z) counting Boolean involutions by size, inversions
    and excedances."""
    if inv_max is None:
        inv_max = 2 * n_max
    if exc_max is None:
        exc_max = n_max // 2
    numerator = {(2, 1, 1): 1, (1, 0, 0): 1, (2, 2, 0): -1, (3, 3, 1): -1}
    denominator = {
        (0, 0, 0): 1,
        (1, 0, 0): -1,
        (2, 1, 1): -1,
        (1, 2, 0): -1,
        (2, 2, 0): 1,
        (2, 3, 1): -1,
        (3, 3, 1): 1,
    }
    bounds = (n_max, inv_max, exc_max)
    return SeriesExpansion(
        ("x", "y", "z"), bounds, expand_rational(numerator, denominator, bounds)
    )


def rank_series(n_max: int, rank_max: int | None = None) -> SeriesExpansion:
    """Series in (x, t) counting Boolean involutions by size and rank."""
    if rank_max is None:
        rank_max = n_max
    numerator = {(1, 0): 1, (3, 2): -1}
    denominator = {(0, 0): 1, (1, 0): -1, (1, 1): -1, (2, 2): -1, (3, 2): 1}
    bounds = (n_max, rank_max)
    return SeriesExpansion(
        ("x", "t"), bounds, expand_rational(numerator, denominator, bounds)
    )


def total_series(n_max: int) -> SeriesExpansion:
    """Series in x counting all Boolean involutions of each size."""
    numerator = {(1,): 1, (3,): -1}
    denominator = {(0,): 1, (1,): -2, (2,): -1, (3,): 1}
    bounds = (n_max,)
    return SeriesExpansion(
        ("x",), bounds, expand_rational(numerator, denominator, bounds)
    )
