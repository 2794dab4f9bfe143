"""Bernoulli numbers and Bernoulli polynomials, exactly.

Two independent constructions of the numbers are provided and kept
deliberately separate so that one can cross-check the other:

* ``bernoulli_by_recurrence`` solves the defining binomial recurrence
  B_0 = 1, sum_{k=0}^{n-1} C(n, k) B_k = 0 for n >= 2;
* ``bernoulli_by_series`` inverts the exponential power series of
  (e^t - 1)/t, whose coefficients are 1/(n+1)!, and rescales.

Both use the first-kind convention B_1 = -1/2, which is what the n = 2
instance of the recurrence forces.  Tables are append-only: extending one
never changes entries already computed.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .polynomials import Polynomial
from .rationals import binomial

__all__ = [
    "BernoulliTable",
    "bernoulli_by_recurrence",
    "bernoulli_by_series",
    "bernoulli_polynomial",
]


class BernoulliTable:
    """Memoized exact values B_0..B_N with the producing algorithm recorded.

    ``value(i)`` extends the table lazily (append-only) when i is past the
    computed prefix.  Plain indexing and ``require`` never extend, so code
    that must not mutate a shared table can declare its needs up front and
    fail fast instead.  Extension is not synchronized; share a table across
    threads only after it is fully built.
    """

    __slots__ = ("_values", "_algorithm", "_series_inv")

    def __init__(self, algorithm: str):
        if algorithm not in ("recurrence", "series"):
            raise ValueError(f"unknown algorithm tag: {algorithm!r}")
        self._algorithm = algorithm
        self._values: list[Fraction] = [Fraction(1)]
        # ordinary coefficients of 1/((e^t - 1)/t); only kept for the
        # series algorithm so extension can resume the convolution
        self._series_inv: list[Fraction] = [Fraction(1)]

    @property
    def algorithm(self) -> str:
        return self._algorithm

    def __len__(self) -> int:
        return len(self._values)

    def __iter__(self):
        return iter(self._values)

    def __getitem__(self, i: int) -> Fraction:
        return self._values[i]

    def require(self, upto: int) -> None:
        """Fail fast (IndexError) unless B_0..B_upto are already computed."""
        if upto >= len(self._values):
            raise IndexError(
                f"Bernoulli table holds B_0..B_{len(self._values) - 1}, "
                f"but B_{upto} was requested"
            )

    def ensure(self, n: int) -> None:
        """Extend the table (append-only) so that B_0..B_n are available."""
        if self._algorithm == "recurrence":
            self._extend_by_recurrence(n)
        else:
            self._extend_by_series(n)

    def value(self, i: int) -> Fraction:
        """B_i, computing the gap first if the table is too short."""
        if i < 0:
            raise IndexError("Bernoulli indices start at 0")
        self.ensure(i)
        return self._values[i]

    def _extend_by_recurrence(self, n: int) -> None:
        values = self._values
        while len(values) <= n:
            m = len(values)
            # sum_{k=0}^{m} C(m+1, k) B_k = 0 solved for B_m
            acc = Fraction(0)
            for k in range(m):
                acc += binomial(m + 1, k) * values[k]
            values.append(-acc / (m + 1))

    def _extend_by_series(self, n: int) -> None:
        values = self._values
        inv = self._series_inv
        while len(values) <= n:
            m = len(values)
            # inv is the reciprocal series of f(t) = sum t^j / (j+1)!,
            # so inv_m = -sum_{j=1}^{m} f_j inv_{m-j}; then B_m = m! inv_m
            acc = Fraction(0)
            for j in range(1, m + 1):
                acc += Fraction(1, math.factorial(j + 1)) * inv[m - j]
            inv.append(-acc)
            values.append(math.factorial(m) * inv[m])


def bernoulli_by_recurrence(n: int) -> BernoulliTable:
    """Table of B_0..B_n from the binomial recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    table = BernoulliTable("recurrence")
    table.ensure(n)
    return table


def bernoulli_by_series(n: int) -> BernoulliTable:
    """Table of B_0..B_n from exact power-series inversion."""
    if n < 0:
        raise ValueError("n must be >= 0")
    table = BernoulliTable("series")
    table.ensure(n)
    return table


def bernoulli_polynomial(n: int, table: BernoulliTable) -> Polynomial:
    """The monic degree-n Bernoulli polynomial sum_k C(n, k) B_k x^(n-k).

    Its constant term is B_n and its value at 0 and at 1 is B_n for n >= 2.
    The table must already cover 0..n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    table.require(n)
    return Polynomial(binomial(n, n - j) * table[n - j] for j in range(n + 1))
