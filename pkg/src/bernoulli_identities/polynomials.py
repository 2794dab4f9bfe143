"""Dense univariate polynomials over exact rationals.

A polynomial is a tuple of Fraction coefficients indexed by power, with
trailing zeros trimmed.  The zero polynomial is the empty tuple and reports
its degree as None (a distinct sentinel, never -1, so it cannot leak into
arithmetic).  All operations are pure and return new values, so polynomials
can be shared freely.

Beyond ring arithmetic this module provides the two maps the identity
checks are built from:

* ``umbral_eval`` -- the linear functional sending x^n to the n-th Bernoulli
  number, extended by linearity;
* ``interval_average`` -- the linear, degree-preserving map p(x) |->
  integral of p over [x, x+1], together with its inverse.  It sends the
  n-th Bernoulli polynomial to x^n, which is what makes it invertible by
  back-substitution.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .rationals import binomial

__all__ = [
    "Polynomial",
    "X",
    "interval_average",
    "interval_average_inverse",
    "umbral_eval",
    "format_polynomial",
    "coefficient_strings",
]

Scalar = Union[int, Fraction]


class Polynomial:
    """Immutable dense polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of x^i; 0 beyond the stored degree."""
        if i < 0:
            raise ValueError("coefficient index must be >= 0")
        if i >= len(self.coeffs):
            return Fraction(0)
        return self.coeffs[i]

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("polynomial powers must be >= 0")
        result = Polynomial((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- calculus and substitution -------------------------------------------

    def derivative(self, order: int = 1) -> "Polynomial":
        """Formal derivative, iterated ``order`` times (order 0 is identity)."""
        if order < 0:
            raise ValueError("derivative order must be >= 0")
        p = self
        for _ in range(order):
            p = Polynomial(i * c for i, c in enumerate(p.coeffs) if i >= 1)
        return p

    def antiderivative(self) -> "Polynomial":
        """The antiderivative with zero constant term."""
        return Polynomial(
            [Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)]
        )

    def compose_affine(self, a: Scalar, b: Scalar) -> "Polynomial":
        """Substitute x -> a + b*x and expand, via Horner in the poly ring."""
        affine = Polynomial((a, b))
        result = Polynomial()
        for c in reversed(self.coeffs):
            result = result * affine + c
        return result

    def __call__(self, point: Scalar) -> Fraction:
        x = Fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- equality and display --------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        # degree <= 0 hashes like the scalar it equals
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        return format_polynomial(self)


def _coerce(value) -> "Polynomial":
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial((value,))
    return NotImplemented


X = Polynomial((0, 1))


def interval_average(p: Polynomial) -> Polynomial:
    """Average of p over a unit interval: A(x+1) - A(x) for any antiderivative A.

    Linear and degree preserving; monomials map to monic images, which is
    what makes the map invertible.
    """
    a = p.antiderivative()
    return a.compose_affine(1, 1) - a


def _power_image(d: int) -> Polynomial:
    # interval_average(x^d) expanded directly: sum_j C(d+1, j)/(d+1) x^j
    den = d + 1
    return Polynomial(Fraction(binomial(d + 1, j), den) for j in range(d + 1))


def interval_average_inverse(p: Polynomial) -> Polynomial:
    """The unique q with interval_average(q) == p.

    Back-substitutes highest degree first against the monic triangular
    images of the monomials; no matrix is ever formed.
    """
    residual = list(p.coeffs)
    out = [Fraction(0)] * len(residual)
    for d in range(len(residual) - 1, -1, -1):
        c = residual[d]
        if c == 0:
            continue
        out[d] = c
        image = _power_image(d)
        for j, ic in enumerate(image.coeffs):
            residual[j] -= c * ic
    return Polynomial(out)


def umbral_eval(p: Polynomial, table) -> Fraction:
    """Apply the Bernoulli umbral functional: sum_i coeff_i * B_i.

    ``table`` must already cover every index up to deg(p); the table is
    read, never extended.
    """
    if p.degree is not None:
        table.require(p.degree)
    total = Fraction(0)
    for i, c in enumerate(p.coeffs):
        if c != 0:
            total += c * table[i]
    return total


def format_polynomial(p: Polynomial) -> str:
    """Human-readable rendering, highest power first: ``x^3 - 1/2*x + 1/6``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            power = "x" if i == 1 else f"x^{i}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def coefficient_strings(p: Polynomial) -> list[str]:
    """Coefficient array for JSON output: index = power, values "p/q"."""
    return [str(c) for c in p.coeffs]
