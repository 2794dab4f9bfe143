"""Checkers for the Bernoulli-number identities this package verifies.

Every checker computes both sides of one identity instance in exact
arithmetic and returns an IdentityReport whose ``holds`` flag is true
exactly when the two sides are structurally equal.  Polynomial-valued
identities are compared coefficientwise, never by sampling.

The families:

* ``carlitz``            -- the symmetry (-1)^m sum C(m,k) B_{n+k} =
                            (-1)^n sum C(n,k) B_{m+k};
* ``bencherif_garici``   -- its q-weighted generalization, reducing to
                            carlitz at q = 0;
* ``apostol42``          -- sum C(n,k) B_k/(n+2-k) = B_{n+1}/(n+1);
* ``u_sequence``         -- u_n = sum C(n+1,k) B_k is 1 at n = 0, else 0;
* ``binomial_split``     -- the partial-fraction split of C(n,k)/(n+2-k);
* ``theorem_KH``         -- equality of two degree-(2n+1) polynomials, one
                            a filtered sum of Bernoulli polynomials, the
                            other (n+1)/2 x^n (x-1)^n (2x-1);
* ``pearl3``             -- sum C(n+q,k) (n+k+1)...(n+k+q) B_{n+k} = 0 for
                            odd q;
* ``b1_filter``          -- (1+(-1)^m)/2 B_m equals B_m except at m = 1;
* ``parity_P`` / ``evenness_Pq`` / ``umbral_vanishes`` / ``pq_expansion``
                         -- the four steps of the functional-based proof of
                            the carlitz/bencherif_garici family.

Checkers never extend the table they are given; they state their needs via
``require`` and fail fast with IndexError when the table is too short.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .bernoulli import BernoulliTable, bernoulli_by_recurrence, bernoulli_polynomial
from .polynomials import (
    Polynomial,
    X,
    format_polynomial,
    interval_average,
    interval_average_inverse,
    umbral_eval,
)
from .rationals import binomial, falling_product

__all__ = [
    "ParameterError",
    "IdentityReport",
    "VerificationRun",
    "IDENTITIES",
    "check_carlitz",
    "check_bencherif_garici",
    "check_apostol42",
    "check_u_sequence",
    "check_binomial_split",
    "check_theorem_KH",
    "theorem_KH_proof_route",
    "check_pearl3",
    "check_b1_filter",
    "check_parity_P",
    "check_evenness_Pq",
    "check_umbral_vanishes",
    "check_pq_expansion",
    "symbolic_carlitz_proof",
    "run_grid",
]

Value = Union[Fraction, Polynomial]


class ParameterError(ValueError):
    """Malformed identity parameters or grid ranges."""


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def format_value(value: Value) -> str:
    if isinstance(value, Polynomial):
        return format_polynomial(value)
    return str(value)


@dataclass(frozen=True)
class IdentityReport:
    """One verification record: identity id, parameters, both sides, verdict."""

    identity: str
    params: dict[str, int]
    lhs: Value
    rhs: Value
    holds: bool

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": dict(self.params),
            "lhs": format_value(self.lhs),
            "rhs": format_value(self.rhs),
            "holds": self.holds,
        }


@dataclass(frozen=True)
class VerificationRun:
    """All reports from one grid sweep plus timing metadata."""

    grid: dict
    reports: list[IdentityReport]
    elapsed_ms: dict[str, float]

    @property
    def counterexamples(self) -> list[IdentityReport]:
        return [r for r in self.reports if not r.holds]

    def to_dict(self) -> dict:
        return {
            "grid": self.grid,
            "reports": [r.to_dict() for r in self.reports],
            "counterexamples": [r.to_dict() for r in self.counterexamples],
            "elapsed_ms": dict(self.elapsed_ms),
        }


# -- rational-valued identities ----------------------------------------------


def check_carlitz(m: int, n: int, table: BernoulliTable) -> IdentityReport:
    """(-1)^m sum_{k<=m} C(m,k) B_{n+k}  vs  (-1)^n sum_{k<=n} C(n,k) B_{m+k}."""
    if m < 0 or n < 0:
        raise ParameterError("carlitz needs m >= 0 and n >= 0")
    table.require(m + n)
    lhs = _sign(m) * sum(
        binomial(m, k) * table[n + k] for k in range(m + 1)
    )
    rhs = _sign(n) * sum(
        binomial(n, k) * table[m + k] for k in range(n + 1)
    )
    return IdentityReport("carlitz", {"m": m, "n": n}, lhs, rhs, lhs == rhs)


def check_bencherif_garici(
    m: int, n: int, q: int, table: BernoulliTable
) -> IdentityReport:
    """The q-weighted two-sum difference that must vanish; carlitz is q = 0."""
    if m < 0 or n < 0 or q < 0:
        raise ParameterError("bencherif_garici needs m, n, q >= 0")
    table.require(m + n + q)
    first = sum(
        binomial(m + q, k) * binomial(n + q + k, q) * table[n + k]
        for k in range(m + q + 1)
    )
    second = sum(
        binomial(n + q, k) * binomial(m + q + k, q) * table[m + k]
        for k in range(n + q + 1)
    )
    lhs = _sign(m) * first - _sign(n + q) * second
    rhs = Fraction(0)
    return IdentityReport(
        "bencherif_garici", {"m": m, "n": n, "q": q}, lhs, rhs, lhs == rhs
    )


def check_apostol42(n: int, table: BernoulliTable) -> IdentityReport:
    """sum_{k<=n} C(n,k) B_k / (n+2-k)  vs  B_{n+1} / (n+1), for n >= 1."""
    if n < 1:
        raise ParameterError("apostol42 needs n >= 1")
    table.require(n + 1)
    lhs = sum(
        Fraction(binomial(n, k), n + 2 - k) * table[k] for k in range(n + 1)
    )
    rhs = table[n + 1] / (n + 1)
    return IdentityReport("apostol42", {"n": n}, lhs, rhs, lhs == rhs)


def check_u_sequence(n: int, table: BernoulliTable) -> IdentityReport:
    """u_n = sum_{k<=n} C(n+1,k) B_k: equal to 1 at n = 0 and to 0 for n >= 1."""
    if n < 0:
        raise ParameterError("u_sequence needs n >= 0")
    table.require(n)
    lhs = sum(binomial(n + 1, k) * table[k] for k in range(n + 1))
    rhs = Fraction(1) if n == 0 else Fraction(0)
    return IdentityReport("u_sequence", {"n": n}, lhs, rhs, lhs == rhs)


def check_binomial_split(n: int, k: int) -> IdentityReport:
    """C(n,k)/(n+2-k) split into C(n+1,k)/(n+1) - C(n+2,k)/((n+1)(n+2))."""
    if not 0 <= k <= n:
        raise ParameterError("binomial_split needs 0 <= k <= n")
    lhs = Fraction(binomial(n, k), n + 2 - k)
    rhs = Fraction(binomial(n + 1, k), n + 1) - Fraction(
        binomial(n + 2, k), (n + 1) * (n + 2)
    )
    return IdentityReport("binomial_split", {"n": n, "k": k}, lhs, rhs, lhs == rhs)


def check_b1_filter(m: int, table: BernoulliTable) -> IdentityReport:
    """(1+(-1)^m)/2 B_m, which must be B_m for m != 1 and 0 for m = 1."""
    if m < 0:
        raise ParameterError("b1_filter needs m >= 0")
    table.require(m)
    lhs = Fraction(1 + _sign(m), 2) * table[m]
    rhs = Fraction(0) if m == 1 else table[m]
    return IdentityReport("b1_filter", {"m": m}, lhs, rhs, lhs == rhs)


def check_pearl3(n: int, q: int, table: BernoulliTable) -> IdentityReport:
    """sum_{k<=n+q} C(n+q,k) (n+k+1)...(n+k+q) B_{n+k}  vs  0, for odd q.

    The verdict is reported for every requested n, including n = 0; callers
    decide what range they assert over.
    """
    if n < 0:
        raise ParameterError("pearl3 needs n >= 0")
    if q < 1 or q % 2 == 0:
        raise ParameterError("q must be odd")
    table.require(2 * n + q)
    lhs = sum(
        binomial(n + q, k) * falling_product(n, k, q) * table[n + k]
        for k in range(n + q + 1)
    )
    rhs = Fraction(0)
    return IdentityReport("pearl3", {"n": n, "q": q}, lhs, rhs, lhs == rhs)


# -- polynomial-valued identities ----------------------------------------------


def _filtered_bernoulli_sum(n: int, table: BernoulliTable) -> Polynomial:
    # sum over k of C(n+1,k) B_{n+1+k}(x), keeping only odd n+1-k
    table.require(2 * n + 2)
    acc = Polynomial()
    for k in range(n + 2):
        if (n + 1 - k) % 2 == 1:
            acc = acc + binomial(n + 1, k) * bernoulli_polynomial(n + 1 + k, table)
    return acc


def _odd_product_polynomial(n: int) -> Polynomial:
    return Fraction(n + 1, 2) * X**n * (X - 1) ** n * (2 * X - 1)


def _half_square_product(n: int) -> Polynomial:
    return Fraction(1, 2) * X ** (n + 1) * (X - 1) ** (n + 1)


def check_theorem_KH(n: int, table: BernoulliTable) -> IdentityReport:
    """Coefficientwise equality of the filtered Bernoulli sum K_n with H_n."""
    if n < 0:
        raise ParameterError("theorem_KH needs n >= 0")
    lhs = _filtered_bernoulli_sum(n, table)
    rhs = _odd_product_polynomial(n)
    return IdentityReport("theorem_KH", {"n": n}, lhs, rhs, lhs == rhs)


def theorem_KH_proof_route(n: int, table: BernoulliTable) -> bool:
    """Replay the averaging-map argument for theorem_KH.

    Checks, in order: the derivative of (1/2) x^(n+1) (x-1)^(n+1) equals
    H_n; averaging that derivative over a unit interval gives the same
    polynomial as averaging K_n; and inverting the average recovers K_n.
    All three succeed exactly when the direct comparison does.
    """
    k_poly = _filtered_bernoulli_sum(n, table)
    h_poly = _odd_product_polynomial(n)
    derivative = _half_square_product(n).derivative()
    image = interval_average(derivative)
    return (
        derivative == h_poly
        and image == interval_average(k_poly)
        and interval_average_inverse(image) == k_poly
    )


# -- the functional-based proof of the carlitz family ---------------------------


def _two_term_base(m: int, n: int, q: int) -> Polynomial:
    # (-1)^(m+q) x^(n+q) (1+x)^(m+q) - (-1)^n x^(m+q) (1+x)^(n+q)
    one_plus_x = Polynomial((1, 1))
    return _sign(m + q) * X ** (n + q) * one_plus_x ** (m + q) - _sign(
        n
    ) * X ** (m + q) * one_plus_x ** (n + q)


def _variant_code(printed_holds: bool, flipped_holds: bool) -> int:
    # 1 = printed sign, 2 = opposite sign, 3 = both (zero case), 0 = neither
    if printed_holds and flipped_holds:
        return 3
    if printed_holds:
        return 1
    if flipped_holds:
        return 2
    return 0


def check_parity_P(m: int, n: int, q: int) -> IdentityReport:
    """P(-1/2 + x) + (-1)^q P(-1/2 - x) must be the zero polynomial."""
    if m < 0 or n < 0 or q < 0:
        raise ParameterError("parity_P needs m, n, q >= 0")
    base = _two_term_base(m, n, q)
    half = Fraction(-1, 2)
    lhs = base.compose_affine(half, 1) + _sign(q) * base.compose_affine(half, -1)
    rhs = Polynomial()
    return IdentityReport(
        "parity_P", {"m": m, "n": n, "q": q}, lhs, rhs, lhs == rhs
    )


def check_evenness_Pq(m: int, n: int, q: int) -> IdentityReport:
    """P^(q)(-1/2 + x) + P^(q)(-1/2 - x) must vanish; the sign variant that
    actually verified is recorded in params["variant"]."""
    if m < 0 or n < 0 or q < 0:
        raise ParameterError("evenness_Pq needs m, n, q >= 0")
    dq = _two_term_base(m, n, q).derivative(q)
    half = Fraction(-1, 2)
    left = dq.compose_affine(half, 1)
    right = dq.compose_affine(half, -1)
    s_plus = left + right
    s_minus = left - right
    variant = _variant_code(s_plus.is_zero(), s_minus.is_zero())
    params = {"m": m, "n": n, "q": q, "variant": variant}
    return IdentityReport(
        "evenness_Pq", params, s_plus, Polynomial(), s_plus.is_zero()
    )


def check_umbral_vanishes(
    m: int, n: int, q: int, table: BernoulliTable
) -> IdentityReport:
    """The umbral functional applied to P^(q) must give 0."""
    if m < 0 or n < 0 or q < 0:
        raise ParameterError("umbral_vanishes needs m, n, q >= 0")
    dq = _two_term_base(m, n, q).derivative(q)
    lhs = umbral_eval(dq, table)
    rhs = Fraction(0)
    return IdentityReport(
        "umbral_vanishes", {"m": m, "n": n, "q": q}, lhs, rhs, lhs == rhs
    )


def _claimed_expansion(m: int, n: int, q: int) -> Polynomial:
    out = [Fraction(0)] * (m + n + q + 1)
    sm = _sign(m)
    snq = _sign(n + q)
    for k in range(m + q + 1):
        out[n + k] += sm * binomial(m + q, k) * binomial(n + q + k, q)
    for k in range(n + q + 1):
        out[m + k] -= snq * binomial(n + q, k) * binomial(m + q + k, q)
    return Polynomial(out)


def check_pq_expansion(m: int, n: int, q: int) -> IdentityReport:
    """Compare P^(q)/q! coefficientwise with its claimed double-binomial form.

    The claimed form is correct up to a global sign that flips with the
    parity of q; the comparison target stored in ``rhs`` is the sign-matched
    form, and params["variant"] records which sign verified (1 as written,
    2 negated, 3 both when everything is zero, 0 neither).
    """
    if m < 0 or n < 0 or q < 0:
        raise ParameterError("pq_expansion needs m, n, q >= 0")
    lhs = Fraction(1, math.factorial(q)) * _two_term_base(m, n, q).derivative(q)
    claimed = _claimed_expansion(m, n, q)
    variant = _variant_code(lhs == claimed, lhs == -claimed)
    rhs = -claimed if variant == 2 else claimed
    params = {"m": m, "n": n, "q": q, "variant": variant}
    return IdentityReport("pq_expansion", params, lhs, rhs, variant != 0)


def symbolic_carlitz_proof(
    m: int, n: int, q: int, table: BernoulliTable
) -> list[IdentityReport]:
    """All four steps of the functional proof for one (m, n, q)."""
    return [
        check_parity_P(m, n, q),
        check_evenness_Pq(m, n, q),
        check_umbral_vanishes(m, n, q, table),
        check_pq_expansion(m, n, q),
    ]


# -- grid runner -----------------------------------------------------------


@dataclass(frozen=True)
class IdentityFamily:
    name: str
    grid_params: tuple[str, ...]
    report_params: tuple[str, ...]
    needs_table: bool
    table_upto: Callable[[dict[str, int]], int] | None
    run_one: Callable[..., IdentityReport]
    min_values: dict[str, int]


def _odd_range_guard(ranges: dict[str, tuple[int, int]]) -> None:
    if "q" in ranges:
        lo, hi = ranges["q"]
        if lo % 2 == 0 or hi > lo:
            # any span wider than a point contains an even value
            raise ParameterError("q must be odd")


IDENTITIES: dict[str, IdentityFamily] = {
    "carlitz": IdentityFamily(
        "carlitz",
        ("m", "n"),
        ("m", "n"),
        True,
        lambda v: v["m"] + v["n"],
        lambda v, t: check_carlitz(v["m"], v["n"], t),
        {},
    ),
    "bencherif_garici": IdentityFamily(
        "bencherif_garici",
        ("m", "n", "q"),
        ("m", "n", "q"),
        True,
        lambda v: v["m"] + v["n"] + v["q"],
        lambda v, t: check_bencherif_garici(v["m"], v["n"], v["q"], t),
        {},
    ),
    "apostol42": IdentityFamily(
        "apostol42",
        ("n",),
        ("n",),
        True,
        lambda v: v["n"] + 1,
        lambda v, t: check_apostol42(v["n"], t),
        {"n": 1},
    ),
    "u_sequence": IdentityFamily(
        "u_sequence",
        ("n",),
        ("n",),
        True,
        lambda v: v["n"],
        lambda v, t: check_u_sequence(v["n"], t),
        {},
    ),
    "binomial_split": IdentityFamily(
        "binomial_split",
        ("n", "k"),
        ("n", "k"),
        False,
        None,
        lambda v, t: check_binomial_split(v["n"], v["k"]),
        {},
    ),
    "theorem_KH": IdentityFamily(
        "theorem_KH",
        ("n",),
        ("n",),
        True,
        lambda v: 2 * v["n"] + 2,
        lambda v, t: check_theorem_KH(v["n"], t),
        {},
    ),
    "pearl3": IdentityFamily(
        "pearl3",
        ("n", "q"),
        ("n", "q"),
        True,
        lambda v: 2 * v["n"] + v["q"],
        lambda v, t: check_pearl3(v["n"], v["q"], t),
        {"q": 1},
    ),
    "b1_filter": IdentityFamily(
        "b1_filter",
        ("m",),
        ("m",),
        True,
        lambda v: v["m"],
        lambda v, t: check_b1_filter(v["m"], t),
        {},
    ),
    "parity_P": IdentityFamily(
        "parity_P",
        ("m", "n", "q"),
        ("m", "n", "q"),
        False,
        None,
        lambda v, t: check_parity_P(v["m"], v["n"], v["q"]),
        {},
    ),
    "evenness_Pq": IdentityFamily(
        "evenness_Pq",
        ("m", "n", "q"),
        ("m", "n", "q", "variant"),
        False,
        None,
        lambda v, t: check_evenness_Pq(v["m"], v["n"], v["q"]),
        {},
    ),
    "umbral_vanishes": IdentityFamily(
        "umbral_vanishes",
        ("m", "n", "q"),
        ("m", "n", "q"),
        True,
        lambda v: v["m"] + v["n"] + v["q"],
        lambda v, t: check_umbral_vanishes(v["m"], v["n"], v["q"], t),
        {},
    ),
    "pq_expansion": IdentityFamily(
        "pq_expansion",
        ("m", "n", "q"),
        ("m", "n", "q", "variant"),
        False,
        None,
        lambda v, t: check_pq_expansion(v["m"], v["n"], v["q"]),
        {},
    ),
}

# families whose q parameter only admits odd values
_ODD_Q = frozenset({"pearl3"})


def _validate_ranges(
    family: IdentityFamily, ranges: dict[str, tuple[int, int]]
) -> None:
    if family.name in _ODD_Q:
        _odd_range_guard(ranges)
    for name, (lo, hi) in ranges.items():
        if name not in family.grid_params:
            raise ParameterError(
                f"{family.name} takes no parameter '{name}'"
            )
        floor = family.min_values.get(name, 0)
        if lo < floor:
            raise ParameterError(
                f"{family.name} needs {name} >= {floor}, got {lo}"
            )
        if lo > hi:
            raise ParameterError(f"empty range for '{name}': {lo}..{hi}")
    for name in family.grid_params:
        if name in ranges:
            continue
        if family.name == "binomial_split" and name == "k":
            continue  # k defaults to the full 0..n stripe per n
        raise ParameterError(
            f"missing range for parameter '{name}' of {family.name}"
        )


def _grid_points(
    family: IdentityFamily, ranges: dict[str, tuple[int, int]]
):
    if family.name == "binomial_split":
        n_lo, n_hi = ranges["n"]
        for n in range(n_lo, n_hi + 1):
            k_lo, k_hi = ranges.get("k", (0, n))
            for k in range(k_lo, min(k_hi, n) + 1):
                yield {"n": n, "k": k}
        return
    axes = [range(lo, hi + 1) for lo, hi in (ranges[p] for p in family.grid_params)]
    for combo in itertools.product(*axes):
        yield dict(zip(family.grid_params, combo))


def table_size_for(identity: str, ranges: dict[str, tuple[int, int]]) -> int:
    """Largest Bernoulli index a grid sweep will read (0 when untabled)."""
    family = IDENTITIES.get(identity)
    if family is None:
        raise ParameterError(f"unknown identity: {identity}")
    if not family.needs_table:
        return 0
    maxes = {p: ranges[p][1] for p in family.grid_params if p in ranges}
    return family.table_upto(maxes)


def run_grid(
    identity: str,
    ranges: dict[str, tuple[int, int]],
    table: BernoulliTable | None = None,
) -> VerificationRun:
    """Evaluate one identity family over an inclusive Cartesian grid.

    Reports are collected in row-major order of the declared parameters.
    A fresh table is built when none is supplied; a supplied table must
    already cover the sweep and is never extended.
    """
    family = IDENTITIES.get(identity)
    if family is None:
        raise ParameterError(f"unknown identity: {identity}")
    _validate_ranges(family, ranges)

    if family.needs_table:
        needed = table_size_for(identity, ranges)
        if table is None:
            table = bernoulli_by_recurrence(needed)
        else:
            table.require(needed)

    start = time.perf_counter()
    reports = [family.run_one(point, table) for point in _grid_points(family, ranges)]
    elapsed = (time.perf_counter() - start) * 1000.0

    grid = {
        "identity": identity,
        "ranges": {name: [lo, hi] for name, (lo, hi) in ranges.items()},
    }
    return VerificationRun(grid, reports, {identity: elapsed})
