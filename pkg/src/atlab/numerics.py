"""Scalar special-function kernels.

Everything downstream reduces to four ingredients computed here in plain
double precision:

* log|eta(tau)|, eta(tau) = q^(1/24) prod_{n>=1} (1 - q^n), q = e^(2 pi i tau),
  evaluated after SL2(Z) reduction to the standard fundamental domain
  (|x| <= 1/2, |tau| >= 1), where |q| <= e^(-pi sqrt 3) ~= 0.00433 and a
  handful of product terms reach any sensible tolerance.
* The exponential integral E1(x) = int_x^inf e^(-u)/u du, by alternating
  series for x <= 1 and a Lentz-evaluated continued fraction for x > 1.
* The Riemann zeta function and its s-derivative by Euler-Maclaurin
  summation, the derivative obtained by differentiating every term
  analytically (never by finite differences).
* Assorted exact constants.

All functions are pure and deterministic for a fixed `Precision`; there is
no global mutable state beyond internal caches of immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

EULER_GAMMA = 0.5772156649015328606
LN_2PI = math.log(2.0 * math.pi)
LN_2PI4 = math.log(2.0) + 4.0 * math.log(math.pi)  # log(2 * pi^4)

_REDUCTION_MAX_STEPS = 64
_QSERIES_MAX_TERMS = 200_000


class ConvergenceError(RuntimeError):
    """A numeric routine failed to reach its requested tolerance."""


@dataclass(frozen=True)
class Precision:
    """Numeric-control knobs shared by all kernels.

    rel_tol          target error for derived quantities (also the
                     fundamental-domain boundary slack)
    series_tail_tol  truncation threshold for q-series tails
    em_cutoff        direct-sum length N in the Euler-Maclaurin formula
    em_order         number of Bernoulli correction terms
    lattice_tail_tol truncation threshold for lattice heat sums
    """

    rel_tol: float = 1e-12
    series_tail_tol: float = 1e-16
    em_cutoff: int = 50
    em_order: int = 8
    lattice_tail_tol: float = 1e-18

    def __post_init__(self) -> None:
        for name in ("rel_tol", "series_tail_tol", "lattice_tail_tol"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be strictly positive")
        if self.em_cutoff < 10:
            raise ValueError("em_cutoff must be >= 10")
        if self.em_order < 2:
            raise ValueError("em_order must be >= 2")


DEFAULT_PRECISION = Precision()


@dataclass(frozen=True)
class UpperHalfPoint:
    """A point tau = x + iy in the upper half-plane (y > 0)."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("tau must have finite coordinates")
        if self.y <= 0.0:
            raise ValueError("tau must satisfy y > 0")

    @property
    def q_abs(self) -> float:
        """|q| = e^(-2 pi y), always in (0, 1)."""
        return math.exp(-2.0 * math.pi * self.y)

    def as_complex(self) -> complex:
        return complex(self.x, self.y)


@dataclass(frozen=True)
class ModularTransform:
    """An SL2(Z) element acting by tau -> (a tau + b) / (c tau + d)."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("transform must be unimodular (ad - bc = 1)")

    @property
    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)

    def apply(self, tau: UpperHalfPoint) -> UpperHalfPoint:
        w = (self.a * tau.as_complex() + self.b) / (self.c * tau.as_complex() + self.d)
        return UpperHalfPoint(w.real, w.imag)


def reduce_to_fundamental_domain(
    tau: UpperHalfPoint, prec: Precision | None = None
) -> tuple[UpperHalfPoint, ModularTransform]:
    """Reduce tau to |x| <= 1/2, x^2 + y^2 >= 1 - rel_tol by shifts and inversions.

    Returns (tau', T) with tau' = T(tau).  The loop alternates x -> x - round(x)
    and tau -> -1/tau; it provably terminates, but a hard cap guards against
    floating-point cycling on the |tau| = 1 boundary.
    """
    p = prec or DEFAULT_PRECISION
    x, y = tau.x, tau.y
    a, b, c, d = 1, 0, 0, 1
    for _ in range(_REDUCTION_MAX_STEPS):
        k = round(x)
        if k:
            x -= k
            a -= k * c
            b -= k * d
        norm = x * x + y * y
        if norm < 1.0 - p.rel_tol:
            x, y = -x / norm, y / norm
            a, b, c, d = -c, -d, a, b
        else:
            return UpperHalfPoint(x, y), ModularTransform(a, b, c, d)
    raise ConvergenceError("fundamental-domain reduction did not settle in 64 steps")


def log_abs_qprod(x: float, y: float, tail_tol: float) -> float:
    """log|prod_{n>=1} (1 - q^n)| with q = e^(2 pi i (x + iy)).

    Truncated once the remaining tail is provably below tail_tol, using
    |log|1 - q^n|| <= |q|^n / (1 - |q|) and the geometric tail bound.
    """
    qa = math.exp(-2.0 * math.pi * y)
    one_minus = -math.expm1(-2.0 * math.pi * y)  # 1 - |q|, accurate for small y
    total = 0.0
    qn = 1.0
    for n in range(1, _QSERIES_MAX_TERMS + 1):
        qn *= qa
        total += 0.5 * math.log1p(qn * (qn - 2.0 * math.cos(2.0 * math.pi * n * x)))
        if qn * qa / (one_minus * one_minus) < tail_tol:
            return total
    raise ConvergenceError("q-product did not reach tail tolerance (y too small)")


def log_abs_eta(tau: UpperHalfPoint, prec: Precision | None = None) -> float:
    """log|eta(tau)| = -pi y'/12 + sum_n log|1 - q'^n| at the reduced point,
    plus the transformation correction.

    |eta(tau)| = |c tau + d|^(-1/2) |eta(tau')| for tau' = T(tau); the factor
    is applied as (y'/y)^(1/4), the same quantity via y' = y / |c tau + d|^2.
    Working in log space keeps large y safe (e^(-pi y / 12) underflows for
    y of a few thousand).
    """
    p = prec or DEFAULT_PRECISION
    red, _ = reduce_to_fundamental_domain(tau, p)
    val = -math.pi * red.y / 12.0 + log_abs_qprod(red.x, red.y, p.series_tail_tol)
    return val + 0.25 * (math.log(red.y) - math.log(tau.y))


def abs_eta(tau: UpperHalfPoint, prec: Precision | None = None) -> float:
    """|eta(tau)|, exposed only as exp(log_abs_eta)."""
    return math.exp(log_abs_eta(tau, prec))


def exp_integral_e1(x: float) -> float:
    """E1(x) = int_x^inf e^(-u)/u du for x > 0, relative error ~1e-14.

    x <= 1: E1(x) = -gamma - ln x + sum_{k>=1} (-1)^(k+1) x^k / (k * k!).
    x  > 1: E1(x) = e^(-x) / (x + 1 - 1^2/(x + 3 - 2^2/(x + 5 - ...))),
            evaluated by the modified Lentz algorithm.
    """
    if not (x > 0.0 and math.isfinite(x)):
        raise ValueError("exp_integral_e1 requires x > 0")
    if x <= 1.0:
        total = term = x
        k = 1
        while abs(term) > 1e-18 * abs(total):
            k += 1
            term *= -x * (k - 1) / (k * k)
            total += term
        return -EULER_GAMMA - math.log(x) + total
    tiny = 1e-300
    b = x + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 300):
        a = -float(i * i)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        if c == 0.0:
            c = tiny
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return math.exp(-x) * h
    raise ConvergenceError("continued fraction for E1 did not converge")


@lru_cache(maxsize=8)
def _even_bernoulli(count: int) -> tuple[float, ...]:
    """(B_2, B_4, ..., B_{2*count}) as floats, from the exact recurrence."""
    n_max = 2 * count
    bern = [Fraction(0)] * (n_max + 1)
    bern[0] = Fraction(1)
    for m in range(1, n_max + 1):
        acc = sum(Fraction(math.comb(m + 1, j)) * bern[j] for j in range(m))
        bern[m] = -acc / (m + 1)
    return tuple(float(bern[2 * j]) for j in range(1, count + 1))


def _em_parameters(s: float, prec: Precision) -> tuple[int, int]:
    # For s < 0.5 the partial sums grow like N^(1-s); a long direct sum then
    # costs ~N^(1-s) ulp of cancellation, so shrink N and deepen the tail.
    if s < 0.5:
        return max(12, prec.em_cutoff // 4), prec.em_order + 4
    return prec.em_cutoff, prec.em_order


def zeta_em(s: float, prec: Precision | None = None) -> float:
    """Riemann zeta via Euler-Maclaurin:

    zeta(s) = sum_{n=1}^{N} n^-s + N^(1-s)/(s-1) - N^-s/2
              + sum_{j=1}^{M} B_2j/(2j)! (s)_{2j-1} N^(1-s-2j).

    Absolute error <= 1e-12 on -2 <= s <= 4 at default precision.  Requires
    |s - 1| >= 0.1 (simple pole).
    """
    p = prec or DEFAULT_PRECISION
    if abs(s - 1.0) < 0.1:
        raise ValueError("zeta_em requires |s - 1| >= 0.1")
    n_cut, order = _em_parameters(s, p)
    bern = _even_bernoulli(order)
    terms = [float(n) ** (-s) for n in range(1, n_cut + 1)]
    terms.append(float(n_cut) ** (1.0 - s) / (s - 1.0))
    terms.append(-0.5 * float(n_cut) ** (-s))
    fact = 1.0
    for j in range(1, order + 1):
        fact *= (2 * j - 1) * (2 * j)
        poch = 1.0
        for i in range(2 * j - 1):
            poch *= s + i
        terms.append(bern[j - 1] / fact * poch * float(n_cut) ** (1.0 - s - 2 * j))
    return math.fsum(terms)


def zeta_em_deriv(s: float, prec: Precision | None = None) -> float:
    """zeta'(s) by term-wise analytic differentiation of the formula above.

    The Pochhammer derivative is the product-rule sum over dropped factors,
    which stays exact when some factor s + i vanishes (e.g. s = -1, 0).
    """
    p = prec or DEFAULT_PRECISION
    if abs(s - 1.0) < 0.1:
        raise ValueError("zeta_em_deriv requires |s - 1| >= 0.1")
    n_cut, order = _em_parameters(s, p)
    bern = _even_bernoulli(order)
    ln_n = math.log(n_cut)
    terms = [-math.log(n) * float(n) ** (-s) for n in range(2, n_cut + 1)]
    terms.append(-ln_n * float(n_cut) ** (1.0 - s) / (s - 1.0))
    terms.append(-float(n_cut) ** (1.0 - s) / (s - 1.0) ** 2)
    terms.append(0.5 * ln_n * float(n_cut) ** (-s))
    fact = 1.0
    for j in range(1, order + 1):
        fact *= (2 * j - 1) * (2 * j)
        k = 2 * j - 1
        poch = 1.0
        for i in range(k):
            poch *= s + i
        dpoch = 0.0
        for drop in range(k):
            part = 1.0
            for i in range(k):
                if i != drop:
                    part *= s + i
            dpoch += part
        terms.append(
            bern[j - 1] / fact * (dpoch - poch * ln_n) * float(n_cut) ** (1.0 - s - 2 * j)
        )
    return math.fsum(terms)


@lru_cache(maxsize=1)
def zeta_prime_minus1() -> float:
    """zeta'(-1) at default precision, cached (~-0.1654211437004509)."""
    return zeta_em_deriv(-1.0, DEFAULT_PRECISION)
