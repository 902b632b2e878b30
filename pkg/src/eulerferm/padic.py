"""Finite-precision p-adic integers and the fermionic alternating sum.

The alternating measure integral of f over the p-adic integers is the limit
of S_N = sum_{x=0}^{p^N - 1} f(x) (-1)**x. This module never produces an
approximate value for that limit: truncations are computed exactly over the
rationals, and convergence is reported as a valuation certificate
v_p(S_N - exact) >= N, with the exact reference value supplied by the Euler
polynomial generators (a genuinely independent second path).

p is always an odd prime; p = 2 is rejected at construction. Shifts and
coefficients must be p-integral rationals (denominator coprime to p), which
is the rational slice of the p-adic integer ring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .euler import euler_poly
from .polynomial import Polynomial

__all__ = [
    "DenominatorNotInvertible",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "is_odd_prime",
    "require_odd_prime",
    "valuation",
    "PadicInt",
    "padic_from_rational",
    "fermionic_sum_naive",
    "fermionic_sum_naive_mod",
    "fermionic_sum_closed",
    "witt_defect",
    "lem1_defect",
]

# Guard for the naive p^N-term sweeps.
DEFAULT_BUDGET = 10 ** 7


class DenominatorNotInvertible(ArithmeticError):
    """The rational has p in its denominator, so it is not a p-adic integer."""


class BudgetExceeded(RuntimeError):
    """p**N exceeds the configured budget for a naive term-by-term sweep."""


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def require_odd_prime(p: int) -> None:
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


def valuation(r, p: int):
    """p-adic valuation of a rational: v_p(num) - v_p(den); +inf for 0."""
    require_odd_prime(p)
    r = Fraction(r)
    if r == 0:
        return math.inf
    return _int_valuation(r.numerator, p) - _int_valuation(r.denominator, p)


def _int_valuation(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class PadicInt:
    """A residue mod p**precision with explicit odd prime p."""

    p: int
    precision: int
    residue: int

    def __post_init__(self):
        require_odd_prime(self.p)
        if self.precision < 1:
            raise ValueError(f"precision must be >= 1, got {self.precision}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    @property
    def modulus(self) -> int:
        return self.p ** self.precision

    def _compat(self, other: "PadicInt") -> None:
        if self.p != other.p or self.precision != other.precision:
            raise ValueError(
                f"mixed p-adic contexts: ({self.p}, {self.precision}) "
                f"vs ({other.p}, {other.precision})"
            )

    def __add__(self, other):
        self._compat(other)
        return PadicInt(self.p, self.precision, self.residue + other.residue)

    def __sub__(self, other):
        self._compat(other)
        return PadicInt(self.p, self.precision, self.residue - other.residue)

    def __neg__(self):
        return PadicInt(self.p, self.precision, -self.residue)

    def __mul__(self, other):
        self._compat(other)
        return PadicInt(self.p, self.precision, self.residue * other.residue)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError(f"exponent must be >= 0, got {e}")
        return PadicInt(self.p, self.precision, pow(self.residue, e, self.modulus))

    @classmethod
    def from_rational(cls, r, p: int, precision: int) -> "PadicInt":
        """Embed a rational with p-coprime denominator as a residue mod p**N."""
        require_odd_prime(p)
        if precision < 1:
            raise ValueError(f"precision must be >= 1, got {precision}")
        r = Fraction(r)
        if r.denominator % p == 0:
            raise DenominatorNotInvertible(
                f"{r} is not a {p}-adic integer (p divides the denominator)"
            )
        modulus = p ** precision
        inv = pow(r.denominator, -1, modulus)
        return cls(p, precision, r.numerator * inv)


def padic_from_rational(r, p: int, precision: int) -> PadicInt:
    return PadicInt.from_rational(r, p, precision)


def _check_budget(p: int, precision: int, budget: int) -> int:
    require_odd_prime(p)
    if precision < 1:
        raise ValueError(f"precision must be >= 1, got {precision}")
    span = p ** precision
    if span > budget:
        raise BudgetExceeded(f"p**N = {span} exceeds budget {budget}")
    return span


def fermionic_sum_naive(f, p: int, precision: int, budget: int = DEFAULT_BUDGET):
    """Exact truncated alternating sum: sum_{x=0}^{p^N - 1} f(x) (-1)**x."""
    span = _check_budget(p, precision, budget)
    total = 0
    sign = 1
    for x in range(span):
        total += sign * f(x)
        sign = -sign
    return total


def fermionic_sum_naive_mod(f: Polynomial, p: int, precision: int,
                            budget: int = DEFAULT_BUDGET) -> PadicInt:
    """Fast alternative path: the same truncated sum carried out mod p**N.

    Restricted to polynomial integrands with p-integral coefficients; must
    agree with ``fermionic_sum_naive`` reduced mod p**N (tested, not assumed).
    """
    span = _check_budget(p, precision, budget)
    modulus = p ** precision
    coeffs = [PadicInt.from_rational(c, p, precision).residue
              for c in f.coeffs] or [0]
    total = 0
    sign = 1
    for x in range(span):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % modulus
        total = (total + sign * acc) % modulus
        sign = -sign
    return PadicInt(p, precision, total)


def fermionic_sum_closed(n: int, a, q: int):
    """Closed form of sum_{x=0}^{q-1} (x+a)**n (-1)**x via Euler polynomials.

    Telescoping the functional equation E_n(t+1) + E_n(t) = 2 t**n gives
    ((-1)**(q-1) E_n(a+q) + E_n(a)) / 2 for any q >= 1; for q = p**N this is
    the fast path equal to the naive fermionic sum of (x+a)**n.
    """
    if n < 0 or q < 1:
        raise ValueError(f"fermionic_sum_closed: need n >= 0, q >= 1, got ({n}, {q})")
    a = Fraction(a)
    e = euler_poly(n)
    return ((-1) ** (q - 1) * e(a + q) + e(a)) / 2


def witt_defect(n: int, a, p: int, precision: int):
    """Valuation certificate for the integral representation of E_n(a).

    Returns v_p(S_N - E_n(a)) where S_N is the closed-form truncated sum at
    q = p**N; the contract (asserted by callers) is defect >= N. The shift a
    must be p-integral.
    """
    require_odd_prime(p)
    if n < 0 or precision < 1:
        raise ValueError(f"witt_defect: need n >= 0, N >= 1, got ({n}, {precision})")
    a = Fraction(a)
    if a.denominator % p == 0:
        raise DenominatorNotInvertible(
            f"shift {a} is not a {p}-adic integer (p divides the denominator)"
        )
    truncated = fermionic_sum_closed(n, a, p ** precision)
    return valuation(truncated - euler_poly(n)(a), p)


def lem1_defect(f: Polynomial, p: int, precision: int,
                budget: int = DEFAULT_BUDGET):
    """Valuation defect of the reflection/shift functional equation.

    For S1 = sum f(x+1)(-1)**x, S- = sum f(-x)(-1)**x and S = sum f(x)(-1)**x
    over x in [0, p**N), both S1 and S- must approach -S + 2 f(0); returns the
    minimum of the two defects v_p(S1 - target) and v_p(S- - target). When f
    is an even function the sharper statement S -> f(0) is folded in as well.
    Coefficients must be p-integral.
    """
    require_odd_prime(p)
    span = _check_budget(p, precision, budget)
    for c in f.coeffs:
        if Fraction(c).denominator % p == 0:
            raise DenominatorNotInvertible(
                f"coefficient {c} is not a {p}-adic integer"
            )
    f_shift = f.compose_affine(Fraction(1), Fraction(1))
    f_neg = f.compose_affine(Fraction(-1), Fraction(0))
    s = s_shift = s_neg = Fraction(0)
    sign = 1
    for x in range(span):
        s += sign * f(x)
        s_shift += sign * f_shift(x)
        s_neg += sign * f_neg(x)
        sign = -sign
    f0 = f(0)
    target = -s + 2 * f0
    defect = min(valuation(s_shift - target, p), valuation(s_neg - target, p))
    if f_neg == f:
        defect = min(defect, valuation(s - f0, p))
    return defect
