"""Polynomial ring tests over Fraction and nested-Polynomial coefficients.

The derivative oracle is a one-step formal differentiation written here,
applied repeatedly; the composition oracle is evaluation consistency at
random rational points.
"""

import random
from fractions import Fraction

import pytest

from eulerferm.polynomial import Polynomial, X, monomial


def diff_once(p):
    """Independent single derivative step: coefficient i goes to i * c_i."""
    return Polynomial([i * c for i, c in enumerate(p.coeffs)][1:])


def rand_poly(rng, max_deg=6, span=9):
    return Polynomial([Fraction(rng.randint(-span, span),
                                rng.randint(1, span))
                       for _ in range(rng.randint(0, max_deg + 1))])


def test_normalization_and_degree():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial().degree is None
    assert Polynomial([0, 0]).degree is None
    assert Polynomial([5]).degree == 0
    assert X.degree == 1
    assert not Polynomial()
    assert Polynomial([0]).is_zero()


def test_equality_with_scalars():
    assert Polynomial() == 0
    assert Polynomial([Fraction(3, 2)]) == Fraction(3, 2)
    assert Polynomial([1, 1]) != 1


def test_immutability():
    p = X + 1
    with pytest.raises(AttributeError):
        p.coeffs = (1,)


def test_ring_identities():
    assert (X + 1) * (X - 1) == X ** 2 - 1
    p = 3 * X ** 2 - Fraction(1, 2)
    assert p + Polynomial() == p
    assert p - p == 0
    assert p * Polynomial() == 0
    assert Polynomial([1]) * p == p
    assert (X + 2) ** 0 == 1


def test_bivariate_square():
    a = Polynomial([Fraction(0), Fraction(1)])       # inner indeterminate
    one = Polynomial([Fraction(1)])
    x_plus_a = Polynomial([a, one])
    sq = x_plus_a * x_plus_a
    assert sq.coeffs == (a * a, 2 * a, one)


def test_degree_of_products():
    rng = random.Random(11)
    for _ in range(100):
        p, q = rand_poly(rng), rand_poly(rng)
        if p.is_zero() or q.is_zero():
            assert (p * q).is_zero()
        else:
            assert (p * q).degree == p.degree + q.degree


def test_derivative_examples():
    assert (X ** 3).derivative(2) == 6 * X
    assert (X ** 2).derivative(5) == 0
    assert (X ** 2).derivative(0) == X ** 2
    with pytest.raises(ValueError):
        (X ** 2).derivative(-1)


def test_derivative_matches_repeated_single_steps():
    rng = random.Random(13)
    for _ in range(80):
        p = rand_poly(rng)
        stepped = p
        for k in range(5):
            assert p.derivative(k) == stepped
            stepped = diff_once(stepped)


def test_derivative_composes():
    rng = random.Random(17)
    for _ in range(60):
        p = rand_poly(rng)
        for j in range(3):
            for k in range(3):
                assert p.derivative(j + k) == p.derivative(j).derivative(k)


def test_derivative_of_monomial_closed_form():
    from eulerferm.numeric import falling_factorial
    for m in range(9):
        for k in range(m + 2):
            expected = (monomial(m - k, Fraction(falling_factorial(m, k)))
                        if k <= m else Polynomial())
            assert monomial(m, Fraction(1)).derivative(k) == expected


def test_compose_affine_examples():
    assert (X ** 2).compose_affine(-1, 0) == X ** 2
    assert (X ** 2).compose_affine(1, 1) == X ** 2 + 2 * X + 1
    assert (X ** 3).compose_affine(1, -1)(Fraction(1)) == 0


def test_compose_affine_shift_additivity():
    rng = random.Random(19)
    for _ in range(50):
        p = rand_poly(rng)
        v, w = Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5))
        assert p.compose_affine(1, v).compose_affine(1, w) == \
            p.compose_affine(1, v + w)


def test_compose_affine_eval_consistency():
    rng = random.Random(23)
    for _ in range(80):
        p = rand_poly(rng)
        u = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
        v = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
        t = Fraction(rng.randint(-6, 6), rng.randint(1, 6))
        assert p.compose_affine(u, v)(t) == p(u * t + v)


def test_eval():
    p = X ** 2 - X
    assert p(Fraction(1, 2)) == Fraction(-1, 4)
    q = 5 * X ** 3 + Fraction(7, 2)
    assert q(Fraction(0)) == q.coeffs[0]
    assert Polynomial()(Fraction(3)) == 0


def test_bivariate_eval():
    # (x+a)(x+a-2) at x = 1 expands to (1+a)(a-1) = a^2 - 1
    a = Polynomial([Fraction(0), Fraction(1)])
    one = Polynomial([Fraction(1)])
    p = Polynomial([a, one]) * Polynomial([a - 2, one])
    assert p(Polynomial([Fraction(1)])) == \
        Polynomial([Fraction(-1), Fraction(0), Fraction(1)])


def test_str_rendering():
    assert str(Polynomial()) == "0"
    assert str(X ** 2 - X) == "-x + x^2"
    assert str(X - Fraction(1, 2)) == "-1/2 + x"
    assert str(Polynomial([Fraction(1, 4), 0, Fraction(-3, 2), 1])) == \
        "1/4 - 3/2*x^2 + x^3"
    assert str(Polynomial([Fraction(7)])) == "7"


def test_coeff_strings_round_trip():
    p = Polynomial([Fraction(1, 4), Fraction(0), Fraction(-3, 2), Fraction(1)])
    strings = p.to_coeff_strings()
    assert strings == ["1/4", "0", "-3/2", "1"]
    assert Polynomial.from_coeff_strings(strings) == p


def test_from_coeff_strings_rejects_garbage():
    with pytest.raises(ValueError):
        Polynomial.from_coeff_strings(["1/0"])
    with pytest.raises(ValueError):
        Polynomial.from_coeff_strings(["x"])
    with pytest.raises(ValueError):
        Polynomial.from_coeff_strings("1/2")


def test_monomial_rejects_negative_degree():
    with pytest.raises(ValueError):
        monomial(-1)
