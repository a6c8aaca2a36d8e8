"""GF(4) scalars and polynomial arithmetic."""

import random

import numpy as np
import pytest

from cycloseq import gf4
from cycloseq.errors import DivisionByZeroPolynomial, InvalidParams


def test_field_tables():
    # alpha^2 = alpha + 1, addition is xor
    assert gf4.gf4_mul(gf4.ALPHA, gf4.ALPHA) == gf4.ALPHA1
    assert gf4.gf4_mul(gf4.ALPHA, gf4.ALPHA1) == 1
    assert gf4.gf4_add(gf4.ALPHA, gf4.ALPHA1) == 1
    for x in range(4):
        assert gf4.gf4_mul(x, 0) == 0
        assert gf4.gf4_mul(x, 1) == x
        if x:
            assert gf4.gf4_mul(x, gf4.gf4_inv(x)) == 1
    with pytest.raises(InvalidParams):
        gf4.gf4_inv(0)


def test_field_axioms_random():
    rng = random.Random(4)
    for _ in range(200):
        x, y, z = (rng.randrange(4) for _ in range(3))
        assert gf4.gf4_mul(x, gf4.gf4_add(y, z)) == \
            gf4.gf4_add(gf4.gf4_mul(x, y), gf4.gf4_mul(x, z))
        assert gf4.gf4_mul(x, y) == gf4.gf4_mul(y, x)
        assert gf4.gf4_add(x, x) == 0


def test_poly_basics():
    p = gf4.poly([1, 1])  # x + 1
    sq = gf4.poly_mul(p, p)
    assert gf4.poly_eq(sq, gf4.poly([1, 0, 1]))  # frobenius: (x+1)^2 = x^2+1
    assert gf4.poly_deg(gf4.poly([])) == -1
    assert gf4.poly_is_zero(gf4.poly_trim(gf4.poly([0, 0])))
    with pytest.raises(InvalidParams):
        gf4.poly([1, 4])


def test_poly_divmod_example():
    q, r = gf4.poly_divmod(gf4.poly([1, 0, 1]), gf4.poly([1, 1]))
    assert gf4.poly_eq(q, gf4.poly([1, 1]))
    assert gf4.poly_is_zero(r)
    with pytest.raises(DivisionByZeroPolynomial):
        gf4.poly_divmod(gf4.poly([1]), gf4.poly([]))


def test_poly_gcd_example():
    g = gf4.poly_gcd(gf4.poly([1, 0, 1]), gf4.poly([1, 1]))
    assert gf4.poly_eq(g, gf4.poly([1, 1]))
    with pytest.raises(InvalidParams):
        gf4.poly_gcd(gf4.poly([]), gf4.poly([]))
    # gcd of anything with zero is the monic normalization of the other
    g2 = gf4.poly_gcd(gf4.poly([]), gf4.poly([0, 2]))
    assert gf4.poly_eq(g2, gf4.poly([0, 1]))


def test_poly_derivative():
    # d/dx (x^3 + alpha x^2 + x + 1) = x^2 + 1 in characteristic 2
    d = gf4.poly_derivative(gf4.poly([1, 1, 2, 1]))
    assert gf4.poly_eq(d, gf4.poly([1, 0, 1]))
    assert gf4.poly_is_zero(gf4.poly_derivative(gf4.poly([3])))


def test_mul_divmod_roundtrip_random():
    rng = np.random.default_rng(1234)
    for _ in range(300):
        a = gf4.poly_trim(rng.integers(0, 4, int(rng.integers(1, 40)))
                          .astype(np.uint8))
        b = gf4.poly_trim(rng.integers(0, 4, int(rng.integers(1, 20)))
                          .astype(np.uint8))
        if gf4.poly_is_zero(b):
            continue
        prod = gf4.poly_mul(a, b)
        q, r = gf4.poly_divmod(prod, b)
        assert gf4.poly_eq(q, a)
        assert gf4.poly_is_zero(r)
        # division identity on arbitrary a
        q2, r2 = gf4.poly_divmod(a, b)
        back = gf4.poly_add(gf4.poly_mul(q2, b), r2)
        assert gf4.poly_eq(back, a)
        assert gf4.poly_deg(r2) < gf4.poly_deg(b)


def test_gcd_divides_both_random():
    rng = np.random.default_rng(77)
    for _ in range(200):
        a = gf4.poly_trim(rng.integers(0, 4, int(rng.integers(1, 30)))
                          .astype(np.uint8))
        b = gf4.poly_trim(rng.integers(0, 4, int(rng.integers(1, 30)))
                          .astype(np.uint8))
        if gf4.poly_is_zero(a) or gf4.poly_is_zero(b):
            continue
        g = gf4.poly_gcd(a, b)
        assert int(g[-1]) == 1  # monic
        for f in (a, b):
            _, rem = gf4.poly_divmod(f, g)
            assert gf4.poly_is_zero(rem)


def test_x_pow_n_minus_1():
    f = gf4.x_pow_n_minus_1(5)
    assert gf4.poly_deg(f) == 5
    assert int(f[0]) == 1 and int(f[5]) == 1 and int(f[2]) == 0


def test_digits_roundtrip():
    assert gf4.poly_to_digits(gf4.poly([])) == "0"
    assert gf4.poly_to_digits(gf4.poly([1, 2, 1])) == "121"
    p = gf4.poly_from_digits("103")
    assert gf4.poly_eq(p, gf4.poly([1, 0, 3]))
    with pytest.raises(InvalidParams):
        gf4.poly_from_digits("14")


def test_monic():
    m = gf4.poly_monic(gf4.poly([2, 2]))
    assert gf4.poly_eq(m, gf4.poly([1, 1]))
    with pytest.raises(DivisionByZeroPolynomial):
        gf4.poly_monic(gf4.poly([]))
