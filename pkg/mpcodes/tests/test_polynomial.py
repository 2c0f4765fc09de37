import numpy as np
import pytest

from errors import NonUnitError, PolynomialParseError
from services.polynomial import (
    Polynomial,
    RingElement,
    format_polynomial,
    parse_polynomial,
    poly_divmod,
    poly_gcd_ext,
    ring_inv,
    ring_mul,
)


def random_poly(field, rng, degree):
    return Polynomial(field, rng.integers(0, field.q, size=degree + 1).tolist())


def test_parse_and_format(gf16):
    f = parse_polynomial(gf16, "x^4 + a^5*x^3 + a*x^2 + a^11*x + a^14")
    assert f.degree == 4
    assert f.coeffs[0] == gf16.alpha_pow(14)
    assert f.coeffs[4] == 1
    assert format_polynomial(f) == "x^4 + a^5*x^3 + a*x^2 + a^11*x + a^14"
    assert parse_polynomial(gf16, format_polynomial(f)) == f


def test_parse_combines_like_terms(gf16):
    assert parse_polynomial(gf16, "x + x") == Polynomial.zero(gf16)
    assert parse_polynomial(gf16, "a*x^2 - a*x^2 + 1") == Polynomial.one(gf16)


@pytest.mark.parametrize("text", ["", "x^", "x +", "3x", "b*x", "x**2"])
def test_parse_errors(gf16, text):
    with pytest.raises(PolynomialParseError):
        parse_polynomial(gf16, text)


def test_division_identity(gf16, rng):
    for _ in range(20):
        a = random_poly(gf16, rng, 9)
        b = random_poly(gf16, rng, 4)
        if b.is_zero:
            continue
        q, r = poly_divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_division_by_zero(gf16):
    with pytest.raises(ZeroDivisionError):
        poly_divmod(Polynomial.one(gf16), Polynomial.zero(gf16))


def test_bezout_identity(gf16, rng):
    for _ in range(20):
        a = random_poly(gf16, rng, 6)
        b = random_poly(gf16, rng, 5)
        if a.is_zero and b.is_zero:
            continue
        g, s, t = poly_gcd_ext(a, b)
        assert s * a + t * b == g
        assert g.leading == 1
        assert (a % g).is_zero and (b % g).is_zero


def test_from_roots_and_evaluate(gf16):
    roots = [gf16.alpha_pow(j) for j in range(1, 6)]
    g = Polynomial.from_roots(gf16, roots)
    assert g.degree == 5
    assert all(g.evaluate(r) == 0 for r in roots)
    assert g.evaluate(1) != 0


def test_ring_reduction(gf16):
    x15 = RingElement(15, Polynomial.monomial(gf16, 15))
    assert x15.residue == Polynomial.one(gf16)
    assert RingElement(15, Polynomial.monomial(gf16, 17)).residue == Polynomial.monomial(gf16, 2)


def test_ring_unit_inverse(gf16):
    g = RingElement(15, parse_polynomial(gf16, "x^4 + a^5*x^3 + a*x^2 + a^11*x + a^14"))
    assert g.is_unit()
    assert ring_mul(g, ring_inv(g)).residue == Polynomial.one(gf16)


def test_non_unit_rejected(gf16):
    # x + 1 divides x^15 - 1
    u = RingElement(15, parse_polynomial(gf16, "x + 1"))
    assert not u.is_unit()
    with pytest.raises(NonUnitError):
        u.inverse()
    with pytest.raises(NonUnitError):
        RingElement(15, Polynomial.zero(gf16)).inverse()


def test_gf8_unit_has_no_roots(gf8):
    g = RingElement(7, parse_polynomial(gf8, "x^2 + x + 1"))
    assert g.is_unit()
    assert (g * g.inverse()).residue == Polynomial.one(gf8)


def test_multiplication_matrix_matches_ring_product(gf16, rng):
    u = RingElement.from_vector(gf16, rng.integers(0, 16, size=15))
    c = RingElement.from_vector(gf16, rng.integers(0, 16, size=15))
    M = u.multiplication_matrix()
    vec = np.zeros(15, dtype=np.int64)
    for t in range(15):
        vec = gf16.vadd(vec, gf16.vscale(int(c.to_vector()[t]), M[t]))
    assert vec.tolist() == (c * u).to_vector().tolist()


def test_ring_weight(gf16):
    e = RingElement(15, parse_polynomial(gf16, "a^2*x + a*x^5 + a^5*x^6 + a^14*x^13"))
    assert e.weight == 4
