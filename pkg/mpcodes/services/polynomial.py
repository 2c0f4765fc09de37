"""
Polynomial Service - polynomials over a Field and the quotient ring
F_q[x]/(x^m - 1).

Polynomials keep their coefficients as encoded ints, low-to-high, with no
trailing zeros (the zero polynomial has no coefficients). RingElement wraps a
residue of degree < m together with m.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple
import re

import numpy as np

from errors import (
    DimensionError,
    FieldMismatchError,
    InvariantViolation,
    NonUnitError,
    PolynomialParseError,
)
from services.finite_field import Field, FieldElement


def _trim(coeffs: Sequence[int]) -> Tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(int(c) for c in coeffs)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial over `field` in canonical form."""

    field: Field
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    # ------------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Polynomial":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Polynomial":
        return cls(field, (1,))

    @classmethod
    def monomial(cls, field: Field, degree: int, coef: int = 1) -> "Polynomial":
        return cls(field, (0,) * degree + (coef,))

    @classmethod
    def x_pow_minus_one(cls, field: Field, m: int) -> "Polynomial":
        """x^m - 1."""
        return cls(field, (field.neg(1),) + (0,) * (m - 1) + (1,))

    @classmethod
    def from_roots(cls, field: Field, roots: Sequence[int]) -> "Polynomial":
        out = cls.one(field)
        for r in roots:
            out = out * cls(field, (field.neg(r), 1))
        return out

    # ------------------------------------------------------------------------
    # properties
    # ------------------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def coefficients(self) -> List[FieldElement]:
        return [FieldElement(self.field, c) for c in self.coeffs]

    def coef(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def to_vector(self, length: int) -> np.ndarray:
        if len(self.coeffs) > length:
            raise DimensionError(f"degree {self.degree} does not fit length {length}")
        vec = np.zeros(length, dtype=np.int64)
        vec[: len(self.coeffs)] = self.coeffs
        return vec

    # ------------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if other.field != self.field:
            raise FieldMismatchError("polynomials over different fields")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(f, [f.add(self.coef(i), other.coef(i)) for i in range(n)])

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        if self.is_zero or other.is_zero:
            return Polynomial.zero(self.field)
        f = self.field
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Polynomial(f, out)

    def scale(self, c: int) -> "Polynomial":
        return Polynomial(self.field, [self.field.mul(c, a) for a in self.coeffs])

    def __divmod__(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return poly_divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(self.field.inv(self.leading))

    def evaluate(self, x: int) -> int:
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def __str__(self) -> str:
        return format_polynomial(self)


# ============================================================================
# Spec operations on polynomials
# ============================================================================

def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_divmod(a: Polynomial, b: Polynomial) -> Tuple[Polynomial, Polynomial]:
    """Return (quotient, remainder) with deg(remainder) < deg(b)."""
    a._check(b)
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    f = a.field
    rem = list(a.coeffs)
    db = b.degree
    if len(rem) - 1 < db:
        return Polynomial.zero(f), a
    quot = [0] * (len(rem) - db)
    lead_inv = f.inv(b.leading)
    for shift in range(len(rem) - 1 - db, -1, -1):
        c = rem[shift + db]
        if c == 0:
            continue
        factor = f.mul(c, lead_inv)
        quot[shift] = factor
        for i, bc in enumerate(b.coeffs):
            rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, bc))
    return Polynomial(f, quot), Polynomial(f, rem[:db])


def poly_gcd_ext(a: Polynomial, b: Polynomial) -> Tuple[Polynomial, Polynomial, Polynomial]:
    """
    Extended Euclid: (g, s, t) with s*a + t*b = g and g monic.

    Raises:
        InvariantViolation: both inputs are zero
    """
    a._check(b)
    f = a.field
    if a.is_zero and b.is_zero:
        raise InvariantViolation("gcd of two zero polynomials is undefined")
    r0, r1 = a, b
    s0, s1 = Polynomial.one(f), Polynomial.zero(f)
    t0, t1 = Polynomial.zero(f), Polynomial.one(f)
    while not r1.is_zero:
        quotient, remainder = poly_divmod(r0, r1)
        r0, r1 = r1, remainder
        s0, s1 = s1, s0 - quotient * s1
        t0, t1 = t1, t0 - quotient * t1
    scale = f.inv(r0.leading)
    return r0.scale(scale), s0.scale(scale), t0.scale(scale)


# ============================================================================
# Text grammar
# ============================================================================

_TERM_RE = re.compile(
    r"^(?:(?P<coef>0|1|a(?:\^\d+)?)\*?)?(?P<x>x(?:\^(?P<exp>\d+))?)?$"
)


def parse_polynomial(field: Field, text: str) -> Polynomial:
    """
    Parse a sum of terms `c*x^k`, `c*x`, `c`, `x^k`, `x` (c an element token).

    Whitespace is ignored; `-` negates the following term.
    """
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise PolynomialParseError("empty polynomial")
    if compact[0] not in "+-":
        compact = "+" + compact
    pieces = re.findall(r"([+-])([^+-]*)", compact)
    if "".join(sign + body for sign, body in pieces) != compact:
        raise PolynomialParseError(f"malformed polynomial: {text!r}")

    acc: dict = {}
    for sign, body in pieces:
        match = _TERM_RE.match(body)
        if not body or not match or (match.group("coef") is None and match.group("x") is None):
            raise PolynomialParseError(f"malformed term {body!r} in {text!r}")
        coef = field.parse_value(match.group("coef")) if match.group("coef") else 1
        if match.group("x"):
            exponent = int(match.group("exp")) if match.group("exp") else 1
        else:
            exponent = 0
        if sign == "-":
            coef = field.neg(coef)
        acc[exponent] = field.add(acc.get(exponent, 0), coef)

    degree = max(acc) if acc else 0
    return Polynomial(field, [acc.get(k, 0) for k in range(degree + 1)])


def format_polynomial(poly: Polynomial) -> str:
    if poly.is_zero:
        return "0"
    terms = []
    for k in range(poly.degree, -1, -1):
        c = poly.coeffs[k]
        if c == 0:
            continue
        token = poly.field.format_value(c)
        if k == 0:
            terms.append(token)
            continue
        monomial = "x" if k == 1 else f"x^{k}"
        terms.append(monomial if c == 1 else f"{token}*{monomial}")
    return " + ".join(terms)


# ============================================================================
# Quotient ring F_q[x]/(x^m - 1)
# ============================================================================

@dataclass(frozen=True)
class RingElement:
    """Residue of degree < m in F_q[x]/(x^m - 1)."""

    m: int
    residue: Polynomial

    def __post_init__(self):
        if self.residue.degree >= self.m:
            object.__setattr__(self, "residue", _reduce_cyclic(self.residue, self.m))

    @property
    def field(self) -> Field:
        return self.residue.field

    @classmethod
    def from_vector(cls, field: Field, vector: Sequence[int]) -> "RingElement":
        return cls(len(vector), Polynomial(field, [int(v) for v in vector]))

    @classmethod
    def constant(cls, field: Field, m: int, value: int) -> "RingElement":
        return cls(m, Polynomial(field, (value,)))

    def to_vector(self) -> np.ndarray:
        return self.residue.to_vector(self.m)

    @property
    def is_zero(self) -> bool:
        return self.residue.is_zero

    @property
    def weight(self) -> int:
        """Hamming weight of the length-m coefficient vector."""
        return sum(1 for c in self.residue.coeffs if c)

    def _check(self, other: "RingElement") -> None:
        if other.m != self.m:
            raise FieldMismatchError(f"ring elements modulo x^{self.m}-1 and x^{other.m}-1")
        if other.field != self.field:
            raise FieldMismatchError("ring elements over different fields")

    def __add__(self, other: "RingElement") -> "RingElement":
        return ring_add(self, other)

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.m, self.residue - other.residue)

    def __neg__(self) -> "RingElement":
        return RingElement(self.m, -self.residue)

    def __mul__(self, other: "RingElement") -> "RingElement":
        return ring_mul(self, other)

    def is_unit(self) -> bool:
        return ring_is_unit(self)

    def inverse(self) -> "RingElement":
        return ring_inv(self)

    def multiplication_matrix(self) -> np.ndarray:
        """
        m x m matrix M over F_q with vec(c * self) = vec(c) @ M.

        Row t is the cyclic shift x^t * self.
        """
        base = self.to_vector()
        return np.stack([np.roll(base, t) for t in range(self.m)])

    def __str__(self) -> str:
        return format_polynomial(self.residue)


def _reduce_cyclic(poly: Polynomial, m: int) -> Polynomial:
    f = poly.field
    out = [0] * m
    for k, c in enumerate(poly.coeffs):
        if c:
            out[k % m] = f.add(out[k % m], c)
    return Polynomial(f, out)


def ring_add(a: RingElement, b: RingElement) -> RingElement:
    a._check(b)
    return RingElement(a.m, a.residue + b.residue)


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    """Product reduced modulo x^m - 1."""
    a._check(b)
    return RingElement(a.m, _reduce_cyclic(a.residue * b.residue, a.m))


def ring_is_unit(u: RingElement) -> bool:
    """True iff gcd(residue, x^m - 1) = 1."""
    if u.is_zero:
        return False
    g, _, _ = poly_gcd_ext(u.residue, Polynomial.x_pow_minus_one(u.field, u.m))
    return g.degree == 0


def ring_inv(u: RingElement) -> RingElement:
    """
    Inverse in F_q[x]/(x^m - 1) from the Bezout identity s*u + t*(x^m - 1) = 1.

    Raises:
        NonUnitError: u shares a factor with x^m - 1
    """
    if u.is_zero:
        raise NonUnitError("zero is not a unit")
    g, s, _ = poly_gcd_ext(u.residue, Polynomial.x_pow_minus_one(u.field, u.m))
    if g.degree != 0:
        raise NonUnitError(f"{u} is not a unit modulo x^{u.m} - 1 (gcd {g})")
    return RingElement(u.m, _reduce_cyclic(s, u.m))
