"""
Finite Field Service - exact arithmetic in GF(p^m).

Elements are encoded as integers in [0, q-1] whose base-p digits are the
coefficients (low-to-high) of the residue polynomial modulo the field modulus.
Multiplication goes through log/antilog tables of the primitive element
alpha = x; addition is digit-wise mod p (XOR when p = 2).

Scalar methods work on plain ints; the `v*` methods work on numpy arrays of
encoded values and back every vectorised kernel in the package.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple
import itertools
import logging
import re

import numpy as np

from config import get_settings
from errors import (
    DimensionError,
    ElementParseError,
    FieldConstructionError,
    FieldMismatchError,
    NonPrimitiveModulusError,
    ReducibleModulusError,
)

logger = logging.getLogger(__name__)


# Low-to-high coefficient tuples of the default moduli.
DEFAULT_MODULI: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
}

_TOKEN_RE = re.compile(r"^(?:(0)|(1)|a(?:\^(\d+))?)$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(n ** 0.5) + 1):
        if n % d == 0:
            return False
    return True


# ============================================================================
# GF(p)[x] helpers used only while building the tables
# ============================================================================

def _prime_poly_mod(a: List[int], b: Sequence[int], p: int) -> List[int]:
    """Remainder of a modulo monic b, coefficients low-to-high in GF(p)."""
    a = list(a)
    db = len(b) - 1
    for shift in range(len(a) - 1 - db, -1, -1):
        c = a[shift + db] % p
        if c:
            for i, bc in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bc) % p
    return [c % p for c in a[:db]]


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..m//2."""
    m = len(modulus) - 1
    for degree in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=degree):
            divisor = list(low) + [1]
            if not any(_prime_poly_mod(modulus, divisor, p)):
                return False
    return True


def _format_prime_poly(modulus: Sequence[int]) -> str:
    terms = []
    for k in range(len(modulus) - 1, -1, -1):
        c = modulus[k]
        if not c:
            continue
        coef = "" if (c == 1 and k > 0) else str(c)
        if k == 0:
            terms.append(str(c))
        elif k == 1:
            terms.append(f"{coef}x")
        else:
            terms.append(f"{coef}x^{k}")
    return " + ".join(terms) if terms else "0"


# ============================================================================
# Field
# ============================================================================

class Field:
    """
    GF(p^m) with primitive element alpha = x (residue class of x).

    Immutable after construction; obtain instances through `field_new` so
    equal parameters share one table set.
    """

    def __init__(self, p: int, m: int, modulus: Tuple[int, ...]):
        self.p = p
        self.m = m
        self.modulus = tuple(modulus)
        self.q = p ** m
        self.order = self.q - 1

        exp = self._build_exp_sequence()
        log = [-1] * self.q
        for k, e in enumerate(exp):
            log[e] = k

        # Python lists for scalar paths, doubled so mul needs no modulo
        self._exp: List[int] = exp + exp
        self._log: List[int] = log

        self.exp_table = np.array(exp, dtype=np.int64)
        log_arr = np.array(log, dtype=np.int64)
        log_arr[0] = 0  # placeholder, always masked
        self.log_table = log_arr

    def _mul_by_x(self, v: int) -> int:
        p, m = self.p, self.m
        shifted = v * p
        top = shifted // self.q
        rest = shifted % self.q
        if top == 0:
            return rest
        digits = [(rest // p ** i) % p for i in range(m)]
        for i in range(m):
            digits[i] = (digits[i] - top * self.modulus[i]) % p
        return sum(d * p ** i for i, d in enumerate(digits))

    def _build_exp_sequence(self) -> List[int]:
        exp = []
        e = 1
        for k in range(self.order):
            if k > 0 and e == 1:
                raise NonPrimitiveModulusError(
                    f"x has multiplicative order {k} < {self.order} modulo "
                    f"{_format_prime_poly(self.modulus)}; supply a primitive modulus",
                    order=k,
                )
            exp.append(e)
            e = self._mul_by_x(e)
        if e != 1:
            raise FieldConstructionError("alpha^(q-1) != 1: modulus is not irreducible")
        return exp

    # ------------------------------------------------------------------------
    # identity
    # ------------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})[{_format_prime_poly(self.modulus)}]"

    def describe(self) -> str:
        return f"GF({self.q}) = GF({self.p})[x]/({_format_prime_poly(self.modulus)})"

    # ------------------------------------------------------------------------
    # scalar arithmetic on encoded ints
    # ------------------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out, scale = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out, scale = 0, 1
        while a:
            out += ((-(a % p)) % p) * scale
            a //= p
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return self._exp[(self.order - self._log[a]) % self.order]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero field element")
        if a == 0:
            return 0
        return self._exp[(self._log[a] - self._log[b]) % self.order]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % self.order]

    def alpha_pow(self, k: int) -> int:
        """alpha^k as an encoded int."""
        return self._exp[k % self.order]

    def log(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("log of zero")
        return self._log[a]

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    def random_element(self, rng: np.random.Generator, nonzero: bool = False) -> int:
        return int(rng.integers(1 if nonzero else 0, self.q))

    # ------------------------------------------------------------------------
    # vectorised arithmetic on numpy arrays
    # ------------------------------------------------------------------------

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor(a, b)
        p = self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        scale = 1
        for _ in range(self.m):
            out += (((a // scale) % p + (b // scale) % p) % p) * scale
            scale *= p
        return out

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        p = self.p
        out = np.zeros_like(a)
        scale = 1
        for _ in range(self.m):
            out += ((-((a // scale) % p)) % p) * scale
            scale *= p
        return out

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        logs = (self.log_table[a] + self.log_table[b]) % self.order
        out = self.exp_table[logs]
        return np.where((a == 0) | (b == 0), 0, out)

    def vscale(self, c: int, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if c == 0:
            return np.zeros_like(a)
        if c == 1:
            return a.copy()
        out = self.exp_table[(self.log_table[a] + self._log[c]) % self.order]
        return np.where(a == 0, 0, out)

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero field element")
        return self.exp_table[(self.order - self.log_table[a]) % self.order]

    # ------------------------------------------------------------------------
    # elements and tokens
    # ------------------------------------------------------------------------

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, int(value))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def alpha(self) -> "FieldElement":
        return FieldElement(self, self.alpha_pow(1))

    def power(self, k: int) -> "FieldElement":
        return FieldElement(self, self.alpha_pow(k))

    def parse_value(self, token: str) -> int:
        text = token.strip()
        match = _TOKEN_RE.match(text)
        if not match:
            raise ElementParseError(f"malformed field element token: {token!r}")
        if match.group(1):
            return 0
        if match.group(2):
            return 1
        exponent = int(match.group(3)) if match.group(3) is not None else 1
        return self.alpha_pow(exponent)

    def format_value(self, value: int) -> str:
        if value == 0:
            return "0"
        k = self._log[value]
        if k == 0:
            return "1"
        if k == 1:
            return "a"
        return f"a^{k}"


@dataclass(frozen=True)
class FieldElement:
    """An element of a specific Field; arithmetic is only defined within one field."""

    field: Field
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise DimensionError(f"value {self.value} outside [0, {self.field.q - 1}]")

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"mixed-field operands {self.field!r} and {other.field!r}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.div(self.value, other.value))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.value, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return self.field.format_value(self.value)


# ============================================================================
# Construction
# ============================================================================

def _search_default_modulus(p: int, m: int) -> Tuple[int, ...]:
    """Lexicographically smallest primitive monic polynomial of degree m."""
    for low in itertools.product(range(p), repeat=m):
        if low[0] == 0:
            continue
        modulus = tuple(low) + (1,)
        if not _is_irreducible(modulus, p):
            continue
        try:
            Field(p, m, modulus)
        except NonPrimitiveModulusError:
            continue
        return modulus
    raise FieldConstructionError(f"no primitive polynomial of degree {m} over GF({p})")


def default_modulus(p: int, m: int) -> Tuple[int, ...]:
    if (p, m) in DEFAULT_MODULI:
        return DEFAULT_MODULI[(p, m)]
    return _search_default_modulus(p, m)


@lru_cache(maxsize=64)
def _cached_field(p: int, m: int, modulus: Tuple[int, ...]) -> Field:
    if not _is_irreducible(modulus, p):
        raise ReducibleModulusError(
            f"modulus {_format_prime_poly(modulus)} is reducible over GF({p})"
        )
    field = Field(p, m, modulus)
    logger.debug(f"Built field {field.describe()}")
    return field


def field_new(p: int, m: int, modulus: Optional[Sequence[int]] = None) -> Field:
    """
    Build (or fetch) GF(p^m).

    Args:
        p: prime characteristic
        m: extension degree >= 1
        modulus: monic degree-m coefficients low-to-high; default per (p, m)

    Raises:
        FieldConstructionError: bad p/m/modulus or q above the configured cap
        ReducibleModulusError: modulus factors over GF(p)
        NonPrimitiveModulusError: x is not a generator modulo the modulus
    """
    if not is_prime(p):
        raise FieldConstructionError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldConstructionError(f"degree must be >= 1, got {m}")
    cap = get_settings().max_field_order
    if p ** m > cap:
        raise FieldConstructionError(f"q = {p}^{m} exceeds the configured maximum {cap}")

    if modulus is None:
        modulus = default_modulus(p, m)
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != m + 1 or modulus[-1] != 1:
        raise FieldConstructionError(f"modulus must be monic of degree {m}")
    return _cached_field(p, m, modulus)


def parse_element(field: Field, token: str) -> FieldElement:
    """Parse `0`, `1`, `a` or `a^k`; exponents are reduced mod q-1."""
    return FieldElement(field, field.parse_value(token))


def format_element(element: FieldElement) -> str:
    return element.field.format_value(element.value)
