"""
Coefficient algebras for matrix-product codes.

A matrix-product code multiplies constituent words by matrix entries. For a
scalar matrix the entries are field values; for a polynomial-unit matrix they
are residues in F_q[x]/(x^m - 1). Both act on length-m blocks through the
same small interface, so construction and decoding are written once.
"""

from typing import Any, Dict

import numpy as np

from services import gf_linalg
from services.finite_field import Field
from services.polynomial import RingElement


class ScalarAlgebra:
    """Matrix entries are encoded field values."""

    def __init__(self, field: Field):
        self.field = field

    def is_invertible(self, a: int) -> bool:
        return a != 0

    def is_zero(self, a: int) -> bool:
        return a == 0

    def inv(self, a: int) -> int:
        return self.field.inv(a)

    def mul(self, a: int, b: int) -> int:
        return self.field.mul(a, b)

    def sub(self, a: int, b: int) -> int:
        return self.field.sub(a, b)

    def scale(self, a: int, block: np.ndarray) -> np.ndarray:
        return self.field.vscale(a, block)

    def format(self, a: int) -> str:
        return self.field.format_value(a)


class RingAlgebra:
    """Matrix entries are RingElements; blocks are residues as length-m vectors."""

    def __init__(self, field: Field, m: int):
        self.field = field
        self.m = m
        self._matrices: Dict[Any, np.ndarray] = {}

    def is_invertible(self, a: RingElement) -> bool:
        return a.is_unit()

    def is_zero(self, a: RingElement) -> bool:
        return a.is_zero

    def inv(self, a: RingElement) -> RingElement:
        return a.inverse()

    def mul(self, a: RingElement, b: RingElement) -> RingElement:
        return a * b

    def sub(self, a: RingElement, b: RingElement) -> RingElement:
        return a - b

    def scale(self, a: RingElement, block: np.ndarray) -> np.ndarray:
        key = a.residue.coeffs
        if key not in self._matrices:
            self._matrices[key] = a.multiplication_matrix()
        return gf_linalg.vec_mat(self.field, block, self._matrices[key])

    def format(self, a: RingElement) -> str:
        return str(a)

