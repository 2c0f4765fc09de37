"""
Unit MPC Service - matrix-product codes whose matrix entries are units (or
zero) of F_q[x]/(x^m - 1).

Constituents are nested cyclic codes of length m, i.e. ideals of the ring, so
multiplying a constituent word by a matrix entry is a ring product. The
resulting codes are quasi-cyclic of index l.
"""

from itertools import combinations
from typing import List, Optional, Sequence
import logging

import numpy as np

from config import get_settings
from errors import (
    DimensionError,
    FieldMismatchError,
    InvariantViolation,
    MatrixConditionError,
    NonUnitError,
    NotNestedError,
)
from models.decoding import DecodeOutput
from models.params import DistanceProvenance, DStarReport, RowSpanDistance
from services import gf_linalg
from services.coefficients import RingAlgebra
from services.finite_field import Field
from services.linear_code import LinearCode, constituent_distance
from services.matrix_product import MatrixProductCode, _check_constituents, check_nested
from services.mpc_list_decoder import DecoderSpec, list_decode
from services.polynomial import Polynomial, RingElement

logger = logging.getLogger(__name__)


class PolyMatrix:
    """s x l matrix of ring elements, each a unit or zero."""

    def __init__(self, field: Field, m: int, entries: Sequence[Sequence[RingElement]]):
        rows = [list(row) for row in entries]
        if not rows or not rows[0]:
            raise DimensionError("matrix must be a non-empty s x l array")
        if any(len(row) != len(rows[0]) for row in rows):
            raise DimensionError("ragged matrix rows")
        if len(rows) > len(rows[0]):
            raise DimensionError(f"matrix has {len(rows)} rows > {len(rows[0])} columns")
        for j, row in enumerate(rows):
            for i, a in enumerate(row):
                if a.m != m or a.field != field:
                    raise FieldMismatchError(f"entry ({j + 1},{i + 1}) is not in F_q[x]/(x^{m} - 1)")
                if not (a.is_zero or a.is_unit()):
                    raise NonUnitError(f"entry ({j + 1},{i + 1}) = {a} is neither zero nor a unit")
        self.field = field
        self.m = m
        self.entries = rows

    @classmethod
    def from_polynomials(cls, m: int, entries: Sequence[Sequence[Polynomial]]) -> "PolyMatrix":
        field = entries[0][0].field
        return cls(field, m, [[RingElement(m, p) for p in row] for row in entries])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def entry(self, j: int, i: int) -> RingElement:
        return self.entries[j][i]

    def minor(self, t: int, columns: Sequence[int]) -> List[List[RingElement]]:
        return [[self.entries[j][i] for i in columns] for j in range(t)]

    def __str__(self) -> str:
        return "; ".join(", ".join(str(a) for a in row) for row in self.entries)


def ring_determinant(matrix: List[List[RingElement]]) -> RingElement:
    """Cofactor expansion along the first row."""
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total: Optional[RingElement] = None
    for c in range(n):
        a = matrix[0][c]
        if a.is_zero:
            continue
        sub = [row[:c] + row[c + 1:] for row in matrix[1:]]
        term = a * ring_determinant(sub)
        if c % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        first = matrix[0][0]
        return RingElement(first.m, Polynomial.zero(first.field))
    return total


def is_unit_by_columns(A: PolyMatrix) -> bool:
    """Every t x t minor on the first t rows and any t columns has a unit determinant."""
    for t in range(1, A.rows + 1):
        for columns in combinations(range(A.cols), t):
            if not ring_determinant(A.minor(t, columns)).is_unit():
                return False
    return True


def is_cyclic(code: LinearCode) -> bool:
    return all(code.contains(np.roll(g, 1)) for g in code.generator)


class UnitMPC(MatrixProductCode):
    """
    [C_1 ... C_s] * A over F_q[x]/(x^m - 1).

    Construction verifies that the constituents are nested cyclic codes and
    that A is unit by columns.
    """

    def __init__(self, constituents: Sequence[LinearCode], matrix: PolyMatrix,
                 name: Optional[str] = None):
        self.field = matrix.field
        self.constituents = list(constituents)
        self.matrix = matrix
        self.m = _check_constituents(self.constituents, self.field)
        if self.m != matrix.m:
            raise DimensionError(f"constituent length {self.m} != ring length {matrix.m}")
        if len(self.constituents) != matrix.rows:
            raise DimensionError(
                f"{len(self.constituents)} constituents for a matrix with {matrix.rows} rows"
            )
        for code in self.constituents:
            if not is_cyclic(code):
                raise InvariantViolation(f"constituent {code!r} is not cyclic")
        self.name = name or "unit-mpc"
        self.nested = check_nested(self.constituents)
        if not self.nested:
            raise NotNestedError(f"{self.name}: constituents are not nested")
        self.unit_by_columns = is_unit_by_columns(matrix)
        if not self.unit_by_columns:
            raise MatrixConditionError(f"{self.name}: matrix is not unit by columns")
        self._algebra = RingAlgebra(self.field, self.m)
        logger.info(f"Built {self!r} over F_q[x]/(x^{self.m} - 1)")

    @property
    def s(self) -> int:
        return self.matrix.rows

    @property
    def l(self) -> int:
        return self.matrix.cols

    @property
    def decodable(self) -> bool:
        return self.nested and self.unit_by_columns

    def __repr__(self) -> str:
        return f"UnitMPC {self.name}[{self.length},{self.dimension}]"

    def algebra(self) -> RingAlgebra:
        return self._algebra

    def matrix_entry(self, j: int, i: int) -> RingElement:
        return self.matrix.entry(j, i)


def unit_mpc_encode(code: UnitMPC, messages: Sequence) -> np.ndarray:
    return code.encode(messages)


# ============================================================================
# d* bound
# ============================================================================

def _module_block_matrix(A: PolyMatrix, i: int) -> np.ndarray:
    """F_q matrix of (r_1..r_i) -> sum_t r_t R_t, rows indexed by coefficients of r."""
    m = A.m
    Phi = np.zeros((i * m, A.cols * m), dtype=np.int64)
    for t in range(i):
        for c in range(A.cols):
            Phi[t * m:(t + 1) * m, c * m:(c + 1) * m] = A.entry(t, c).multiplication_matrix()
    return Phi


def _module_min_components(A: PolyMatrix, i: int) -> int:
    field = A.field
    Phi = _module_block_matrix(A, i)
    chunk = get_settings().enumeration_chunk
    best = A.cols
    total = field.q ** (i * A.m)
    for coeffs in gf_linalg.iter_message_blocks(field.q, i * A.m, chunk, 1, total):
        words = gf_linalg.mat_mat(field, coeffs, Phi).reshape(-1, A.cols, A.m)
        components = np.any(words != 0, axis=2).sum(axis=1)
        components = components[components > 0]
        if components.size:
            best = min(best, int(components.min()))
    return best


def row_module_distances(A: PolyMatrix, cap: Optional[int] = None) -> List[RowSpanDistance]:
    """
    D_i: least number of nonzero components of a nonzero element of the module
    spanned by R_1..R_i.

    Enumerated when (q^m)^i is within the cap, otherwise the bound l-i+1.
    """
    cap = cap if cap is not None else get_settings().module_enumeration_cap
    out = []
    for i in range(1, A.rows + 1):
        if A.field.q ** (A.m * i) <= cap:
            out.append(RowSpanDistance(i=i, value=_module_min_components(A, i)))
        else:
            logger.warning(
                f"D_{i}: module has {A.field.q}^{A.m * i} elements, above cap {cap}; using l-i+1"
            )
            out.append(RowSpanDistance(i=i, value=A.cols - i + 1,
                                       provenance=DistanceProvenance.BOUND))
    return out


def d_star(code: UnitMPC, cap: Optional[int] = None) -> DStarReport:
    """min_i d_i * D_i with the provenance of each D_i."""
    spans = row_module_distances(code.matrix, cap)
    dists = [constituent_distance(c) for c in code.constituents]
    return DStarReport(
        d_star=min(d * D.value for d, D in zip(dists, spans)),
        constituent_distances=dists,
        row_span_distances=spans,
    )


# ============================================================================
# Decoding
# ============================================================================

def unit_list_decode(spec: DecoderSpec, received, tau: Optional[int] = None,
                     first_hit: bool = False, tuples=None) -> DecodeOutput:
    """
    The list decoder with ring pivots: divisions become products with ring
    inverses, all of which exist because A is unit by columns.
    """
    if not isinstance(spec.code, UnitMPC):
        raise InvariantViolation("unit_list_decode needs a polynomial-unit code")
    return list_decode(spec, received, tau=tau, first_hit=first_hit, tuples=tuples)
