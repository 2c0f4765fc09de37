"""
Matrix-Product Service - codes [C_1 ... C_s] * A over a scalar matrix A.

A codeword is the l-block word whose block i is sum_j a_{j,i} c_j with
c_j in C_j. Blocks are stored as rows of an (l, m) array; the flat word is the
blocks concatenated in order.
"""

from itertools import combinations
from typing import List, Optional, Sequence
import logging

import numpy as np

from config import get_settings
from errors import (
    DimensionError,
    EnumerationCapExceeded,
    FieldMismatchError,
    MatrixConditionError,
    NotNestedError,
)
from services import gf_linalg
from services.coefficients import ScalarAlgebra
from services.finite_field import Field
from services.linear_code import LinearCode, constituent_distance, is_subcode

logger = logging.getLogger(__name__)


class ScalarMatrix:
    """s x l matrix over a Field with s <= l."""

    def __init__(self, field: Field, entries):
        M = np.array(entries, dtype=np.int64)
        if M.ndim != 2 or M.size == 0:
            raise DimensionError("matrix must be a non-empty s x l array")
        if M.shape[0] > M.shape[1]:
            raise DimensionError(f"matrix has {M.shape[0]} rows > {M.shape[1]} columns")
        if np.any((M < 0) | (M >= field.q)):
            raise DimensionError("matrix entries outside the field")
        self.field = field
        self.entries = M

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def entry(self, j: int, i: int) -> int:
        return int(self.entries[j, i])

    def minor(self, t: int, columns: Sequence[int]) -> np.ndarray:
        """First t rows restricted to `columns`."""
        return self.entries[:t, list(columns)]

    def __str__(self) -> str:
        fmt = self.field.format_value
        return "; ".join(", ".join(fmt(int(a)) for a in row) for row in self.entries)


def is_nonsingular_by_columns(A: ScalarMatrix) -> bool:
    """Every t x t minor on the first t rows and any t columns is invertible."""
    for t in range(1, A.rows + 1):
        for columns in combinations(range(A.cols), t):
            if gf_linalg.determinant(A.field, A.minor(t, columns)) == 0:
                return False
    return True


def split_blocks(word, l: int, m: int) -> np.ndarray:
    word = np.asarray(word, dtype=np.int64)
    if word.size != l * m:
        raise DimensionError(f"word length {word.size} != {l} blocks x {m}")
    return word.reshape(l, m)


def flatten_blocks(blocks) -> np.ndarray:
    return np.asarray(blocks, dtype=np.int64).reshape(-1)


def check_nested(constituents: Sequence[LinearCode]) -> bool:
    return all(is_subcode(constituents[i + 1], constituents[i]) for i in range(len(constituents) - 1))


def _check_constituents(constituents: Sequence[LinearCode], field: Field) -> int:
    if not constituents:
        raise DimensionError("at least one constituent code is required")
    m = constituents[0].length
    for code in constituents:
        if code.field != field:
            raise FieldMismatchError(f"constituent {code!r} is over a different field")
        if code.length != m:
            raise DimensionError(f"constituent {code!r} has length {code.length} != {m}")
    return m


class MatrixProductCode:
    """
    Shared surface of [C_1 ... C_s] * A for scalar and polynomial matrices.

    Subclasses set `field`, `constituents`, `m`, `name` and provide
    `algebra()`, `matrix_entry(j, i)`, the row count `s` and column count `l`.
    """

    field: Field
    constituents: List[LinearCode]
    m: int
    name: str
    nested: bool

    @property
    def length(self) -> int:
        return self.m * self.l

    @property
    def dimension(self) -> int:
        return sum(code.dimension for code in self.constituents)

    def combine(self, parts: Sequence[np.ndarray]) -> np.ndarray:
        """Blocks sum_j a_{j,i} c_j for given constituent words c_1..c_s."""
        alg = self.algebra()
        blocks = np.zeros((self.l, self.m), dtype=np.int64)
        for j, c in enumerate(parts):
            c = np.asarray(c, dtype=np.int64)
            for i in range(self.l):
                a = self.matrix_entry(j, i)
                if not alg.is_zero(a):
                    blocks[i] = self.field.vadd(blocks[i], alg.scale(a, c))
        return blocks

    def encode(self, messages: Sequence) -> np.ndarray:
        if len(messages) != self.s:
            raise DimensionError(f"{len(messages)} messages for {self.s} constituents")
        parts = [code.encode(msg) for code, msg in zip(self.constituents, messages)]
        return self.combine(parts)

    def split_message(self, message) -> List[np.ndarray]:
        message = np.asarray(message, dtype=np.int64)
        if message.size != self.dimension:
            raise DimensionError(f"message length {message.size} != k = {self.dimension}")
        bounds = np.cumsum([0] + [code.dimension for code in self.constituents])
        return [message[bounds[j]: bounds[j + 1]] for j in range(self.s)]

    def encode_flat(self, message) -> np.ndarray:
        return flatten_blocks(self.encode(self.split_message(message)))

    def random_codeword(self, rng: np.random.Generator) -> np.ndarray:
        return self.encode([code.random_message(rng) for code in self.constituents])

    def to_linear_code(self) -> LinearCode:
        """Generator rows (a_{j,1} g, ..., a_{j,l} g) for every row g of G_j."""
        rows = []
        for j, code in enumerate(self.constituents):
            for g in code.generator:
                parts = [np.zeros(self.m, dtype=np.int64)] * self.s
                parts = parts[:j] + [g] + parts[j + 1:]
                rows.append(flatten_blocks(self.combine(parts)))
        return LinearCode(self.field, np.stack(rows), name=self.name)


class ScalarMPC(MatrixProductCode):
    """
    Matrix-product code [C_1 ... C_s] * A with A over the field.

    A must have full rank s so that the dimension is sum k_i. Nestedness and
    the non-singular-by-columns property are computed once and exposed as
    flags; decoding refuses codes without both.
    """

    def __init__(self, constituents: Sequence[LinearCode], matrix: ScalarMatrix,
                 name: Optional[str] = None):
        self.field = matrix.field
        self.constituents = list(constituents)
        self.matrix = matrix
        self.m = _check_constituents(self.constituents, self.field)
        if len(self.constituents) != matrix.rows:
            raise DimensionError(
                f"{len(self.constituents)} constituents for a matrix with {matrix.rows} rows"
            )
        if gf_linalg.rank(self.field, matrix.entries) != matrix.rows:
            raise MatrixConditionError("matrix does not have full row rank")
        self.name = name or "mpc"
        self.nested = check_nested(self.constituents)
        self.nonsingular_by_columns = is_nonsingular_by_columns(matrix)
        self._algebra = ScalarAlgebra(self.field)
        logger.info(
            f"Built {self!r}: nested={self.nested}, NSC={self.nonsingular_by_columns}"
        )

    @property
    def s(self) -> int:
        return self.matrix.rows

    @property
    def l(self) -> int:
        return self.matrix.cols

    @property
    def decodable(self) -> bool:
        return self.nested and self.nonsingular_by_columns

    def __repr__(self) -> str:
        return f"ScalarMPC {self.name}[{self.length},{self.dimension}]"

    def algebra(self) -> ScalarAlgebra:
        return self._algebra

    def matrix_entry(self, j: int, i: int) -> int:
        return self.matrix.entry(j, i)

    def combine(self, parts: Sequence[np.ndarray]) -> np.ndarray:
        stacked = np.stack([np.asarray(c, dtype=np.int64) for c in parts])
        return gf_linalg.mat_mat(self.field, self.matrix.entries.T, stacked)


def mpc_encode(code: ScalarMPC, messages: Sequence) -> np.ndarray:
    return code.encode(messages)


# ============================================================================
# Distances
# ============================================================================

def row_span_distances(A: ScalarMatrix, cap: Optional[int] = None) -> List[int]:
    """D_i: minimum weight of a nonzero vector in the span of rows R_1..R_i."""
    cap = cap if cap is not None else get_settings().enumeration_cap
    q = A.field.q
    out = []
    for i in range(1, A.rows + 1):
        total = q ** i
        if total > cap:
            raise EnumerationCapExceeded(f"row span of {i} rows has {total} vectors")
        combos = gf_linalg.message_block(q, i, 1, total)
        words = gf_linalg.mat_mat(A.field, combos, A.entries[:i])
        out.append(int(np.count_nonzero(words, axis=1).min()))
    return out


def distance_lower_bound(code: ScalarMPC, cap: Optional[int] = None) -> int:
    """min_i d_i * D_i; `cap` bounds both the row-span and the constituent enumerations."""
    spans = row_span_distances(code.matrix, cap)
    dists = [constituent_distance(c, cap) for c in code.constituents]
    return min(d * D for d, D in zip(dists, spans))


def distance_nested_nsc(code: ScalarMPC, cap: Optional[int] = None) -> int:
    """Exact distance min_i (l-i+1) d_i of a nested code with an NSC matrix."""
    if not code.nested:
        raise NotNestedError(f"{code!r}: constituents are not nested")
    if not code.nonsingular_by_columns:
        raise MatrixConditionError(f"{code!r}: matrix is not non-singular by columns")
    dists = [constituent_distance(c, cap) for c in code.constituents]
    return min((code.l - i) * d for i, d in enumerate(dists))
