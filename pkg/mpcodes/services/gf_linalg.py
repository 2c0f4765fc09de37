"""
Linear algebra over a Field on numpy arrays of encoded values.

Row reduction drives code membership, rank checks and the Guruswami-Sudan
interpolation system; the batched products and message enumeration drive
every brute-force oracle.
"""

from typing import Iterator, List, Optional, Tuple

import numpy as np

from errors import DimensionError
from services.finite_field import Field


def row_reduce(field: Field, matrix) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form and pivot columns."""
    R = np.array(matrix, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise DimensionError("row_reduce expects a 2-D array")
    rows, cols = R.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = field.vscale(field.inv(int(R[r, c])), R[r])
        factors = R[:, c].copy()
        factors[r] = 0
        mask = factors != 0
        if mask.any():
            R[mask] = field.vsub(R[mask], field.vmul(factors[mask][:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(field: Field, matrix) -> int:
    if np.size(matrix) == 0:
        return 0
    return len(row_reduce(field, matrix)[1])


def nullspace_vector(field: Field, matrix) -> Optional[np.ndarray]:
    """A nonzero x with matrix @ x = 0, or None when the kernel is trivial."""
    R, pivots = row_reduce(field, matrix)
    cols = R.shape[1]
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    if not free:
        return None
    chosen = free[0]
    x = np.zeros(cols, dtype=np.int64)
    x[chosen] = 1
    for row, pc in enumerate(pivots):
        x[pc] = field.neg(int(R[row, chosen]))
    return x


def determinant(field: Field, matrix) -> int:
    M = np.array(matrix, dtype=np.int64, copy=True)
    n = M.shape[0]
    if M.shape != (n, n):
        raise DimensionError("determinant needs a square matrix")
    det = 1
    for c in range(n):
        nz = np.nonzero(M[c:, c])[0]
        if nz.size == 0:
            return 0
        piv = c + int(nz[0])
        if piv != c:
            M[[c, piv]] = M[[piv, c]]
            det = field.neg(det)
        pivot = int(M[c, c])
        det = field.mul(det, pivot)
        inv = field.inv(pivot)
        for r in range(c + 1, n):
            if M[r, c]:
                factor = field.mul(int(M[r, c]), inv)
                M[r] = field.vsub(M[r], field.vscale(factor, M[c]))
    return det


def vec_mat(field: Field, vector, matrix) -> np.ndarray:
    """vector @ matrix over the field."""
    matrix = np.asarray(matrix, dtype=np.int64)
    out = np.zeros(matrix.shape[1], dtype=np.int64)
    for t, c in enumerate(np.asarray(vector, dtype=np.int64)):
        if c:
            out = field.vadd(out, field.vscale(int(c), matrix[t]))
    return out


def mat_mat(field: Field, left, right) -> np.ndarray:
    """Batched product left (N x k) @ right (k x n) over the field."""
    left = np.asarray(left, dtype=np.int64)
    right = np.asarray(right, dtype=np.int64)
    out = np.zeros((left.shape[0], right.shape[1]), dtype=np.int64)
    for t in range(left.shape[1]):
        out = field.vadd(out, field.vmul(left[:, t, None], right[None, t, :]))
    return out


def message_block(q: int, k: int, start: int, stop: int) -> np.ndarray:
    """Messages numbered start..stop-1 as base-q digit rows (digit t in column t)."""
    index = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((index.size, k), dtype=np.int64)
    for t in range(k):
        digits[:, t] = index % q
        index = index // q
    return digits


def iter_message_blocks(q: int, k: int, chunk: int,
                        start: int = 0, stop: Optional[int] = None) -> Iterator[np.ndarray]:
    stop = q ** k if stop is None else stop
    for lo in range(start, stop, chunk):
        yield message_block(q, k, lo, min(lo + chunk, stop))
