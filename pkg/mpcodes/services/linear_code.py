"""
Linear Code Service - generator-matrix codes, membership, nestedness and the
brute-force oracles used as ground truth.

Codewords are numpy int arrays of encoded field values.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence
import logging

import numpy as np

from config import get_settings
from errors import DimensionError, EnumerationCapExceeded, FieldMismatchError, InvariantViolation
from services import gf_linalg
from services.finite_field import Field
from services.polynomial import Polynomial, poly_divmod

logger = logging.getLogger(__name__)


class LinearCode:
    """
    An [m, k] linear code given by a full-rank k x m generator matrix.

    The reduced row echelon form is computed once at construction and reused
    for every membership query.
    """

    def __init__(
        self,
        field: Field,
        generator,
        name: Optional[str] = None,
        distance: Optional[int] = None,
        generator_poly: Optional[Polynomial] = None,
    ):
        G = np.array(generator, dtype=np.int64)
        if G.ndim != 2 or G.shape[0] < 1:
            raise DimensionError("generator must be a non-empty k x m matrix")
        k, m = G.shape
        if k > m:
            raise DimensionError(f"dimension {k} exceeds length {m}")
        if np.any((G < 0) | (G >= field.q)):
            raise DimensionError("generator entries outside the field")

        reduced, pivots = gf_linalg.row_reduce(field, G)
        if len(pivots) != k:
            raise InvariantViolation(f"generator has rank {len(pivots)} < {k}")

        self.field = field
        self.generator = G
        self.name = name or "LinearCode"
        self.distance = distance
        self.generator_poly = generator_poly
        self._reduced = reduced
        self._pivots = pivots

    @property
    def length(self) -> int:
        return self.generator.shape[1]

    @property
    def dimension(self) -> int:
        return self.generator.shape[0]

    def __repr__(self) -> str:
        d = f",{self.distance}" if self.distance is not None else ""
        return f"{self.name}[{self.length},{self.dimension}{d}]"

    def encode(self, message) -> np.ndarray:
        message = np.asarray(message, dtype=np.int64)
        if message.shape != (self.dimension,):
            raise DimensionError(f"message length {message.size} != k = {self.dimension}")
        return gf_linalg.vec_mat(self.field, message, self.generator)

    def encode_many(self, messages) -> np.ndarray:
        return gf_linalg.mat_mat(self.field, messages, self.generator)

    def contains(self, word) -> bool:
        word = np.asarray(word, dtype=np.int64)
        if word.shape != (self.length,):
            raise DimensionError(f"word length {word.size} != m = {self.length}")
        k = self.dimension
        recombined = gf_linalg.vec_mat(self.field, word[self._pivots], self._reduced[:k])
        return bool(np.array_equal(recombined, word))

    def random_message(self, rng: np.random.Generator) -> np.ndarray:
        return rng.integers(0, self.field.q, size=self.dimension, dtype=np.int64)

    def random_codeword(self, rng: np.random.Generator) -> np.ndarray:
        return self.encode(self.random_message(rng))


# ============================================================================
# Spec operations
# ============================================================================

def encode(code: LinearCode, message) -> np.ndarray:
    return code.encode(message)


def contains(code: LinearCode, word) -> bool:
    return code.contains(word)


def is_subcode(inner: LinearCode, outer: LinearCode) -> bool:
    """True iff every generator row of `inner` lies in `outer`."""
    if inner.field != outer.field:
        raise FieldMismatchError("codes over different fields")
    if inner.length != outer.length:
        raise DimensionError("codes of different lengths")
    if inner.dimension > outer.dimension:
        return False
    return all(outer.contains(row) for row in inner.generator)


def cyclic_code(f: Polynomial, m: int, distance: Optional[int] = None) -> LinearCode:
    """
    Cyclic code of length m with generator polynomial f.

    Generator rows are x^i * f for i = 0 .. m - deg(f) - 1.
    """
    field = f.field
    if f.is_zero or f.degree >= m:
        raise InvariantViolation(f"generator degree {f.degree} leaves dimension <= 0 for length {m}")
    _, rem = poly_divmod(Polynomial.x_pow_minus_one(field, m), f)
    if not rem.is_zero:
        raise InvariantViolation(f"{f} does not divide x^{m} - 1")
    k = m - f.degree
    rows = np.zeros((k, m), dtype=np.int64)
    for i in range(k):
        rows[i, i: i + f.degree + 1] = f.coeffs
    return LinearCode(field, rows, name="cyclic", distance=distance, generator_poly=f)


def _check_cap(code: LinearCode, cap: Optional[int]) -> int:
    cap = cap if cap is not None else get_settings().enumeration_cap
    total = code.field.q ** code.dimension
    if total > cap:
        raise EnumerationCapExceeded(
            f"{code!r} has {total} codewords, above the enumeration cap {cap}"
        )
    return total


def _min_weight_range(code: LinearCode, start: int, stop: int, chunk: int) -> int:
    best = code.length + 1
    for messages in gf_linalg.iter_message_blocks(code.field.q, code.dimension, chunk, start, stop):
        words = code.encode_many(messages)
        weights = np.count_nonzero(words, axis=1)
        weights = weights[np.any(messages != 0, axis=1)]
        if weights.size:
            best = min(best, int(weights.min()))
    return best


def min_distance_bruteforce(code: LinearCode, cap: Optional[int] = None,
                            workers: Optional[int] = None) -> int:
    """
    Exact minimum distance by enumerating every message.

    The message range is split into contiguous partitions, one per worker;
    the merge is a plain min, so the result is independent of scheduling.
    """
    total = _check_cap(code, cap)
    settings = get_settings()
    workers = max(1, workers or settings.workers)
    chunk = settings.enumeration_chunk
    bounds = np.linspace(1, total, workers + 1, dtype=np.int64)
    parts = [(int(bounds[i]), int(bounds[i + 1])) for i in range(workers) if bounds[i] < bounds[i + 1]]

    if len(parts) <= 1:
        result = _min_weight_range(code, 1, total, chunk)
    else:
        with ThreadPoolExecutor(max_workers=len(parts)) as pool:
            result = min(pool.map(lambda se: _min_weight_range(code, se[0], se[1], chunk), parts))
    logger.info(f"Brute-force distance of {code!r}: {result} ({total} codewords)")
    return result


def all_codewords(code: LinearCode, cap: Optional[int] = None) -> np.ndarray:
    total = _check_cap(code, cap)
    messages = gf_linalg.message_block(code.field.q, code.dimension, 0, total)
    return code.encode_many(messages)


def list_decode_bruteforce(code: LinearCode, received, tau: int,
                           cap: Optional[int] = None) -> List[np.ndarray]:
    """All codewords within Hamming distance tau of `received`, sorted."""
    received = np.asarray(received, dtype=np.int64)
    if received.shape != (code.length,):
        raise DimensionError(f"received length {received.size} != {code.length}")
    _check_cap(code, cap)
    chunk = get_settings().enumeration_chunk
    found = []
    for messages in gf_linalg.iter_message_blocks(code.field.q, code.dimension, chunk):
        words = code.encode_many(messages)
        close = np.count_nonzero(words != received[None, :], axis=1) <= tau
        found.extend(words[close])
    return sorted((np.asarray(w) for w in found), key=tuple)


def constituent_distance(code: LinearCode, cap: Optional[int] = None) -> int:
    """The known minimum distance, or a brute-forced one."""
    if code.distance is not None:
        return code.distance
    return min_distance_bruteforce(code, cap)


class BruteForceListDecoder:
    """
    Exhaustive list decoder for small constituent codes.

    All q^k codewords are enumerated once; each query is one vectorised
    distance computation.
    """

    kind = "brute-force"

    def __init__(self, code: LinearCode, tau: int, cap: Optional[int] = None):
        self.code = code
        self.tau = tau
        self._codewords = all_codewords(code, cap)
        if code.distance is not None and 2 * tau < code.distance:
            self.list_cap = 1
        else:
            self.list_cap = int(self._codewords.shape[0])

    def decode(self, word) -> List[np.ndarray]:
        word = np.asarray(word, dtype=np.int64)
        close = np.count_nonzero(self._codewords != word[None, :], axis=1) <= self.tau
        return sorted((np.array(w) for w in self._codewords[close]), key=tuple)

    def describe(self) -> str:
        return f"brute force on {self.code!r}, tau={self.tau}"
