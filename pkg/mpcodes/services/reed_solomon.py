"""
Reed-Solomon Service - RS codes of length q-1, the Guruswami-Sudan parameter
formulas, the Guruswami-Sudan list decoder and a Berlekamp-Massey unique decoder.

An RS code with root window starting at alpha^b has codewords

    c_i = alpha^{-i(b-1)} * f(alpha^i),   i = 0 .. m-1,  deg f < k.

Read as a polynomial c(x) = sum c_i x^i, such a word vanishes at
alpha^b .. alpha^{b+m-k-1}, so the evaluation view and the cyclic view are the
same code. b = 1 is the narrow-sense default.
"""

from math import comb
from typing import Dict, List, Optional, Tuple
import logging

import numpy as np

from errors import DimensionError, InvariantViolation
from models.params import GSParams
from services import gf_linalg
from services.finite_field import Field
from services.linear_code import LinearCode
from services.polynomial import Polynomial, poly_divmod

logger = logging.getLogger(__name__)


class RSCode:
    """[q-1, k, q-k] Reed-Solomon code over `field`."""

    def __init__(self, field: Field, k: int, first_root: int = 1):
        m = field.q - 1
        if not 1 <= k < m:
            raise InvariantViolation(f"RS dimension must satisfy 1 <= k < {m}, got {k}")
        self.field = field
        self.m = m
        self.k = k
        self.first_root = first_root % m if m > 1 else 0

        idx = np.arange(m, dtype=np.int64)
        self.eval_points = field.exp_table[idx % field.order]
        self.multipliers = field.exp_table[(-idx * (first_root - 1)) % field.order]
        self._linear: Optional[LinearCode] = None

    @property
    def length(self) -> int:
        return self.m

    @property
    def dimension(self) -> int:
        return self.k

    @property
    def distance(self) -> int:
        return self.m - self.k + 1

    def __repr__(self) -> str:
        return f"RS[{self.m},{self.k},{self.distance}](b={self.first_root})"

    def generator_matrix(self) -> np.ndarray:
        f = self.field
        idx = np.arange(self.m, dtype=np.int64)
        rows = [f.vmul(self.multipliers, f.exp_table[(idx * t) % f.order]) for t in range(self.k)]
        return np.stack(rows)

    def as_linear_code(self) -> LinearCode:
        if self._linear is None:
            self._linear = LinearCode(
                self.field,
                self.generator_matrix(),
                name=f"RS(b={self.first_root})",
                distance=self.distance,
                generator_poly=rs_generator_poly(self),
            )
        return self._linear

    def encode(self, message) -> np.ndarray:
        """Evaluate the message polynomial (coefficients low-to-high) and apply the multipliers."""
        message = np.asarray(message, dtype=np.int64)
        if message.shape != (self.k,):
            raise DimensionError(f"message length {message.size} != k = {self.k}")
        values = _evaluate_many(self.field, message, self.eval_points)
        return self.field.vmul(self.multipliers, values)

    def untwist(self, word) -> np.ndarray:
        """Map a received word to plain evaluations y_i = word_i / multiplier_i."""
        word = np.asarray(word, dtype=np.int64)
        return self.field.vmul(word, self.field.vinv(self.multipliers))


def _evaluate_many(field: Field, coeffs, points) -> np.ndarray:
    acc = np.zeros(np.shape(points), dtype=np.int64)
    for c in reversed(np.asarray(coeffs, dtype=np.int64)):
        acc = field.vadd(field.vmul(acc, points), int(c))
    return acc


# ============================================================================
# Generator polynomials and root windows
# ============================================================================

def rs_generator_poly(code: RSCode) -> Polynomial:
    """prod (x - alpha^j) over the window j = b .. b+m-k-1."""
    f = code.field
    roots = [f.alpha_pow(code.first_root + j) for j in range(code.m - code.k)]
    return Polynomial.from_roots(f, roots)


def root_window(f: Polynomial) -> Optional[int]:
    """
    First exponent b when the roots of f are exactly alpha^b .. alpha^{b+deg f-1}
    (cyclically, each once), else None.
    """
    field = f.field
    m = field.q - 1
    if f.is_zero or f.degree < 1 or f.degree >= m:
        return None
    exponents = [j for j in range(m) if f.evaluate(field.alpha_pow(j)) == 0]
    if len(exponents) != f.degree:
        return None
    root_set = set(exponents)
    for b in exponents:
        if all((b + t) % m in root_set for t in range(f.degree)):
            return b
    return None


def rs_code_from_generator(f: Polynomial) -> Optional[RSCode]:
    """The RS code whose cyclic view has generator f, or None if f is not an RS generator."""
    b = root_window(f)
    if b is None:
        return None
    field = f.field
    code = RSCode(field, field.q - 1 - f.degree, first_root=b)
    if rs_generator_poly(code) != f.monic():
        return None
    logger.info(f"Generator {f} recognised as {code!r}: roots alpha^{b}..alpha^{b + f.degree - 1}")
    return code


# ============================================================================
# Guruswami-Sudan parameters
# ============================================================================

def gs_params(m: int, k: int, v: int) -> GSParams:
    """
    Integer-exact decoding radius for multiplicity v.

    r is the largest integer with binom(r,2)(k-1) <= m*binom(v+1,2), and
    l = floor(m*binom(v+1,2)/r + (r-1)(k-1)/2).
    """
    if k < 2:
        raise InvariantViolation(f"Guruswami-Sudan parameters need k >= 2, got k = {k}")
    if k >= m:
        raise InvariantViolation(f"dimension {k} must be below length {m}")
    if v < 1:
        raise InvariantViolation(f"multiplicity must be >= 1, got {v}")

    constraints = m * comb(v + 1, 2)
    r = 1
    while comb(r + 1, 2) * (k - 1) <= constraints:
        r += 1
    l = (2 * constraints + r * (r - 1) * (k - 1)) // (2 * r)
    tau = m - l // v - 1
    list_cap = l // (k - 1)
    unknowns = sum(l - (k - 1) * b + 1 for b in range(list_cap + 1))
    return GSParams(
        m=m, k=k, v=v, r=r, l=l, tau=tau, list_cap=list_cap,
        constraints=constraints, unknowns=unknowns,
    )


# ============================================================================
# Guruswami-Sudan decoding
# ============================================================================

def _monomials(l: int, k: int):
    xs, ys = [], []
    for b in range(l // (k - 1) + 1):
        for a in range(l - (k - 1) * b + 1):
            xs.append(a)
            ys.append(b)
    return np.array(xs, dtype=np.int64), np.array(ys, dtype=np.int64)


def _interpolation_matrix(field: Field, xs_log: np.ndarray, ys: np.ndarray,
                          mon_a: np.ndarray, mon_b: np.ndarray, v: int) -> np.ndarray:
    """
    One row per (point, u, w) with u + w < v: the Hasse derivative
    D_{u,w} Q at the point, as a linear form in the coefficients of Q.
    """
    order = field.order
    y_zero = ys == 0
    y_log = np.where(y_zero, 0, field.log_table[ys])
    blocks = []
    for u in range(v):
        for w in range(v - u):
            binom = np.array(
                [comb(int(a), u) * comb(int(b), w) % field.p if a >= u and b >= w else 0
                 for a, b in zip(mon_a, mon_b)],
                dtype=np.int64,
            )
            live = binom != 0
            bin_log = np.where(live, field.log_table[np.where(live, binom, 1)], 0)
            da = mon_a - u
            db = mon_b - w
            logs = (xs_log[:, None] * da[None, :] + y_log[:, None] * db[None, :] + bin_log[None, :]) % order
            entries = field.exp_table[logs]
            dead = (~live)[None, :] | (y_zero[:, None] & (db[None, :] > 0))
            blocks.append(np.where(dead, 0, entries))
    return np.concatenate(blocks, axis=0)


def _roots_in_field(field: Field, coeffs: np.ndarray) -> List[int]:
    elements = np.arange(field.q, dtype=np.int64)
    values = _evaluate_many(field, coeffs, elements)
    return [int(e) for e in elements[values == 0]]


def _shift(field: Field, Q: np.ndarray, gamma: int) -> np.ndarray:
    """Q(x, x*y + gamma), coefficient array indexed [a, b]."""
    rows, cols = Q.shape
    T = np.zeros_like(Q)
    for j in range(cols):
        for b in range(j, cols):
            c = field.mul(comb(b, j) % field.p, field.pow(gamma, b - j))
            if c:
                T[:, j] = field.vadd(T[:, j], field.vscale(c, Q[:, b]))
    out = np.zeros((rows + cols - 1, cols), dtype=np.int64)
    for j in range(cols):
        out[j: j + rows, j] = T[:, j]
    return out


def _strip_x(Q: np.ndarray) -> np.ndarray:
    nonzero_rows = np.nonzero(np.any(Q != 0, axis=1))[0]
    return Q[nonzero_rows[0]: nonzero_rows[-1] + 1]


def _roth_ruckenstein(field: Field, Q: np.ndarray, k: int,
                      prefix: List[int], out: List[List[int]]) -> None:
    Q = _strip_x(Q)
    depth = len(prefix)
    if depth == k:
        out.append(prefix)
        return
    if not np.any(Q[:, 0]):
        # y divides Q: the remaining coefficients may all be zero
        out.append(prefix + [0] * (k - depth))
    for gamma in _roots_in_field(field, Q[0]):
        _roth_ruckenstein(field, _shift(field, Q, gamma), k, prefix + [gamma], out)


def _interpolate(field: Field, points_log: np.ndarray, ys: np.ndarray,
                 params: GSParams) -> Optional[np.ndarray]:
    mon_a, mon_b = _monomials(params.l, params.k)
    system = _interpolation_matrix(field, points_log, ys, mon_a, mon_b, params.v)
    solution = gf_linalg.nullspace_vector(field, system)
    if solution is None:
        return None
    Q = np.zeros((int(mon_a.max()) + 1, int(mon_b.max()) + 1), dtype=np.int64)
    Q[mon_a, mon_b] = solution
    return Q


def gs_list_decode(code: RSCode, received, v: int,
                   params: Optional[GSParams] = None) -> List[np.ndarray]:
    """
    All codewords within tau^v of `received`, sorted.

    Interpolates Q(x, y) through (alpha^i, y_i) with multiplicity v, finds its
    y-roots of degree < k by Roth-Ruckenstein, and keeps the candidates within
    the decoding radius.
    """
    received = np.asarray(received, dtype=np.int64)
    if received.shape != (code.m,):
        raise DimensionError(f"received length {received.size} != {code.m}")
    params = params or gs_params(code.m, code.k, v)
    field = code.field

    ys = code.untwist(received)
    Q = _interpolate(field, np.arange(code.m, dtype=np.int64), ys, params)
    if Q is None:
        raise InvariantViolation("interpolation system has a trivial kernel")

    candidates: List[List[int]] = []
    _roth_ruckenstein(field, Q, code.k, [], candidates)

    found: Dict[tuple, np.ndarray] = {}
    for coeffs in candidates:
        word = code.encode(np.array(coeffs, dtype=np.int64))
        if np.count_nonzero(word != received) <= params.tau:
            found[tuple(word.tolist())] = word
    logger.debug(
        f"GS {code!r} v={v}: {len(candidates)} candidates, {len(found)} within tau={params.tau}"
    )
    return [found[key] for key in sorted(found)]


class GSDecoder:
    """Constituent list decoder backed by gs_list_decode."""

    kind = "guruswami-sudan"

    def __init__(self, code: RSCode, v: int):
        self.code = code
        self.v = v
        self.params = gs_params(code.m, code.k, v)
        self.tau = self.params.tau
        self.list_cap = self.params.list_cap

    def decode(self, word) -> List[np.ndarray]:
        return gs_list_decode(self.code, word, self.v, self.params)

    def describe(self) -> str:
        return f"Guruswami-Sudan on {self.code!r}, v={self.v}, tau={self.tau}"


# ============================================================================
# Bounded-distance decoding
# ============================================================================

def _syndromes(code: RSCode, received: np.ndarray) -> np.ndarray:
    """S_j = r(alpha^{b+j}) for the m-k roots of the window."""
    field = code.field
    exponents = (code.first_root + np.arange(code.m - code.k, dtype=np.int64)) % field.order
    return _evaluate_many(field, received, field.exp_table[exponents])


def _berlekamp_massey(field: Field, syndromes: np.ndarray) -> Tuple[Polynomial, int]:
    """Shortest LFSR (connection polynomial, length) generating the syndromes."""
    C = Polynomial.one(field)
    B = Polynomial.one(field)
    L, shift, last = 0, 1, 1
    for n in range(len(syndromes)):
        delta = int(syndromes[n])
        for i in range(1, L + 1):
            delta = field.add(delta, field.mul(C.coef(i), int(syndromes[n - i])))
        if delta == 0:
            shift += 1
            continue
        update = C - Polynomial.monomial(field, shift, field.div(delta, last)) * B
        if 2 * L <= n:
            B, L, last, shift = C, n + 1 - L, delta, 1
        else:
            shift += 1
        C = update
    return C, L


def syndrome_decode(code: RSCode, received) -> List[np.ndarray]:
    """
    The codeword within floor((d-1)/2) of `received`, as a list of at most one.

    Berlekamp-Massey on the window syndromes gives the error locator; its roots
    are found by exhaustive evaluation and the error values by Forney's formula.
    A locator whose degree and root count disagree means no codeword is close.
    """
    received = np.asarray(received, dtype=np.int64)
    if received.shape != (code.m,):
        raise DimensionError(f"received length {received.size} != {code.m}")
    field = code.field
    radius = (code.distance - 1) // 2

    S = _syndromes(code, received)
    if not np.any(S):
        return [received.copy()]
    locator, L = _berlekamp_massey(field, S)
    if L > radius or locator.degree != L:
        return []

    idx = np.arange(code.m, dtype=np.int64)
    inverse_points = field.exp_table[(-idx) % field.order]
    values = _evaluate_many(field, np.array(locator.coeffs, dtype=np.int64), inverse_points)
    positions = [int(i) for i in idx[values == 0]]
    if len(positions) != L:
        return []

    evaluator = Polynomial(field, (Polynomial(field, tuple(int(s) for s in S)) * locator).coeffs[: len(S)])
    corrected = received.copy()
    for i in positions:
        x_inv = field.alpha_pow(-i)
        denom = field.alpha_pow(i * code.first_root)
        for j in positions:
            if j != i:
                denom = field.mul(denom, field.sub(1, field.mul(field.alpha_pow(j), x_inv)))
        corrected[i] = field.sub(int(corrected[i]), field.div(evaluator.evaluate(x_inv), denom))

    if not code.as_linear_code().contains(corrected):
        logger.debug(f"{code!r}: locator of degree {L} did not lead to a codeword")
        return []
    return [corrected]


class SyndromeDecoder:
    """Unique decoder up to floor((d-1)/2) errors; at most one codeword per query."""

    kind = "berlekamp-massey"

    def __init__(self, code: RSCode):
        self.code = code
        self.tau = (code.distance - 1) // 2
        self.list_cap = 1

    def decode(self, word) -> List[np.ndarray]:
        return syndrome_decode(self.code, word)

    def describe(self) -> str:
        return f"Berlekamp-Massey on {self.code!r}, tau={self.tau}"
