"""
MPC List Decoder - list decoding of nested matrix-product codes.

For every ordered tuple (i_1, ..., i_s) of distinct blocks the decoder runs
the constituent decoder LDC_j on block i_j, forks one branch per returned
word, eliminates that word from every block not yet consumed, and reduces the
working copy of A by the matching column operation. Surviving branches are
solved for (c_1, ..., c_s), checked for membership and distance, and the
results of all tuples are merged.

The same engine serves scalar matrices and matrices over F_q[x]/(x^m - 1);
the difference is confined to the code's coefficient algebra
(services.coefficients).
"""

from dataclasses import dataclass, field as dc_field
from itertools import permutations
from typing import Any, Dict, List, Optional, Protocol, Sequence, Tuple
import logging
import math

import numpy as np

from errors import (
    DecoderAssertionError,
    DimensionError,
    InvariantViolation,
    MatrixConditionError,
    NotNestedError,
)
from models.decoding import DecodeOutput, StageTrace, TupleTrace, UniqueDecodeResult
from services.linear_code import LinearCode, is_subcode
from services.matrix_product import split_blocks

logger = logging.getLogger(__name__)


class ConstituentDecoder(Protocol):
    """A list decoder returning exactly {c in C : d(c, word) <= tau}."""
    tau: int
    list_cap: int

    def decode(self, word) -> List[np.ndarray]: ...


# ============================================================================
# Decoder spec
# ============================================================================

def tau_bound(l: int, taus: Sequence[int]) -> int:
    """min_j (l-j+1) tau_j + (l-j), j = 1..s."""
    if len(taus) > l:
        raise DimensionError(f"{len(taus)} error bounds for {l} blocks")
    return min((l - j) * t + (l - j - 1) for j, t in enumerate(taus))


def _decoder_code(decoder) -> LinearCode:
    code = decoder.code
    return code.as_linear_code() if hasattr(code, "as_linear_code") else code


class DecoderSpec:
    """
    A decodable matrix-product code together with one list decoder per
    constituent.

    `code` is a ScalarMPC or a UnitMPC; both expose `algebra()`,
    `matrix_entry(j, i)`, `combine(parts)` and `decodable`.
    """

    def __init__(self, code, decoders: Sequence[ConstituentDecoder],
                 tau: Optional[int] = None):
        if not code.nested:
            raise NotNestedError(f"{code!r}: constituents are not nested")
        if not code.decodable:
            raise MatrixConditionError(f"{code!r}: matrix fails the column condition for decoding")
        if len(decoders) != code.s:
            raise DimensionError(f"{len(decoders)} decoders for {code.s} constituents")
        for j, (decoder, constituent) in enumerate(zip(decoders, code.constituents)):
            own = _decoder_code(decoder)
            if not (is_subcode(own, constituent) and is_subcode(constituent, own)):
                raise InvariantViolation(f"decoder {j + 1} is for a different code than C_{j + 1}")

        self.code = code
        self.decoders = list(decoders)
        self.algebra = code.algebra()
        self.taus = [d.tau for d in self.decoders]
        self.bound = tau_bound(code.l, self.taus)
        if tau is None:
            self.tau = self.bound
        else:
            if tau > self.bound:
                logger.warning(
                    f"tau={tau} exceeds the guaranteed bound {self.bound}; "
                    "codewords beyond the bound may be missed"
                )
            self.tau = tau

    @property
    def branch_budget(self) -> int:
        return math.prod(max(1, d.list_cap) for d in self.decoders)


# ============================================================================
# Branching engine
# ============================================================================

@dataclass
class _Branch:
    blocks: List[np.ndarray]
    decoded: List[np.ndarray] = dc_field(default_factory=list)


def _solve(spec: DecoderSpec, W: List[List[Any]], order: Tuple[int, ...],
           decoded: List[np.ndarray]) -> List[np.ndarray]:
    """
    Back-substitution on the triangular system left by the column operations:
    decoded_j = sum_{t >= j} W[t][i_j] c_t.
    """
    alg = spec.algebra
    s = len(order)
    parts: List[Optional[np.ndarray]] = [None] * s
    for j in range(s - 1, -1, -1):
        col = order[j]
        rhs = decoded[j]
        for t in range(j + 1, s):
            if not alg.is_zero(W[t][col]):
                rhs = spec.code.field.vsub(rhs, alg.scale(W[t][col], parts[t]))
        pivot = W[j][col]
        if not alg.is_invertible(pivot):
            raise DecoderAssertionError(f"final pivot {alg.format(pivot)} is not invertible")
        parts[j] = alg.scale(alg.inv(pivot), rhs)
    return parts


def _run_tuple(spec: DecoderSpec, received: np.ndarray, order: Tuple[int, ...],
               radius: int, trace: TupleTrace, found: Dict[tuple, int]) -> None:
    code = spec.code
    alg = spec.algebra
    field = code.field
    l, s = code.l, code.s

    W = [[code.matrix_entry(t, i) for i in range(l)] for t in range(s)]
    # Every branch carries all l blocks, not a single scratch vector.
    branches = [_Branch(blocks=[received[i].copy() for i in range(l)])]
    consumed: List[int] = []

    for j in range(s):
        col = order[j]
        pivot = W[j][col]
        if not alg.is_invertible(pivot):
            raise DecoderAssertionError(
                f"pivot a_({j + 1},{col + 1}) = {alg.format(pivot)} is not invertible "
                f"under tuple {tuple(i + 1 for i in order)}"
            )
        pivot_inv = alg.inv(pivot)
        consumed.append(col)
        remaining = [i for i in range(l) if i not in consumed]
        factors = {i: alg.mul(W[j][i], pivot_inv) for i in remaining}

        stage = StageTrace(stage=j + 1, block=col + 1, pivot=alg.format(pivot),
                           branches_in=len(branches))
        survivors: List[_Branch] = []
        for branch in branches:
            words = spec.decoders[j].decode(branch.blocks[col])
            stage.list_sizes.append(len(words))
            for word in words:
                stage.decoded.append([int(x) for x in word])
                blocks = list(branch.blocks)
                for i in remaining:
                    if not alg.is_zero(factors[i]):
                        blocks[i] = field.vsub(blocks[i], alg.scale(factors[i], word))
                survivors.append(_Branch(blocks=blocks, decoded=branch.decoded + [word]))
        trace.stages.append(stage)

        for i in remaining:
            if alg.is_zero(factors[i]):
                continue
            for t in range(s):
                W[t][i] = alg.sub(W[t][i], alg.mul(factors[i], W[t][col]))

        branches = survivors
        trace.peak_branches = max(trace.peak_branches, len(branches))
        if not branches:
            trace.abandoned = True
            return

    for branch in branches:
        parts = _solve(spec, W, order, branch.decoded)
        if not all(c.contains(p) for c, p in zip(code.constituents, parts)):
            trace.rejected_nonmember += 1
            continue
        word = code.combine(parts).reshape(-1)
        distance = int(np.count_nonzero(word != received.reshape(-1)))
        if distance > radius:
            trace.rejected_distance += 1
            continue
        trace.accepted += 1
        found[tuple(word.tolist())] = distance


def index_tuples(l: int, s: int) -> List[Tuple[int, ...]]:
    """All s! * binom(l, s) ordered tuples of distinct 0-based blocks."""
    return list(permutations(range(l), s))


def list_decode(spec: DecoderSpec, received, tau: Optional[int] = None,
                first_hit: bool = False, tuples: Optional[Sequence[Sequence[int]]] = None) -> DecodeOutput:
    """
    Every codeword within tau of `received` reachable through some index tuple.

    Args:
        spec: decodable code plus constituent decoders
        received: flat word of length l*m or an (l, m) block array
        tau: output radius; defaults to spec.tau
        first_hit: stop after the first tuple that yields a codeword
        tuples: restrict to these 1-based tuples (diagnostics)
    """
    code = spec.code
    blocks = split_blocks(received, code.l, code.m)
    radius = spec.tau if tau is None else tau

    orders = index_tuples(code.l, code.s) if tuples is None else [
        tuple(i - 1 for i in t) for t in tuples
    ]
    found: Dict[tuple, int] = {}
    traces: List[TupleTrace] = []
    for order in orders:
        trace = TupleTrace(index_tuple=[i + 1 for i in order], branch_budget=spec.branch_budget)
        _run_tuple(spec, blocks, order, radius, trace, found)
        traces.append(trace)
        logger.debug(
            f"tuple {trace.index_tuple}: peak {trace.peak_branches} branches, "
            f"accepted {trace.accepted}, abandoned={trace.abandoned}"
        )
        if first_hit and found:
            break

    keys = sorted(found)
    return DecodeOutput(
        tau=radius,
        codewords=[list(k) for k in keys],
        distances=[found[k] for k in keys],
        traces=traces,
        first_hit=first_hit,
    )


# ============================================================================
# Index tuples and unique decoding
# ============================================================================

def good_index_tuple_exists(weights: Sequence[int], taus: Sequence[int],
                            tau: Optional[int] = None) -> Optional[Tuple[int, ...]]:
    """
    A 1-based tuple (i_1..i_s) of distinct blocks with weights[i_j - 1] <= taus[j - 1].

    Tries the lightest blocks in order first and falls back to a full search.
    """
    if tau is not None and sum(weights) > tau:
        logger.debug(f"total weight {sum(weights)} exceeds tau={tau}; existence not guaranteed")
    s = len(taus)
    if s > len(weights):
        return None
    lightest = sorted(range(len(weights)), key=lambda i: (weights[i], i))[:s]
    if all(weights[i] <= t for i, t in zip(lightest, taus)):
        return tuple(i + 1 for i in lightest)
    for order in permutations(range(len(weights)), s):
        if all(weights[i] <= t for i, t in zip(order, taus)):
            return tuple(i + 1 for i in order)
    return None


def unique_decode(spec: DecoderSpec, received, distance: int) -> UniqueDecodeResult:
    """
    Bounded-distance decoding up to floor((d-1)/2) with the true distance d
    supplied by the caller.
    """
    half = (distance - 1) // 2
    if spec.bound < half:
        raise InvariantViolation(
            f"decoder bound {spec.bound} is below half the distance ({half})"
        )
    output = list_decode(spec, received, tau=half, first_hit=True)
    if not output.codewords:
        return UniqueDecodeResult(success=False, tau=half, reason=f"no codeword within {half}")
    if len(output.codewords) > 1:
        raise DecoderAssertionError(f"{len(output.codewords)} codewords within half the distance")
    return UniqueDecodeResult(
        success=True, tau=half,
        codeword=output.codewords[0], distance=output.distances[0],
    )
