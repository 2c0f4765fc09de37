"""
Analysis Service - probability and work accounting for the list decoder.

Exact quantities are Fractions over big-integer binomials; only Monte-Carlo
summaries are floats.
"""

from fractions import Fraction
from itertools import permutations
from math import comb, factorial, prod
from typing import Iterator, List, Optional, Sequence, Tuple
import logging

import numpy as np

from errors import InvariantViolation
from models.params import BranchBudget, ProbEstimate, PropositionGap, WeightMode
from services.mpc_list_decoder import DecoderSpec
from services.reed_solomon import RSCode, gs_list_decode, gs_params
from services.simulation import random_error, run_trials, trial_rng

logger = logging.getLogger(__name__)


# ============================================================================
# Good index sets
# ============================================================================

def _check_shape(m: int, l: int, s: int, tau: int) -> None:
    if not 1 <= s <= l:
        raise InvariantViolation(f"need 1 <= s <= l, got s={s}, l={l}")
    if not 0 <= tau <= m * l:
        raise InvariantViolation(f"tau={tau} outside 0..{m * l}")


def good_set_probability(m: int, l: int, s: int, tau: int, taus: Sequence[int]) -> Fraction:
    """
    Fixed-set formula: probability that blocks i_1..i_{s-1} carry at most
    tau_1..tau_{s-1} errors when tau errors fall uniformly on the m*l positions.

    Block i_s is not capped; pass either tau_1..tau_{s-1} or all s bounds.
    """
    _check_shape(m, l, s, tau)
    caps = list(taus)[: s - 1]
    if len(caps) != s - 1:
        raise InvariantViolation(f"need {s - 1} error bounds, got {len(caps)}")
    tail = m * (l - s + 1)

    def count(j: int, left: int) -> int:
        if j == len(caps):
            return comb(tail, left)
        return sum(
            comb(m, a) * count(j + 1, left - a)
            for a in range(min(caps[j], left) + 1)
        )

    return Fraction(count(0, tau), comb(m * l, tau))


def weight_compositions(total: int, parts: int, cap: int) -> Iterator[Tuple[int, ...]]:
    """Tuples of `parts` integers in 0..cap summing to `total`."""
    if parts == 1:
        if total <= cap:
            yield (total,)
        return
    for first in range(min(cap, total) + 1):
        for rest in weight_compositions(total - first, parts - 1, cap):
            yield (first,) + rest


def _composition_probability(m: int, l: int, tau: int, accept) -> Fraction:
    good = sum(
        prod(comb(m, w) for w in weights)
        for weights in weight_compositions(tau, l, m)
        if accept(weights)
    )
    return Fraction(good, comb(m * l, tau))


def good_set_probability_exact(m: int, l: int, s: int, tau: int, taus: Sequence[int],
                               index_tuple: Optional[Sequence[int]] = None) -> Fraction:
    """
    Exact probability that the 1-based tuple (default 1..s) is good, every one
    of the s blocks capped by its bound.
    """
    _check_shape(m, l, s, tau)
    if len(taus) != s:
        raise InvariantViolation(f"need {s} error bounds, got {len(taus)}")
    order = [i - 1 for i in (index_tuple or range(1, s + 1))]
    return _composition_probability(
        m, l, tau, lambda w: all(w[i] <= t for i, t in zip(order, taus))
    )


def any_good_tuple_probability(m: int, l: int, s: int, tau: int, taus: Sequence[int]) -> Fraction:
    """Probability that at least one ordered tuple is good."""
    _check_shape(m, l, s, tau)
    orders = list(permutations(range(l), s))
    return _composition_probability(
        m, l, tau,
        lambda w: any(all(w[i] <= t for i, t in zip(order, taus)) for order in orders),
    )


def proposition_discrepancies(m_values: Sequence[int], l: int, s: int,
                              max_tau: Optional[int] = None) -> List[PropositionGap]:
    """
    Compare the fixed-set formula with the exact count over a grid of
    (m, tau, tau_1..tau_s) with every bound below tau.
    """
    gaps: List[PropositionGap] = []
    for m in m_values:
        top = m * l if max_tau is None else min(max_tau, m * l)
        for tau in range(top + 1):
            bound_grid = [range(min(tau, m) + 1)] * s
            for taus in _product(bound_grid):
                formula = good_set_probability(m, l, s, tau, taus)
                exact = good_set_probability_exact(m, l, s, tau, taus)
                if formula != exact:
                    gaps.append(PropositionGap(
                        m=m, l=l, s=s, tau=tau, taus=list(taus),
                        formula=str(formula), exact=str(exact),
                    ))
    logger.info(f"Proposition sweep l={l}, s={s}: {len(gaps)} configurations differ")
    return gaps


def _product(ranges) -> Iterator[Tuple[int, ...]]:
    if not ranges:
        yield ()
        return
    for head in ranges[0]:
        for rest in _product(ranges[1:]):
            yield (head,) + rest


# ============================================================================
# Monte-Carlo p_tau
# ============================================================================

def _weight_distribution(m: int, q: int, tau: int, mode: WeightMode) -> np.ndarray:
    if mode == WeightMode.UNIFORM:
        return np.full(tau + 1, 1.0 / (tau + 1))
    counts = [comb(m, w) * (q - 1) ** w for w in range(tau + 1)]
    total = sum(counts)
    return np.array([c / total for c in counts])


def estimate_p_tau(code: RSCode, v: int, trials: int, seed: int,
                   weight_mode: WeightMode = WeightMode.PROPORTIONAL,
                   workers: Optional[int] = None) -> ProbEstimate:
    """
    Fraction of trials where the Guruswami-Sudan list has two or more
    codewords, with at most tau^v errors drawn per `weight_mode`.
    """
    if trials < 1:
        raise InvariantViolation("trials must be >= 1")
    params = gs_params(code.m, code.k, v)
    weights = _weight_distribution(code.m, code.field.q, params.tau, weight_mode)

    def one(trial: int) -> Tuple[bool]:
        rng = trial_rng(seed, trial)
        sent = code.encode(rng.integers(0, code.field.q, size=code.k))
        w = int(rng.choice(params.tau + 1, p=weights))
        received = code.field.vadd(sent, random_error(code.field, code.m, w, rng))
        return (len(gs_list_decode(code, received, v, params)) >= 2,)

    hits = sum(1 for (many,) in run_trials(one, trials, workers) if many)
    estimate = ProbEstimate.from_counts(hits, trials, seed, weight_mode=weight_mode, tau=params.tau)
    logger.info(f"p_tau for {code!r} at v={v}: {estimate.estimate:.4g} +/- {estimate.std_error:.2g}")
    return estimate


# ============================================================================
# Success probability and work
# ============================================================================

def decoder_success_probability(p_estimates: Sequence):
    """prod (1 - p_i): chance every constituent list has a single word."""
    result = 1
    for p in p_estimates:
        if not 0 <= p <= 1:
            raise InvariantViolation(f"probability {p} outside [0, 1]")
        result *= 1 - p
    return result


def bad_tuple_survival_bound(l: int, p_tau1):
    """min(1, l * p_tau1)."""
    if not 0 <= p_tau1 <= 1:
        raise InvariantViolation(f"probability {p_tau1} outside [0, 1]")
    return min(1, l * p_tau1)


def complexity_estimate(l: int, s: int, list_caps: Sequence[int], costs: Sequence[int]) -> int:
    """
    s! * binom(l, s) * (D_1 + sum_{i>=2} (prod_{j<i} D_j) R_i).

    For s = 1 the sum is empty and the value is l * D_1.
    """
    if len(list_caps) != s or len(costs) != s:
        raise InvariantViolation(f"need {s} list caps and {s} costs")
    if any(d < 1 for d in list_caps) or any(r < 1 for r in costs):
        raise InvariantViolation("list caps and costs must be positive")
    inner = list_caps[0] + sum(prod(list_caps[:i]) * costs[i] for i in range(1, s))
    return factorial(s) * comb(l, s) * inner


def gs_branch_budget(spec: DecoderSpec) -> BranchBudget:
    """Work bound for `spec` with one unit of cost per constituent decoder call."""
    code = spec.code
    caps = [max(1, d.list_cap) for d in spec.decoders]
    return BranchBudget(
        list_caps=caps,
        tuples=factorial(code.s) * comb(code.l, code.s),
        per_tuple=prod(caps),
        decoder_calls=complexity_estimate(code.l, code.s, caps, [1] * code.s),
    )
