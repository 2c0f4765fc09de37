"""
Replay of the bundled reference examples against their golden values.
"""

from typing import Callable, List, Optional
import logging
import time

from models.reference import CheckResult, ReferenceReport
from reference import golden
from services.analysis import good_set_probability, good_set_probability_exact
from services.codespec import load_and_build
from services.linear_code import min_distance_bruteforce
from services.matrix_product import distance_nested_nsc
from services.mpc_list_decoder import list_decode
from services.reed_solomon import gs_params
from services.simulation import simulate
from services.unit_mpc import d_star

logger = logging.getLogger(__name__)


def _check(report: ReferenceReport, name: str, expected, compute: Callable[[], object]) -> None:
    started = time.perf_counter()
    actual = compute()
    result = CheckResult(
        name=name,
        passed=actual == expected,
        expected=str(expected),
        actual=str(actual),
        elapsed_seconds=time.perf_counter() - started,
    )
    logger.info(f"{'PASS' if result.passed else 'FAIL'} {name}")
    report.checks.append(result)


def _nested_decode_checks(report: ReferenceReport) -> None:
    built = load_and_build(golden.NESTED_SPEC)
    field = built.field
    received = [field.parse_value(t) for t in golden.NESTED_RECEIVED.split(",")]
    zero = [0] * built.code.length
    zero_block = [0] * built.code.m
    stage1_word = [field.parse_value(t) for t in golden.NESTED_STAGE1_WORD.split(",")]

    output = list_decode(built.decoder, received)
    _check(report, "nested: sent word in list at distance 7", golden.NESTED_SENT_DISTANCE,
           lambda: output.distances[output.codewords.index(zero)] if zero in output.codewords else None)

    def tuple_21():
        trace = output.trace_for((2, 1))
        return [zero_block in stage.decoded for stage in trace.stages]

    _check(report, "nested: tuple (2,1) decodes 0 then 0", [True, True], tuple_21)

    def tuple_12():
        trace = output.trace_for((1, 2))
        first = trace.stages[0]
        if stage1_word not in first.decoded:
            return "stage-1 word missing"
        branch = first.decoded.index(stage1_word)
        return trace.stages[1].list_sizes[branch]

    _check(report, "nested: tuple (1,2) dead-ends at stage 2", 0, tuple_12)
    _check(report, "nested: distance", golden.NESTED_DISTANCE, lambda: distance_nested_nsc(built.code))


def run_reference_checks(trials: int = 10, seed: int = 0, slow: bool = True,
                         workers: Optional[int] = None) -> ReferenceReport:
    """
    Args:
        trials: simulation trials per reference code
        seed: simulation seed
        slow: include the brute-force distance enumeration
        workers: threads for enumeration and simulation
    """
    report = ReferenceReport()

    for (m, k, v), tau in golden.GS_TAUS.items():
        _check(report, f"gs-params ({m},{k},{v})", tau, lambda m=m, k=k, v=v: gs_params(m, k, v).tau)

    for name, mults, tau in golden.TAU_BOUNDS:
        label = f"tau bound {name}" + (f" v={','.join(map(str, mults))}" if mults else "")
        _check(report, label, tau,
               lambda name=name, mults=mults: load_and_build(name, multiplicities=mults or None).decoder.tau)

    (m, l, s, tau, taus), expected = golden.GOOD_SET_PROBABILITY
    _check(report, "good-set probability", expected,
           lambda: str(good_set_probability(m, l, s, tau, taus)))
    _check(report, "good-set probability, exact count", expected,
           lambda: str(good_set_probability_exact(m, l, s, tau, list(taus) + [tau])))

    _nested_decode_checks(report)

    for name, (expected_star, _) in golden.UNIT_DISTANCES.items():
        _check(report, f"d* {name}", expected_star,
               lambda name=name: d_star(load_and_build(name).code).d_star)

    for name, radius in golden.BOUND_UNIQUE_RADII.items():
        _check(report, f"unique radius from distance bound {name}", radius,
               lambda name=name: load_and_build(name).bound_unique_radius())

    for name, budget in golden.BRANCH_BUDGETS.items():
        _check(report, f"branch budget {name}", budget,
               lambda name=name: load_and_build(name).decoder.branch_budget)

    if slow:
        for name, expected in golden.BRUTE_FORCE_DISTANCES.items():
            _check(report, f"min distance {name}", expected,
                   lambda name=name: min_distance_bruteforce(
                       load_and_build(name).code.to_linear_code(), workers=workers))

    for name, weight, unique in golden.SIMULATIONS:
        def run(name=name, weight=weight, unique=unique):
            built = load_and_build(name)
            sim = simulate(built.decoder, weight, trials, seed=seed, unique=unique,
                           distance=built.true_distance(), workers=workers, spec_name=name)
            return sim.exact_hits if unique else sim.member_hits

        mode = "unique" if unique else "list"
        _check(report, f"simulate {name} t={weight} ({mode})", trials, run)

    return report
