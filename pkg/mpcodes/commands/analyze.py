"""
analyze - probability and work accounting for the list decoder.

Subcommands:
    good-set-prob   fixed-set formula (first s-1 blocks capped)
    exact           exact probability with every block of the tuple capped
    any-good        probability that some ordered tuple is good
    sweep           formula vs exact over a grid; lists configurations that differ
    p-tau           Monte-Carlo estimate of a GS list holding >= 2 codewords
    success         prod (1 - p_i)
    lemma           min(1, l * p)
    complexity      work estimate from list caps and costs, or from a spec
"""

import argparse
from fractions import Fraction
import logging

from commands.common import emit, int_list, load_spec, record, require_decoder
from config import get_settings
from errors import InvariantViolation
from models.params import WeightMode
from models.run_log import RunAction
from services.analysis import (
    any_good_tuple_probability,
    bad_tuple_survival_bound,
    complexity_estimate,
    decoder_success_probability,
    estimate_p_tau,
    good_set_probability,
    good_set_probability_exact,
    gs_branch_budget,
    proposition_discrepancies,
)
from services.finite_field import field_new
from services.reed_solomon import RSCode

logger = logging.getLogger(__name__)


def _probability(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _shape_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("m", type=int, help="block length")
    parser.add_argument("l", type=int, help="number of blocks")
    parser.add_argument("s", type=int, help="number of constituents")
    parser.add_argument("tau", type=int, help="total number of errors")
    parser.add_argument("taus", type=int, nargs="*", help="per-stage error bounds")


def register(subparsers) -> None:
    parser = subparsers.add_parser("analyze", help="probability and complexity tables")
    parser.add_argument("--kv", action="store_true", help="key=value output")
    sub = parser.add_subparsers(dest="analysis", required=True)

    p = sub.add_parser("good-set-prob", help="fixed-set formula")
    _shape_arguments(p)
    p.set_defaults(handler=run_good_set)

    p = sub.add_parser("exact", help="exact good-tuple probability")
    _shape_arguments(p)
    p.add_argument("--tuple", dest="index_tuple", type=int_list, default=None,
                   help="1-based index tuple, default 1..s")
    p.set_defaults(handler=run_exact)

    p = sub.add_parser("any-good", help="probability that some ordered tuple is good")
    _shape_arguments(p)
    p.set_defaults(handler=run_any_good)

    p = sub.add_parser("sweep", help="compare formula and exact count over a grid")
    p.add_argument("--m", dest="m_values", type=int_list, default=[3, 4])
    p.add_argument("--l", type=int, default=3)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--max-tau", type=int, default=None)
    p.add_argument("--limit", type=int, default=20, help="configurations to print")
    p.set_defaults(handler=run_sweep)

    p = sub.add_parser("p-tau", help="Monte-Carlo p_tau for an RS code")
    p.add_argument("k", type=int)
    p.add_argument("v", type=int)
    p.add_argument("--p", type=int, default=2, help="field characteristic")
    p.add_argument("--degree", type=int, default=4, help="field extension degree")
    p.add_argument("--first-root", type=int, default=1)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--mode", choices=[w.value for w in WeightMode], default=WeightMode.PROPORTIONAL.value)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(handler=run_p_tau)

    p = sub.add_parser("success", help="prod (1 - p_i)")
    p.add_argument("p", type=_probability, nargs="+")
    p.set_defaults(handler=run_success)

    p = sub.add_parser("lemma", help="min(1, l * p_tau1)")
    p.add_argument("l", type=int)
    p.add_argument("p", type=_probability)
    p.set_defaults(handler=run_lemma)

    p = sub.add_parser("complexity", help="work estimate")
    p.add_argument("--l", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--caps", type=int_list, help="list caps D_1..D_s")
    p.add_argument("--costs", type=int_list, help="decoder costs R_1..R_s")
    p.add_argument("--spec", default=None, help="use the GS list caps of this spec")
    p.add_argument("--multiplicities", type=int_list, default=None)
    p.set_defaults(handler=run_complexity)


def _fraction_rows(value: Fraction):
    return [("probability", str(value)), ("decimal", f"{float(value):.6g}")]


def _done(args: argparse.Namespace, metadata: dict) -> int:
    record(RunAction.ANALYSIS_RUN, metadata={"analysis": args.analysis, **metadata})
    return 0


def run_good_set(args: argparse.Namespace) -> int:
    value = good_set_probability(args.m, args.l, args.s, args.tau, args.taus)
    emit(_fraction_rows(value), kv=args.kv)
    return _done(args, {"value": str(value)})


def run_exact(args: argparse.Namespace) -> int:
    value = good_set_probability_exact(args.m, args.l, args.s, args.tau, args.taus, args.index_tuple)
    emit(_fraction_rows(value), kv=args.kv)
    return _done(args, {"value": str(value)})


def run_any_good(args: argparse.Namespace) -> int:
    value = any_good_tuple_probability(args.m, args.l, args.s, args.tau, args.taus)
    emit(_fraction_rows(value), kv=args.kv)
    return _done(args, {"value": str(value)})


def run_sweep(args: argparse.Namespace) -> int:
    gaps = proposition_discrepancies(args.m_values, args.l, args.s, args.max_tau)
    emit([("configurations_differing", len(gaps))], kv=args.kv)
    for gap in gaps[: args.limit]:
        print(f"m={gap.m} tau={gap.tau} taus={gap.taus} formula={gap.formula} exact={gap.exact}")
    return _done(args, {"gaps": len(gaps)})


def run_p_tau(args: argparse.Namespace) -> int:
    code = RSCode(field_new(args.p, args.degree), args.k, first_root=args.first_root)
    seed = get_settings().default_seed if args.seed is None else args.seed
    estimate = estimate_p_tau(code, args.v, args.trials, seed,
                              weight_mode=WeightMode(args.mode), workers=args.workers)
    emit([
        ("code", f"[{code.m},{code.k},{code.distance}]"),
        ("v", args.v),
        ("tau", estimate.tau),
        ("mode", estimate.weight_mode.value),
        ("trials", estimate.trials),
        ("hits", estimate.hits),
        ("estimate", f"{estimate.estimate:.6g}"),
        ("std_error", f"{estimate.std_error:.3g}"),
    ], kv=args.kv)
    record(RunAction.ANALYSIS_RUN, seed=seed,
           metadata={"analysis": args.analysis, **estimate.model_dump(mode="json")})
    return 0


def run_success(args: argparse.Namespace) -> int:
    value = decoder_success_probability(args.p)
    emit(_fraction_rows(value), kv=args.kv)
    return _done(args, {"value": str(value)})


def run_lemma(args: argparse.Namespace) -> int:
    value = bad_tuple_survival_bound(args.l, args.p)
    emit(_fraction_rows(Fraction(value)), kv=args.kv)
    return _done(args, {"value": str(value)})


def run_complexity(args: argparse.Namespace) -> int:
    if args.spec:
        built = load_spec(argparse.Namespace(spec=args.spec, multiplicities=args.multiplicities))
        budget = gs_branch_budget(require_decoder(built))
        emit([
            ("list_caps", ",".join(map(str, budget.list_caps))),
            ("tuples", budget.tuples),
            ("per_tuple", budget.per_tuple),
            ("decoder_calls", budget.decoder_calls),
        ], kv=args.kv)
        return _done(args, budget.model_dump())

    if None in (args.l, args.s, args.caps, args.costs):
        raise InvariantViolation("complexity needs --spec, or --l, --s, --caps and --costs")
    value = complexity_estimate(args.l, args.s, args.caps, args.costs)
    emit([("estimate", value)], kv=args.kv)
    return _done(args, {"value": value})
