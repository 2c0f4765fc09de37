"""
simulate - channel simulation at a fixed error weight.
"""

import argparse
import logging

from commands.common import add_spec_arguments, emit, load_spec, record, require_decoder
from config import get_settings
from errors import InvariantViolation
from models.run_log import RunAction
from services.simulation import simulate

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("simulate", help="decode random codewords with random errors")
    add_spec_arguments(parser)
    parser.add_argument("--weight", type=int, required=True, help="exact error weight t")
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--unique", action="store_true",
                        help="bounded-distance mode: success means the output is exactly the sent word")
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--kv", action="store_true", help="key=value output")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    built = load_spec(args)
    spec = require_decoder(built)
    distance = built.true_distance()
    if args.unique and distance is None:
        raise InvariantViolation(f"{built.name}: unique mode needs a declared distance")
    seed = get_settings().default_seed if args.seed is None else args.seed

    report = simulate(
        spec, args.weight, args.trials, seed=seed, unique=args.unique,
        distance=distance, workers=args.workers, spec_name=built.name,
    )
    emit([
        ("spec", report.spec_name),
        ("weight", report.weight),
        ("trials", report.trials),
        ("seed", report.seed),
        ("tau", report.tau),
        ("mode", "unique" if report.unique else "list"),
        ("member_rate", f"{report.member_rate:.4f}"),
        ("exact_rate", f"{report.exact_rate:.4f}"),
        ("empty_outputs", report.empty_outputs),
        ("max_list_size", report.max_list_size),
        ("elapsed_s", f"{report.elapsed_seconds:.2f}"),
    ], kv=args.kv)

    record(RunAction.SIMULATION_RUN, built, seed=seed, metadata=report.model_dump())
    return 0
