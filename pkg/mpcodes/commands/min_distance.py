"""
min-distance - brute-force minimum distance of the full matrix-product code.
"""

import argparse
import time

from commands.common import add_spec_arguments, emit, load_spec, record
from models.run_log import RunAction
from services.linear_code import min_distance_bruteforce


def register(subparsers) -> None:
    parser = subparsers.add_parser("min-distance", help="enumerate all codewords for the distance")
    add_spec_arguments(parser)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--cap", type=int, default=None, help="largest codeword count to enumerate")
    parser.add_argument("--kv", action="store_true")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    built = load_spec(args)
    started = time.perf_counter()
    distance = min_distance_bruteforce(built.code.to_linear_code(), cap=args.cap, workers=args.workers)
    elapsed = time.perf_counter() - started

    emit([
        ("name", built.name),
        ("codewords", built.field.q ** built.code.dimension),
        ("min_distance", distance),
        ("elapsed_s", f"{elapsed:.2f}"),
    ], kv=args.kv)
    record(RunAction.ANALYSIS_RUN, built, metadata={"analysis": "min-distance", "value": distance})
    return 0
