"""
decode - list decode a received word.

Each output line is `d=<distance> <codeword>`; an empty list prints NONE.
With --trace every index tuple is reported with the list sizes of each stage.
"""

import argparse
import logging

from commands.common import (
    add_spec_arguments,
    format_word,
    int_list,
    load_spec,
    parse_word,
    record,
    require_decoder,
)
from errors import DimensionError
from models.decoding import DecodeOutput
from models.run_log import RunAction
from services.mpc_list_decoder import list_decode
from services.unit_mpc import unit_list_decode

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("decode", help="list decode a received word")
    add_spec_arguments(parser)
    parser.add_argument("word", help="comma-separated element tokens, m*l of them")
    parser.add_argument("--tau", type=int, default=None, help="override the decoding radius")
    parser.add_argument("--first-hit", action="store_true",
                        help="stop after the first index tuple that yields a codeword")
    parser.add_argument("--trace", action="store_true", help="print per-tuple diagnostics")
    parser.add_argument("--tuple", dest="tuples", type=int_list, action="append", default=None,
                        help="only try this 1-based index tuple (repeatable), e.g. 2,1")
    parser.set_defaults(handler=run)


def print_trace(built, output: DecodeOutput) -> None:
    for trace in output.traces:
        status = "abandoned" if trace.abandoned else f"accepted {trace.accepted}"
        print(
            f"tuple {tuple(trace.index_tuple)}: {status}, peak {trace.peak_branches} "
            f"of budget {trace.branch_budget}, rejected {trace.rejected_nonmember} "
            f"nonmember / {trace.rejected_distance} distance"
        )
        for stage in trace.stages:
            print(
                f"  LDC_{stage.stage} on block {stage.block} (pivot {stage.pivot}): "
                f"{stage.branches_in} branches in, list sizes {stage.list_sizes}"
            )
            for word in stage.decoded:
                print(f"    {format_word(built.field, word)}")


def run(args: argparse.Namespace) -> int:
    built = load_spec(args, tau=args.tau)
    spec = require_decoder(built)
    received = parse_word(built.field, args.word)
    if received.size != built.code.length:
        raise DimensionError(f"word has {received.size} symbols, code length is {built.code.length}")

    decode = unit_list_decode if built.kind == "unit" else list_decode
    output = decode(spec, received, first_hit=args.first_hit, tuples=args.tuples)

    if args.trace:
        print_trace(built, output)
    if not output.codewords:
        print("NONE")
    for word, distance in zip(output.codewords, output.distances):
        print(f"d={distance} {format_word(built.field, word)}")

    record(
        RunAction.WORD_DECODED, built,
        input_data=received.tolist(), output_data=output.codewords,
        metadata={"tau": output.tau, "list_size": len(output)},
    )
    return 0
