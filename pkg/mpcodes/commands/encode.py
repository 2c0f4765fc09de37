"""
encode - map a message of sum k_i symbols to a codeword of length m*l.

Prints a header line with the code parameters, then the codeword in block
order.
"""

import argparse
import logging

from commands.common import add_spec_arguments, format_word, load_spec, parse_word, record
from models.run_log import RunAction

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("encode", help="encode a message")
    add_spec_arguments(parser)
    parser.add_argument("message", help="comma-separated element tokens, sum k_i of them")
    parser.set_defaults(handler=run)


def header(built) -> str:
    d = built.true_distance()
    return f"{built.name}: n={built.code.length} k={built.code.dimension} d={d if d is not None else '?'}"


def run(args: argparse.Namespace) -> int:
    built = load_spec(args)
    message = parse_word(built.field, args.message)
    word = built.code.encode_flat(message)

    print(header(built))
    print(format_word(built.field, word))
    record(RunAction.WORD_ENCODED, built, input_data=message.tolist(), output_data=word.tolist())
    return 0
