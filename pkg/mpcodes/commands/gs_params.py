"""
gs-params - Guruswami-Sudan parameters for an [m, k] Reed-Solomon code.
"""

import argparse

from commands.common import emit
from services.reed_solomon import gs_params


def register(subparsers) -> None:
    parser = subparsers.add_parser("gs-params", help="GS parameters r, l, tau for (m, k, v)")
    parser.add_argument("m", type=int, help="code length")
    parser.add_argument("k", type=int, help="code dimension")
    parser.add_argument("v", type=int, help="multiplicity")
    parser.add_argument("--kv", action="store_true")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    params = gs_params(args.m, args.k, args.v)
    emit([(key, value) for key, value in params.model_dump().items()], kv=args.kv)
    return 0
