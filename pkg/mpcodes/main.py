"""
MPC Codes - command-line entry point

This is the front end that coordinates:
- Construction of matrix-product codes from spec files
- Encoding and list decoding
- Channel simulation and probability analysis
- Replay of the bundled reference examples
"""

import argparse
import logging
import sys
from typing import Optional, Sequence

from config import get_settings
from commands import analyze, decode, encode, gs_params, info, min_distance, reference_check, simulate
from errors import DecoderAssertionError, InvariantViolation, ParseError
from services.run_log import get_run_logger

logger = logging.getLogger(__name__)

EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_INTERNAL = 4

COMMANDS = (encode, decode, simulate, gs_params, analyze, info, min_distance, reference_check)


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="mpcodes",
        description="Matrix-product codes: construction, list decoding and analysis.",
    )
    parser.add_argument("--version", action="version",
                        version=f"{settings.app_name} {settings.app_version}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMANDS:
        module.register(subparsers)
    return parser


def configure_logging(verbose: bool = False) -> None:
    settings = get_settings()
    level = logging.DEBUG if verbose or settings.debug else getattr(logging, settings.log_level.upper(), logging.INFO)
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    try:
        return args.handler(args) or 0
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DecoderAssertionError as exc:
        logger.error(f"Decoder assertion failed: {exc}")
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except InvariantViolation as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ZeroDivisionError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except Exception as exc:
        logger.exception(f"Unhandled error: {exc}")
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    finally:
        run_logger = get_run_logger()
        if run_logger is not None:
            run_logger.close()


if __name__ == "__main__":
    sys.exit(main())
