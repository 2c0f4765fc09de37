"""
Helpers shared by the CLI commands: word parsing and printing, spec loading,
aligned key/value output and run-log recording.
"""

import argparse
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from errors import InvariantViolation, ParseError, WordParseError
from models.run_log import RunAction
from services.codespec import BuiltCode, load_and_build
from services.finite_field import Field
from services.mpc_list_decoder import DecoderSpec
from services.run_log import get_run_logger


def parse_word(field: Field, text: str) -> np.ndarray:
    """Comma-separated element tokens, e.g. `0, a^3, 1`."""
    tokens = [t.strip() for t in text.split(",")]
    if not tokens or any(not t for t in tokens):
        raise WordParseError(f"empty token in word {text!r}")
    try:
        return np.array([field.parse_value(t) for t in tokens], dtype=np.int64)
    except ParseError as e:
        raise WordParseError(str(e))


def format_word(field: Field, word: Iterable[int]) -> str:
    return ",".join(field.format_value(int(x)) for x in word)


def int_list(text: str) -> List[int]:
    """argparse type for `4,4` style lists."""
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def add_spec_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("spec", help="spec file path or bundled spec name")
    parser.add_argument(
        "--multiplicities", type=int_list, default=None,
        help="per-constituent Guruswami-Sudan multiplicities, e.g. 4,4",
    )


def load_spec(args: argparse.Namespace, tau: Optional[int] = None) -> BuiltCode:
    built = load_and_build(args.spec, multiplicities=args.multiplicities, tau=tau)
    record(RunAction.CODE_BUILT, built, metadata={"kind": built.kind})
    return built


def require_decoder(built: BuiltCode) -> DecoderSpec:
    if built.decoder is None:
        raise InvariantViolation(f"{built.name} is not decodable: constituents must be nested "
                                 "and the matrix must satisfy the column condition")
    return built.decoder


def emit(rows: Sequence[Tuple[str, Any]], kv: bool = False) -> None:
    """Print `key=value` lines, or an aligned two-column table."""
    if kv:
        for key, value in rows:
            print(f"{key}={value}")
        return
    width = max((len(key) for key, _ in rows), default=0)
    for key, value in rows:
        print(f"{key:<{width}}  {value}")


def record(action: RunAction, built: Optional[BuiltCode] = None, seed: Optional[int] = None,
           input_data: Any = None, output_data: Any = None,
           metadata: Optional[Dict[str, Any]] = None) -> None:
    run_logger = get_run_logger()
    if run_logger is None:
        return
    run_logger.log(
        action,
        spec_name=built.name if built else None,
        spec_hash=built.spec.text_hash if built else None,
        seed=seed,
        input_data=input_data,
        output_data=output_data,
        metadata=metadata,
    )
