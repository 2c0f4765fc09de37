"""Pydantic models for MPC Codes."""

from .codespec import CodeSpecFile, ConstituentKind, ConstituentSpec, FieldSpec
from .decoding import DecodeOutput, StageTrace, TupleTrace, UniqueDecodeResult
from .params import (
    BranchBudget,
    DistanceProvenance,
    DStarReport,
    GSParams,
    ProbEstimate,
    PropositionGap,
    RowSpanDistance,
    SimulationReport,
    WeightMode,
)
from .reference import CheckResult, ReferenceReport
from .run_log import RunAction, RunLogEntry

__all__ = [
    "CodeSpecFile",
    "ConstituentKind",
    "ConstituentSpec",
    "FieldSpec",
    "DecodeOutput",
    "StageTrace",
    "TupleTrace",
    "UniqueDecodeResult",
    "BranchBudget",
    "DistanceProvenance",
    "DStarReport",
    "GSParams",
    "ProbEstimate",
    "PropositionGap",
    "RowSpanDistance",
    "SimulationReport",
    "WeightMode",
    "CheckResult",
    "ReferenceReport",
    "RunAction",
    "RunLogEntry",
]
