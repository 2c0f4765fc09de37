"""
Parameter and report models: Guruswami-Sudan parameters, probability
estimates, distance bounds and simulation summaries.
"""

from pydantic import BaseModel, Field, model_validator
from typing import List, Optional
from enum import Enum
import math


class GSParams(BaseModel):
    """Guruswami-Sudan parameters for an [m, k] Reed-Solomon code at multiplicity v."""
    m: int = Field(..., ge=2, description="Code length")
    k: int = Field(..., ge=2, description="Code dimension")
    v: int = Field(..., ge=1, description="Interpolation multiplicity")
    r: int = Field(..., ge=1, description="r_v: binom(r,2) <= m*binom(v+1,2)/(k-1) < binom(r+1,2)")
    l: int = Field(..., ge=0, description="l_v: (1, k-1)-weighted degree bound of Q")
    tau: int = Field(..., description="Decoding radius m - floor(l/v) - 1")
    list_cap: int = Field(..., ge=0, description="Bound floor(l/(k-1)) on the output list size")
    constraints: int = Field(..., description="Linear constraints m*binom(v+1,2)")
    unknowns: int = Field(..., description="Monomials x^a y^b with a + (k-1)b <= l")


class WeightMode(str, Enum):
    """How error weights are drawn for p_tau estimation."""
    PROPORTIONAL = "proportional"  # every pattern of weight <= tau equally likely
    UNIFORM = "uniform"            # weight uniform on 0..tau, then a uniform pattern


class ProbEstimate(BaseModel):
    """Monte-Carlo estimate of a probability."""
    estimate: float = Field(..., ge=0.0, le=1.0)
    trials: int = Field(..., ge=1)
    hits: int = Field(..., ge=0)
    seed: int
    std_error: float = Field(..., ge=0.0)
    weight_mode: WeightMode = WeightMode.PROPORTIONAL
    tau: Optional[int] = None

    @model_validator(mode="after")
    def check_consistency(self) -> "ProbEstimate":
        if self.hits > self.trials:
            raise ValueError("hits exceed trials")
        if not math.isclose(self.estimate, self.hits / self.trials):
            raise ValueError("estimate != hits / trials")
        expected = math.sqrt(self.estimate * (1 - self.estimate) / self.trials)
        if not math.isclose(self.std_error, expected, abs_tol=1e-12):
            raise ValueError("std_error inconsistent with estimate and trials")
        return self

    @classmethod
    def from_counts(cls, hits: int, trials: int, seed: int, **extra) -> "ProbEstimate":
        p = hits / trials
        return cls(
            estimate=p,
            trials=trials,
            hits=hits,
            seed=seed,
            std_error=math.sqrt(p * (1 - p) / trials),
            **extra,
        )


class DistanceProvenance(str, Enum):
    EXACT = "exact"
    BOUND = "bound via l-i+1"


class RowSpanDistance(BaseModel):
    """D_i for the span of the first i rows of the matrix."""
    i: int = Field(..., ge=1)
    value: int = Field(..., ge=0)
    provenance: DistanceProvenance = DistanceProvenance.EXACT


class DStarReport(BaseModel):
    """The bound min_i d_i * D_i with the provenance of every D_i."""
    d_star: int
    constituent_distances: List[int]
    row_span_distances: List[RowSpanDistance]

    @property
    def exact(self) -> bool:
        return all(d.provenance == DistanceProvenance.EXACT for d in self.row_span_distances)


class SimulationReport(BaseModel):
    """Outcome of a seeded channel simulation at a fixed error weight."""
    spec_name: str
    weight: int = Field(..., ge=0)
    trials: int = Field(..., ge=1)
    seed: int
    tau: int
    unique: bool = False
    member_hits: int = Field(..., ge=0, description="Trials whose output contains the sent word")
    exact_hits: int = Field(0, ge=0, description="Trials whose output is exactly {sent}")
    empty_outputs: int = Field(0, ge=0)
    max_list_size: int = Field(0, ge=0)
    elapsed_seconds: float = 0.0

    @property
    def member_rate(self) -> float:
        return self.member_hits / self.trials

    @property
    def exact_rate(self) -> float:
        return self.exact_hits / self.trials


class PropositionGap(BaseModel):
    """A configuration where the fixed-set formula and the exact count differ."""
    m: int
    l: int
    s: int
    tau: int
    taus: List[int]
    formula: str = Field(..., description="Fixed-set formula value as a reduced fraction")
    exact: str = Field(..., description="Composition count with every block capped")


class BranchBudget(BaseModel):
    """Work accounting for one decoder spec."""
    list_caps: List[int]
    tuples: int = Field(..., description="s! * binom(l, s)")
    per_tuple: int = Field(..., description="Product of the list caps")
    decoder_calls: int = Field(..., description="Complexity estimate with unit decoder cost")
