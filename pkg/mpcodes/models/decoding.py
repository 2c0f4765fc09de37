"""
Decoder output models.

Codewords are stored as flat lists of encoded field values in block-major
order: block 1 (m entries), then block 2, and so on.
"""

from pydantic import BaseModel, Field
from typing import List, Optional


class StageTrace(BaseModel):
    """One elimination stage of one index tuple."""
    stage: int = Field(..., ge=1, description="j, the constituent decoder used")
    block: int = Field(..., ge=1, description="i_j, the block decoded (1-based)")
    pivot: str = Field(..., description="Pivot entry a_{j,i_j} of the working matrix")
    branches_in: int = Field(..., ge=0)
    list_sizes: List[int] = Field(default_factory=list, description="Output size per branch")
    decoded: List[List[int]] = Field(
        default_factory=list,
        description="Words returned by the constituent decoder, all branches in order",
    )

    @property
    def branches_out(self) -> int:
        return sum(self.list_sizes)


class TupleTrace(BaseModel):
    """Diagnostics for one ordered index tuple."""
    index_tuple: List[int] = Field(..., description="(i_1, ..., i_s), 1-based")
    stages: List[StageTrace] = Field(default_factory=list)
    branch_budget: int = Field(..., ge=1, description="Product of constituent list caps")
    peak_branches: int = 0
    abandoned: bool = False
    rejected_nonmember: int = Field(0, description="Solutions with some c_j outside C_j")
    rejected_distance: int = Field(0, description="Codewords farther than tau")
    accepted: int = 0


class DecodeOutput(BaseModel):
    """Deduplicated codewords within tau of the received word, in canonical order."""
    tau: int
    codewords: List[List[int]] = Field(default_factory=list)
    distances: List[int] = Field(default_factory=list)
    traces: List[TupleTrace] = Field(default_factory=list)
    first_hit: bool = False

    def __len__(self) -> int:
        return len(self.codewords)

    def contains(self, word) -> bool:
        target = [int(x) for x in word]
        return target in self.codewords

    def trace_for(self, index_tuple) -> Optional[TupleTrace]:
        wanted = list(index_tuple)
        for trace in self.traces:
            if trace.index_tuple == wanted:
                return trace
        return None


class UniqueDecodeResult(BaseModel):
    """Result of bounded-distance decoding up to half the minimum distance."""
    success: bool
    tau: int = Field(..., description="Radius actually used, floor((d-1)/2) or less")
    codeword: Optional[List[int]] = None
    distance: Optional[int] = None
    reason: Optional[str] = None
