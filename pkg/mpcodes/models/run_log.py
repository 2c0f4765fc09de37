"""
Run log models.
Every CLI run that builds, encodes, decodes or simulates can be recorded for
reproducibility.
"""

from pydantic import BaseModel, Field
from typing import Optional, Dict, Any
from datetime import datetime, timezone
from enum import Enum
import hashlib
import json


class RunAction(str, Enum):
    """Types of recorded runs."""
    CODE_BUILT = "code_built"
    WORD_ENCODED = "word_encoded"
    WORD_DECODED = "word_decoded"
    SIMULATION_RUN = "simulation_run"
    ANALYSIS_RUN = "analysis_run"
    REFERENCE_CHECKED = "reference_checked"


class RunLogEntry(BaseModel):
    """
    A single run record.
    These are immutable and append-only.
    """
    id: str = Field(..., description="Unique entry ID")
    timestamp: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))

    action: RunAction
    spec_name: Optional[str] = Field(None, description="Code spec the run used")
    spec_hash: Optional[str] = Field(None, description="SHA-256 of the spec text")
    seed: Optional[int] = None

    # Hashes of inputs and outputs, so runs can be compared without storing words
    input_hash: Optional[str] = None
    output_hash: Optional[str] = None

    metadata: Dict[str, Any] = Field(default_factory=dict)

    @staticmethod
    def compute_hash(data: Any) -> str:
        """SHA-256 of a string, or of the sorted JSON form of anything else."""
        if isinstance(data, str):
            content = data
        else:
            content = json.dumps(data, sort_keys=True, default=str)
        return hashlib.sha256(content.encode()).hexdigest()
