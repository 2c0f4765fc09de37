"""
Reference-check result models.
"""

from pydantic import BaseModel, Field
from typing import List


class CheckResult(BaseModel):
    """Outcome of one golden comparison."""
    name: str
    passed: bool
    expected: str
    actual: str
    elapsed_seconds: float = 0.0


class ReferenceReport(BaseModel):
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]
