"""
Code-spec file models.

A spec file describes a field, nested constituent codes and the matrix that
combines them. Entries are kept as text until the field is known.
"""

from pydantic import BaseModel, Field, field_validator
from typing import List, Optional
from enum import Enum


class ConstituentKind(str, Enum):
    RS = "rs"
    CYCLIC = "cyclic"


class DecoderChoice(str, Enum):
    GS = "gs"
    UNIQUE = "unique"


class FieldSpec(BaseModel):
    p: int = Field(..., ge=2)
    m: int = Field(..., ge=1)
    modulus: Optional[str] = Field(None, description="Monic modulus over GF(p), e.g. x^4 + x + 1")


class ConstituentSpec(BaseModel):
    kind: ConstituentKind
    line: int = Field(..., ge=1, description="Source line, for error messages")
    k: Optional[int] = Field(None, ge=1, description="Dimension of an RS constituent")
    first_root: int = Field(1, description="First exponent of the RS root window")
    gen: Optional[str] = Field(None, description="Generator polynomial of a cyclic constituent")
    length: Optional[int] = Field(None, ge=1, description="Length of a cyclic constituent")
    v: Optional[int] = Field(None, ge=1, description="Guruswami-Sudan multiplicity")
    tau: Optional[int] = Field(None, ge=0, description="Radius of a brute-force decoder")
    d: Optional[int] = Field(None, ge=1, description="Known minimum distance")
    decoder: Optional[DecoderChoice] = Field(
        None, description="Constituent decoder; default is GS for RS codes with k >= 2, else brute force"
    )

    @field_validator("gen")
    @classmethod
    def strip_gen(cls, v: Optional[str]) -> Optional[str]:
        return v.strip() if v is not None else v


class CodeSpecFile(BaseModel):
    """Parsed code-spec file."""
    name: str
    field: FieldSpec
    constituents: List[ConstituentSpec] = Field(..., min_length=1)
    rows: int = Field(..., ge=1)
    cols: int = Field(..., ge=1)
    entries: List[List[str]] = Field(..., description="Matrix entries as element or polynomial text")
    distance: Optional[int] = Field(None, ge=1, description="Declared minimum distance of the code")
    text_hash: Optional[str] = Field(None, description="SHA-256 of the source text")

    @property
    def polynomial(self) -> bool:
        """True when some matrix entry mentions x."""
        return any("x" in entry for row in self.entries for entry in row)
