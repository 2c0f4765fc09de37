"""
Code-spec Service - parse code-spec files and build codes with decoders.

Format (one directive per line, `#` starts a comment):

    field p=2 m=4 [modulus=<poly over GF(p)>]
    constituent rs k=<k> [first_root=<b>] [v=<mult>] [tau=<radius>] [d=<dist>] [decoder=gs|unique]
    constituent cyclic gen=<poly> [m=<length>] [v=<mult>] [tau=<radius>] [d=<dist>] [decoder=gs|unique]
    matrix rows=<s> cols=<l>
    row <entry>, <entry>, ...
    distance d=<n>

Matrix entries are element tokens, or polynomials for a polynomial-unit code.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union
import hashlib
import logging
import re

from config import get_settings
from errors import CodeSpecParseError, InvariantViolation, MPCError
from models.codespec import CodeSpecFile, ConstituentKind, ConstituentSpec, DecoderChoice, FieldSpec
from services.finite_field import Field, field_new
from services.linear_code import BruteForceListDecoder, LinearCode, cyclic_code
from services.matrix_product import ScalarMatrix, ScalarMPC, distance_lower_bound, distance_nested_nsc
from services.mpc_list_decoder import DecoderSpec
from services.polynomial import RingElement, parse_polynomial
from services.reed_solomon import GSDecoder, RSCode, SyndromeDecoder, rs_code_from_generator
from services.unit_mpc import PolyMatrix, UnitMPC, d_star

logger = logging.getLogger(__name__)

_OPTION_SPLIT = re.compile(r"\s+(?=[A-Za-z_]+=)")


# ============================================================================
# Parsing
# ============================================================================

def _options(text: str, line_no: int) -> Dict[str, str]:
    out: Dict[str, str] = {}
    text = text.strip()
    if not text:
        return out
    for piece in _OPTION_SPLIT.split(text):
        if "=" not in piece:
            raise CodeSpecParseError(f"expected key=value, got {piece!r}", line_no)
        key, value = piece.split("=", 1)
        if key in out:
            raise CodeSpecParseError(f"duplicate option {key!r}", line_no)
        out[key.strip()] = value.strip()
    return out


def _int_option(opts: Dict[str, str], key: str, line_no: int, default=None) -> Optional[int]:
    if key not in opts:
        return default
    try:
        return int(opts[key])
    except ValueError:
        raise CodeSpecParseError(f"option {key} must be an integer, got {opts[key]!r}", line_no)


def _parse_constituent(rest: str, line_no: int) -> ConstituentSpec:
    parts = rest.split(None, 1)
    if not parts:
        raise CodeSpecParseError("constituent needs a kind (rs or cyclic)", line_no)
    kind_text = parts[0]
    opts = _options(parts[1] if len(parts) > 1 else "", line_no)
    known = {"k", "first_root", "gen", "m", "v", "tau", "d", "decoder"}
    unknown = set(opts) - known
    if unknown:
        raise CodeSpecParseError(f"unknown constituent options {sorted(unknown)}", line_no)

    if kind_text == "rs":
        if "k" not in opts:
            raise CodeSpecParseError("rs constituent needs k=", line_no)
        kind = ConstituentKind.RS
    elif kind_text == "cyclic":
        if "gen" not in opts:
            raise CodeSpecParseError("cyclic constituent needs gen=", line_no)
        kind = ConstituentKind.CYCLIC
    else:
        raise CodeSpecParseError(f"unknown constituent kind {kind_text!r}", line_no)

    try:
        return ConstituentSpec(
            kind=kind,
            line=line_no,
            k=_int_option(opts, "k", line_no),
            first_root=_int_option(opts, "first_root", line_no, 1),
            gen=opts.get("gen"),
            length=_int_option(opts, "m", line_no),
            v=_int_option(opts, "v", line_no),
            tau=_int_option(opts, "tau", line_no),
            d=_int_option(opts, "d", line_no),
            decoder=opts.get("decoder"),
        )
    except ValueError as e:
        if isinstance(e, MPCError):
            raise
        raise CodeSpecParseError(str(e), line_no)


def parse_code_spec(text: str, name: str = "code") -> CodeSpecFile:
    """Parse spec text; raises CodeSpecParseError with the offending line."""
    field_spec: Optional[FieldSpec] = None
    constituents: List[ConstituentSpec] = []
    shape: Optional[tuple] = None
    rows: List[List[str]] = []
    distance: Optional[int] = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        if keyword == "field":
            if field_spec is not None:
                raise CodeSpecParseError("duplicate field line", line_no)
            opts = _options(rest, line_no)
            p = _int_option(opts, "p", line_no)
            m = _int_option(opts, "m", line_no)
            if p is None or m is None:
                raise CodeSpecParseError("field needs p= and m=", line_no)
            try:
                field_spec = FieldSpec(p=p, m=m, modulus=opts.get("modulus"))
            except ValueError as e:
                raise CodeSpecParseError(str(e), line_no)
        elif keyword == "constituent":
            constituents.append(_parse_constituent(rest, line_no))
        elif keyword == "matrix":
            opts = _options(rest, line_no)
            s = _int_option(opts, "rows", line_no)
            l = _int_option(opts, "cols", line_no)
            if not s or not l:
                raise CodeSpecParseError("matrix needs rows= and cols=", line_no)
            shape = (s, l)
        elif keyword == "row":
            if shape is None:
                raise CodeSpecParseError("row before matrix", line_no)
            entries = [e.strip() for e in rest.split(",")]
            if len(entries) != shape[1] or any(not e for e in entries):
                raise CodeSpecParseError(f"row needs {shape[1]} non-empty entries", line_no)
            rows.append(entries)
        elif keyword == "distance":
            distance = _int_option(_options(rest, line_no), "d", line_no)
        else:
            raise CodeSpecParseError(f"unknown directive {keyword!r}", line_no)

    if field_spec is None:
        raise CodeSpecParseError("missing field line")
    if not constituents:
        raise CodeSpecParseError("no constituent lines")
    if shape is None:
        raise CodeSpecParseError("missing matrix line")
    if len(rows) != shape[0]:
        raise CodeSpecParseError(f"matrix declares {shape[0]} rows, found {len(rows)}")

    return CodeSpecFile(
        name=name,
        field=field_spec,
        constituents=constituents,
        rows=shape[0],
        cols=shape[1],
        entries=rows,
        distance=distance,
        text_hash=hashlib.sha256(text.encode()).hexdigest(),
    )


def resolve_spec_path(name_or_path: Union[str, Path]) -> Path:
    """A file path, or the name of a bundled spec (with or without `.spec`)."""
    path = Path(name_or_path)
    if path.exists():
        return path
    bundled = Path(get_settings().specs_dir) / path.name
    for candidate in (bundled, bundled.with_suffix(".spec")):
        if candidate.exists():
            return candidate
    raise CodeSpecParseError(f"no spec file or bundled spec named {str(name_or_path)!r}")


def load_code_spec(name_or_path: Union[str, Path]) -> CodeSpecFile:
    path = resolve_spec_path(name_or_path)
    return parse_code_spec(path.read_text(), name=path.stem)


def bundled_specs() -> List[str]:
    return sorted(p.stem for p in Path(get_settings().specs_dir).glob("*.spec"))


# ============================================================================
# Building
# ============================================================================

@dataclass
class BuiltConstituent:
    code: LinearCode
    decoder: object
    rs: Optional[RSCode] = None


@dataclass
class BuiltCode:
    """A constructed code, its decoder spec and what is known about its distance."""
    spec: CodeSpecFile
    field: Field
    code: Union[ScalarMPC, UnitMPC]
    constituents: List[BuiltConstituent]
    decoder: Optional[DecoderSpec]

    @property
    def kind(self) -> str:
        return "unit" if isinstance(self.code, UnitMPC) else "scalar"

    @property
    def name(self) -> str:
        return self.spec.name

    def true_distance(self) -> Optional[int]:
        """Declared distance, else the exact nested/NSC formula when it applies."""
        if self.spec.distance is not None:
            return self.spec.distance
        if isinstance(self.code, ScalarMPC) and self.code.decodable:
            return distance_nested_nsc(self.code)
        return None

    def distance_bound(self) -> int:
        """min_i d_i * D_i for a scalar matrix, d* for a polynomial-unit one."""
        if isinstance(self.code, UnitMPC):
            return d_star(self.code).d_star
        return distance_lower_bound(self.code)

    def bound_unique_radius(self) -> int:
        """floor((bound - 1) / 2): unique decoding against the distance bound alone."""
        return (self.distance_bound() - 1) // 2


def _build_field(spec: FieldSpec) -> Field:
    if spec.modulus is None:
        return field_new(spec.p, spec.m)
    prime = field_new(spec.p, 1)
    try:
        poly = parse_polynomial(prime, spec.modulus)
    except MPCError as e:
        raise CodeSpecParseError(f"bad modulus: {e}")
    # coefficients of the prime field encode as themselves
    return field_new(spec.p, spec.m, list(poly.coeffs))


def _make_decoder(code: LinearCode, rs: Optional[RSCode], c: ConstituentSpec,
                  v_override: Optional[int]):
    v = v_override or c.v
    if c.decoder == DecoderChoice.UNIQUE:
        if c.tau is not None:
            raise InvariantViolation(f"line {c.line}: decoder=unique fixes tau; drop tau=")
        if rs is not None:
            return SyndromeDecoder(rs)
        if code.distance is None:
            raise InvariantViolation(f"line {c.line}: decoder=unique needs d= for a non-RS code")
        return BruteForceListDecoder(code, (code.distance - 1) // 2)
    if c.decoder == DecoderChoice.GS:
        if rs is None or rs.k < 2:
            raise InvariantViolation(f"line {c.line}: decoder=gs needs an RS constituent with k >= 2")
        return GSDecoder(rs, v or 1)
    if rs is not None and rs.k >= 2 and c.tau is None:
        return GSDecoder(rs, v or 1)
    tau = c.tau
    if tau is None:
        if code.distance is None:
            raise InvariantViolation(
                f"line {c.line}: a brute-force decoder needs tau= or d="
            )
        tau = (code.distance - 1) // 2
    return BruteForceListDecoder(code, tau)


def _build_constituent(field: Field, c: ConstituentSpec, v_override: Optional[int]) -> BuiltConstituent:
    if c.kind == ConstituentKind.RS:
        rs = RSCode(field, c.k, first_root=c.first_root)
        code = rs.as_linear_code()
        if c.d is not None and c.d != rs.distance:
            raise InvariantViolation(f"line {c.line}: RS distance is {rs.distance}, not {c.d}")
    else:
        try:
            f = parse_polynomial(field, c.gen)
        except MPCError as e:
            raise CodeSpecParseError(str(e), c.line)
        length = c.length or field.q - 1
        rs = rs_code_from_generator(f) if length == field.q - 1 else None
        distance = c.d if c.d is not None else (rs.distance if rs else None)
        code = cyclic_code(f, length, distance=distance)
    return BuiltConstituent(code=code, decoder=_make_decoder(code, rs, c, v_override), rs=rs)


def build_code(spec: CodeSpecFile, multiplicities: Optional[Sequence[int]] = None,
               tau: Optional[int] = None) -> BuiltCode:
    """
    Construct the code described by `spec`.

    Args:
        multiplicities: per-constituent GS multiplicities overriding v=
        tau: decoding radius overriding the computed bound
    """
    field = _build_field(spec.field)
    if multiplicities is not None and len(multiplicities) != len(spec.constituents):
        raise InvariantViolation(
            f"{len(multiplicities)} multiplicities for {len(spec.constituents)} constituents"
        )
    built = [
        _build_constituent(field, c, multiplicities[j] if multiplicities else None)
        for j, c in enumerate(spec.constituents)
    ]
    codes = [b.code for b in built]

    if spec.polynomial:
        m = codes[0].length
        try:
            entries = [[RingElement(m, parse_polynomial(field, e)) for e in row] for row in spec.entries]
        except MPCError as e:
            raise CodeSpecParseError(f"matrix entry: {e}")
        code = UnitMPC(codes, PolyMatrix(field, m, entries), name=spec.name)
    else:
        entries = [[field.parse_value(e) for e in row] for row in spec.entries]
        code = ScalarMPC(codes, ScalarMatrix(field, entries), name=spec.name)

    decoder = None
    if code.decodable:
        decoder = DecoderSpec(code, [b.decoder for b in built], tau=tau)
    else:
        logger.warning(f"{spec.name}: not decodable (nested={code.nested})")
    return BuiltCode(spec=spec, field=field, code=code, constituents=built, decoder=decoder)


def load_and_build(name_or_path: Union[str, Path], multiplicities: Optional[Sequence[int]] = None,
                   tau: Optional[int] = None) -> BuiltCode:
    return build_code(load_code_spec(name_or_path), multiplicities=multiplicities, tau=tau)
