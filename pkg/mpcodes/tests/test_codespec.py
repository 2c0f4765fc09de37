import pytest

from errors import CodeSpecParseError, InvariantViolation, NonUnitError, ParseError
from services.codespec import (
    build_code,
    bundled_specs,
    load_and_build,
    load_code_spec,
    parse_code_spec,
    resolve_spec_path,
)
from services.linear_code import BruteForceListDecoder
from services.reed_solomon import GSDecoder, SyndromeDecoder

GF8_NESTED = """
# comment line
field p=2 m=3
constituent rs k=3 v=1
constituent rs k=1 tau=5   # trailing comment
matrix rows=2 cols=2
row 1, 1
row 0, 1
"""


def test_parse():
    spec = parse_code_spec(GF8_NESTED, name="desk")
    assert spec.name == "desk"
    assert (spec.field.p, spec.field.m, spec.field.modulus) == (2, 3, None)
    assert [c.k for c in spec.constituents] == [3, 1]
    assert spec.constituents[1].tau == 5
    assert spec.constituents[1].line == 5
    assert spec.entries == [["1", "1"], ["0", "1"]]
    assert not spec.polynomial
    assert len(spec.text_hash) == 64


@pytest.mark.parametrize(
    "text,line",
    [
        ("field p=2\nconstituent rs k=3\nmatrix rows=1 cols=1\nrow 1", 1),
        ("field p=2 m=3\nconstituent bch k=3\nmatrix rows=1 cols=1\nrow 1", 2),
        ("field p=2 m=3\nconstituent rs v=1\nmatrix rows=1 cols=1\nrow 1", 2),
        ("field p=2 m=3\nconstituent rs k=3 speed=9\nmatrix rows=1 cols=1\nrow 1", 2),
        ("field p=2 m=3\nconstituent rs k=three\nmatrix rows=1 cols=1\nrow 1", 2),
        ("field p=2 m=3\nconstituent rs k=3\nrow 1\nmatrix rows=1 cols=1", 3),
        ("field p=2 m=3\nconstituent rs k=3\nmatrix rows=1 cols=2\nrow 1", 4),
        ("field p=2 m=3\nconstituent rs k=3\nmatrix rows=1 cols=1\nrow 1\nbogus", 5),
        ("field p=2 m=3\nfield p=2 m=3", 2),
        ("field p=2 m=3\nconstituent rs k=3 decoder=fast\nmatrix rows=1 cols=1\nrow 1", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(CodeSpecParseError) as info:
        parse_code_spec(text)
    assert info.value.line_number == line
    assert str(info.value).startswith(f"line {line}:")


@pytest.mark.parametrize(
    "text",
    [
        "constituent rs k=3\nmatrix rows=1 cols=1\nrow 1",
        "field p=2 m=3\nmatrix rows=1 cols=1\nrow 1",
        "field p=2 m=3\nconstituent rs k=3",
        "field p=2 m=3\nconstituent rs k=3\nmatrix rows=2 cols=2\nrow 1, 1",
    ],
)
def test_parse_errors_without_line(text):
    with pytest.raises(CodeSpecParseError):
        parse_code_spec(text)


def test_bundled_specs():
    names = bundled_specs()
    for name in ("rs_nested_30_14", "rs_nested_30_14_bm", "qc_30_8", "qc_30_5", "qc_30_21",
                 "gf8_nested_rs", "gf8_unit_s1"):
        assert name in names
    assert resolve_spec_path("qc_30_5").name == "qc_30_5.spec"
    assert resolve_spec_path("qc_30_5.spec").name == "qc_30_5.spec"
    with pytest.raises(CodeSpecParseError):
        resolve_spec_path("no_such_code")


def test_spec_from_file(tmp_path):
    path = tmp_path / "desk.spec"
    path.write_text(GF8_NESTED)
    assert load_code_spec(path).name == "desk"
    built = load_and_build(str(path))
    assert built.kind == "scalar"
    assert built.decoder.tau == 5


def test_build_scalar(nested_gf8):
    assert nested_gf8.kind == "scalar"
    assert nested_gf8.name == "gf8_nested_rs"
    assert isinstance(nested_gf8.constituents[0].decoder, GSDecoder)
    assert isinstance(nested_gf8.constituents[1].decoder, BruteForceListDecoder)
    assert nested_gf8.true_distance() == 7


def test_build_unit(unit_gf8):
    assert unit_gf8.kind == "unit"
    assert unit_gf8.code.length == 14
    assert unit_gf8.decoder.tau == 5
    assert unit_gf8.true_distance() is None


@pytest.mark.parametrize(
    "name,multiplicities,tau",
    [("rs_nested_30_14", None, 7), ("qc_30_8", None, 9), ("qc_30_5", None, 11),
     ("qc_30_5", [8], 15), ("qc_30_21", None, 3), ("rs_nested_30_14_bm", None, 5)],
)
def test_reference_radii(name, multiplicities, tau):
    built = load_and_build(name, multiplicities=multiplicities)
    assert built.decoder.tau == tau
    assert built.code.length == 30


def test_reference_kinds_and_distances():
    assert load_and_build("rs_nested_30_14").true_distance() == 12
    assert load_and_build("qc_30_21").kind == "unit"
    assert load_and_build("qc_30_8").true_distance() == 19


def test_multiplicity_count_checked():
    with pytest.raises(InvariantViolation):
        load_and_build("qc_30_5", multiplicities=[1, 2])


def test_tau_override():
    assert load_and_build("gf8_nested_rs", tau=3).decoder.tau == 3


def test_build_errors():
    rs_wrong_d = "field p=2 m=3\nconstituent rs k=3 d=4\nmatrix rows=1 cols=2\nrow 1, 1"
    with pytest.raises(InvariantViolation):
        build_code(parse_code_spec(rs_wrong_d))
    non_unit = "field p=2 m=3\nconstituent rs k=3\nmatrix rows=1 cols=2\nrow 1, x + 1"
    with pytest.raises(NonUnitError):
        build_code(parse_code_spec(non_unit))
    bad_entry = "field p=2 m=3\nconstituent rs k=3\nmatrix rows=1 cols=2\nrow 1, b"
    with pytest.raises(ParseError):
        build_code(parse_code_spec(bad_entry))


def test_unique_constituent_decoder_shrinks_budget():
    text = GF8_NESTED.replace("constituent rs k=3 v=1", "constituent rs k=3 decoder=unique")
    built = build_code(parse_code_spec(text))
    assert isinstance(built.constituents[0].decoder, SyndromeDecoder)
    assert built.decoder.taus == [2, 5]
    assert built.decoder.branch_budget == 8
    assert load_and_build("gf8_nested_rs").decoder.branch_budget == 16

    both = build_code(parse_code_spec(
        text.replace("constituent rs k=1 tau=5", "constituent rs k=1 decoder=unique")
    ))
    assert both.decoder.taus == [2, 3]
    assert both.decoder.tau == 3
    assert both.decoder.branch_budget == 1


def test_reference_budgets():
    assert load_and_build("rs_nested_30_14").decoder.branch_budget == 45
    assert load_and_build("rs_nested_30_14_bm").decoder.branch_budget == 1


def test_decoder_option_errors():
    with_tau = "field p=2 m=3\nconstituent rs k=3 decoder=unique tau=2\nmatrix rows=1 cols=2\nrow 1, 1"
    with pytest.raises(InvariantViolation):
        build_code(parse_code_spec(with_tau))
    gs_on_k1 = "field p=2 m=3\nconstituent rs k=1 decoder=gs\nmatrix rows=1 cols=2\nrow 1, 1"
    with pytest.raises(InvariantViolation):
        build_code(parse_code_spec(gs_on_k1))


@pytest.mark.parametrize(
    "name,bound,radius",
    [("rs_nested_30_14", 12, 5), ("qc_30_8", 16, 7), ("qc_30_5", 22, 10), ("gf8_nested_rs", 7, 3)],
)
def test_bound_unique_radius(name, bound, radius):
    built = load_and_build(name)
    assert built.distance_bound() == bound
    assert built.bound_unique_radius() == radius
    assert built.decoder.tau > radius
