import numpy as np
import pytest

from errors import InvariantViolation, MatrixConditionError, NonUnitError
from models.params import DistanceProvenance
from services.linear_code import BruteForceListDecoder, LinearCode, list_decode_bruteforce, min_distance_bruteforce
from services.matrix_product import ScalarMatrix, ScalarMPC
from services.mpc_list_decoder import DecoderSpec
from services.polynomial import Polynomial, RingElement, parse_polynomial
from services.reed_solomon import GSDecoder, RSCode, SyndromeDecoder
from services.simulation import random_error
from services.unit_mpc import (
    PolyMatrix,
    UnitMPC,
    d_star,
    is_cyclic,
    is_unit_by_columns,
    ring_determinant,
    row_module_distances,
    unit_list_decode,
    unit_mpc_encode,
)


def ring(field, m, text):
    return RingElement(m, parse_polynomial(field, text))


@pytest.fixture
def rs73(gf8):
    return RSCode(gf8, 3)


@pytest.fixture
def unit_code(gf8, rs73):
    matrix = PolyMatrix(gf8, 7, [[ring(gf8, 7, "1"), ring(gf8, 7, "x^2 + x + 1")]])
    return UnitMPC([rs73.as_linear_code()], matrix, name="gf8-unit")


@pytest.fixture
def unit_spec(unit_code, rs73):
    return DecoderSpec(unit_code, [GSDecoder(rs73, 1)])


def test_parameters(unit_code, unit_spec):
    assert unit_code.length == 14
    assert unit_code.dimension == 3
    assert unit_code.unit_by_columns
    assert unit_spec.tau == 5


def test_encode_multiplies_in_the_ring(gf8, unit_code, rng):
    message = rng.integers(0, 8, size=3)
    blocks = unit_mpc_encode(unit_code, [message])
    c = RingElement.from_vector(gf8, unit_code.constituents[0].encode(message))
    g = unit_code.matrix.entry(0, 1)
    assert blocks[0].tolist() == c.to_vector().tolist()
    assert blocks[1].tolist() == (c * g).to_vector().tolist()


def test_matches_brute_force_oracle(gf8, unit_spec, rng):
    code = unit_spec.code
    linear = code.to_linear_code()
    for trial in range(200):
        weight = trial % (unit_spec.tau + 1)
        sent = code.random_codeword(rng).reshape(-1)
        received = gf8.vadd(sent, random_error(gf8, code.length, weight, rng))
        output = unit_list_decode(unit_spec, received)
        expected = list_decode_bruteforce(linear, received, unit_spec.tau)
        assert output.codewords == [w.tolist() for w in expected]
        assert output.contains(sent)


@pytest.fixture
def two_stage_code(gf8, rs73):
    one = ring(gf8, 7, "1")
    zero = RingElement(7, Polynomial.zero(gf8))
    matrix = PolyMatrix(gf8, 7, [[one, ring(gf8, 7, "x^2 + x + 1")],
                                 [zero, ring(gf8, 7, "x^4 + x^2 + 1")]])
    return UnitMPC([rs73.as_linear_code(), RSCode(gf8, 1).as_linear_code()], matrix, name="gf8-unit-s2")


@pytest.mark.parametrize("second,tau", [("syndrome", 3), ("brute-force", 5)])
def test_two_stage_matches_brute_force_oracle(gf8, rs73, two_stage_code, rng, second, tau):
    rs71 = RSCode(gf8, 1)
    if second == "syndrome":
        last = SyndromeDecoder(rs71)
    else:
        last = BruteForceListDecoder(rs71.as_linear_code(), 5)
    spec = DecoderSpec(two_stage_code, [GSDecoder(rs73, 1), last])
    assert two_stage_code.unit_by_columns
    assert spec.tau == tau
    linear = two_stage_code.to_linear_code()
    assert linear.dimension == 4
    for trial in range(200):
        weight = trial % (tau + 1)
        sent = two_stage_code.random_codeword(rng).reshape(-1)
        received = gf8.vadd(sent, random_error(gf8, 14, weight, rng))
        output = unit_list_decode(spec, received)
        expected = list_decode_bruteforce(linear, received, tau)
        assert output.codewords == [w.tolist() for w in expected]
        assert output.contains(sent)


def test_row_module_distances(unit_code):
    exact = row_module_distances(unit_code.matrix)
    assert [(D.value, D.provenance) for D in exact] == [(2, DistanceProvenance.EXACT)]
    bounded = row_module_distances(unit_code.matrix, cap=10)
    assert [(D.value, D.provenance) for D in bounded] == [(2, DistanceProvenance.BOUND)]


def test_d_star(unit_code):
    report = d_star(unit_code, cap=10)
    assert report.d_star == 10
    assert report.constituent_distances == [5]
    assert not report.exact
    assert min_distance_bruteforce(unit_code.to_linear_code()) >= report.d_star


def test_non_unit_entry_rejected(gf8):
    with pytest.raises(NonUnitError):
        PolyMatrix(gf8, 7, [[ring(gf8, 7, "1"), ring(gf8, 7, "x + 1")]])


def test_unit_by_columns(gf8, rs73):
    one = ring(gf8, 7, "1")
    zero = RingElement(7, Polynomial.zero(gf8))
    good = PolyMatrix(gf8, 7, [[one, ring(gf8, 7, "x^2 + x + 1")], [zero, one]])
    assert is_unit_by_columns(good)
    bad = PolyMatrix(gf8, 7, [[one, one], [one, one]])
    assert not is_unit_by_columns(bad)
    assert ring_determinant(bad.minor(2, [0, 1])).is_zero
    constituents = [rs73.as_linear_code(), RSCode(gf8, 1).as_linear_code()]
    with pytest.raises(MatrixConditionError):
        UnitMPC(constituents, bad)
    assert UnitMPC(constituents, good).decodable


def test_constituents_must_be_cyclic(gf8):
    code = LinearCode(gf8, [[1, 0, 0, 0, 0, 0, 0]])
    assert not is_cyclic(code)
    matrix = PolyMatrix(gf8, 7, [[ring(gf8, 7, "1"), ring(gf8, 7, "x^2 + x + 1")]])
    with pytest.raises(InvariantViolation):
        UnitMPC([code], matrix)


def test_unit_decoder_rejects_scalar_codes(gf8):
    rs = RSCode(gf8, 3)
    scalar = ScalarMPC([rs.as_linear_code()], ScalarMatrix(gf8, [[1, 1]]))
    spec = DecoderSpec(scalar, [GSDecoder(rs, 1)])
    with pytest.raises(InvariantViolation):
        unit_list_decode(spec, np.zeros(14, dtype=np.int64))
