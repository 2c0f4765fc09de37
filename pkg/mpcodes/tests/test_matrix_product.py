import numpy as np
import pytest

from errors import (
    DimensionError,
    EnumerationCapExceeded,
    FieldMismatchError,
    MatrixConditionError,
    NotNestedError,
)
from services.linear_code import min_distance_bruteforce
from services.matrix_product import (
    ScalarMatrix,
    ScalarMPC,
    distance_lower_bound,
    distance_nested_nsc,
    is_nonsingular_by_columns,
    mpc_encode,
    row_span_distances,
    split_blocks,
)
from services.reed_solomon import RSCode


@pytest.fixture
def gf8_mpc(gf8):
    c1 = RSCode(gf8, 3).as_linear_code()
    c2 = RSCode(gf8, 1).as_linear_code()
    return ScalarMPC([c1, c2], ScalarMatrix(gf8, [[1, 1], [0, 1]]), name="gf8")


def test_nsc(gf8):
    assert is_nonsingular_by_columns(ScalarMatrix(gf8, [[1, 1], [0, 1]]))
    assert not is_nonsingular_by_columns(ScalarMatrix(gf8, [[1, 0], [0, 1]]))
    # Vandermonde rows over distinct nonzero points
    points = [gf8.alpha_pow(i) for i in range(3)]
    vandermonde = [[gf8.pow(x, r) for x in points] for r in range(3)]
    assert is_nonsingular_by_columns(ScalarMatrix(gf8, vandermonde))


def test_parameters(gf8_mpc):
    assert gf8_mpc.length == 14
    assert gf8_mpc.dimension == 4
    assert gf8_mpc.nested
    assert gf8_mpc.decodable


def test_rank_deficient_matrix(gf8):
    c1 = RSCode(gf8, 3).as_linear_code()
    with pytest.raises(MatrixConditionError):
        ScalarMPC([c1, c1], ScalarMatrix(gf8, [[1, 1], [1, 1]]))


def test_matrix_shape_checks(gf8, gf16):
    with pytest.raises(DimensionError):
        ScalarMatrix(gf8, [[1], [1]])
    with pytest.raises(DimensionError):
        ScalarMatrix(gf8, [[9, 1]])
    c16 = RSCode(gf16, 3).as_linear_code()
    with pytest.raises(FieldMismatchError):
        ScalarMPC([c16], ScalarMatrix(gf8, [[1, 1]]))


def test_encode_is_block_combination(gf8, gf8_mpc, rng):
    m1 = rng.integers(0, 8, size=3)
    m2 = rng.integers(0, 8, size=1)
    blocks = mpc_encode(gf8_mpc, [m1, m2])
    c1 = gf8_mpc.constituents[0].encode(m1)
    c2 = gf8_mpc.constituents[1].encode(m2)
    assert blocks[0].tolist() == c1.tolist()
    assert blocks[1].tolist() == gf8.vadd(c1, c2).tolist()
    flat = gf8_mpc.encode_flat(np.concatenate([m1, m2]))
    assert flat.tolist() == blocks.reshape(-1).tolist()


def test_encode_is_linear(gf8, gf8_mpc, rng):
    a = rng.integers(0, 8, size=4)
    b = rng.integers(0, 8, size=4)
    left = gf8_mpc.encode_flat(gf8.vadd(a, b))
    right = gf8.vadd(gf8_mpc.encode_flat(a), gf8_mpc.encode_flat(b))
    assert left.tolist() == right.tolist()


def test_message_length_checked(gf8_mpc):
    with pytest.raises(DimensionError):
        gf8_mpc.encode_flat([1, 2, 3])


def test_linear_code_view(gf8_mpc, rng):
    linear = gf8_mpc.to_linear_code()
    assert linear.dimension == 4
    for _ in range(5):
        assert linear.contains(gf8_mpc.random_codeword(rng).reshape(-1))


def test_distances(gf8, gf8_mpc):
    assert row_span_distances(gf8_mpc.matrix) == [2, 1]
    assert distance_lower_bound(gf8_mpc) == 7
    assert distance_nested_nsc(gf8_mpc) == 7
    assert min_distance_bruteforce(gf8_mpc.to_linear_code()) == 7


def test_distance_bound_honours_cap(gf8_mpc):
    # two rows over GF(8) span 64 vectors
    assert distance_lower_bound(gf8_mpc, cap=64) == 7
    with pytest.raises(EnumerationCapExceeded):
        distance_lower_bound(gf8_mpc, cap=32)


def test_not_nested(gf8):
    c1 = RSCode(gf8, 1).as_linear_code()
    c2 = RSCode(gf8, 3).as_linear_code()
    code = ScalarMPC([c1, c2], ScalarMatrix(gf8, [[1, 1], [0, 1]]))
    assert not code.nested
    assert not code.decodable
    with pytest.raises(NotNestedError):
        distance_nested_nsc(code)


def test_not_nsc(gf8):
    c1 = RSCode(gf8, 3).as_linear_code()
    c2 = RSCode(gf8, 1).as_linear_code()
    code = ScalarMPC([c1, c2], ScalarMatrix(gf8, [[1, 0], [0, 1]]))
    assert not code.decodable
    with pytest.raises(MatrixConditionError):
        distance_nested_nsc(code)


def test_split_blocks_length():
    with pytest.raises(DimensionError):
        split_blocks(np.zeros(13), 2, 7)
