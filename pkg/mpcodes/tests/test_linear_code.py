import numpy as np
import pytest

from errors import DimensionError, EnumerationCapExceeded, InvariantViolation
from services.linear_code import (
    BruteForceListDecoder,
    LinearCode,
    all_codewords,
    constituent_distance,
    cyclic_code,
    is_subcode,
    list_decode_bruteforce,
    min_distance_bruteforce,
)
from services.polynomial import Polynomial, parse_polynomial
from services.reed_solomon import RSCode


@pytest.fixture
def rs73(gf8):
    return RSCode(gf8, 3).as_linear_code()


def test_encode_and_contains(rs73, rng):
    for _ in range(10):
        word = rs73.random_codeword(rng)
        assert rs73.contains(word)
    word = rs73.random_codeword(rng)
    word[0] ^= 1
    assert not rs73.contains(word)


def test_wrong_lengths(rs73):
    with pytest.raises(DimensionError):
        rs73.encode([1, 2])
    with pytest.raises(DimensionError):
        rs73.contains(np.zeros(6, dtype=np.int64))


def test_rank_deficient_generator(gf8):
    with pytest.raises(InvariantViolation):
        LinearCode(gf8, [[1, 2, 3], [1, 2, 3]])


def test_cyclic_code_from_generator(gf16):
    f = parse_polynomial(gf16, "x^7 + a^6*x^6 + a^13*x^5 + a^12*x^4 + a*x^3 + a^10*x^2 + a^11*x + a^13")
    code = cyclic_code(f, 15)
    assert code.dimension == 8
    for row in code.generator:
        assert code.contains(np.roll(row, 1))


def test_cyclic_code_needs_divisor(gf16):
    with pytest.raises(InvariantViolation):
        cyclic_code(parse_polynomial(gf16, "x^2 + a"), 15)


def test_min_distance_bruteforce(rs73):
    assert min_distance_bruteforce(rs73) == 5
    assert min_distance_bruteforce(rs73, workers=3) == 5


def test_enumeration_cap(rs73):
    with pytest.raises(EnumerationCapExceeded):
        min_distance_bruteforce(rs73, cap=100)
    with pytest.raises(EnumerationCapExceeded):
        all_codewords(rs73, cap=100)


def test_constituent_distance_uses_known_value(gf8):
    code = RSCode(gf8, 2).as_linear_code()
    assert constituent_distance(code) == 6
    unknown = LinearCode(gf8, code.generator)
    assert constituent_distance(unknown) == 6


def test_nested_rs_codes(gf8):
    big = RSCode(gf8, 3).as_linear_code()
    small = RSCode(gf8, 1).as_linear_code()
    assert is_subcode(small, big)
    assert not is_subcode(big, small)


def test_list_decode_bruteforce_finds_sent_word(rs73, rng):
    sent = rs73.random_codeword(rng)
    received = sent.copy()
    received[[1, 4]] = rs73.field.vadd(received[[1, 4]], [3, 5])
    found = list_decode_bruteforce(rs73, received, 2)
    assert [w.tolist() for w in found] == [sent.tolist()]


def test_brute_force_decoder(gf8, rng):
    code = RSCode(gf8, 1).as_linear_code()
    decoder = BruteForceListDecoder(code, tau=5)
    assert decoder.list_cap == 8
    sent = code.random_codeword(rng)
    received = sent.copy()
    received[:5] = gf8.vadd(received[:5], 1)
    assert any(np.array_equal(w, sent) for w in decoder.decode(received))
    assert all(np.count_nonzero(w != received) <= 5 for w in decoder.decode(received))


def test_zero_polynomial_generator_rejected(gf8):
    with pytest.raises(InvariantViolation):
        cyclic_code(Polynomial.zero(gf8), 7)


def test_brute_force_decoder_within_half_distance(gf8):
    code = RSCode(gf8, 1).as_linear_code()
    assert BruteForceListDecoder(code, tau=3).list_cap == 1
    assert BruteForceListDecoder(code, tau=4).list_cap == 8


def test_repr(gf8, gf16):
    assert repr(LinearCode(gf8, [[1, 1, 0], [0, 1, 1]])) == "LinearCode[3,2]"
    f = parse_polynomial(gf16, "x^7 + a^6*x^6 + a^13*x^5 + a^12*x^4 + a*x^3 + a^10*x^2 + a^11*x + a^13")
    assert repr(cyclic_code(f, 15, distance=8)) == "cyclic[15,8,8]"
    assert repr(RSCode(gf8, 3).as_linear_code()) == "RS(b=1)[7,3,5]"
