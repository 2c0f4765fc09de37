"""
Golden values for the bundled reference codes.

Words are written as element tokens over GF(16) with modulus x^4 + x + 1,
one token per position, block 1 first.
"""

from typing import Dict, List, Tuple


def _sparse_block(m: int, terms: Dict[int, str]) -> List[str]:
    return [terms.get(i, "0") for i in range(m)]


# [30,14,12] code: nested RS [15,10,6] > [15,4,12] with A = [[1,1],[0,1]], v = 4.
NESTED_SPEC = "rs_nested_30_14"
NESTED_RECEIVED_BLOCKS = (
    _sparse_block(15, {1: "a^2", 5: "a", 6: "a^5", 13: "a^14"}),
    _sparse_block(15, {2: "a^5", 6: "a^7", 10: "a^8"}),
)
NESTED_RECEIVED = ",".join(NESTED_RECEIVED_BLOCKS[0] + NESTED_RECEIVED_BLOCKS[1])
NESTED_SENT_DISTANCE = 7

# Output of LDC_1 on block 1 along the branch that dead-ends at stage 2.
NESTED_STAGE1_WORD = ",".join(
    _sparse_block(15, {1: "a^2", 5: "a", 6: "a^5", 7: "a^14", 13: "a^10", 14: "a^5"})
)

# (m, k, v) -> tau
GS_TAUS: Dict[Tuple[int, int, int], int] = {
    (15, 10, 4): 3,
    (15, 4, 4): 7,
    (15, 8, 2): 4,
    (15, 5, 1): 5,
    (15, 5, 8): 7,
    (15, 13, 1): 1,
    (15, 8, 1): 3,
}

# (spec, multiplicity override) -> decoder radius tau
TAU_BOUNDS: List[Tuple[str, Tuple[int, ...], int]] = [
    ("rs_nested_30_14", (), 7),
    ("qc_30_8", (), 9),
    ("qc_30_5", (), 11),
    ("qc_30_5", (8,), 15),
    ("qc_30_21", (), 3),
    ("rs_nested_30_14_bm", (), 5),
]

# spec -> (d*, true distance)
UNIT_DISTANCES: Dict[str, Tuple[int, int]] = {
    "qc_30_8": (16, 19),
    "qc_30_5": (22, 24),
}
NESTED_DISTANCE = 12

# spec -> floor((bound - 1) / 2) for the distance bound min d_i D_i or d*
BOUND_UNIQUE_RADII: Dict[str, int] = {
    "rs_nested_30_14": 5,
    "qc_30_8": 7,
    "qc_30_5": 10,
}

# spec -> branch budget (product of constituent list caps)
BRANCH_BUDGETS: Dict[str, int] = {
    "rs_nested_30_14": 45,
    "rs_nested_30_14_bm": 1,
}

# Brute force is feasible only for the 16^5-codeword code.
BRUTE_FORCE_DISTANCES: Dict[str, int] = {"qc_30_5": 24}

# (m, l, s, tau, taus) -> fixed-set probability
GOOD_SET_PROBABILITY = ((15, 2, 2, 7, (3,)), "1/2")

# spec -> (weight, unique mode)
SIMULATIONS: List[Tuple[str, int, bool]] = [
    ("rs_nested_30_14", 7, False),
    ("qc_30_8", 9, True),
    ("qc_30_5", 11, True),
    ("qc_30_21", 3, True),
    ("rs_nested_30_14_bm", 5, True),
]
