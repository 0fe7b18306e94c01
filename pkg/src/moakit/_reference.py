"""Frozen reference values for the shipped fixtures.

Everything here is stated, never computed, so the module stays an
independent record.  The self-test re-derives each value from the raw
fixture bytes; a mismatch means a toolkit bug, not a data problem.
"""

from __future__ import annotations

# GF(4) = GF(2)[x] / (1 + x + x^2), labels 0, 1, 2 = x, 3 = x + 1
GF4_MODULUS = (1, 1, 1)
GF4_TRACE_TABLE = (0, 0, 1, 1)
GF4_POLY_GRAM = ((0, 1), (1, 1))
# {x, x^2} with x^2 = x + 1: the unique self-dual basis up to order
GF4_SELF_DUAL_LABELS = (2, 3)

# GF(8) = GF(2)[x] / (1 + x + x^3)
GF8_MODULUS = (1, 1, 0, 1)

# [10, 4] binary code of type [2][2][2][2][1][1] (fixture code10_4.code)
CODE10_4 = {
    "n": 10,
    "k": 4,
    "type_string": "[2][2][2][2][1][1]",
    "distance": 4,
    "dual_distance": 3,
    "is_mds": True,
    "bound_rhs": 6,
}

# a parity-check matrix for the same code; the computed dual's row space
# must equal the span of these rows
CODE10_4_PARITY_ROWS = (
    (1, 0, 1, 1, 1, 0, 0, 0, 0, 0),
    (0, 1, 0, 1, 0, 1, 0, 0, 0, 0),
    (0, 1, 1, 1, 0, 0, 1, 0, 0, 0),
    (1, 1, 0, 1, 0, 0, 0, 1, 0, 0),
    (0, 1, 1, 0, 0, 0, 0, 0, 1, 0),
    (1, 0, 0, 1, 0, 0, 0, 0, 0, 1),
)

# full analysis of every shipped array at its exact strength;
# bounds = (lower, M, upper, loose) in the Singleton sandwich
ARRAY_EXPECTED = {
    "moa8_5_t2.moa": {
        "max_strength": 2,
        "lambda_min": 1,
        "d_H": 3,
        "bounds": (8, 8, 8, 16),
        "defect": 0,
        "is_mds": True,
        "is_almost_mds": False,
        "is_irredundant": True,
        "linear": True,
        "extremal_applies": True,
        "parameters": "IrMOA(8, 5, (2^2, 2, 2, 2, 2), 2)",
    },
    "moa8_3_t2.moa": {
        "max_strength": 2,
        "lambda_min": 1,
        "d_H": 1,
        "bounds": (8, 8, 16, 16),
        "defect": 1,
        "is_mds": False,
        "is_almost_mds": True,
        "is_irredundant": False,
        "linear": True,
        "extremal_applies": False,
        "parameters": "MOA(8, 3, (2^2, 2, 2), 2)",
    },
    "moa16_3_t2.moa": {
        "max_strength": 3,
        "lambda_min": 1,
        "d_H": 1,
        "bounds": (16, 16, 16, 16),
        "defect": 0,
        "is_mds": True,
        "is_almost_mds": False,
        "is_irredundant": False,
        "linear": True,
        "extremal_applies": False,
        "parameters": "MOA(16, 3, (2^2, 2, 2), 3)",
    },
    "moa16_4_t3.moa": {
        "max_strength": 3,
        "lambda_min": 1,
        "d_H": 1,
        "bounds": (16, 16, 32, 32),
        "defect": 1,
        "is_mds": False,
        "is_almost_mds": True,
        "is_irredundant": False,
        "linear": True,
        "extremal_applies": False,
        "parameters": "MOA(16, 4, (2^2, 2, 2, 2), 3)",
    },
    "irmoa16_6_t2.moa": {
        "max_strength": 2,
        "lambda_min": 1,
        "d_H": 4,
        "bounds": (16, 16, 16, 64),
        "defect": 0,
        "is_mds": True,
        "is_almost_mds": False,
        "is_irredundant": True,
        "linear": True,
        "extremal_applies": False,
        "parameters": "IrMOA(16, 6, (2^2, 2^2, 2^2, 2^2, 2, 2), 2)",
    },
}

# the full product space drops to strength 2 with index 2 on every pair
MOA16_3_LAMBDA_AT_2 = 2

# pair-index classes of the irredundant array, keyed by degree pair:
# (number of pairs in the class, common index)
IRMOA_INDEX_CLASSES = {
    (2, 2): (6, 1),
    (2, 1): (8, 2),
    (1, 1): (1, 4),
}

# both clauses of the irredundancy construction on the [10, 4] code,
# evaluated under self-dual bases
IRREDUNDANCY_EXPECTED = {
    "d_primal": 4,
    "d_dual": 3,
    "t_primal": 2,
    "t_dual": 3,
    "primal_irredundant": True,
    "dual_irredundant": False,
    "both_irredundant": False,
    "primal_parameters": "IrMOA(16, 6, (2^2, 2^2, 2^2, 2^2, 2, 2), 2)",
    "dual_parameters": "MOA(64, 6, (2^2, 2^2, 2^2, 2^2, 2, 2), 3)",
}
