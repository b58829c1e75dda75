"""Basis-blade arithmetic for the real Clifford algebra Cl(0,7).

A basis blade is a product of distinct anticommuting generators e1..e7,
each squaring to -1.  Blades are encoded as 7-bit masks: bit i-1 set
means generator ei is a factor, so masks run 0..127 and mask 0 is the
scalar blade 1.  The grade of a blade is the popcount of its mask.

Products of blades are computed once at import time into a 128 x 128
sign table; the product mask is always the XOR of the factor masks.
"""

from __future__ import annotations

DIM = 7
N_BLADES = 1 << DIM  # 128
PSEUDOSCALAR = N_BLADES - 1  # e1^e2^...^e7


def grade(mask: int) -> int:
    """Number of generators in the blade."""
    return mask.bit_count()


def generators(mask: int) -> tuple[int, ...]:
    """Generator indices of a blade in ascending order (1-based)."""
    return tuple(i + 1 for i in range(DIM) if mask >> i & 1)


def mask_of(indices) -> int:
    """Mask of a blade given distinct 1-based generator indices."""
    m = 0
    for i in indices:
        if not 1 <= i <= DIM:
            raise ValueError(f"generator index out of range: {i}")
        bit = 1 << (i - 1)
        if m & bit:
            raise ValueError(f"repeated generator index: {i}")
        m |= bit
    return m


def _mul_sign(a: int, b: int) -> int:
    # Reordering sign: each generator of b moves past every generator of a
    # with a larger index; then each coinciding pair contracts with e_i^2 = -1.
    swaps = 0
    for j in range(DIM):
        if b >> j & 1:
            swaps += (a >> (j + 1)).bit_count()
    swaps += (a & b).bit_count()
    return -1 if swaps & 1 else 1


SIGN: list[list[int]] = [[_mul_sign(a, b) for b in range(N_BLADES)] for a in range(N_BLADES)]

GRADE: list[int] = [grade(m) for m in range(N_BLADES)]

# Signs of the three grade involutions, per blade.
REVERSION_SIGN: list[int] = [-1 if GRADE[m] // 2 & 1 else 1 for m in range(N_BLADES)]
INVOLUTION_SIGN: list[int] = [-1 if GRADE[m] & 1 else 1 for m in range(N_BLADES)]
CONJUGATION_SIGN: list[int] = [
    REVERSION_SIGN[m] * INVOLUTION_SIGN[m] for m in range(N_BLADES)
]


def blade_mul(a: int, b: int) -> tuple[int, int]:
    """Product of two basis blades as (sign, mask)."""
    return SIGN[a][b], a ^ b


def blade_square_sign(mask: int) -> int:
    """Sign s with blade * blade == s (always a scalar)."""
    return SIGN[mask][mask]
