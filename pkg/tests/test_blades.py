"""Bit-mask blade arithmetic against a brute-force reordering oracle."""

import random

from cl07.blades import (
    GRADE,
    N_BLADES,
    PSEUDOSCALAR,
    SIGN,
    blade_mul,
    blade_square_sign,
    generators,
    grade,
    mask_of,
)


def brute_mul(a: int, b: int) -> tuple[int, int]:
    """Multiply two basis blades by explicit adjacent transpositions.

    Concatenate the generator sequences, bubble-sort counting swaps, then
    cancel equal adjacent pairs with each square contributing -1.
    """
    seq = list(generators(a)) + list(generators(b))
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(seq) - 1):
            if seq[i] > seq[i + 1]:
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                sign = -sign
                changed = True
    out: list[int] = []
    for g in seq:
        if out and out[-1] == g:
            out.pop()
            sign = -sign
        else:
            out.append(g)
    return sign, mask_of(out)


def test_sign_table_matches_brute_force():
    for a in range(N_BLADES):
        for b in range(N_BLADES):
            s, m = blade_mul(a, b)
            bs, bm = brute_mul(a, b)
            assert (s, m) == (bs, bm), (a, b)


def test_grades():
    assert grade(0) == 0
    assert grade(PSEUDOSCALAR) == 7
    assert GRADE[0b0010110] == 3
    for m in range(N_BLADES):
        assert GRADE[m] == bin(m).count("1")


def test_generator_squares_are_minus_one():
    for i in range(7):
        m = 1 << i
        assert SIGN[m][m] == -1
        assert blade_mul(m, m) == (-1, 0)


def test_square_signs():
    for m in range(N_BLADES):
        assert blade_square_sign(m) == SIGN[m][m]
    # the top blade squares to +1 in this signature
    assert blade_square_sign(PSEUDOSCALAR) == 1


def test_blade_associativity_sample():
    rng = random.Random(99)
    for _ in range(3000):
        a = rng.randrange(N_BLADES)
        b = rng.randrange(N_BLADES)
        c = rng.randrange(N_BLADES)
        s1, m1 = blade_mul(a, b)
        s1b, m1b = blade_mul(m1, c)
        s2, m2 = blade_mul(b, c)
        s2b, m2b = blade_mul(a, m2)
        assert (s1 * s1b, m1b) == (s2 * s2b, m2b)


def test_mask_of_and_generators_inverse():
    for m in range(N_BLADES):
        assert mask_of(generators(m)) == m
