"""Products of octonions steered by Clifford elements.

A blade acts on an octonion by folding its generators through the
octonion product one at a time.  Four products arise:

    bullet_left(A, u):   ((A o u1) o u2) ... o uk      (u postmultiplies)
    bullet_right(u, A):  u1 o (u2 o ( ... (uk o A)))   (u premultiplies)
    odot_left(u, v):     u1 o (u2 o ( ... bullet_left(uk, v)))
    odot_right(u, v):    (( bullet_right(u, v1) o v2) ... ) o vk

Multivector arguments extend linearly over their blade terms.

A blade has no preferred factor order, so the read-out order is a real
convention.  FoldConvention fixes it: postmultiplying chains (the
bullet_left shape) read factors in left_order, premultiplying chains
(the bullet_right shape) in right_order, ascending by default.  The
read-out is naive: factors are taken in the chosen order with the
blade's stored coefficient, with no reordering sign.  The two orders
therefore give genuinely different products, not just signed variants.

On top of these sit the steered octonion products

    circ_u(u; A, B)    = (A * u) o (u^-1 * B)
    circ_1u(u; A, B)   = A o (u^-1 * B)
    circ_uv(u, v; A, B)= (A * u) o (v^-1 * B)
    circ_uC(u, C; A, B)= (A * u) o (C o B)

where each * is bullet when the neighbouring argument is a paravector
and odot when it is a general multivector; OdotVariant picks which odot
is used in that case.  A non-paravector first argument of circ_1u uses
bullet_right against the already-folded right factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .blades import GRADE, N_BLADES, generators
from .multivector import Multivector, Singular, grade_involution, inverse
from .octonion import Octonion, circ

ASCENDING = "ascending"
DESCENDING = "descending"

ODOT_LEFT = "left"
ODOT_RIGHT = "right"

E7_CORRECTED = "corrected"
E7_PRINTED = "printed"


class Degenerate(ArithmeticError):
    """Raised when a derived unit frame fails to span."""


@dataclass(frozen=True)
class FoldConvention:
    """Factor read-out orders for blade folds."""

    left_order: str = ASCENDING
    right_order: str = ASCENDING

    def __post_init__(self):
        for o in (self.left_order, self.right_order):
            if o not in (ASCENDING, DESCENDING):
                raise ValueError(f"unknown fold order: {o!r}")


DEFAULT_FOLD = FoldConvention()

_GENS = tuple(generators(m) for m in range(N_BLADES))
_UNIT = tuple(Octonion.unit(i) for i in range(8))


def _seq(mask: int, order: str) -> tuple[int, ...]:
    g = _GENS[mask]
    return g if order == ASCENDING else g[::-1]


def as_multivector(x) -> Multivector:
    if isinstance(x, Multivector):
        return x
    if isinstance(x, Octonion):
        return x.to_multivector()
    raise TypeError(f"expected a multivector or octonion, got {type(x).__name__}")


def as_octonion(x) -> Octonion:
    if isinstance(x, Octonion):
        return x
    return Octonion.from_multivector(as_multivector(x))


# -- blade folds -------------------------------------------------------


def bullet_left(A, u, fold: FoldConvention = DEFAULT_FOLD) -> Octonion:
    """A * u with u's blades postmultiplying A factor by factor."""
    A = as_octonion(A)
    u = as_multivector(u)
    acc = [0] * 8
    for mask, c in u.items():
        val = A
        for i in _seq(mask, fold.left_order):
            val = circ(val, _UNIT[i])
        for k, vk in enumerate(val.coeffs):
            if vk:
                acc[k] += c * vk
    return Octonion(acc)


def bullet_right(u, A, fold: FoldConvention = DEFAULT_FOLD) -> Octonion:
    """u * A with u's blades premultiplying A factor by factor."""
    A = as_octonion(A)
    u = as_multivector(u)
    acc = [0] * 8
    for mask, c in u.items():
        val = A
        for i in reversed(_seq(mask, fold.right_order)):
            val = circ(_UNIT[i], val)
        for k, vk in enumerate(val.coeffs):
            if vk:
                acc[k] += c * vk
    return Octonion(acc)


def chi_left(v, fold: FoldConvention = DEFAULT_FOLD) -> Octonion:
    """The octonion a blade collapses to when folded onto 1 from the left."""
    return bullet_left(_UNIT[0], v, fold)


def chi_right(u, fold: FoldConvention = DEFAULT_FOLD) -> Octonion:
    """The octonion a blade collapses to when folded onto 1 from the right."""
    return bullet_right(u, _UNIT[0], fold)


def odot_left(u, v, fold: FoldConvention = DEFAULT_FOLD) -> Octonion:
    """u (.) v seeded on the left: u's factors premultiply bullet_left(uk, v)."""
    u = as_multivector(u)
    v = as_multivector(v)
    acc = [0] * 8
    for mask, c in u.items():
        if mask == 0:
            val = chi_left(v, fold)
        else:
            seq = _seq(mask, fold.right_order)
            val = bullet_left(_UNIT[seq[-1]], v, fold)
            for i in reversed(seq[:-1]):
                val = circ(_UNIT[i], val)
        for k, vk in enumerate(val.coeffs):
            if vk:
                acc[k] += c * vk
    return Octonion(acc)


def odot_right(u, v, fold: FoldConvention = DEFAULT_FOLD) -> Octonion:
    """u (.) v seeded on the right: v's factors postmultiply bullet_right(u, v1)."""
    u = as_multivector(u)
    v = as_multivector(v)
    acc = [0] * 8
    for mask, c in v.items():
        if mask == 0:
            val = chi_right(u, fold)
        else:
            seq = _seq(mask, fold.left_order)
            val = bullet_right(u, _UNIT[seq[0]], fold)
            for i in seq[1:]:
                val = circ(val, _UNIT[i])
        for k, vk in enumerate(val.coeffs):
            if vk:
                acc[k] += c * vk
    return Octonion(acc)


def odot(u, v, variant: str = ODOT_LEFT, fold: FoldConvention = DEFAULT_FOLD) -> Octonion:
    if variant == ODOT_LEFT:
        return odot_left(u, v, fold)
    if variant == ODOT_RIGHT:
        return odot_right(u, v, fold)
    raise ValueError(f"unknown odot variant: {variant!r}")


# -- steered products --------------------------------------------------


def _left_factor(A, u, fold, variant) -> Octonion:
    # The (A * u) slot: bullet for paravector A, odot otherwise.
    Am = as_multivector(A)
    if Am.is_paravector():
        return bullet_left(Am, u, fold)
    return odot(Am, u, variant, fold)


def _right_factor(w: Multivector, B, fold, variant) -> Octonion:
    # The (w * B) slot with w already inverted: bullet for paravector B.
    Bm = as_multivector(B)
    if Bm.is_paravector():
        return bullet_right(w, Bm, fold)
    return odot(w, Bm, variant, fold)


def circ_u(u, A, B, fold: FoldConvention = DEFAULT_FOLD, variant: str = ODOT_LEFT) -> Octonion:
    """(A * u) o (u^-1 * B)."""
    um = as_multivector(u)
    ui = inverse(um)
    return circ(_left_factor(A, um, fold, variant), _right_factor(ui, B, fold, variant))


def circ_1u(u, A, B, fold: FoldConvention = DEFAULT_FOLD, variant: str = ODOT_LEFT) -> Octonion:
    """A o (u^-1 * B), with a non-paravector A folded in by bullet_right."""
    ui = inverse(as_multivector(u))
    right = _right_factor(ui, B, fold, variant)
    Am = as_multivector(A)
    if Am.is_paravector():
        return circ(as_octonion(Am), right)
    return bullet_right(Am, right, fold)


def circ_uv(u, v, A, B, fold: FoldConvention = DEFAULT_FOLD, variant: str = ODOT_LEFT) -> Octonion:
    """(A * u) o (v^-1 * B)."""
    um = as_multivector(u)
    vi = inverse(as_multivector(v))
    return circ(_left_factor(A, um, fold, variant), _right_factor(vi, B, fold, variant))


def make_C(u, v, fold: FoldConvention = DEFAULT_FOLD, variant: str = ODOT_LEFT) -> Octonion:
    """The collapsed right-side steering octonion u^-1 (.) v^-1."""
    ui = inverse(as_multivector(u))
    vi = inverse(as_multivector(v))
    return odot(ui, vi, variant, fold)


def circ_uC(u, C, A, B, fold: FoldConvention = DEFAULT_FOLD, variant: str = ODOT_LEFT) -> Octonion:
    """(A * u) o (C o B) with a fixed steering octonion C."""
    um = as_multivector(u)
    Co = as_octonion(C)
    Bo = as_octonion(B)
    return circ(_left_factor(A, um, fold, variant), circ(Co, Bo))


# -- derived unit frames -----------------------------------------------


def e_units(
    u,
    e7_rule: str = E7_CORRECTED,
    fold: FoldConvention = DEFAULT_FOLD,
) -> tuple[Octonion, ...]:
    """The seven steered units E_a obtained by folding u onto e_a.

    Slots 4 and 6 use the graded involute of u, as does the last slot;
    under the printed rule the last slot folds onto e1 instead of e7.
    Raises Degenerate when the frame fails to span seven directions.
    """
    if e7_rule not in (E7_CORRECTED, E7_PRINTED):
        raise ValueError(f"unknown e7 rule: {e7_rule!r}")
    um = as_multivector(u)
    uh = grade_involution(um)
    last = 7 if e7_rule == E7_CORRECTED else 1
    spec = ((um, 1), (um, 2), (um, 3), (uh, 4), (um, 5), (uh, 6), (uh, last))
    es = tuple(bullet_right(w, _UNIT[i], fold) for w, i in spec)
    for a, E in enumerate(es, start=1):
        if not any(E.coeffs[1:]):
            raise Degenerate(f"E{a} has no imaginary part: {E.to_text()}")
    if _vector_rank(es) < 7:
        raise Degenerate("the seven derived units are linearly dependent")
    return es


def _vector_rank(es: tuple[Octonion, ...]) -> int:
    rows = [list(E.coeffs[1:]) for E in es]
    rank = 0
    for col in range(7):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        pv = Fraction(prow[col])
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / pv
                rows[r] = [a - f * b for a, b in zip(rows[r], prow)]
        rank += 1
    return rank


# -- parameter-change identity ----------------------------------------


@dataclass(frozen=True)
class Theorem1Result:
    """Outcome of one (A o_u B) o_u (B^-1 o_u C) == +- A o_w C check."""

    sign: int | None  # +1, -1, or None when neither sign matches
    lhs: Octonion
    rhs: Octonion | None
    w: Multivector
    note: str = ""

    @property
    def matched(self) -> bool:
        return self.sign is not None


def theorem1_check(
    u,
    A,
    B,
    C,
    fold: FoldConvention = DEFAULT_FOLD,
    variant: str = ODOT_LEFT,
) -> Theorem1Result:
    """Compare the chained steered product against the re-steered one.

    The re-steering parameter is w = bullet_left(B, u); when w is not
    invertible the right side is undefined and the result records that.
    """
    um = as_multivector(u)
    Ao, Bo, Co = as_octonion(A), as_octonion(B), as_octonion(C)
    Bi = as_octonion(inverse(Bo.to_multivector()))
    lhs = circ_u(um, circ_u(um, Ao, Bo, fold, variant),
                 circ_u(um, Bi, Co, fold, variant), fold, variant)
    w = bullet_left(Bo, um, fold).to_multivector()
    try:
        rhs = circ_u(w, Ao, Co, fold, variant)
    except Singular:
        return Theorem1Result(None, lhs, None, w, "re-steering parameter not invertible")
    if lhs == rhs:
        return Theorem1Result(1, lhs, rhs, w)
    if lhs == -rhs:
        return Theorem1Result(-1, lhs, rhs, w)
    return Theorem1Result(None, lhs, rhs, w, "no sign matches")
