"""Octonions realized on the paravectors of Cl(0,7).

An octonion is a scalar plus a grade-1 vector.  The product is

    A o B  =  < A B (1 - psi) >_{0,1}

computed through the geometric product and the paravector projection,
never through a lookup.  The printed 7 x 7 unit table lives here too,
hard-coded, as an independent oracle the product is checked against.
"""

from __future__ import annotations

from fractions import Fraction

from .blades import GRADE, SIGN
from .multivector import (
    ONE_MINUS_PSI,
    Multivector,
    Singular,
    coerce_rational,
    gp,
    grade_project_01,
)


class NotParavectorError(ValueError):
    """Conversion to an octonion needs support inside grades {0, 1}."""


class Octonion:
    """Immutable octonion with exact rational components x0..x7."""

    __slots__ = ("coeffs", "_mv")

    def __init__(self, coeffs):
        cs = tuple(coerce_rational(c) for c in coeffs)
        if len(cs) != 8:
            raise ValueError(f"need 8 components, got {len(cs)}")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "_mv", None)

    @classmethod
    def _raw(cls, cs: tuple) -> "Octonion":
        # Internal fast path: cs must be 8 exact coefficients.
        o = object.__new__(cls)
        object.__setattr__(o, "coeffs", cs)
        object.__setattr__(o, "_mv", None)
        return o

    def __setattr__(self, name, value):
        raise AttributeError("Octonion is immutable")

    @classmethod
    def zero(cls) -> "Octonion":
        return _OCT_ZERO

    @classmethod
    def one(cls) -> "Octonion":
        return _OCT_ONE

    @classmethod
    def unit(cls, i: int) -> "Octonion":
        """Basis octonion: unit(0) is the real unit, unit(1..7) = e_i."""
        return _OCT_UNITS[i]

    @classmethod
    def from_multivector(cls, mv: Multivector) -> "Octonion":
        cs = [0] * 8
        for mask, c in mv.items():
            if mask == 0:
                cs[0] = c
            elif mask.bit_count() == 1:
                cs[mask.bit_length()] = c
            else:
                raise NotParavectorError(
                    f"support outside grades 0 and 1: {mv.to_text()}"
                )
        return cls(cs)

    def to_multivector(self) -> Multivector:
        mv = self._mv
        if mv is None:
            t = {}
            cs = self.coeffs
            if cs[0]:
                t[0] = cs[0]
            for i in range(1, 8):
                if cs[i]:
                    t[1 << (i - 1)] = cs[i]
            mv = Multivector._raw(t)
            object.__setattr__(self, "_mv", mv)
        return mv

    # -- ring-like structure -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Octonion):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return Octonion([-a for a in self.coeffs])

    def scale(self, q) -> "Octonion":
        c = coerce_rational(q)
        return Octonion([a * c for a in self.coeffs])

    def __repr__(self):
        return f"Octonion({self.to_text()!r})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def scalar_part(self) -> Fraction:
        return self.coeffs[0]

    def norm_sq(self) -> Fraction:
        return sum(c * c for c in self.coeffs)

    def to_text(self) -> str:
        return self.to_multivector().to_text()

    def to_json_dict(self) -> dict:
        return {f"x{i}": str(self.coeffs[i]) for i in range(8)}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "Octonion":
        return cls([Fraction(obj.get(f"x{i}", "0")) for i in range(8)])


_OCT_ZERO = Octonion([0] * 8)
_OCT_ONE = Octonion([1] + [0] * 7)
_OCT_UNITS = tuple(
    Octonion([1 if j == i else 0 for j in range(8)]) for i in range(8)
)


# Per intermediate blade m, the paravector components of m * (1 - psi):
# entries (s, k) mean blade m contributes s * (component k of the result),
# with k = 0 the real part.  Built from the blade sign table at import,
# so this is the defining product with the projection folded in, not a
# transcription of the printed unit table.
def _build_proj() -> tuple:
    rows = []
    for m in range(128):
        entries = []
        for p, pc in sorted(ONE_MINUS_PSI.items()):
            out = m ^ p
            if GRADE[out] <= 1:
                s = SIGN[m][p] * (1 if pc > 0 else -1)
                entries.append((s, out.bit_length()))
        rows.append(tuple(entries))
    return tuple(rows)


_PROJ = _build_proj()


def circ(A: Octonion, B: Octonion) -> Octonion:
    """The octonion product, evaluated through the geometric product."""
    out = [0] * 8
    bt = B.to_multivector().items()
    for mi, va in A.to_multivector().items():
        si = SIGN[mi]
        for mj, vb in bt:
            v = va * vb if si[mj] > 0 else -va * vb
            for s2, k in _PROJ[mi ^ mj]:
                if s2 > 0:
                    out[k] += v
                else:
                    out[k] -= v
    return Octonion._raw(tuple(out))


def circ_via_gp(A: Octonion, B: Octonion) -> Octonion:
    """Same product, written as the literal two-step composition.

    Kept as a cross-check target for circ's fused evaluation.
    """
    ab = gp(A.to_multivector(), B.to_multivector())
    return Octonion.from_multivector(grade_project_01(gp(ab, ONE_MINUS_PSI)))


def oct_conj(A: Octonion) -> Octonion:
    """Octonion conjugate: keep x0, negate the seven imaginary parts."""
    cs = A.coeffs
    return Octonion((cs[0],) + tuple(-c for c in cs[1:]))


def oct_inverse(A: Octonion) -> Octonion:
    n = A.norm_sq()
    if not n:
        raise Singular("the zero octonion has no inverse")
    return oct_conj(A).scale(Fraction(1, 1) / n)


def is_s7(A: Octonion) -> bool:
    """Exact unit-norm test."""
    return A.norm_sq() == 1


# -- printed unit table, hard-coded -----------------------------------
#
# Row index is the first factor, column index the second; entries are
# (sign, k) with k = 0 meaning the real unit.  This table is data, not
# something derived from circ, so the two can be compared honestly.

_TABLE = (
    ((-1, 0), (1, 4), (1, 7), (-1, 2), (1, 6), (-1, 5), (-1, 3)),
    ((-1, 4), (-1, 0), (1, 5), (1, 1), (-1, 3), (1, 7), (-1, 6)),
    ((-1, 7), (-1, 5), (-1, 0), (1, 6), (1, 2), (-1, 4), (1, 1)),
    ((1, 2), (-1, 1), (-1, 6), (-1, 0), (1, 7), (1, 3), (-1, 5)),
    ((-1, 6), (1, 3), (-1, 2), (-1, 7), (-1, 0), (1, 1), (1, 4)),
    ((1, 5), (-1, 7), (1, 4), (-1, 3), (-1, 1), (-1, 0), (1, 2)),
    ((1, 3), (1, 6), (-1, 1), (1, 5), (-1, 4), (-1, 2), (-1, 0)),
)


def table_oracle(a: int, b: int) -> tuple[int, int]:
    """Product of basis octonions by table lookup: (sign, index).

    Indices run 0..7 with 0 the real unit.
    """
    if not (0 <= a <= 7 and 0 <= b <= 7):
        raise ValueError(f"basis index out of range: ({a}, {b})")
    if a == 0:
        return (1, b)
    if b == 0:
        return (1, a)
    return _TABLE[a - 1][b - 1]


def table_product(a: int, b: int) -> Octonion:
    """table_oracle as an Octonion value."""
    sign, k = table_oracle(a, b)
    u = _OCT_UNITS[k]
    return u if sign > 0 else -u


# Index triples (a, b, c) with e_a o e_b = e_c under cyclic symmetry.
TRIPLES = ((1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3))

_EPS: dict[tuple[int, int], tuple[int, int]] = {}
for _p, _q, _r in TRIPLES:
    for _a, _b, _c in ((_p, _q, _r), (_q, _r, _p), (_r, _p, _q)):
        _EPS[(_a, _b)] = (1, _c)
        _EPS[(_b, _a)] = (-1, _c)


def structure_product(a: int, b: int) -> tuple[int, int]:
    """Unit product derived from the index triples instead of the table."""
    if not 1 <= a <= 7 or not 1 <= b <= 7:
        raise ValueError(f"imaginary unit index out of range: ({a}, {b})")
    if a == b:
        return (-1, 0)
    return _EPS[(a, b)]


# -- twisted products with unit-norm parameters ------------------------


def x_product(X: Octonion, A: Octonion, B: Octonion) -> Octonion:
    """(A o X) o (conj(X) o B) for X on the unit sphere."""
    if not is_s7(X):
        raise ValueError(f"parameter must have unit norm: {X.to_text()}")
    return circ(circ(A, X), circ(oct_conj(X), B))


def xy_product(X: Octonion, Y: Octonion, A: Octonion, B: Octonion) -> Octonion:
    """(A o X) o (conj(Y) o B) for X, Y on the unit sphere."""
    if not is_s7(X) or not is_s7(Y):
        raise ValueError("parameters must have unit norm")
    return circ(circ(A, X), circ(oct_conj(Y), B))


def one_x_product(X: Octonion, A: Octonion, B: Octonion) -> Octonion:
    """A o (conj(X) o B) for X on the unit sphere."""
    if not is_s7(X):
        raise ValueError(f"parameter must have unit norm: {X.to_text()}")
    return circ(A, circ(oct_conj(X), B))
