"""Exact sparse multivectors over Cl(0,7).

Coefficients are arbitrary-precision rationals; a multivector is a
finite map from blade masks to nonzero coefficients.  All operations
are exact, no floating point anywhere.  Integral coefficients are kept
as plain ints (much faster in products), general ones as Fraction; the
two mix freely and compare equal when they should.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .blades import (
    CONJUGATION_SIGN,
    GRADE,
    INVOLUTION_SIGN,
    N_BLADES,
    REVERSION_SIGN,
    SIGN,
    generators,
    mask_of,
)

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def coerce_rational(v) -> "int | Fraction":
    """Exact coefficient from int, Fraction, or rational string.

    Floats are rejected: they would smuggle binary rounding into an
    exact kernel.  Whole values come back as plain int.
    """
    if type(v) is int:
        return v
    if isinstance(v, float):
        raise TypeError(f"float coefficients are not exact: {v!r}")
    f = v if isinstance(v, Fraction) else Fraction(v)
    return f.numerator if f.denominator == 1 else f


class Singular(ArithmeticError):
    """Raised when an element has no two-sided inverse."""


class OneSidedOnly(ArithmeticError):
    """Raised if a one-sided inverse fails the two-sided check.

    Cannot occur in a finite-dimensional associative algebra; kept as a
    distinct failure mode so the certification step has a name for it.
    """


class Multivector:
    """Immutable sparse element of Cl(0,7)."""

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        t: dict[int, Fraction] = {}
        if terms:
            for mask, coeff in dict(terms).items():
                m = int(mask)
                if not 0 <= m < N_BLADES:
                    raise ValueError(f"blade mask out of range: {mask}")
                c = coerce_rational(coeff)
                if c:
                    t[m] = c
        object.__setattr__(self, "_t", t)

    @classmethod
    def _raw(cls, t: dict[int, Fraction]) -> "Multivector":
        # Internal fast path: t must already be normalized (no zeros).
        mv = object.__new__(cls)
        object.__setattr__(mv, "_t", t)
        return mv

    @classmethod
    def zero(cls) -> "Multivector":
        return cls._raw({})

    @classmethod
    def scalar(cls, q) -> "Multivector":
        c = coerce_rational(q)
        return cls._raw({0: c} if c else {})

    @classmethod
    def generator(cls, i: int) -> "Multivector":
        if not 1 <= i <= 7:
            raise ValueError(f"generator index out of range: {i}")
        return cls._raw({1 << (i - 1): _ONE})

    @classmethod
    def blade(cls, mask: int, coeff=1) -> "Multivector":
        if not 0 <= mask < N_BLADES:
            raise ValueError(f"blade mask out of range: {mask}")
        c = coerce_rational(coeff)
        return cls._raw({mask: c} if c else {})

    # -- inspection ----------------------------------------------------

    def items(self):
        return self._t.items()

    def support(self) -> frozenset[int]:
        return frozenset(self._t)

    def coeff(self, mask: int) -> Fraction:
        return self._t.get(mask, _ZERO)

    def is_zero(self) -> bool:
        return not self._t

    def is_scalar(self) -> bool:
        return not self._t or self._t.keys() == {0}

    def scalar_part(self) -> Fraction:
        return self._t.get(0, _ZERO)

    def grades(self) -> frozenset[int]:
        return frozenset(GRADE[m] for m in self._t)

    def is_paravector(self) -> bool:
        """Support contained in grades {0, 1}."""
        return all(GRADE[m] <= 1 for m in self._t)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self._t == other._t
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __bool__(self):
        return bool(self._t)

    # -- linear structure ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        t = dict(self._t)
        for m, c in other._t.items():
            s = t.get(m, _ZERO) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return Multivector._raw(t)

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        t = dict(self._t)
        for m, c in other._t.items():
            s = t.get(m, _ZERO) - c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return Multivector._raw(t)

    def __neg__(self):
        return Multivector._raw({m: -c for m, c in self._t.items()})

    def scale(self, q) -> "Multivector":
        c = coerce_rational(q)
        if not c:
            return Multivector.zero()
        return Multivector._raw({m: v * c for m, v in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return gp(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1, 1) / other)
        return NotImplemented

    def __repr__(self):
        return f"Multivector({self.to_text()!r})"

    # -- canonical text form -------------------------------------------

    def to_text(self) -> str:
        """Canonical text form, terms sorted by (grade, mask)."""
        if not self._t:
            return "0"
        parts: list[str] = []
        for m in sorted(self._t, key=lambda m: (GRADE[m], m)):
            c = self._t[m]
            blade = "^".join(f"e{i}" for i in generators(m)) if m else ""
            if parts:
                joiner = " + " if c > 0 else " - "
                mag = abs(c)
                parts.append(joiner + (f"{mag} {blade}" if blade else str(mag)))
            else:
                parts.append(f"{c} {blade}" if blade else str(c))
        return "".join(parts)

    @classmethod
    def from_text(cls, text: str) -> "Multivector":
        """Parse the canonical text form (inverse of to_text)."""
        s = text.strip()
        if not s:
            raise ValueError("empty multivector text")
        if s == "0":
            return cls.zero()
        total: dict[int, Fraction] = {}
        for sign, coeff_str, blade_str in _iter_text_terms(s):
            coeff = coerce_rational(coeff_str) if coeff_str else 1
            if sign == "-":
                coeff = -coeff
            mask = _parse_blade(blade_str) if blade_str else 0
            acc = total.get(mask, _ZERO) + coeff
            if acc:
                total[mask] = acc
            else:
                total.pop(mask, None)
        return cls._raw(total)

    # -- canonical JSON form -------------------------------------------

    def to_json_dict(self) -> dict:
        order = sorted(self._t, key=lambda m: (GRADE[m], m))
        return {"blades": {str(m): str(self._t[m]) for m in order}}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, obj: dict) -> "Multivector":
        if not isinstance(obj, dict) or "blades" not in obj:
            raise ValueError("expected an object with a 'blades' key")
        return cls({int(k): Fraction(v) for k, v in obj["blades"].items()})

    @classmethod
    def from_json(cls, text: str) -> "Multivector":
        return cls.from_json_dict(json.loads(text))


_TERM_RE = re.compile(
    r"""\s* (?P<sign>[+-])? \s*
        (?: (?P<coeff>\d+(?:/\d+)?) (?:\s+(?P<bladec>e\d(?:\^e\d)*))?
          | (?P<blade>e\d(?:\^e\d)*) )""",
    re.VERBOSE,
)


def _iter_text_terms(s: str):
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad multivector text at position {pos}: {s[pos:]!r}")
        sign = m.group("sign")
        if sign is None:
            if not first:
                raise ValueError(f"missing +/- between terms near position {pos}")
            sign = "+"
        yield sign, m.group("coeff"), m.group("bladec") or m.group("blade")
        pos = m.end()
        first = False
        rest = s[pos:].lstrip()
        if rest and rest[0] not in "+-":
            raise ValueError(f"trailing input in multivector text: {rest!r}")
    if first:
        raise ValueError("empty multivector text")


def _parse_blade(blade_str: str) -> int:
    idx = [int(p[1:]) for p in blade_str.split("^")]
    if any(not 1 <= i <= 7 for i in idx):
        raise ValueError(f"generator index out of range in blade {blade_str!r}")
    if idx != sorted(set(idx)):
        raise ValueError(f"blade factors must be distinct and ascending: {blade_str!r}")
    return mask_of(idx)


# -- products and projections ------------------------------------------


def gp(x: Multivector, y: Multivector) -> Multivector:
    """Geometric product."""
    out: dict[int, Fraction] = {}
    yt = y._t
    for a, ca in x._t.items():
        sa = SIGN[a]
        for b, cb in yt.items():
            m = a ^ b
            v = out.get(m, _ZERO) + ca * cb * sa[b]
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return Multivector._raw(out)


def grade_project(x: Multivector, k: int) -> Multivector:
    if not 0 <= k <= 7:
        raise ValueError(f"grade out of range: {k}")
    return Multivector._raw({m: c for m, c in x._t.items() if GRADE[m] == k})


def grade_project_01(x: Multivector) -> Multivector:
    """Projection onto grades 0 and 1 (the paravector part)."""
    return Multivector._raw({m: c for m, c in x._t.items() if GRADE[m] <= 1})


def reversion(x: Multivector) -> Multivector:
    return Multivector._raw(
        {m: c if REVERSION_SIGN[m] > 0 else -c for m, c in x._t.items()}
    )


def grade_involution(x: Multivector) -> Multivector:
    return Multivector._raw(
        {m: c if INVOLUTION_SIGN[m] > 0 else -c for m, c in x._t.items()}
    )


def conjugation(x: Multivector) -> Multivector:
    """Clifford conjugation: reversion composed with grade involution."""
    return Multivector._raw(
        {m: c if CONJUGATION_SIGN[m] > 0 else -c for m, c in x._t.items()}
    )


ZERO = Multivector.zero()
ONE = Multivector.scalar(1)

# The grade-3 element steering the paravector product: seven unit terms,
# one per line of the multiplication table's index triples.
_PSI_MASKS = (
    0b0001011,  # e1^e2^e4
    0b0010110,  # e2^e3^e5
    0b0101100,  # e3^e4^e6
    0b1011000,  # e4^e5^e7
    0b0110001,  # e1^e5^e6
    0b1100010,  # e2^e6^e7
    0b1000101,  # e1^e3^e7
)

_PSI = Multivector._raw({m: _ONE for m in _PSI_MASKS})
ONE_MINUS_PSI = ONE - _PSI


def psi() -> Multivector:
    """The structure trivector (seven terms, coefficient +1 each)."""
    return _PSI


# -- inverse -----------------------------------------------------------


def inverse(x: Multivector) -> Multivector:
    """Two-sided inverse, exact.

    A conjugation shortcut handles the common case where x * conj(x) is
    a nonzero scalar; every other element goes through an exact sparse
    solve of the 128-dimensional left-multiplication system.  Both paths
    certify the result two-sidedly before returning it.
    """
    if x.is_zero():
        raise Singular("the zero element has no inverse")
    xc = conjugation(x)
    z = gp(x, xc)
    if z.is_scalar():
        s = z.scalar_part()
        if not s:
            raise Singular(f"not invertible: {x.to_text()}")
        cand = xc / s
        return _certify(x, cand)
    return _certify(x, _solve_left(x))


def _certify(x: Multivector, cand: Multivector) -> Multivector:
    if gp(x, cand) != ONE:
        raise Singular(f"not invertible: {x.to_text()}")
    if gp(cand, x) != ONE:
        raise OneSidedOnly(f"right inverse is not a left inverse for {x.to_text()}")
    return cand


def _solve_left(x: Multivector) -> Multivector:
    # Solve x * y == 1 as a sparse exact linear system over the 128 blade
    # coordinates of y.  Row r collects the coefficient of blade r in x * e_b.
    rows: dict[int, dict[int, Fraction]] = {}
    for a, ca in x.items():
        sa = SIGN[a]
        for b in range(N_BLADES):
            r = rows.setdefault(a ^ b, {})
            r[b] = r.get(b, _ZERO) + ca * sa[b]
    rhs: dict[int, Fraction] = {r: (_ONE if r == 0 else _ZERO) for r in rows}
    if 0 not in rows:
        raise Singular(f"not invertible: {x.to_text()}")

    cols_with: dict[int, set[int]] = {}
    for r, row in rows.items():
        row_clean = {b: v for b, v in row.items() if v}
        rows[r] = row_clean
        for b in row_clean:
            cols_with.setdefault(b, set()).add(r)

    solution: dict[int, Fraction] = {}
    pivot_of_col: dict[int, int] = {}
    used_rows: set[int] = set()
    for col in range(N_BLADES):
        candidates = [r for r in cols_with.get(col, ()) if r not in used_rows]
        if not candidates:
            continue
        # Prefer the sparsest candidate row to limit fill-in.
        piv = min(candidates, key=lambda r: (len(rows[r]), r))
        used_rows.add(piv)
        pivot_of_col[col] = piv
        pv = Fraction(rows[piv][col])
        for r in list(cols_with.get(col, ())):
            if r == piv:
                continue
            row = rows[r]
            factor = row[col] / pv
            if not factor:
                continue
            for b, v in rows[piv].items():
                nv = row.get(b, _ZERO) - factor * v
                if nv:
                    if b not in row:
                        cols_with.setdefault(b, set()).add(r)
                    row[b] = nv
                else:
                    if b in row:
                        del row[b]
                        cols_with[b].discard(r)
            rhs[r] = rhs[r] - factor * rhs[piv]

    # After full elimination each pivot row holds exactly its pivot column.
    for r, row in rows.items():
        if not row and rhs[r]:
            raise Singular(f"not invertible: {x.to_text()}")
    if len(pivot_of_col) < N_BLADES:
        raise Singular(f"not invertible: {x.to_text()}")
    for col, piv in pivot_of_col.items():
        v = rhs[piv] / rows[piv][col]
        if v:
            solution[col] = v
    return Multivector._raw(solution)
