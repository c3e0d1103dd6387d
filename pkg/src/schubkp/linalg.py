"""
Exact sparse linear algebra over the rationals.

Vectors are plain dicts from hashable, mutually comparable keys to ``int`` or
``Fraction`` values, with zero entries never stored.  :class:`Echelon` keeps a
row-echelon basis whose pivot is the smallest key of each row.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Hashable

__all__ = ["Echelon", "axpy", "scale", "exact_div", "rank", "lincomb"]

Vec = dict


def exact_div(a: Rational, b: Rational) -> Rational:
    """``a / b``, kept as ``int`` when the quotient is integral."""
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    q = Fraction(a) / b
    return q.numerator if q.denominator == 1 else q


def axpy(y: Vec, a: Rational, x: Vec) -> None:
    """``y += a * x`` in place."""
    if not a:
        return
    for k, v in x.items():
        s = y.get(k, 0) + a * v
        if s:
            y[k] = s
        else:
            y.pop(k, None)


def scale(a: Rational, x: Vec) -> Vec:
    if not a:
        return {}
    return {k: a * v for k, v in x.items()}


def lincomb(pairs) -> Vec:
    out: Vec = {}
    for a, x in pairs:
        axpy(out, a, x)
    return out


class Echelon:
    """
    Row-echelon basis of a subspace, grown one vector at a time.

    With ``reduced=True`` every row is 1 at its pivot and 0 at every other
    row's pivot, so the coordinates of a vector in the span are its entries at
    the pivots.  With ``track=True`` each row remembers how it was built from
    the tagged input vectors, which turns :meth:`solve` into an exact linear
    solver.
    """

    def __init__(self, *, reduced: bool = True, track: bool = False):
        self.reduced = reduced
        self.track = track
        self.rows: dict[Hashable, Vec] = {}
        self.combos: dict[Hashable, Vec] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def pivots(self) -> list:
        return sorted(self.rows)

    def basis(self) -> list[Vec]:
        return [self.rows[p] for p in self.pivots]

    def reduce(self, vec: Vec, combo: Vec | None = None) -> tuple[Vec, Vec | None]:
        """Subtract rows until no pivot key remains; returns (residual, combination used)."""
        v = dict(vec)
        c = dict(combo) if combo is not None else ({} if self.track else None)
        rows = self.rows
        if self.reduced:
            for k in [k for k in v if k in rows]:
                a = v.get(k, 0)
                if a:
                    axpy(v, -a, rows[k])
                    if c is not None:
                        axpy(c, -a, self.combos[k])
            return v, c
        while True:
            hits = [k for k in v if k in rows]
            if not hits:
                return v, c
            k = min(hits)
            a = exact_div(v[k], rows[k][k])
            axpy(v, -a, rows[k])
            if c is not None:
                axpy(c, -a, self.combos[k])

    def contains(self, vec: Vec) -> bool:
        return not self.reduce(vec)[0]

    def add(self, vec: Vec, tag: Hashable | None = None) -> Vec | None:
        """
        Insert ``vec``; returns the new row, or None if ``vec`` was already
        in the span.
        """
        combo = {tag: 1} if self.track else None
        v, c = self.reduce(vec, combo)
        if not v:
            return None
        piv = min(v)
        if self.reduced:
            a = v[piv]
            if a != 1:
                v = {k: exact_div(x, a) for k, x in v.items()}
                if c is not None:
                    c = {k: exact_div(x, a) for k, x in c.items()}
            for p, row in self.rows.items():
                b = row.get(piv)
                if b:
                    axpy(row, -b, v)
                    if c is not None:
                        axpy(self.combos[p], -b, c)
        self.rows[piv] = v
        if c is not None:
            self.combos[piv] = c
        return v

    def solve(self, target: Vec) -> Vec:
        """
        Coefficients ``x`` (keyed by tag) with ``sum x[t] * input[t] == target``.

        Raises ``ValueError`` if the target is not in the span.
        """
        if not self.track:
            raise ValueError("solve needs track=True")
        v, c = self.reduce(target, {})
        if v:
            raise ValueError("target not in span")
        return {k: -x for k, x in c.items() if x}

    def coordinates(self, vec: Vec) -> dict:
        """Pivot-indexed coordinates of ``vec`` (reduced mode); raises if outside the span."""
        if not self.reduced:
            raise ValueError("coordinates need reduced=True")
        coords = {k: vec[k] for k in vec if k in self.rows}
        residual = dict(vec)
        for k, a in coords.items():
            axpy(residual, -a, self.rows[k])
        if residual:
            raise ValueError("vector not in span")
        return coords


def rank(vectors) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return len(ech)
