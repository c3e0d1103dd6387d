"""
Sparse multivariate polynomials with exact integer coefficients.

Terms are keyed by exponent tuples with trailing zeros trimmed, so the same
polynomial compares equal regardless of how many variables were in play when
it was built.  Variables are 1-indexed: ``variable(1)`` is ``x_1``.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass

__all__ = [
    "SparsePoly", "Partition", "monomial", "variable", "constant",
    "elementary_symmetric", "complete_homogeneous_of", "schur_at_monomials",
    "monomial_alphabet", "trim",
]

Exponent = tuple[int, ...]


def trim(exps: Sequence[int]) -> Exponent:
    m = len(exps)
    while m and exps[m - 1] == 0:
        m -= 1
    return tuple(exps[:m])


def _pad(exps: Exponent, m: int) -> list[int]:
    return list(exps) + [0] * (m - len(exps))


class SparsePoly:
    """An immutable element of ``Z[x_1, x_2, ...]``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for exps, c in items:
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if int(c) != c:
                raise ValueError(f"non-integral coefficient {c}")
            key = trim(exps)
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: c for k, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int]) -> SparsePoly:
        # caller guarantees trimmed keys and no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection -----------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exponent, int]]:
        """Terms in a canonical (sorted) order."""
        return sorted(self._terms.items())

    def coeff(self, exponent: Sequence[int]) -> int:
        return self._terms.get(trim(exponent), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self) -> Iterator[Exponent]:
        return iter(sorted(self._terms))

    @property
    def nvars(self) -> int:
        """Index of the last variable that actually occurs."""
        return max((len(k) for k in self._terms), default=0)

    @property
    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(k) for k in self._terms)

    def homogeneous_components(self) -> dict[int, SparsePoly]:
        parts: dict[int, dict[Exponent, int]] = {}
        for k, c in self._terms.items():
            parts.setdefault(sum(k), {})[k] = c
        return {d: SparsePoly._raw(t) for d, t in sorted(parts.items())}

    def at_ones(self) -> int:
        """Value at ``x_1 = x_2 = ... = 1``."""
        return sum(self._terms.values())

    # -- ring operations ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = constant(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return SparsePoly._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = constant(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return SparsePoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = constant(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scalar_mul(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        out: dict[Exponent, int] = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                # both keys trimmed, so the sum is trimmed too
                k = tuple(a + b for a, b in itertools.zip_longest(ka, kb, fillvalue=0))
                out[k] = out.get(k, 0) + ca * cb
        return SparsePoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def scalar_mul(self, c: int) -> SparsePoly:
        if not c:
            return SparsePoly()
        return SparsePoly._raw({k: c * v for k, v in self._terms.items()})

    def __pow__(self, e: int) -> SparsePoly:
        if e < 0:
            raise ValueError("negative power")
        result = constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- variable manipulation ------------------------------------------

    def shift(self, offset: int) -> SparsePoly:
        """Rename ``x_i`` to ``x_{i+offset}``."""
        return SparsePoly._raw({
            ((0,) * offset + k if k else k): c for k, c in self._terms.items()
        })

    def apply_s_i(self, i: int) -> SparsePoly:
        """Swap ``x_i`` and ``x_{i+1}``."""
        if i < 1:
            raise ValueError(f"index must be positive, got {i}")
        out = {}
        for k, c in self._terms.items():
            e = _pad(k, i + 1)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[trim(e)] = c
        return SparsePoly._raw(out)

    def divided_difference(self, i: int) -> SparsePoly:
        """``(f - s_i f) / (x_i - x_{i+1})``, by exact synthetic division."""
        g = self - self.apply_s_i(i)
        if not g:
            return SparsePoly()
        # view g as a polynomial in x_i over the remaining variables
        by_power: dict[int, dict[Exponent, int]] = {}
        for k, c in g._terms.items():
            e = _pad(k, i + 1)
            a = e[i - 1]
            e[i - 1] = 0
            by_power.setdefault(a, {})[tuple(e)] = c
        top = max(by_power)
        quotient: dict[Exponent, int] = {}
        carry: dict[Exponent, int] = {}  # coefficient of x_i^k in the quotient
        for k in range(top, 0, -1):
            # q_{k-1} = g_k + x_{i+1} * q_k
            nxt = dict(by_power.get(k, {}))
            for e, c in carry.items():
                e2 = list(e)
                e2[i] += 1
                e2 = tuple(e2)
                nxt[e2] = nxt.get(e2, 0) + c
            carry = {e: c for e, c in nxt.items() if c}
            for e, c in carry.items():
                e2 = list(e)
                e2[i - 1] = k - 1
                quotient[trim(e2)] = c
        # remainder g_0 + x_{i+1} q_0 must vanish
        rem = dict(by_power.get(0, {}))
        for e, c in carry.items():
            e2 = list(e)
            e2[i] += 1
            e2 = tuple(e2)
            rem[e2] = rem.get(e2, 0) + c
        if any(rem.values()):
            raise ArithmeticError(f"divided difference left a remainder at i={i}")
        return SparsePoly._raw(quotient)

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in sorted(self._terms.items(), reverse=True):
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}"
                for i, e in enumerate(k, start=1) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def monomial(exponent: Sequence[int], c: int = 1) -> SparsePoly:
    return SparsePoly({tuple(exponent): c})


def variable(i: int) -> SparsePoly:
    return monomial((0,) * (i - 1) + (1,))


def constant(c: int) -> SparsePoly:
    return SparsePoly({(): c})


def elementary_symmetric(k: int, m: int) -> SparsePoly:
    """``e_k(x_1, ..., x_m)``."""
    if k < 0:
        raise ValueError(f"negative degree {k}")
    terms = {}
    for combo in itertools.combinations(range(m), k):
        e = [0] * m
        for i in combo:
            e[i] = 1
        terms[trim(e)] = 1
    return SparsePoly._raw(terms)


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))


def monomial_alphabet(f: SparsePoly) -> list[Exponent]:
    """Write a polynomial with positive coefficients as a list of monomials, repeated by multiplicity."""
    out = []
    for k, c in f.items():
        if c < 0:
            raise ValueError("alphabet needs nonnegative coefficients")
        out.extend([k] * c)
    return out


def complete_homogeneous_of(alphabet: Sequence[Sequence[int]], max_degree: int) -> list[SparsePoly]:
    """``[h_0, ..., h_max_degree]`` of the alphabet whose letters are the given monomials."""
    h = [constant(1)] + [SparsePoly() for _ in range(max_degree)]
    for letter in alphabet:
        a = monomial(letter)
        powers = [constant(1)]
        for _ in range(max_degree):
            powers.append(powers[-1] * a)
        # multiply the generating series by 1/(1 - a t)
        h = [
            sum((powers[j] * h[k - j] for j in range(k + 1)), SparsePoly())
            for k in range(max_degree + 1)
        ]
    return h


def _determinant(matrix: list[list[SparsePoly]]) -> SparsePoly:
    size = len(matrix)
    total = SparsePoly()
    for perm in itertools.permutations(range(size)):
        sign = 1
        for i in range(size):
            for j in range(i + 1, size):
                if perm[i] > perm[j]:
                    sign = -sign
        term = constant(sign)
        for i, j in enumerate(perm):
            term = term * matrix[i][j]
            if not term:
                break
        total = total + term
    return total


def schur_at_monomials(lam: Partition | Sequence[int], alphabet: Sequence[Sequence[int]]) -> SparsePoly:
    """
    The Schur function ``s_lam`` evaluated on an alphabet of monomials
    (with multiplicity), via the Jacobi-Trudi determinant ``det h_{lam_i - i + j}``.
    """
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    parts = lam.parts
    ell = len(parts)
    if ell == 0:
        return constant(1)
    h = complete_homogeneous_of(alphabet, parts[0] + ell - 1)

    def entry(i, j):
        k = parts[i] - i + j
        return h[k] if 0 <= k < len(h) else SparsePoly()

    return _determinant([[entry(i, j) for j in range(ell)] for i in range(ell)])
