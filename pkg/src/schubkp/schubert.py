"""
Schubert polynomials, expansion in the Schubert basis, and the identities
built on them: Monk's rule, the Cauchy identity, the dual pairing on
``H_n``, the multiplicities ``n_wu`` of ``T_w`` and structure constants.

A Schubert expansion is a plain ``dict[Permutation, int]`` without zero
entries.
"""

from __future__ import annotations

import functools
import math
import random
from collections.abc import Callable, Iterable, Sequence

from .errors import ResourceLimitError, VerificationError
from .linalg import Echelon
from .perm import (
    Permutation, enumerate_S_infty_n, enumerate_Sn, in_S_infty_n, inv_code,
    last_descent, length, lex_gt_inverse, longest, monk_set, simple,
    transposition,
)
from .polynomial import (
    Partition, SparsePoly, constant, elementary_symmetric, monomial,
    monomial_alphabet, schur_at_monomials, variable,
)

__all__ = [
    "SchubertExpansion", "schubert", "schubert_along", "ascent_path",
    "expand_in_schubert", "expansion_to_poly", "monk_product",
    "cauchy_check", "pairing", "in_H", "t_w_character", "t_w_multiplicities",
    "structure_constants", "schur_positivity_check", "lex_support_check",
    "MAX_SCHUR_ALPHABET",
]

SchubertExpansion = dict  # Permutation -> nonzero int

# largest alphabet (monomial count of the Schubert polynomial) schur_positivity_check accepts
MAX_SCHUR_ALPHABET = 40


def _require_rank(w: Permutation, n: int) -> None:
    if not in_S_infty_n(w, n):
        raise ValueError(f"{w} is not in S_inf^({n})")


def ascent_path(w: Permutation, n: int, choose: Callable[[list[int]], int] = min) -> tuple[Permutation, list[int]]:
    """
    Climb from ``w`` by ``u -> u s_i`` at ascents ``i < n`` until the first
    ``n`` values decrease.  Returns the top element and the indices used.
    """
    u, path = w, []
    while True:
        ascents = [i for i in range(1, n) if u(i) < u(i + 1)]
        if not ascents:
            return u, path
        i = choose(ascents)
        u = u * simple(i)
        path.append(i)


def schubert_along(w: Permutation, n: int, choose: Callable[[list[int]], int] = min) -> SparsePoly:
    """
    Uncached Schubert polynomial: start from the monomial of the top element
    reached by :func:`ascent_path` and descend with divided differences.

    Taking ``n`` equal to the size of ``w`` makes the top element the longest
    element of ``S_n`` and the start the staircase monomial.
    """
    _require_rank(w, n)
    top, path = ascent_path(w, n, choose)
    poly = monomial([top(i) - 1 for i in range(1, n + 1)])
    for i in reversed(path):
        poly = poly.divided_difference(i)
    return poly


@functools.lru_cache(maxsize=None)
def _schubert_cached(w: Permutation) -> SparsePoly:
    return schubert_along(w, max(last_descent(w), 1))


def schubert(w: Permutation, n: int | None = None) -> SparsePoly:
    """The Schubert polynomial of ``w``; with ``n`` given, ``w`` must lie in ``S_inf^(n)``."""
    if n is not None:
        _require_rank(w, n)
    return _schubert_cached(w)


def expansion_to_poly(expansion: SchubertExpansion) -> SparsePoly:
    total = SparsePoly()
    for w, c in expansion.items():
        total = total + schubert(w) * c
    return total


@functools.lru_cache(maxsize=None)
def _degree_basis(n: int, d: int) -> Echelon:
    ech = Echelon(reduced=False, track=True)
    for w in enumerate_S_infty_n(n, d):
        if length(w) != d:
            continue
        row = {_padded(k, n): c for k, c in schubert(w).terms.items()}
        if ech.add(row, tag=w) is None:
            raise VerificationError(f"Schubert polynomials of degree {d} are dependent at {w}")
    return ech


def _padded(k: tuple[int, ...], n: int) -> tuple[int, ...]:
    return k + (0,) * (n - len(k))


def expand_in_schubert(f: SparsePoly, n: int) -> SchubertExpansion:
    """
    The unique integer combination ``f = sum c_w S_w`` over ``w`` in ``S_inf^(n)``,
    found by an exact linear solve in each homogeneous degree.
    """
    if f.nvars > n:
        raise ValueError(f"polynomial uses x_{f.nvars}, outside x_1..x_{n}")
    out: SchubertExpansion = {}
    for d, part in f.homogeneous_components().items():
        ech = _degree_basis(n, d)
        target = {_padded(k, n): c for k, c in part.terms.items()}
        try:
            solution = ech.solve(target)
        except ValueError:
            raise VerificationError(f"degree-{d} part is outside the Schubert span") from None
        for w, c in solution.items():
            if getattr(c, "denominator", 1) != 1:
                raise VerificationError(f"non-integral coefficient {c} at {w}")
            out[w] = int(c)
    return dict(sorted(out.items()))


def monk_product(w: Permutation, nu: int, n: int) -> SchubertExpansion:
    """``S_w * S_{s_nu}`` by Monk's rule."""
    _require_rank(w, n)
    if not 1 <= nu <= n - 1:
        raise ValueError(f"need 1 <= nu <= {n - 1}, got {nu}")
    return dict(sorted((w * transposition(p, q), 1) for p, q in monk_set(w, nu)))


def cauchy_check(n: int) -> bool:
    """Check ``sum_{w in S_n} S_w(x) S_{w w0}(y) == prod_{i+j<=n} (x_i + y_j)``, with ``y_j = x_{n+j}``."""
    if n > 6:
        raise ResourceLimitError(f"cauchy_check limited to n <= 6, got {n}")
    w0 = longest(n)
    lhs = SparsePoly()
    for w in enumerate_Sn(n):
        lhs = lhs + schubert(w) * schubert(w * w0).shift(n)
    rhs = constant(1)
    for i in range(1, n + 1):
        for j in range(1, n + 1 - i):
            rhs = rhs * (variable(i) + variable(n + j))
    return lhs == rhs


def in_H(f: SparsePoly, n: int) -> bool:
    """Whether every exponent satisfies ``a_i <= n - i``."""
    return all(a <= n - i for k in f for i, a in enumerate(k, start=1))


def pairing(f: SparsePoly, g: SparsePoly, n: int) -> int:
    """The bilinear form on ``H_n`` with ``<S_u, S_{u' w0}> = delta_{u u'}``."""
    for h in (f, g):
        if not in_H(h, n):
            raise ValueError(f"{h} is not in H_{n}")
    w0 = longest(n)
    ef, eg = expand_in_schubert(f, n), expand_in_schubert(g, n)
    for e in (ef, eg):
        for w in e:
            if w.size > n:
                raise VerificationError(f"H_{n} element expanded onto {w} outside S_{n}")
    return sum(c * eg.get(u * w0, 0) for u, c in ef.items())


def t_w_character(w: Permutation, n: int) -> SparsePoly:
    """``prod_{2<=i<=n} e_{l_i(w)}(x_1, ..., x_{i-1})``."""
    if w.size > n:
        raise ValueError(f"{w} is not in S_{n}")
    out = constant(1)
    for i in range(2, n + 1):
        li = sum(1 for j in range(1, i) if w(j) > w(i))
        out = out * elementary_symmetric(li, i - 1)
    return out


def t_w_multiplicities(w: Permutation, n: int) -> SchubertExpansion:
    """
    ``n_wu`` = coefficient of ``x^{inv(w w0)}`` in ``S_{u w0}``, for ``u`` in ``S_n``
    of the same length as ``w``.
    """
    if w.size > n:
        raise ValueError(f"{w} is not in S_{n}")
    w0 = longest(n)
    target = inv_code(w * w0, n)
    ell = length(w)
    out = {}
    for u in enumerate_Sn(n):
        if length(u) != ell:
            continue
        c = schubert(u * w0).coeff(target)
        if c:
            out[u] = c
    return dict(sorted(out.items()))


def structure_constants(u: Permutation, v: Permutation, n: int) -> SchubertExpansion:
    """Expansion of ``S_u S_v``; every coefficient is checked to be nonnegative."""
    _require_rank(u, n)
    _require_rank(v, n)
    out = expand_in_schubert(schubert(u) * schubert(v), n)
    bad = {w: c for w, c in out.items() if c < 0}
    if bad:
        raise VerificationError(f"negative structure constants {bad}")
    return out


def schur_positivity_check(lam: Partition | Sequence[int], w: Permutation, n: int,
                           max_alphabet: int = MAX_SCHUR_ALPHABET) -> SchubertExpansion:
    """
    Expand ``s_lam(x^a, x^b, ...)`` where ``S_w = x^a + x^b + ...``, and check
    that the result is Schubert-positive.
    """
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    _require_rank(w, n)
    alphabet = monomial_alphabet(schubert(w))
    if len(alphabet) > max_alphabet or math.comb(len(alphabet) + lam.size - 1, lam.size) > 10**6:
        raise ResourceLimitError(
            f"alphabet of {len(alphabet)} monomials at |lambda|={lam.size} is over the limit")
    out = expand_in_schubert(schur_at_monomials(lam, alphabet), n)
    bad = {u: c for u, c in out.items() if c < 0}
    if bad:
        raise VerificationError(f"s_{lam} of S_{w} has negative Schubert coefficients {bad}")
    return out


def lex_support_check(x: Permutation, y: Permutation, n: int) -> bool:
    """Whether ``coeff(S_x, inv(y)) != 0`` implies ``y^{-1} >=lex x^{-1}`` for this pair."""
    _require_rank(x, n)
    _require_rank(y, n)
    if not schubert(x).coeff(inv_code(y, n)):
        return True
    return x == y or lex_gt_inverse(y, x)


def random_reduced_chooser(rng: random.Random) -> Callable[[Iterable[int]], int]:
    return lambda options: rng.choice(list(options))
