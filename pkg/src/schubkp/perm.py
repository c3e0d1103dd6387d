"""
Permutations of the positive integers with finite support, in one-line
notation with implicit fixed points.

Composition follows ``(u * v)(i) == u(v(i))``, so ``w * transposition(p, q)``
swaps the values of ``w`` at positions ``p`` and ``q``.

>>> w = Permutation([3, 1, 2])
>>> w(1), w(4)
(3, 4)
>>> length(w), inv_code(w, 3)
(2, (2, 0, 0))
>>> str(w * transposition(1, 3))
'2,1,3'
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence

from .errors import ResourceLimitError

__all__ = [
    "Permutation", "identity", "simple", "transposition", "longest",
    "compose", "inverse", "length", "inv_code", "codes",
    "left_inversion_sets", "from_code", "in_S_infty_n", "last_descent",
    "lex_gt_inverse", "monk_set", "m_pq", "enumerate_Sn",
    "enumerate_S_infty_n", "parse_perm", "MAX_RANK",
]

# enumerate_* refuse ranks above this
MAX_RANK = 8


class Permutation:
    """A finitely supported bijection of the positive integers."""

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int] = ()):
        imgs = tuple(int(i) for i in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        m = len(imgs)
        while m and imgs[m - 1] == m:
            m -= 1
        self._images = imgs[:m]

    @property
    def images(self) -> tuple[int, ...]:
        """Canonical one-line notation (trailing fixed points dropped)."""
        return self._images

    @property
    def size(self) -> int:
        """Largest moved point, 0 for the identity."""
        return len(self._images)

    def __call__(self, i: int) -> int:
        if i < 1:
            raise ValueError(f"positions start at 1, got {i}")
        return self._images[i - 1] if i <= len(self._images) else i

    def one_line(self, m: int | None = None) -> tuple[int, ...]:
        """Images ``w(1), ..., w(m)``; ``m`` defaults to the canonical size."""
        if m is None:
            return self._images
        if m < len(self._images):
            raise ValueError(f"window {m} shorter than support {self.size}")
        return self._images + tuple(range(len(self._images) + 1, m + 1))

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        return inverse(self)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self):
        return hash(self._images)

    def _cmp_key(self, m: int) -> tuple[int, ...]:
        return self.one_line(m)

    def __lt__(self, other: Permutation) -> bool:
        # lexicographic on one-line notation; used only for canonical output order
        m = max(self.size, other.size)
        return self._cmp_key(m) < other._cmp_key(m)

    def __repr__(self):
        return f"Permutation({list(self._images)})"

    def __str__(self):
        return ",".join(map(str, self._images)) if self._images else "1"


def identity() -> Permutation:
    return Permutation()


def transposition(p: int, q: int) -> Permutation:
    """The permutation ``t_pq`` exchanging ``p`` and ``q``."""
    if p == q or p < 1 or q < 1:
        raise ValueError(f"bad transposition ({p}, {q})")
    m = max(p, q)
    images = list(range(1, m + 1))
    images[p - 1], images[q - 1] = q, p
    return Permutation(images)


def simple(i: int) -> Permutation:
    return transposition(i, i + 1)


def longest(n: int) -> Permutation:
    """The longest element ``w_0`` of ``S_n``."""
    return Permutation(range(n, 0, -1))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """``i -> u(v(i))``."""
    m = max(u.size, v.size)
    return Permutation(u(v(i)) for i in range(1, m + 1))


def inverse(w: Permutation) -> Permutation:
    images = [0] * w.size
    for i, wi in enumerate(w.images, start=1):
        images[wi - 1] = i
    return Permutation(images)


def length(w: Permutation) -> int:
    """Number of inversions ``#{i < j : w(i) > w(j)}``."""
    imgs = w.images
    return sum(
        1 for i in range(len(imgs)) for j in range(i + 1, len(imgs))
        if imgs[i] > imgs[j]
    )


def last_descent(w: Permutation) -> int:
    """Largest ``i`` with ``w(i) > w(i+1)``, or 0.  ``w`` lies in ``S_inf^(n)`` iff this is at most ``n``."""
    imgs = w.images
    for i in range(len(imgs) - 1, 0, -1):
        if imgs[i - 1] > imgs[i]:
            return i
    return 0


def in_S_infty_n(w: Permutation, n: int) -> bool:
    """True iff ``w(n+1) < w(n+2) < ...``."""
    return last_descent(w) <= n


def inv_code(w: Permutation, n: int) -> tuple[int, ...]:
    """The vector ``inv(w)_i = #{j > i : w(i) > w(j)}`` for ``i = 1..n``."""
    if not in_S_infty_n(w, n):
        raise ValueError(f"{w!r} is not in S_inf^({n})")
    imgs = w.one_line(max(n, w.size))
    return tuple(
        sum(1 for j in range(i + 1, len(imgs)) if imgs[i] > imgs[j])
        for i in range(n)
    )


def left_inversion_sets(w: Permutation) -> tuple[tuple[int, ...], ...]:
    """Entry ``j-1`` is the sorted set ``{i < j : w(i) > w(j)}``, for ``j = 1..size``."""
    imgs = w.images
    return tuple(
        tuple(i + 1 for i in range(j) if imgs[i] > imgs[j])
        for j in range(len(imgs))
    )


def codes(w: Permutation) -> tuple[int, ...]:
    """``l_j(w) = #{i < j : w(i) > w(j)}`` for ``j = 1..size``."""
    return tuple(len(s) for s in left_inversion_sets(w))


def from_code(code: Sequence[int]) -> Permutation:
    """Inverse of the Lehmer code: the unique ``w`` with ``inv(w)_i == code[i-1]``."""
    m = max((i + 1 + c for i, c in enumerate(code)), default=0)
    free = list(range(1, m + 1))
    images = []
    for c in code:
        images.append(free.pop(c))
    images.extend(free)
    return Permutation(images)


def lex_gt_inverse(x: Permutation, y: Permutation) -> bool:
    """``x^{-1} >lex y^{-1}``: the first position where the inverses differ is larger for ``x``."""
    xi, yi = inverse(x), inverse(y)
    m = max(xi.size, yi.size)
    return xi.one_line(m) > yi.one_line(m)


def monk_set(w: Permutation, nu: int, q_max: int | None = None) -> list[tuple[int, int]]:
    """
    Pairs ``(p, q)`` with ``p <= nu < q`` and ``length(w t_pq) == length(w) + 1``.

    Positions ``q`` past ``max(nu, w.size) + 1`` never qualify; ``q_max``
    overrides the search window (for testing that claim).
    """
    if nu < 1:
        raise ValueError(f"nu must be positive, got {nu}")
    if q_max is None:
        q_max = max(nu, w.size) + 1
    base = length(w)
    return [
        (p, q)
        for p in range(1, nu + 1)
        for q in range(nu + 1, q_max + 1)
        if length(w * transposition(p, q)) == base + 1
    ]


def m_pq(w: Permutation, p: int, q: int) -> int:
    """``#{r > q : w(p) < w(r) < w(q)}``."""
    if not p < q:
        raise ValueError(f"need p < q, got ({p}, {q})")
    lo, hi = w(p), w(q)
    return sum(1 for r in range(q + 1, w.size + 1) if lo < w(r) < hi)


def _check_rank(n: int) -> None:
    if n < 1:
        raise ValueError(f"rank must be positive, got {n}")
    if n > MAX_RANK:
        raise ResourceLimitError(f"rank {n} exceeds the enumeration limit {MAX_RANK}")


def enumerate_Sn(n: int) -> Iterator[Permutation]:
    """All of ``S_n`` in lexicographic one-line order."""
    _check_rank(n)
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def enumerate_S_infty_n(n: int, max_length: int) -> Iterator[Permutation]:
    """
    All ``w`` in ``S_inf^(n)`` with ``length(w) <= max_length``, ordered by
    length and then by code.

    Elements of ``S_inf^(n)`` are exactly the permutations whose code is
    supported on the first ``n`` positions.
    """
    _check_rank(n)
    if max_length < 0:
        return
    for d in range(max_length + 1):
        for code in _compositions(d, n):
            yield from_code(code)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, in decreasing lex order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def parse_perm(text: str) -> Permutation:
    """Parse comma-separated one-line notation such as ``"3,1,2"``."""
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    try:
        images = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed permutation {text!r}") from None
    return Permutation(images)
