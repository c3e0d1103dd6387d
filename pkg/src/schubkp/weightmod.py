"""
Explicit finite-dimensional weight modules over the upper-triangular Lie
algebra ``b_n``.

Every module here lives inside a tensor product of exterior powers
``wedge^{k_1} K^{m_1} (x) wedge^{k_2} K^{m_2} (x) ...``, described by its
*shape* ``((k_1, m_1), (k_2, m_2), ...)``.  An ambient basis vector is a key:
a tuple with one sorted index tuple per factor.  Vectors are sparse dicts
from keys to exact rationals.  A module may also carry a constant weight
*offset*, which is how the one-dimensional modules ``K_lambda`` are realised.

``e_pq`` acts by ``u_q -> u_p`` on ``K^m`` and as a derivation on wedges and
tensor factors.  Submodules are closures under all ``e_pq`` (``p < q <= n``)
of the span of a set of seeds, grown weight space by weight space.
"""

from __future__ import annotations

import itertools
import math
import os
from collections import deque
from collections.abc import Iterable, Sequence
from fractions import Fraction

from .errors import ResourceLimitError, VerificationError
from .linalg import Echelon, axpy
from .perm import Permutation, in_S_infty_n, inv_code, left_inversion_sets
from .polynomial import SparsePoly, trim

__all__ = [
    "Key", "Vec", "Shape", "wedge_action_e_pq", "act", "key_weight",
    "WeightModule", "QuotientModule", "generate_submodule", "full_module",
    "one_dim", "kp_columns", "kp_shape", "highest_vector", "kp_module",
    "character", "tensor", "tensor_vectors", "coinvariant_hom_dim",
    "submodule", "quotient", "check_invariants", "max_dim",
]

Key = tuple[tuple[int, ...], ...]
Vec = dict
Shape = tuple[tuple[int, int], ...]


def max_dim() -> int:
    """Ceiling on constructed module dimensions (``SCHUBKP_MAX_DIM``, default 20000)."""
    return int(os.environ.get("SCHUBKP_MAX_DIM", "20000"))


def _wedge_replace(subset: tuple[int, ...], p: int, q: int) -> tuple[int, tuple[int, ...]] | None:
    if q not in subset or p in subset:
        return None
    sign = -1 if sum(1 for s in subset if p < s < q) % 2 else 1
    return sign, tuple(sorted(p if s == q else s for s in subset))


def wedge_action_e_pq(key: Key, p: int, q: int) -> Vec:
    """``e_pq`` applied to one ambient basis vector."""
    if not p < q:
        raise ValueError(f"need p < q, got ({p}, {q})")
    out: Vec = {}
    for col, subset in enumerate(key):
        hit = _wedge_replace(subset, p, q)
        if hit is None:
            continue
        sign, new = hit
        k = key[:col] + (new,) + key[col + 1:]
        s = out.get(k, 0) + sign
        if s:
            out[k] = s
        else:
            del out[k]
    return out


def act(vec: Vec, p: int, q: int) -> Vec:
    out: Vec = {}
    for key, c in vec.items():
        axpy(out, c, wedge_action_e_pq(key, p, q))
    return out


def key_weight(key: Key, n: int, offset: Sequence[int] | None = None) -> tuple[int, ...]:
    w = list(offset) if offset is not None else [0] * n
    for subset in key:
        for i in subset:
            w[i - 1] += 1
    return tuple(w)


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(p, q) for p in range(1, n + 1) for q in range(p + 1, n + 1)]


def _check_key(key: Key, shape: Shape) -> None:
    if len(key) != len(shape):
        raise ValueError(f"key {key} does not match shape {shape}")
    for subset, (k, m) in zip(key, shape):
        if len(subset) != k or list(subset) != sorted(set(subset)) or (subset and not 1 <= subset[0] <= subset[-1] <= m):
            raise ValueError(f"key {key} does not match shape {shape}")


class _ModuleOps:
    """Coordinate-level operations shared by sub- and quotient modules."""

    n: int
    weights: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.weights)

    def character(self) -> SparsePoly:
        terms: dict[tuple[int, ...], int] = {}
        for wt in self.weights:
            k = trim(wt)
            terms[k] = terms.get(k, 0) + 1
        return SparsePoly(terms)

    def action(self, p: int, q: int) -> list[dict[int, Fraction]]:
        """Matrix of ``e_pq`` in module coordinates: column ``j`` is the image of basis vector ``j``."""
        cache = self._actions
        if (p, q) not in cache:
            cache[(p, q)] = [self._image_coords(j, p, q) for j in range(self.dim)]
        return cache[(p, q)]

    def weight_indices(self, weight: Sequence[int]) -> list[int]:
        weight = tuple(weight)
        return [j for j, wt in enumerate(self.weights) if wt == weight]


class WeightModule(_ModuleOps):
    """
    A submodule of a tensor-wedge ambient space, stored as a reduced
    row-echelon basis (each basis vector is 1 at its pivot key and 0 at the
    other pivots).
    """

    def __init__(self, n: int, shape: Shape, basis: Iterable[Vec], offset: Sequence[int] | None = None):
        self.n = n
        self.shape = tuple(tuple(f) for f in shape)
        self.offset = tuple(offset) if offset is not None else (0,) * n
        if len(self.offset) != n:
            raise ValueError(f"offset {self.offset} has wrong length for rank {n}")
        rows = sorted((dict(b) for b in basis if b), key=min)
        self.basis = tuple(rows)
        self.pivots = tuple(min(b) for b in rows)
        self._index = {piv: j for j, piv in enumerate(self.pivots)}
        self.weights = tuple(key_weight(piv, n, self.offset) for piv in self.pivots)
        self._actions: dict = {}

    def __repr__(self):
        return f"WeightModule(n={self.n}, shape={self.shape}, dim={self.dim})"

    def coords(self, vec: Vec) -> dict[int, Fraction]:
        """Coordinates of an ambient vector; raises if it is not in the module."""
        out = {}
        residual = dict(vec)
        for k in list(vec):
            j = self._index.get(k)
            if j is not None:
                a = vec[k]
                out[j] = a
                axpy(residual, -a, self.basis[j])
        if residual:
            raise ValueError("vector is not in the module")
        return out

    def contains(self, vec: Vec) -> bool:
        try:
            self.coords(vec)
        except ValueError:
            return False
        return True

    def vector(self, coords: dict[int, Fraction]) -> Vec:
        out: Vec = {}
        for j, a in coords.items():
            axpy(out, a, self.basis[j])
        return out

    def _image_coords(self, j: int, p: int, q: int) -> dict[int, Fraction]:
        image = act(self.basis[j], p, q)
        try:
            return self.coords(image)
        except ValueError:
            raise VerificationError(f"module not closed under e_{p}{q}") from None

    def echelon(self) -> Echelon:
        ech = Echelon()
        for piv, b in zip(self.pivots, self.basis):
            ech.rows[piv] = dict(b)
        return ech


class QuotientModule(_ModuleOps):
    """``parent / sub``, with coordinates on a complement of ``sub`` inside ``parent``."""

    def __init__(self, parent: WeightModule, sub: WeightModule):
        if sub.shape != parent.shape or sub.offset != parent.offset:
            raise ValueError("submodule lives in a different ambient space")
        self.n = parent.n
        self.parent = parent
        self.sub = sub
        self._sub_ech = sub.echelon()
        self._comp = Echelon()
        for b in parent.basis:
            r, _ = self._sub_ech.reduce(b)
            self._comp.add(r)
        for b in sub.basis:
            if not parent.contains(b):
                raise ValueError("not a submodule of the parent")
        self.pivots = tuple(self._comp.pivots)
        self.representatives = tuple(self._comp.rows[p] for p in self.pivots)
        self._index = {piv: j for j, piv in enumerate(self.pivots)}
        self.weights = tuple(key_weight(p, self.n, parent.offset) for p in self.pivots)
        if self.dim + sub.dim != parent.dim:
            raise VerificationError("quotient dimension mismatch")
        self._actions: dict = {}

    def __repr__(self):
        return f"QuotientModule(n={self.n}, dim={self.dim})"

    def project(self, vec: Vec) -> dict[int, Fraction]:
        """Coordinates of the class of a parent vector."""
        r, _ = self._sub_ech.reduce(vec)
        coords = self._comp.coordinates(r)
        return {self._index[k]: a for k, a in coords.items()}

    def _image_coords(self, j: int, p: int, q: int) -> dict[int, Fraction]:
        try:
            return self.project(act(self.representatives[j], p, q))
        except ValueError:
            raise VerificationError(f"quotient not closed under e_{p}{q}") from None


def generate_submodule(n: int, shape: Shape, seeds: Iterable[Vec], offset: Sequence[int] | None = None,
                       limit: int | None = None) -> WeightModule:
    """
    The ``U(b)``-submodule generated by ``seeds``: split them into weight
    components, then close the span under ``e_pq`` breadth first, applying
    the ``e_pq`` in lexicographic order of ``(p, q)``.
    """
    limit = max_dim() if limit is None else limit
    shape = tuple(tuple(f) for f in shape)
    pairs = _pairs(n)
    spaces: dict[tuple[int, ...], Echelon] = {}
    queue: deque[Vec] = deque()
    for seed in seeds:
        parts: dict[tuple[int, ...], Vec] = {}
        for key, c in seed.items():
            _check_key(key, shape)
            parts.setdefault(key_weight(key, n), {})[key] = c
        queue.extend(parts.values())
    total = 0
    while queue:
        v = queue.popleft()
        wt = key_weight(next(iter(v)), n)
        ech = spaces.setdefault(wt, Echelon())
        residual, _ = ech.reduce(v)
        if not residual:
            continue
        ech.add(residual)
        total += 1
        if total > limit:
            raise ResourceLimitError(f"submodule dimension exceeds {limit}")
        for p, q in pairs:
            image = act(residual, p, q)
            if image:
                queue.append(image)
    basis = [row for ech in spaces.values() for row in ech.rows.values()]
    return WeightModule(n, shape, basis, offset)


def full_module(n: int, shape: Shape, offset: Sequence[int] | None = None, limit: int | None = None) -> WeightModule:
    """The whole ambient space ``wedge^{k_1} K^{m_1} (x) ...`` as a module."""
    limit = max_dim() if limit is None else limit
    for _, m in shape:
        if m > n:
            raise ValueError(f"factor K^{m} exceeds rank {n}")
    dim = 1
    for k, m in shape:
        dim *= _binom(m, k)
    if dim > limit:
        raise ResourceLimitError(f"ambient dimension {dim} exceeds {limit}")
    factors = [list(itertools.combinations(range(1, m + 1), k)) for k, m in shape]
    basis = [{key: 1} for key in itertools.product(*factors)]
    return WeightModule(n, shape, basis, offset)


def _binom(m: int, k: int) -> int:
    return math.comb(m, k) if 0 <= k <= m else 0


def one_dim(weight: Sequence[int]) -> WeightModule:
    """``K_lambda``: one basis vector of the given weight, every ``e_pq`` acting by zero."""
    weight = tuple(weight)
    return WeightModule(len(weight), (), [{(): 1}], offset=weight)


def kp_columns(w: Permutation) -> list[int]:
    """Positions ``j`` with ``l_j(w) > 0``; these index the tensor factors of the KP module."""
    return [j for j, s in enumerate(left_inversion_sets(w), start=1) if s]


def kp_shape(w: Permutation, n: int) -> Shape:
    return tuple((len(s), n) for s in left_inversion_sets(w) if s)


def highest_vector(w: Permutation) -> Vec:
    """``u_w``: the tensor product over ``j`` of the wedges of ``{i < j : w(i) > w(j)}``."""
    return {tuple(s for s in left_inversion_sets(w) if s): 1}


def kp_module(w: Permutation, n: int, check: bool = True) -> WeightModule:
    """
    The Kraskiewicz-Pragacz module ``U(b) u_w``.

    With ``check`` the weight of ``u_w`` and the character are compared with
    ``inv(w)`` and the Schubert polynomial.
    """
    if not in_S_infty_n(w, n):
        raise ValueError(f"{w} is not in S_inf^({n})")
    uw = highest_vector(w)
    key = next(iter(uw))
    if any(i > n for s in key for i in s):
        raise VerificationError(f"u_{w} uses an index above {n}")
    module = generate_submodule(n, kp_shape(w, n), [uw])
    if check:
        from .schubert import schubert
        if key_weight(key, n) != inv_code(w, n):
            raise VerificationError(f"weight of u_{w} differs from inv({w})")
        if module.character() != schubert(w, n):
            raise VerificationError(f"character of S_{w} differs from its Schubert polynomial")
    return module


def character(module) -> SparsePoly:
    return module.character()


def tensor_vectors(a: Vec, b: Vec) -> Vec:
    return {ka + kb: ca * cb for ka, ca in a.items() for kb, cb in b.items()}


def tensor(*modules: WeightModule, limit: int | None = None) -> WeightModule:
    """
    Tensor product inside the concatenated ambient space.  Products of
    reduced echelon bases are again reduced echelon bases, so no
    elimination is needed.
    """
    limit = max_dim() if limit is None else limit
    if not modules:
        raise ValueError("need at least one module")
    n = modules[0].n
    if any(m.n != n for m in modules):
        raise ValueError("all factors must have the same rank")
    dim = 1
    for m in modules:
        dim *= m.dim
    if dim > limit:
        raise ResourceLimitError(f"tensor dimension {dim} exceeds {limit}")
    basis = [{(): 1}]
    shape: tuple = ()
    offset = [0] * n
    for m in modules:
        basis = [tensor_vectors(a, b) for a in basis for b in m.basis]
        shape += m.shape
        offset = [x + y for x, y in zip(offset, m.offset)]
    return WeightModule(n, shape, basis, offset)


def submodule(module: WeightModule, generators: Iterable[Vec]) -> WeightModule:
    generators = list(generators)
    for g in generators:
        if not module.contains(g):
            raise ValueError("generator is not in the module")
    return generate_submodule(module.n, module.shape, generators, module.offset)


def quotient(module: WeightModule, sub: WeightModule) -> QuotientModule:
    return QuotientModule(module, sub)


def coinvariant_hom_dim(module, weight: Sequence[int]) -> int:
    """
    ``dim Hom_b(M, K_lambda)``: the dimension of the weight-``lambda`` part of
    ``M / sum_{p<q} e_pq M``.
    """
    weight = tuple(weight)
    n = module.n
    if len(weight) != n:
        raise ValueError(f"weight {weight} has wrong length for rank {n}")
    target = set(module.weight_indices(weight))
    if not target:
        return 0
    ech = Echelon()
    for p, q in _pairs(n):
        source = list(weight)
        source[p - 1] -= 1
        source[q - 1] += 1
        cols = module.action(p, q)
        for j in module.weight_indices(source):
            ech.add(cols[j])
    return len(target) - len(ech)


def _matmul(a: list[dict], b: list[dict], dim: int) -> list[dict]:
    out = []
    for col in b:
        acc: dict = {}
        for k, x in col.items():
            axpy(acc, x, a[k])
        out.append(acc)
    return out


def check_invariants(module) -> list[str]:
    """
    Weight shift by ``eps_p - eps_q``, the commutation relations
    ``[e_pq, e_rs] = delta_qr e_ps - delta_sp e_rq`` and nilpotency, all as
    exact matrix identities.  Returns the list of violations.
    """
    n, dim = module.n, module.dim
    problems = []
    pairs = _pairs(n)
    mats = {pq: module.action(*pq) for pq in pairs}
    for (p, q), cols in mats.items():
        for j, col in enumerate(cols):
            expect = list(module.weights[j])
            expect[p - 1] += 1
            expect[q - 1] -= 1
            for i in col:
                if list(module.weights[i]) != expect:
                    problems.append(f"e_{p}{q} breaks the weight grading at column {j}")
        power = cols
        for _ in range(dim):
            if not any(power):
                break
            power = _matmul(cols, power, dim)
        if any(power):
            problems.append(f"e_{p}{q} is not nilpotent")
    for (p, q) in pairs:
        for (r, s) in pairs:
            lhs = _matmul(mats[(p, q)], mats[(r, s)], dim)
            rhs = _matmul(mats[(r, s)], mats[(p, q)], dim)
            comm = []
            for x, y in zip(lhs, rhs):
                d = dict(x)
                axpy(d, -1, y)
                comm.append(d)
            if q == r:
                for c, e in zip(comm, mats[(p, s)]):
                    axpy(c, -1, e)
            if s == p:
                for c, e in zip(comm, mats[(r, q)]):
                    axpy(c, 1, e)
            if any(comm):
                problems.append(f"[e_{p}{q}, e_{r}{s}] relation fails")
    return problems
