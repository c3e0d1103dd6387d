"""
Filtrations of tensor products of KP modules by KP modules.

* :func:`monk_filtration` builds the chain of ``S_w (x) S_{s_nu}`` from the
  generators ``v_pq = e_pq^{m_pq(w)} (u_w (x) u_p)`` and checks every step,
  including the maps ``phi_pq`` onto ``S_{w t_pq}``.
* :func:`iterated_monk_filtration` refines a filtration through further
  factors ``S_{s_nu}`` by transporting the Monk generators along the
  subquotient isomorphisms.
* :func:`t_w_module` builds ``T_w``, embeds ``S_w`` through ``u_w`` and
  expands the cokernel.
* :func:`tensor_kp_verify` checks ``S_w (x) S_v`` at the character level and
  through coinvariant Hom dimensions.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field

from .errors import VerificationError
from .linalg import Echelon, axpy
from .perm import (
    Permutation, enumerate_Sn, in_S_infty_n, inv_code, left_inversion_sets,
    lex_gt_inverse, longest, m_pq, monk_set, simple, transposition,
)
from .polynomial import SparsePoly
from .schubert import (
    expand_in_schubert, monk_product, schubert, t_w_character,
    t_w_multiplicities,
)
from .weightmod import (
    QuotientModule, Vec, WeightModule, act, coinvariant_hom_dim,
    full_module, generate_submodule, highest_vector, key_weight, kp_columns,
    kp_module, kp_shape, tensor, tensor_vectors,
)

__all__ = [
    "FiltrationStep", "FiltrationCertificate", "v_pq", "generation_path",
    "PhiMap", "phi_pq", "ordering_ok", "monk_order", "cyclic_isomorphic",
    "monk_filtration", "iterated_monk_filtration", "TwResolution",
    "t_w_module", "TensorReport", "tensor_kp_verify",
]


def _power(vec: Vec, p: int, q: int, m: int) -> Vec:
    for _ in range(m):
        vec = act(vec, p, q)
    return vec


def _require_pair(w: Permutation, nu: int, p: int, q: int) -> None:
    if (p, q) not in monk_set(w, nu):
        raise ValueError(f"({p}, {q}) is not a Monk pair of {w} at nu={nu}")


def v_pq(w: Permutation, nu: int, p: int, q: int, n: int) -> Vec:
    """``(e_pq^{m_pq(w)} u_w) (x) u_p`` inside ``S_w (x) S_{s_nu}``."""
    _require_pair(w, nu, p, q)
    seed = tensor_vectors(highest_vector(w), {((p,),): 1})
    out = _power(seed, p, q, m_pq(w, p, q))
    if not out:
        raise VerificationError(f"v_{p}{q} vanishes for {w}")
    return out


def generation_path(w: Permutation, nu: int, p: int) -> list[int]:
    """
    Start at ``r_0 = p`` and repeatedly step to the position right of the
    current one whose value is the smallest value above the current value,
    stopping once past ``nu``.
    """
    if not 1 <= p <= nu:
        raise ValueError(f"need 1 <= p <= nu, got p={p}, nu={nu}")
    path = [p]
    bound = max(nu, w.size) + 1
    while path[-1] <= nu:
        r = path[-1]
        candidates = [s for s in range(r + 1, bound + 1) if w(s) > w(r)]
        path.append(min(candidates, key=w))
    k = len(path) - 1
    if (path[k - 1], path[k]) not in monk_set(w, nu):
        raise VerificationError(f"path {path} does not end in a Monk pair")
    if m_pq(w, path[k - 1], path[k]) != 0:
        raise VerificationError(f"path {path} ends with a nonzero exponent")
    if k >= 2 and m_pq(w, p, path[k - 1]) != 0:
        raise VerificationError(f"m_(p, r_(k-1)) is nonzero along {path}")
    return path


def _sort_sign(seq) -> int:
    inversions = sum(1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


class PhiMap:
    """
    The map ``S_w (x) K^n -> (x)_j wedge^{l_j(w t_pq)} K^n``: split the wedge
    at position ``q`` into parts of sizes ``b`` and ``c``, send the ``b``
    part to position ``p`` and wedge the ``c`` part together with the wedge
    at ``p`` and the ``K^n`` factor into position ``q``.

    Splitting ``u_S`` gives ``sum sgn * u_B' (x) u_C'`` with ``sgn`` the sign
    sorting ``B' + C'``; merging wedges and sorts.
    """

    def __init__(self, w: Permutation, p: int, q: int, n: int):
        self.w, self.p, self.q, self.n = w, p, q, n
        self.label = w * transposition(p, q)
        self.a = sum(1 for r in range(1, p) if w(r) > w(p))
        self.b = sum(1 for r in range(1, p) if w(r) > w(q))
        self.c = sum(1 for r in range(p + 1, q) if w(r) > w(q))
        self.source_columns = kp_columns(w)
        self.target_columns = kp_columns(self.label)
        self.target_shape = kp_shape(self.label, n)
        sets_q = left_inversion_sets(w)[q - 1] if q <= w.size else ()
        if len(sets_q) != self.b + self.c:
            raise VerificationError(f"l_q(w) != b + c for {w}, ({p}, {q})")
        self._cache: dict = {}

    def image_of_key(self, key) -> Vec:
        if key in self._cache:
            return self._cache[key]
        *cols, last = key
        (r,) = last
        slots = dict(zip(self.source_columns, cols))
        A = slots.pop(self.p, ())
        BC = slots.pop(self.q, ())
        out: Vec = {}
        for Bp in itertools.combinations(BC, self.b):
            Cp = tuple(x for x in BC if x not in Bp)
            merged = A + Cp + (r,)
            if len(set(merged)) < len(merged):
                continue
            sign = _sort_sign(Bp + Cp) * _sort_sign(merged)
            target = dict(slots)
            if Bp:
                target[self.p] = Bp
            target[self.q] = tuple(sorted(merged))
            if sorted(target) != self.target_columns:
                raise VerificationError("phi lands outside the target shape")
            k = tuple(target[j] for j in self.target_columns)
            s = out.get(k, 0) + sign
            if s:
                out[k] = s
            else:
                del out[k]
        self._cache[key] = out
        return out

    def __call__(self, vec: Vec) -> Vec:
        out: Vec = {}
        for key, c in vec.items():
            axpy(out, c, self.image_of_key(key))
        return out


def phi_pq(w: Permutation, nu: int, p: int, q: int, n: int) -> PhiMap:
    _require_pair(w, nu, p, q)
    return PhiMap(w, p, q, n)


def monk_order(w: Permutation, pairs) -> list[tuple[int, int]]:
    """Sort Monk pairs by ``(w(p), w(q))``."""
    return sorted(pairs, key=lambda pq: (w(pq[0]), w(pq[1])))


def ordering_ok(w: Permutation, order) -> bool:
    """No ``i < j`` with ``w(p_j) <= w(p_i)`` and ``w(q_j) <= w(q_i)``."""
    return not any(
        w(pj) <= w(pi) and w(qj) <= w(qi)
        for (i, (pi, qi)), (j, (pj, qj)) in itertools.combinations(enumerate(order), 2)
    )


def _coord_closure_dim(parts) -> int:
    """
    Dimension of the submodule of a direct sum generated by one vector.
    ``parts`` lists ``(module, coords)`` summands; only action matrices are used.
    """
    modules = [m for m, _ in parts]
    n = modules[0].n
    pairs = [(p, q) for p in range(1, n + 1) for q in range(p + 1, n + 1)]
    seed = {(s, j): a for s, (_, coords) in enumerate(parts) for j, a in coords.items() if a}
    ech = Echelon()
    queue = deque([seed])
    while queue:
        v = queue.popleft()
        residual, _ = ech.reduce(v)
        if not residual:
            continue
        ech.add(residual)
        for p, q in pairs:
            image: dict = {}
            for (s, j), a in residual.items():
                for i, b in modules[s].action(p, q)[j].items():
                    axpy(image, a * b, {(s, i): 1})
            if image:
                queue.append(image)
    return len(ech)


def cyclic_isomorphic(m1, g1: dict, m2, g2: dict) -> bool:
    """
    Whether ``x g1 -> x g2`` defines an isomorphism between the cyclic
    modules ``m1 = U(b) g1`` and ``m2 = U(b) g2``: the submodule of the direct
    sum generated by ``(g1, g2)`` must have the dimension of each factor.
    """
    if m1.dim != m2.dim:
        return False
    return (_coord_closure_dim([(m1, g1)]) == m1.dim
            and _coord_closure_dim([(m2, g2)]) == m2.dim
            and _coord_closure_dim([(m1, g1), (m2, g2)]) == m1.dim)


@dataclass
class FiltrationStep:
    label: Permutation
    generator: Vec
    submodule: WeightModule            # F_i
    quotient_character: SparsePoly     # ch(F_i / F_{i+1})
    pair: tuple[int, int] | None = None
    checks: dict[str, bool] = field(default_factory=dict)
    phi_image_dim: int | None = None
    phi_next_dim: int | None = None    # dim phi(F_{i+1}), recorded only

    @property
    def dim(self) -> int:
        return self.submodule.dim


@dataclass
class FiltrationCertificate:
    """A chain ``F_0 = ambient > F_1 > ... > F_r = 0`` with labelled, checked subquotients."""

    base: Permutation
    factors: tuple[int, ...]
    n: int
    ambient: WeightModule
    steps: list[FiltrationStep]
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def labels(self) -> list[Permutation]:
        return [s.label for s in self.steps]

    @property
    def order(self) -> list[tuple[int, int] | None]:
        return [s.pair for s in self.steps]

    @property
    def passed(self) -> bool:
        return all(self.checks.values()) and all(all(s.checks.values()) for s in self.steps)

    def failures(self) -> list[str]:
        out = [name for name, ok in self.checks.items() if not ok]
        for i, s in enumerate(self.steps):
            out += [f"step {i} ({s.label}): {name}" for name, ok in s.checks.items() if not ok]
        return out


def _build_chain(ambient: WeightModule, labelled) -> list[tuple]:
    """``(label, generator, pair, F_i)`` with ``F_i`` generated by the generators from ``i`` on."""
    gens = [g for _, g, _ in labelled]
    chain = []
    for i, (label, g, pair) in enumerate(labelled):
        chain.append((label, g, pair, generate_submodule(ambient.n, ambient.shape, gens[i:], ambient.offset)))
    return chain


def _check_chain(cert: FiltrationCertificate, expected_labels: dict) -> None:
    n, ambient = cert.n, cert.ambient
    steps = cert.steps
    cert.checks["generation"] = bool(steps) and steps[0].submodule.dim == ambient.dim
    zero = WeightModule(n, ambient.shape, [], ambient.offset)
    total = SparsePoly()
    for i, step in enumerate(steps):
        nxt = steps[i + 1].submodule if i + 1 < len(steps) else zero
        F = step.submodule
        expected = schubert(step.label, n)
        q = QuotientModule(F, nxt)
        step.quotient_character = q.character()
        total = total + step.quotient_character
        gen_weight = key_weight(next(iter(step.generator)), n, ambient.offset)
        step.checks["nested"] = all(F.contains(b) for b in nxt.basis) and nxt.dim < F.dim
        step.checks["weight"] = in_S_infty_n(step.label, n) and gen_weight == inv_code(step.label, n)
        step.checks["char"] = step.quotient_character == expected
        step.checks["dim"] = q.dim == expected.at_ones()
        target = kp_module(step.label, n, check=False)
        step.checks["iso"] = cyclic_isomorphic(
            q, q.project(step.generator), target, target.coords(highest_vector(step.label)))
    cert.checks["telescoping"] = total == ambient.character()
    cert.checks["labels"] = Counter(cert.labels) == Counter(expected_labels)


def _raise_if_failed(cert: FiltrationCertificate, strict: bool) -> FiltrationCertificate:
    if strict and not cert.passed:
        raise VerificationError(
            f"filtration of S_{cert.base} x {cert.factors} failed: {', '.join(cert.failures())}")
    return cert


def monk_filtration(w: Permutation, nu: int, n: int, strict: bool = True) -> FiltrationCertificate:
    """
    The KP filtration of ``S_w (x) S_{s_nu}`` with ``F_i`` generated by
    ``v_{p_j q_j}``, ``j >= i``, the Monk pairs sorted by ``(w(p), w(q))``.

    Each step checks the subquotient character and dimension against
    ``S_{w t_pq}``, an explicit isomorphism with ``S_{w t_pq}``, and that
    ``phi_pq`` maps ``v_pq`` onto a nonzero multiple of ``u_{w t_pq}`` and
    ``F_i`` onto ``S_{w t_pq}``.
    """
    if not 1 <= nu <= n - 1:
        raise ValueError(f"need 1 <= nu <= {n - 1}, got {nu}")
    sw = kp_module(w, n)
    ambient = tensor(sw, kp_module(simple(nu), n))
    order = monk_order(w, monk_set(w, nu))
    labelled = [(w * transposition(p, q), v_pq(w, nu, p, q, n), (p, q)) for p, q in order]
    steps = [FiltrationStep(label, g, F, SparsePoly(), pair)
             for label, g, pair, F in _build_chain(ambient, labelled)]
    cert = FiltrationCertificate(w, (nu,), n, ambient, steps)
    cert.checks["ordering"] = ordering_ok(w, order)
    cert.checks["in_ambient"] = all(ambient.contains(g) for _, g, _ in labelled)
    _check_chain(cert, monk_product(w, nu, n))
    for i, step in enumerate(steps):
        phi = PhiMap(w, *step.pair, n)
        target = kp_module(step.label, n, check=False)
        image = phi(step.generator)
        uw = highest_vector(step.label)
        (ukey,) = uw
        step.checks["phi_generator"] = bool(image) and set(image) == {ukey}
        img = Echelon()
        for b in step.submodule.basis:
            img.add(phi(b))
        step.phi_image_dim = len(img)
        step.checks["phi_image"] = (
            len(img) == target.dim and all(target.contains(r) for r in img.rows.values()))
        nxt = Echelon()
        if i + 1 < len(steps):
            for b in steps[i + 1].submodule.basis:
                nxt.add(phi(b))
        step.phi_next_dim = len(nxt)
    return _raise_if_failed(cert, strict)


def iterated_monk_filtration(v: Permutation, nus, n: int, strict: bool = True) -> FiltrationCertificate:
    """
    KP filtration of ``S_v (x) S_{s_nu_1} (x) ... (x) S_{s_nu_k}``.

    Each factor refines every step of the current chain: a step with label
    ``u`` and generator ``g`` is replaced by the steps generated by
    ``e_pq^{m_pq(u)} (g (x) u_p)`` over the Monk pairs of ``u``, in Monk order.
    """
    nus = tuple(nus)
    for nu in nus:
        if not 1 <= nu <= n - 1:
            raise ValueError(f"need 1 <= nu <= {n - 1}, got {nu}")
    ambient = kp_module(v, n)
    chain = [(v, highest_vector(v), None)]
    expected = SparsePoly(schubert(v, n).terms)
    for nu in nus:
        ambient = tensor(ambient, kp_module(simple(nu), n))
        refined = []
        for u, g, _ in chain:
            for p, q in monk_order(u, monk_set(u, nu)):
                gen = _power(tensor_vectors(g, {((p,),): 1}), p, q, m_pq(u, p, q))
                refined.append((u * transposition(p, q), gen, (p, q)))
        chain = refined
        expected = expected * schubert(simple(nu))
    steps = [FiltrationStep(label, g, F, SparsePoly(), pair)
             for label, g, pair, F in _build_chain(ambient, chain)]
    cert = FiltrationCertificate(v, nus, n, ambient, steps)
    _check_chain(cert, expand_in_schubert(expected, n))
    return _raise_if_failed(cert, strict)


@dataclass
class TwResolution:
    """``0 -> S_w -> T_w -> N -> 0`` with the checks performed on it."""

    w: Permutation
    n: int
    T: WeightModule
    S: WeightModule
    N: QuotientModule
    cokernel_expansion: dict
    multiplicities: dict
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def t_w_module(w: Permutation, n: int, strict: bool = True) -> TwResolution:
    """
    ``T_w = (x)_{2<=i<=n} wedge^{l_i(w)} K^{i-1}`` with ``S_w`` embedded as the
    submodule generated by ``u_w`` and the cokernel ``N``.
    """
    if w.size > n:
        raise ValueError(f"{w} is not in S_{n}")
    li = [sum(1 for j in range(1, i) if w(j) > w(i)) for i in range(1, n + 1)]
    shape = tuple((li[i - 1], i - 1) for i in range(2, n + 1) if li[i - 1])
    T = full_module(n, shape)
    uw = highest_vector(w)
    S = generate_submodule(n, shape, [uw])
    N = QuotientModule(T, S)
    mult = t_w_multiplicities(w, n)
    coker = expand_in_schubert(N.character(), n)
    rest = dict(mult)
    rest[w] = rest.get(w, 0) - 1
    rest = {u: c for u, c in rest.items() if c}
    checks = {
        "character_T": T.character() == t_w_character(w, n),
        "embedding": T.contains(uw) and S.character() == schubert(w, n),
        "T_expansion": expand_in_schubert(T.character(), n) == mult,
        "n_ww": mult.get(w) == 1,
        "cokernel_nonnegative": all(c > 0 for c in coker.values()),
        "cokernel_support": all(u.size <= n and lex_gt_inverse(u, w) for u in coker),
        "cokernel_multiplicities": coker == dict(sorted(rest.items())),
    }
    res = TwResolution(w, n, T, S, N, coker, mult, checks)
    if strict and not res.passed:
        bad = [k for k, ok in checks.items() if not ok]
        raise VerificationError(f"T_w checks failed for {w}: {', '.join(bad)}")
    return res


@dataclass
class TensorReport:
    w: Permutation
    v: Permutation
    n: int
    coefficients: dict
    hom_dims: dict
    character_ok: bool
    hom_ok: bool

    @property
    def passed(self) -> bool:
        return self.character_ok and self.hom_ok


def tensor_kp_verify(w: Permutation, v: Permutation, n: int, strict: bool = True) -> TensorReport:
    """
    Expand ``ch(S_w (x) S_v)`` in Schubert polynomials and, for every ``u`` in
    ``S_n``, compare its coefficient with ``dim Hom_b(S_w (x) S_v (x) S_{w0 u}, K_rho)``.
    """
    M = tensor(kp_module(w, n), kp_module(v, n))
    coeffs = expand_in_schubert(M.character(), n)
    char_ok = all(c > 0 for c in coeffs.values()) and M.character() == schubert(w) * schubert(v)
    w0 = longest(n)
    rho = tuple(range(n - 1, -1, -1))
    homs = {}
    for u in enumerate_Sn(n):
        homs[u] = coinvariant_hom_dim(tensor(M, kp_module(w0 * u, n)), rho)
    hom_ok = all(homs[u] == coeffs.get(u, 0) for u in homs)
    report = TensorReport(w, v, n, coeffs, homs, char_ok, hom_ok)
    if strict and not report.passed:
        raise VerificationError(f"tensor check failed for S_{w} x S_{v}")
    return report
