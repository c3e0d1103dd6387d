"""
The verification sweeps, one function per acceptance criterion.

At rank ``n`` the large sweeps run over ``S_n`` and the small ones
(exhaustive pairs, pairing, Schur alphabets) over ``S_{n-1}``; ``n = 4``
reproduces the acceptance scale exactly.
"""

from __future__ import annotations

import itertools
import os
import time
from dataclasses import dataclass, field

from .errors import ResourceLimitError
from .kpfiltration import (
    PhiMap, monk_filtration, t_w_module, tensor_kp_verify, v_pq,
)
from .perm import (
    MAX_RANK, Permutation, enumerate_S_infty_n, enumerate_Sn,
    m_pq, monk_set, simple, transposition,
)
from .polynomial import Partition, elementary_symmetric, monomial
from .schubert import (
    cauchy_check, expand_in_schubert, lex_support_check, monk_product,
    pairing, schubert, schur_positivity_check,
)
from .weightmod import act, check_invariants, highest_vector, kp_module, tensor

__all__ = ["CriterionResult", "ModuleLog", "CRITERIA", "run_criterion", "verify_suite", "suite_max_rank"]

# criterion 1 also sweeps S_inf^(n-1) up to this length
INFINITE_SWEEP_LENGTH = 4
SCHUR_PARTITIONS = ((1,), (2,), (1, 1), (2, 1))


def suite_max_rank() -> int:
    return int(os.environ.get("SCHUBKP_SUITE_MAX_RANK", str(MAX_RANK)))


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    checked: int
    seconds: float
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.name} ({self.checked} checks, {self.seconds:.2f}s)"


class ModuleLog:
    """Collects every module built by the sweeps so criterion 10 can inspect them."""

    def __init__(self):
        self.modules = []

    def add(self, label, module):
        self.modules.append((label, module))


def _fail(failures, msg):
    if len(failures) < 20:
        failures.append(msg)


def character_theorem(n: int, log: ModuleLog):
    failures, count = [], 0
    cases = [(w, n) for w in enumerate_Sn(n)]
    if n > 1:
        cases += [(w, n - 1) for w in enumerate_S_infty_n(n - 1, INFINITE_SWEEP_LENGTH)]
    for w, rank in cases:
        m = kp_module(w, rank, check=False)
        log.add(f"S_{w} (n={rank})", m)
        count += 1
        if m.character() != schubert(w, rank):
            _fail(failures, f"ch(S_{w}) != Schubert polynomial at n={rank}")
    return count, failures


def monk_formula(n: int, log: ModuleLog):
    failures, count = [], 0
    for w in enumerate_Sn(n):
        for nu in range(1, n):
            count += 1
            if monk_product(w, nu, n) != expand_in_schubert(schubert(w) * schubert(simple(nu)), n):
                _fail(failures, f"Monk's rule fails for {w}, nu={nu}")
    return count, failures


def cauchy_and_pairing(n: int, log: ModuleLog):
    failures, count = [], 0
    for k in range(2, min(n, 6) + 1):
        count += 1
        if not cauchy_check(k):
            _fail(failures, f"Cauchy identity fails at n={k}")
    small = max(n - 1, 1)
    boxes = [range(small - i + 1) for i in range(1, small)]
    rho = [small - i for i in range(1, small)]
    for alpha in itertools.product(*boxes):
        f = monomial([r - a for r, a in zip(rho, alpha)])
        for beta in itertools.product(*boxes):
            g = monomial(())
            for i, b in enumerate(beta, start=1):
                g = g * elementary_symmetric(b, small - i)
            count += 1
            if pairing(f, g, small) != (1 if alpha == beta else 0):
                _fail(failures, f"pairing of x^(rho-{alpha}) with e_{beta} at n={small}")
    return count, failures


def monk_filtrations(n: int, log: ModuleLog):
    failures, count = [], 0
    for w in enumerate_Sn(n):
        for nu in range(1, n):
            count += 1
            cert = monk_filtration(w, nu, n, strict=False)
            log.add(f"S_{w} x S_s{nu}", cert.ambient)
            for i, step in enumerate(cert.steps):
                log.add(f"F_{i} of S_{w} x S_s{nu}", step.submodule)
            if not cert.passed:
                _fail(failures, f"{w}, nu={nu}: {cert.failures()}")
    return count, failures


def _phi_sweep(w: Permutation, n: int, failures) -> int:
    count = 0
    for nu in range(1, n):
        pairs = monk_set(w, nu)
        gens = {pq: v_pq(w, nu, *pq, n) for pq in pairs}
        for p, q in pairs:
            phi = PhiMap(w, p, q, n)
            (ukey,) = highest_vector(w * transposition(p, q))
            image = phi(gens[(p, q)])
            count += 1
            if not image or set(image) != {ukey}:
                _fail(failures, f"phi_{p}{q}(v_{p}{q}) not a nonzero multiple of u_wt for {w}")
            for (pp, qq), g in gens.items():
                count += 1
                if phi(g) and not (w(pp) <= w(p) and w(qq) <= w(q)):
                    _fail(failures, f"phi_{p}{q}(v_{pp}{qq}) != 0 for {w}, nu={nu}")
    return count


def phi_properties(n: int, log: ModuleLog):
    failures, count = [], 0
    small = n - 1
    if small >= 2:
        for w in enumerate_Sn(small):
            count += _phi_sweep(w, small, failures)
    for w in enumerate_Sn(n):
        count += _phi_sweep(w, n, failures)
    return count, failures


def t_w_resolutions(n: int, log: ModuleLog):
    failures, count = [], 0
    for w in enumerate_Sn(n):
        count += 1
        res = t_w_module(w, n, strict=False)
        log.add(f"T_{w}", res.T)
        log.add(f"S_{w} in T_{w}", res.S)
        log.add(f"T_{w}/S_{w}", res.N)
        if not res.passed:
            _fail(failures, f"{w}: {[k for k, ok in res.checks.items() if not ok]}")
    return count, failures


def tensor_products(n: int, log: ModuleLog):
    failures, count = [], 0
    small = max(n - 1, 1)
    for w in enumerate_Sn(small):
        for v in enumerate_Sn(small):
            count += 1
            report = tensor_kp_verify(w, v, small, strict=False)
            log.add(f"S_{w} x S_{v}", tensor(kp_module(w, small), kp_module(v, small)))
            if not report.passed:
                _fail(failures, f"S_{w} x S_{v}: character={report.character_ok} hom={report.hom_ok}")
    return count, failures


def schur_positivity(n: int, log: ModuleLog):
    failures, count = [], 0
    small = max(n - 1, 1)
    perms = [w for w in enumerate_Sn(small) if w.size]
    for lam in SCHUR_PARTITIONS:
        for w in perms:
            count += 1
            try:
                schur_positivity_check(Partition(lam), w, small)
            except AssertionError as exc:
                _fail(failures, str(exc))
    return count, failures


def lex_support(n: int, log: ModuleLog):
    failures, count = [], 0
    perms = list(enumerate_Sn(n))
    for x in perms:
        for y in perms:
            count += 1
            if not lex_support_check(x, y, n):
                _fail(failures, f"coefficient of x^inv({y}) in S_{x} breaks the lex bound")
    return count, failures


def module_invariants(n: int, log: ModuleLog):
    failures, count = [], 0
    seen = set()
    for label, module in log.modules:
        if id(module) in seen:
            continue
        seen.add(id(module))
        count += 1
        for problem in check_invariants(module):
            _fail(failures, f"{label}: {problem}")
    for w in enumerate_Sn(n):
        uw = highest_vector(w)
        for p in range(1, n + 1):
            for q in range(p + 1, n + 1):
                count += 1
                v = uw
                for _ in range(m_pq(w, p, q) + 1):
                    v = act(v, p, q)
                if v:
                    _fail(failures, f"e_{p}{q}^(m+1) u_{w} != 0")
    return count, failures


CRITERIA = [
    (1, "character of KP modules equals the Schubert polynomial", character_theorem),
    (2, "Monk's rule agrees with polynomial expansion", monk_formula),
    (3, "Cauchy identity and dual pairing", cauchy_and_pairing),
    (4, "Monk filtration certificates", monk_filtrations),
    (5, "phi_pq maps v_pq onto u_wt and respects the domination order", phi_properties),
    (6, "T_w resolution and multiplicities n_wu", t_w_resolutions),
    (7, "tensor products: positivity and Hom dimensions", tensor_products),
    (8, "Schur functions of Schubert alphabets are Schubert-positive", schur_positivity),
    (9, "leading codes bound the lex order of inverses", lex_support),
    (10, "module invariants and nilpotency of e_pq on u_w", module_invariants),
]


def run_criterion(number: int, n: int, log: ModuleLog | None = None) -> CriterionResult:
    log = log if log is not None else ModuleLog()
    _, name, fn = CRITERIA[number - 1]
    start = time.perf_counter()
    count, failures = fn(n, log)
    return CriterionResult(number, name, not failures, count, time.perf_counter() - start, failures)


def verify_suite(n: int) -> list[CriterionResult]:
    """Run every criterion at rank ``n``; criterion 10 inspects the modules of 1-7."""
    if n < 2:
        raise ValueError(f"the suite needs n >= 2, got {n}")
    if n > suite_max_rank():
        raise ResourceLimitError(f"rank {n} exceeds the suite ceiling {suite_max_rank()}")
    log = ModuleLog()
    return [run_criterion(number, n, log) for number, _, _ in CRITERIA]
