"""
JSON forms of polynomials, Schubert expansions, modules and filtration
certificates.  Integers and rationals are written as strings so that no
consumer truncates them.
"""

from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction

from .kpfiltration import FiltrationCertificate, monk_order, ordering_ok
from .perm import Permutation, monk_set, simple, transposition
from .polynomial import SparsePoly
from .schubert import expand_in_schubert, schubert

__all__ = [
    "poly_to_json", "poly_from_json", "expansion_to_json",
    "expansion_from_json", "module_to_json", "certificate_to_json",
    "verify_certificate", "dumps",
]

CERT_FORMAT = "schubkp-filtration/1"


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _num(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def poly_to_json(f: SparsePoly) -> dict:
    return {"terms": [{"e": list(k), "c": str(c)} for k, c in f.items()]}


def poly_from_json(data) -> SparsePoly:
    terms = data["terms"] if isinstance(data, dict) else data
    out = {}
    for t in terms:
        k = tuple(int(e) for e in t["e"])
        out[k] = out.get(k, 0) + int(t["c"])
    return SparsePoly(out)


def expansion_to_json(expansion: dict) -> dict:
    return {"terms": [{"perm": list(w.images) or [1], "coeff": str(c)}
                      for w, c in sorted(expansion.items())]}


def expansion_from_json(data) -> dict:
    out = {}
    for t in data["terms"]:
        w = Permutation(t["perm"])
        out[w] = out.get(w, 0) + int(t["coeff"])
    return {w: c for w, c in out.items() if c}


def module_to_json(module) -> dict:
    n = module.n
    actions = {}
    for p in range(1, n + 1):
        for q in range(p + 1, n + 1):
            entries = [[i, j, _num(x)] for j, col in enumerate(module.action(p, q)) for i, x in sorted(col.items())]
            if entries:
                actions[f"{p},{q}"] = entries
    out = {
        "n": n,
        "dim": module.dim,
        "weights": [list(w) for w in module.weights],
        "actions": actions,
    }
    if hasattr(module, "shape"):
        out["shape"] = [list(f) for f in module.shape]
        out["offset"] = list(module.offset)
    return out


def certificate_to_json(cert: FiltrationCertificate) -> dict:
    monk = len(cert.factors) == 1
    return {
        "format": CERT_FORMAT,
        "kind": "monk" if monk else "iterated",
        "n": cert.n,
        "base": list(cert.base.images) or [1],
        "factors": list(cert.factors),
        "ambient": {"shape": [list(f) for f in cert.ambient.shape], "dim": cert.ambient.dim},
        "order": [list(pq) for pq in cert.order] if monk else None,
        "steps": [
            {
                "label": list(s.label.images) or [1],
                "pair": list(s.pair) if s.pair else None,
                "dim_F": s.dim,
                "character": poly_to_json(s.quotient_character),
                "checks": dict(sorted(s.checks.items())),
                "phi_image_dim": s.phi_image_dim,
                "phi_next_dim": s.phi_next_dim,
            }
            for s in cert.steps
        ],
        "checks": dict(sorted(cert.checks.items())),
    }


def verify_certificate(data: dict) -> list[str]:
    """
    Re-check a certificate from its JSON form alone: dimensions and
    characters against Schubert polynomials, telescoping, labels against the
    Schubert expansion of the product and, for Monk certificates, the pair
    order.  Returns the problems found (empty means valid).
    """
    problems = []
    if data.get("format") != CERT_FORMAT:
        return [f"unknown format {data.get('format')!r}"]
    n = int(data["n"])
    base = Permutation(data["base"])
    factors = [int(nu) for nu in data["factors"]]
    steps = data["steps"]
    product = schubert(base, n)
    for nu in factors:
        product = product * schubert(simple(nu))
    if data["ambient"]["dim"] != product.at_ones():
        problems.append("ambient dimension differs from the product of Schubert dimensions")
    if not steps:
        return problems + ["no steps"]
    if steps[0]["dim_F"] != data["ambient"]["dim"]:
        problems.append("F_0 is not the whole module")
    total = SparsePoly()
    labels = []
    for i, step in enumerate(steps):
        label = Permutation(step["label"])
        labels.append(label)
        ch = poly_from_json(step["character"])
        total = total + ch
        expected = schubert(label, n)
        if ch != expected:
            problems.append(f"step {i}: character is not that of S_{label}")
        nxt = steps[i + 1]["dim_F"] if i + 1 < len(steps) else 0
        if step["dim_F"] - nxt != expected.at_ones():
            problems.append(f"step {i}: dimension drop {step['dim_F'] - nxt} != dim S_{label}")
        bad = [k for k, ok in step["checks"].items() if not ok]
        if bad:
            problems.append(f"step {i}: recorded failures {bad}")
    if total != product:
        problems.append("subquotient characters do not sum to the character of the module")
    if Counter(labels) != Counter(expand_in_schubert(product, n)):
        problems.append("labels do not match the Schubert expansion")
    if data["kind"] == "monk":
        (nu,) = factors
        order = [tuple(pq) for pq in data["order"]]
        if order != monk_order(base, monk_set(base, nu)):
            problems.append("pair order is not the Monk order")
        if not ordering_ok(base, order):
            problems.append("pair order violates the no-domination condition")
        if labels != [base * transposition(p, q) for p, q in order]:
            problems.append("labels are not w t_pq in order")
    bad = [k for k, ok in data["checks"].items() if not ok]
    if bad:
        problems.append(f"recorded failures {bad}")
    return problems
