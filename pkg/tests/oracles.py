"""
Reference implementations that share no code with the package.  They are
slow and only meant for small cases.
"""

from __future__ import annotations

import itertools
from collections import Counter

import sympy


def perm_mul(u, v):
    m = max(len(u), len(v))
    u = list(u) + list(range(len(u) + 1, m + 1))
    v = list(v) + list(range(len(v) + 1, m + 1))
    return tuple(u[v[i] - 1] for i in range(m))


def perm_length(w):
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


def reduced_words(w):
    """All words (a_1..a_l) with w = s_{a_1} ... s_{a_l}, composing right to left."""
    w = tuple(w)
    descents = [i for i in range(1, len(w)) if w[i - 1] > w[i]]
    if not descents:
        return [()]
    out = []
    for i in descents:
        v = list(w)
        v[i - 1], v[i] = v[i], v[i - 1]
        out += [word + (i,) for word in reduced_words(tuple(v))]
    return out


def schubert_bjs(w) -> Counter:
    """Sum over reduced words and compatible sequences; returns exponent tuple -> coefficient."""
    out = Counter()
    for a in reduced_words(w):
        l = len(a)

        def rec(j, lo, acc):
            if j == l:
                exps = [0] * (max(acc, default=0))
                for i in acc:
                    exps[i - 1] += 1
                out[tuple(exps)] += 1
                return
            start = lo
            if j > 0 and a[j - 1] < a[j]:
                start = acc[-1] + 1
            for i in range(max(start, 1), a[j] + 1):
                rec(j + 1, i, acc + [i])

        rec(0, 1, [])
    return Counter({k: c for k, c in out.items() if c})


def lehmer(w):
    return tuple(sum(1 for j in range(i + 1, len(w)) if w[j] < w[i]) for i in range(len(w)))


def xs(n):
    return sympy.symbols(f"x1:{n + 1}")


def to_sympy(poly, n):
    x = xs(n)
    expr = sympy.Integer(0)
    for exps, c in poly.items():
        term = sympy.Integer(c)
        for i, e in enumerate(exps):
            term *= x[i] ** e
        expr += term
    return sympy.expand(expr)


def sympy_divided_difference(expr, i, n):
    x = xs(n)
    swapped = expr.subs({x[i - 1]: x[i], x[i]: x[i - 1]}, simultaneous=True)
    return sympy.expand(sympy.cancel((expr - swapped) / (x[i - 1] - x[i])))


def schur_bialternant(lam, m):
    """s_lambda(x_1..x_m) as det(x_i^(lam_j + m - j)) / Vandermonde."""
    x = xs(m)
    lam = list(lam) + [0] * (m - len(lam))
    if len(lam) > m:
        return sympy.Integer(0)
    num = sympy.Matrix(m, m, lambda i, j: x[i] ** (lam[j] + m - 1 - j)).det()
    den = sympy.Matrix(m, m, lambda i, j: x[i] ** (m - 1 - j)).det()
    return sympy.expand(sympy.cancel(num / den))


def wedge_sort(indices):
    """Sign and sorted tuple of u_{i_1} ^ ... ^ u_{i_k}; sign 0 on a repeat."""
    if len(set(indices)) < len(indices):
        return 0, None
    inv = sum(1 for a, b in itertools.combinations(indices, 2) if a > b)
    return (-1) ** inv, tuple(sorted(indices))


def e_pq_on_tensor(key, p, q):
    """Leibniz rule over tensor factors, and within a wedge over its letters."""
    out = Counter()
    for col, subset in enumerate(key):
        for pos, letter in enumerate(subset):
            if letter != q:
                continue
            replaced = list(subset)
            replaced[pos] = p
            sign, new = wedge_sort(replaced)
            if sign:
                out[key[:col] + (new,) + key[col + 1:]] += sign
    return {k: c for k, c in out.items() if c}


def monk_set_bruteforce(w, nu):
    """Pairs p <= nu < q with l(w t_pq) = l(w) + 1, window far beyond any candidate."""
    big = 2 * (len(w) + nu) + 2
    w = tuple(w) + tuple(range(len(w) + 1, big + 1))
    out = []
    lw = perm_length(w)
    for p in range(1, nu + 1):
        for q in range(nu + 1, big + 1):
            t = list(range(1, big + 1))
            t[p - 1], t[q - 1] = q, p
            if perm_length(perm_mul(w, t)) == lw + 1:
                out.append((p, q))
    return out


def matrix_rank(vectors):
    keys = sorted({k for v in vectors for k in v}, key=repr)
    if not vectors or not keys:
        return 0
    return sympy.Matrix([[v.get(k, 0) for k in keys] for v in vectors]).rank()
