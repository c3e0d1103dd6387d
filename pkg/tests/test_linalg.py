from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import matrix_rank
from schubkp.linalg import Echelon, axpy, exact_div, lincomb, rank, scale

vectors = st.lists(st.dictionaries(st.integers(0, 5), st.integers(-3, 3).filter(bool), max_size=4), max_size=6)


def test_exact_div_keeps_integers():
    assert exact_div(6, 3) == 2 and isinstance(exact_div(6, 3), int)
    assert exact_div(1, 2) == Fraction(1, 2)


def test_axpy_drops_zeros():
    y = {1: 2, 2: 1}
    axpy(y, -2, {1: 1})
    assert y == {2: 1}
    assert scale(0, {1: 1}) == {}
    assert lincomb([(1, {0: 1}), (-1, {0: 1, 1: 1})]) == {1: -1}


@given(vectors)
def test_rank_matches_sympy(vs):
    assert rank(vs) == matrix_rank(vs)


@given(vectors)
def test_reduced_rows_are_unit_at_own_pivot_and_zero_elsewhere(vs):
    ech = Echelon()
    for v in vs:
        ech.add(v)
    for p, row in ech.rows.items():
        assert row[p] == 1 and min(row) == p
        assert all(q == p or q not in row for q in ech.rows)
    for v in vs:
        assert ech.contains(v)
        coords = ech.coordinates(v)
        assert lincomb((c, ech.rows[k]) for k, c in coords.items()) == {k: c for k, c in v.items() if c}


@given(vectors, st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_tracked_solve_reconstructs_target(vs, coeffs):
    ech = Echelon(reduced=False, track=True)
    for i, v in enumerate(vs):
        ech.add(v, tag=i)
    target = lincomb(zip(coeffs, vs))
    x = ech.solve(target)
    assert lincomb((c, vs[t]) for t, c in x.items()) == target


def test_solve_outside_span():
    ech = Echelon(track=True)
    ech.add({0: 1}, tag="a")
    with pytest.raises(ValueError):
        ech.solve({1: 1})
    with pytest.raises(ValueError):
        Echelon().solve({0: 1})
    assert ech.add({0: 3}, tag="b") is None
