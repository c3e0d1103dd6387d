import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import lehmer, monk_set_bruteforce, perm_length, perm_mul
from schubkp.errors import ResourceLimitError
from schubkp.perm import (
    Permutation, codes, compose, enumerate_S_infty_n, enumerate_Sn, from_code,
    identity, in_S_infty_n, inv_code, inverse, last_descent, left_inversion_sets,
    length, lex_gt_inverse, longest, m_pq, monk_set, parse_perm, simple,
    transposition,
)
from strategies import perms

P = Permutation


def test_canonical_form_drops_trailing_fixed_points():
    assert P([2, 1, 3, 4]) == P([2, 1]) == simple(1)
    assert P([1, 2, 3]) == identity()
    assert P([]).size == 0
    assert hash(P([3, 1, 2, 4])) == hash(P([3, 1, 2]))


def test_rejects_non_bijections():
    for bad in ([1, 1], [0, 1], [2, 3]):
        with pytest.raises(ValueError):
            P(bad)


def test_compose_examples():
    assert compose(identity(), P([3, 1, 2])) == P([3, 1, 2])
    assert compose(P([2, 1]), transposition(1, 3)) == P([3, 1, 2])
    w = P([3, 1, 2])
    assert compose(w, inverse(w)) == identity()


@given(perms(), perms())
def test_compose_matches_pointwise_evaluation(u, v):
    assert (u * v).one_line(6) == perm_mul(u.one_line(6), v.one_line(6))


def test_length_examples():
    assert length(identity()) == 0
    assert length(P([4, 3, 2, 1])) == 6
    assert length(P([3, 1, 2])) == 2


@given(perms(6))
def test_length_is_inversion_count(w):
    assert length(w) == perm_length(w.images)
    assert length(w) == length(w.inverse())


def test_inv_code_examples():
    assert inv_code(identity(), 3) == (0, 0, 0)
    assert inv_code(P([3, 1, 2]), 3) == (2, 0, 0)
    assert inv_code(longest(3), 3) == (2, 1, 0)
    with pytest.raises(ValueError):
        inv_code(P([2, 3, 4, 1]), 2)


def test_codes_examples():
    assert codes(identity()) == ()
    assert codes(P([3, 1, 2])) == (0, 1, 1)
    assert left_inversion_sets(P([3, 1, 2])) == ((), (1,), (1,))
    assert left_inversion_sets(simple(2)) == ((), (), (2,))


@given(perms(6))
def test_code_sums_agree(w):
    assert sum(codes(w)) == sum(inv_code(w, max(w.size, 1))) == length(w)


def test_in_S_infty_n_examples():
    assert all(in_S_infty_n(w, 3) for w in enumerate_Sn(3))
    assert not in_S_infty_n(P([2, 3, 4, 1]), 2)
    assert in_S_infty_n(P([3, 4, 1, 2]), 2)
    assert last_descent(P([3, 4, 1, 2])) == 2


@given(perms(6), st.integers(1, 6))
def test_S_infty_n_is_code_support(w, n):
    padded = lehmer(w.one_line(max(w.size, n)))
    assert in_S_infty_n(w, n) == all(c == 0 for c in padded[n:])


@given(st.lists(st.integers(0, 4), max_size=5))
def test_from_code_inverts_lehmer_code(code):
    w = from_code(code)
    padded = lehmer(w.one_line(len(code) + 5))
    assert padded[:len(code)] == tuple(code)
    assert all(c == 0 for c in padded[len(code):])


def test_code_bijection_on_S4():
    seen = {inv_code(w, 4) for w in enumerate_Sn(4)}
    assert len(seen) == 24
    assert all(from_code(c) in set(enumerate_Sn(4)) for c in seen)


def test_lex_gt_inverse_examples():
    w = P([3, 1, 2])
    assert not lex_gt_inverse(w, w)
    assert lex_gt_inverse(P([2, 3, 1]), P([3, 1, 2]))
    assert not lex_gt_inverse(P([3, 1, 2]), P([2, 3, 1]))


def test_lex_gt_inverse_is_strict_total_order_on_S4():
    group = list(enumerate_Sn(4))
    for x, y in itertools.product(group, repeat=2):
        assert lex_gt_inverse(x, y) + lex_gt_inverse(y, x) == (x != y)
    for x, y, z in itertools.product(group[:12], repeat=3):
        if lex_gt_inverse(x, y) and lex_gt_inverse(y, z):
            assert lex_gt_inverse(x, z)


def test_monk_set_examples():
    assert monk_set(identity(), 1) == [(1, 2)]
    assert monk_set(simple(1), 1) == [(1, 3)]
    assert monk_set(P([1, 3, 2]), 1) == [(1, 2), (1, 3)]
    with pytest.raises(ValueError):
        monk_set(identity(), 0)


@given(perms(5), st.integers(1, 5))
def test_monk_set_against_wide_window(w, nu):
    assert monk_set(w, nu) == monk_set_bruteforce(w.images, nu)


@given(perms(5), st.integers(1, 5))
def test_monk_set_classical_characterization(w, nu):
    # p <= nu < q, w(p) < w(q), and no r strictly between with w(r) between
    expected = []
    m = max(w.size, nu) + 1
    for p in range(1, nu + 1):
        for q in range(nu + 1, m + 1):
            if w(p) < w(q) and not any(w(p) < w(r) < w(q) for r in range(p + 1, q)):
                expected.append((p, q))
    assert monk_set(w, nu) == expected


def test_m_pq_examples():
    assert all(m_pq(identity(), p, q) == 0 for p in range(1, 4) for q in range(p + 1, 5))
    assert m_pq(simple(1), 1, 3) == 0
    assert m_pq(P([3, 1, 4, 2]), 2, 3) == 1
    with pytest.raises(ValueError):
        m_pq(identity(), 2, 2)


def test_enumeration_counts():
    assert len(list(enumerate_Sn(3))) == 6
    assert len(set(enumerate_Sn(5))) == 120
    assert set(enumerate_S_infty_n(1, 2)) == {identity(), P([2, 1]), P([3, 1, 2])}


def test_enumerate_S_infty_n_matches_filter():
    got = set(enumerate_S_infty_n(2, 3))
    expected = {w for w in enumerate_Sn(5) if in_S_infty_n(w, 2) and length(w) <= 3}
    assert got == expected
    assert all(in_S_infty_n(w, 3) and length(w) <= 4 for w in enumerate_S_infty_n(3, 4))


def test_enumeration_guard():
    with pytest.raises(ResourceLimitError):
        next(enumerate_Sn(9))
    with pytest.raises(ResourceLimitError):
        next(enumerate_S_infty_n(9, 1))


def test_parse_and_print_round_trip():
    assert parse_perm("3,1,2") == P([3, 1, 2])
    assert str(P([3, 1, 2])) == "3,1,2"
    assert parse_perm(str(identity())) == identity()
    for bad in ("", "1,,2", "a,b", "1,1", "2,3"):
        with pytest.raises(ValueError):
            parse_perm(bad)
