"""Generating functions: rise/valley forms, Catalan polynomials, partial paths."""

from fractions import Fraction
from math import comb

import pytest

import deltaops.paths as P
from deltaops.genfunc import (
    cat4,
    cat4_touch,
    catmod4,
    catmod4_comp,
    catmod4_comp_table,
    catmod4_touch,
    dinv_prime_minimum,
    dyck_run_type_counts,
    is_yamanouchi,
    k1_formula,
    llt,
    partial_gf,
    partial_touch_gf,
    q1_formula,
    rise_gf,
    rise_gf_qt1,
    rise_via_llt,
    run_type_count_formula,
    val_gf,
    yamanouchi_schur,
)
from deltaops.partitions import partitions
from deltaops.poly import MultiPoly, ONE, Q, RatFunc, T, W, Z
from deltaops.symfunc import SymFunc, convert, expand_vars, from_expansion, qsym_coeff


def test_rise_examples():
    r21 = rise_gf(2, 1, 2)
    assert qsym_coeff(r21, (2,)) == ONE
    assert qsym_coeff(r21, (1, 1)) == ONE + Q + T
    for n in range(1, 6):
        assert rise_gf(n, 0, n) == expand_vars(SymFunc.s((1,) * n), n)


def test_route_agreement():
    for n in range(1, 6):
        for k in range(n):
            z = rise_gf(n, k, n)
            assert z == rise_gf(n, k, n, route="fall")
            assert z == rise_gf(n, k, n, route="stack")
            v = val_gf(n, k, n)
            assert v == val_gf(n, k, n, route="stack")
            assert v == val_gf(n, k, n, route="dense")
            assert z.subs({"q": 1}) == v.subs({"q": 1})


def test_qt1_shortcut_matches_brute():
    for n in range(1, 6):
        for k in range(n):
            assert rise_gf(n, k, n).subs({"q": 1, "t": 1}) == rise_gf_qt1(n, k, n)


def test_q1_formula():
    for n in range(1, 6):
        for k in range(1, n + 1):
            lhs = rise_gf_qt1(n, k - 1, n)
            if k < n:
                lhs = lhs + rise_gf_qt1(n, k, n)
            assert lhs == expand_vars(q1_formula(n, k, n), n)
    # k = n pairs the top rise form with the binomial formula alone
    for n in range(2, 6):
        assert rise_gf_qt1(n, n - 1, n) == expand_vars(q1_formula(n, n, n), n)


def test_run_type_counts():
    for n in range(1, 8):
        counts = dyck_run_type_counts(n)
        assert sum(counts.values()) == comb(2 * n, n) // (n + 1)
        for lam in partitions(n):
            assert Fraction(counts.get(lam, 0)) == run_type_count_formula(n, lam)


def test_k1_formula():
    assert convert(k1_formula(1), "s").coeffs == {(1,): RatFunc.one()}
    f2 = k1_formula(2)
    assert f2.coeffs[(1, 1)] == RatFunc.from_poly(ONE + Q + T)
    assert f2.coeffs[(2,)] == RatFunc.one()
    for n in range(2, 6):
        lhs = rise_gf(n, 0, n) + rise_gf(n, 1, n)
        assert lhs == expand_vars(k1_formula(n), n)


def test_cat4_small():
    assert cat4(1) == ONE
    assert cat4(2) == Q + T + Z + W
    assert catmod4(2) == Q + T + Z + W
    for n in range(1, 7):
        c, cm = cat4(n), catmod4(n)
        cn = comb(2 * n, n) // (n + 1)
        assert c.subs({"q": 1, "t": 1, "z": 0, "w": 0}) == MultiPoly.const(cn)
        assert c.subs({"q": 1, "t": 1, "z": 1, "w": 1}) == MultiPoly.const(2 ** (n - 1) * cn)
        assert c == cm
        assert c.subs({"q": 1, "t": 1}) == c.subs({"q": 1, "t": 1, "z": W, "w": Z})
        assert (c.subs({"q": Q, "t": 1, "z": 0, "w": W})
                == c.subs({"q": 1, "t": Q, "z": W, "w": 0}))


def test_cat_touch_and_comp():
    for n in range(1, 6):
        total = MultiPoly.zero()
        for r in range(1, n + 1):
            total = total + cat4_touch(n, r)
        assert total == cat4(n)
        totalm = MultiPoly.zero()
        for r in range(1, n + 1):
            totalm = totalm + catmod4_touch(n, r)
        assert totalm == catmod4(n)
        table = catmod4_comp_table(n)
        for ell in range(0, n):
            got = MultiPoly.zero()
            for alpha, poly in table.items():
                if sum(alpha) == n - ell:
                    got = got + poly
            assert got == catmod4(n).coeff_extract("w", ell)


def test_cat_comp_figure_composition():
    # the starred path with areas (0,1,1,0,0) and one star on row 2 sits in
    # the alpha = (2,1,1) slice
    table = catmod4_comp_table(5)
    assert (2, 1, 1) in table
    poly = catmod4_comp(5, (2, 1, 1))
    assert not poly.is_zero()
    assert poly == table[(2, 1, 1)]


def test_llt_decomposition():
    for n in range(1, 6):
        for k in range(n):
            assert rise_via_llt(n, k, n) == rise_gf(n, k, n)


def test_llt_symmetric_instances():
    from deltaops.symfunc import symmetry_violation
    for n in range(2, 6):
        for k in range(n):
            for diag in P.stacks(n, k):
                for a in P.stack_area_vectors(diag, n):
                    assert symmetry_violation(llt(diag, a, n), n) is None


def test_yamanouchi():
    assert is_yamanouchi((2, 1))
    assert not is_yamanouchi((1, 2))
    assert is_yamanouchi((6, 5, 2, 4, 1, 3, 2, 1))


def test_yamanouchi_schur_two_column():
    for n in range(2, 6):
        for diag in P.stacks(n, 1):
            for a in P.stack_area_vectors(diag, n):
                table = yamanouchi_schur(diag, a, n)
                schur = convert(from_expansion(llt(diag, a, n), n), "s")
                expect = {lam: RatFunc.from_poly(p) for lam, p in table.items()}
                assert {k: v for k, v in schur.coeffs.items()} == expect
                assert all(set(lam) <= {1, 2} for lam in table)


def test_partial_gf_small():
    # no unlabeled valleys: z^k selects k decorated rises, the (n-k-1) form
    for n in range(1, 5):
        gf = partial_gf(n, 0, "dinv", n)
        for k in range(n):
            assert gf.coeff_extract("z", k) == rise_gf(n, n - k - 1, n)
    assert dinv_prime_minimum(3, 2) >= 0
    for variant in ("dinv", "dinvp"):
        table = partial_touch_gf(2, 1, variant, 2)
        total = MultiPoly.zero()
        for poly in table.values():
            total = total + poly
        assert total == partial_gf(2, 1, variant, 2).coeff_extract("z", 0)
