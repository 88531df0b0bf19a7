"""Macdonald expansions, the validation battery, Delta operators, caching."""

import os
from math import comb

import pytest

from deltaops.macdonald import (
    MacdonaldCache,
    MacdonaldError,
    bmu,
    delta,
    delta_h,
    delta_identity_check,
    delta_prime,
    delta_t_recip,
    expand_in_htilde,
    from_h_expansion,
    h_inner_table,
    hexp_inner,
    nabla,
    specialize_symfunc_t_recip,
    tmu,
)
from deltaops.partitions import partitions
from deltaops.poly import MultiPoly, ONE, Q, RatFunc, T
from deltaops.symfunc import SymFunc, convert, hall_inner, schur_expand

import pytest


@pytest.fixture(scope="module")
def cache():
    c = MacdonaldCache()
    c.degree(4)
    return c


def test_bmu_tmu():
    assert bmu((1,)) == ONE
    assert bmu((2, 2)) == ONE + Q + T + Q * T
    assert tmu((2,)) == Q and tmu((1, 1)) == T
    # the product of the B monomials: {1, q, t, qt} multiplies to q^2 t^2
    assert tmu((2, 2)) == Q ** 2 * T ** 2
    # Fig-style cell with two cells left and one below contributes q^2 t
    assert bmu((4, 3)).coeff_of((2, 1)) == 1


def test_small_htilde(cache):
    assert cache.htilde((1,)) == SymFunc.s(1)
    assert convert(cache.htilde((2,)), "s").coeffs == {
        (2,): RatFunc.one(), (1, 1): RatFunc.from_poly(Q)}
    assert convert(cache.htilde((1, 1)), "s").coeffs == {
        (2,): RatFunc.one(), (1, 1): RatFunc.from_poly(T)}


def test_hook_inner_products(cache):
    from deltaops.macdonald import validate_htilde_inner_products
    for n in range(1, 5):
        for mu in partitions(n):
            validate_htilde_inner_products(mu, cache.htilde(mu))
            assert hall_inner(cache.htilde(mu), SymFunc.s((n,))) == RatFunc.one()


def test_e2_expansion(cache):
    exp = expand_in_htilde(SymFunc.e(2), cache)
    tq = RatFunc(ONE, T - Q)
    assert exp == {(1, 1): tq, (2,): -tq}
    assert expand_in_htilde(cache.htilde((2, 1)), cache) == {(2, 1): RatFunc.one()}


def test_expand_matches_linear_solve(cache):
    from deltaops.macdonald import _solve_degree
    for n in range(1, 5):
        for f in (SymFunc.e(n), SymFunc.h(n), SymFunc.s((n,))):
            fast = expand_in_htilde(f, cache)
            slow = _solve_degree(n, convert(f, "m"), cache)
            slow = {mu: c for mu, c in slow.items() if not c.is_zero()}
            assert fast == slow


def test_delta_examples(cache):
    n2 = convert(nabla(SymFunc.e(2), cache), "s")
    assert n2.coeffs == {(2,): RatFunc.one(), (1, 1): RatFunc.from_poly(Q + T)}
    d2 = convert(delta(SymFunc.e(1), SymFunc.e(2), cache), "s")
    assert d2.coeffs == {(2,): RatFunc.one(), (1, 1): RatFunc.from_poly(ONE + Q + T)}
    assert delta_prime(SymFunc.e(0), SymFunc.e(3), cache) == SymFunc.e(3)
    # nabla acts by T_mu
    hc = expand_in_htilde(SymFunc.e(3), cache)
    scaled = {mu: c * RatFunc.from_poly(tmu(mu)) for mu, c in hc.items()}
    assert from_h_expansion(scaled, cache) == nabla(SymFunc.e(3), cache)


def test_delta_identities(cache):
    for n in range(1, 5):
        for k in range(1, n + 3):
            assert delta_identity_check(n, k, cache)


def test_t_recip(cache):
    for n in range(2, 5):
        for k in range(1, n):
            lhs = specialize_symfunc_t_recip(delta(SymFunc.e(k), SymFunc.e(n), cache))
            assert lhs == delta_t_recip(SymFunc.e(k), n)
    for n in range(1, 4):
        for k in range(1, 4):
            lhs = specialize_symfunc_t_recip(delta(SymFunc.h(k), SymFunc.e(n), cache))
            assert lhs == delta_t_recip(SymFunc.h(k), n)


def test_schur_positivity_small(cache):
    for n in range(2, 5):
        for k in range(1, n):
            f = specialize_symfunc_t_recip(delta(SymFunc.e(k), SymFunc.e(n), cache))
            f = f.scale(RatFunc.from_poly(MultiPoly.monomial((k * (n - 1) - comb(k, 2),))))
            _, rep = schur_expand(f)
            assert rep.positive


def test_inner_tables(cache):
    table = h_inner_table(3, SymFunc.e(3), cache)
    hc = expand_in_htilde(SymFunc.e(3), cache)
    direct = hall_inner(SymFunc.e(3), SymFunc.e(3))
    assert hexp_inner(hc, table) == direct
    # chaining eigenvalues equals applying delta then pairing
    chained = hexp_inner(delta_h(SymFunc.e(1), hc), table)
    assert chained == hall_inner(delta(SymFunc.e(1), SymFunc.e(3), cache), SymFunc.e(3))


def test_cache_persistence(tmp_path):
    d1 = tmp_path / "c1"
    c1 = MacdonaldCache(str(d1))
    c1.degree(3)
    data1 = (d1 / "htilde_3.txt").read_bytes()
    # warm load agrees
    c2 = MacdonaldCache(str(d1))
    assert c2.htilde((2, 1)) == c1.htilde((2, 1))
    # regeneration in a fresh directory is bit-identical
    d2 = tmp_path / "c2"
    MacdonaldCache(str(d2)).degree(3)
    assert (d2 / "htilde_3.txt").read_bytes() == data1


def test_cache_corruption(tmp_path):
    d = tmp_path / "c"
    MacdonaldCache(str(d)).degree(2)
    path = d / "htilde_2.txt"
    text = path.read_text().replace("1*q^1", "1*q^2", 1)
    path.write_text(text)
    with pytest.raises(MacdonaldError, match="checksum"):
        MacdonaldCache(str(d)).degree(2)


def test_battery_rejects_wrong_convention():
    from deltaops.macdonald import validate_htilde_inner_products
    wrong = SymFunc("m", {(2,): RatFunc.one(),
                          (1, 1): RatFunc.from_poly(ONE + T)})  # q<->t swapped H_2
    with pytest.raises(MacdonaldError):
        validate_htilde_inner_products((2,), wrong)
