"""Symmetric function core: bases, inner product, omega, plethysm."""

import random

import pytest

from deltaops.partitions import compositions, conjugate, partitions
from deltaops.poly import MultiPoly, ONE, Q, RatFunc, T, U
from deltaops.symfunc import (
    SymFunc,
    alphabet_from_poly,
    convert,
    expand_vars,
    from_expansion,
    hall_inner,
    kostka,
    omega,
    plethysm,
    qsym_coeff,
    schur_expand,
    symmetry_violation,
    x_alphabet,
)


def test_partitions_and_conjugate():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    for n in range(8):
        for mu in partitions(n):
            assert conjugate(conjugate(mu)) == mu
    assert len(compositions(5)) == 16


def test_simple_conversions():
    assert convert(SymFunc.e(2), "s").coeffs == {(1, 1): RatFunc.one()}
    assert convert(SymFunc.p(2), "m").coeffs == {(2,): RatFunc.one()}
    assert convert(SymFunc.h(2), "s").coeffs == {(2,): RatFunc.one()}


def test_convert_roundtrips_all_pairs():
    bases = ("m", "e", "h", "p", "s")
    for n in range(8):
        for lam in partitions(n):
            for b1 in bases:
                f = SymFunc.elem(b1, lam)
                for b2 in bases:
                    g = convert(convert(f, b2), b1)
                    assert g.coeffs == f.coeffs, (lam, b1, b2)


def test_expand_vars_examples():
    assert expand_vars(SymFunc.e(2), 2).to_text() == "1*x1^1*x2^1"
    h2 = expand_vars(SymFunc.h(2), 2)
    assert h2.coeff_of((0, 0, 0, 0, 0, 2)) == 1
    assert h2.coeff_of((0, 0, 0, 0, 0, 1, 1)) == 1
    s21 = expand_vars(SymFunc.s((2, 1)), 3)
    assert s21.coeff_of((0, 0, 0, 0, 0, 1, 1, 1)) == 2
    assert s21.coeff_of((0, 0, 0, 0, 0, 2, 1)) == 1


def test_hall_inner():
    assert hall_inner(SymFunc.s((2, 1)), SymFunc.s((2, 1))) == RatFunc.one()
    assert hall_inner(SymFunc.s((3,)), SymFunc.s((2, 1))).is_zero()
    assert hall_inner(SymFunc.p((1, 1)), SymFunc.p((1, 1))) == RatFunc.one() * 2
    assert hall_inner(SymFunc.p((3, 2)), SymFunc.p((3, 2))) == RatFunc.one() * 6
    assert hall_inner(SymFunc.e(3), SymFunc.s((1, 1, 1))) == RatFunc.one()


def _random_symfunc(rng, degree, basis="m"):
    lams = partitions(degree)
    coeffs = {}
    for lam in rng.sample(lams, min(3, len(lams))):
        coeffs[lam] = MultiPoly(
            [((rng.randrange(3), rng.randrange(3)), rng.randrange(-3, 4))]
        )
    return SymFunc(basis, coeffs)


def test_omega():
    assert omega(SymFunc.e(3)) == SymFunc.h(3)
    assert omega(SymFunc.s((2, 1))) == SymFunc.s((2, 1))
    assert omega(SymFunc.s((3, 1))) == SymFunc.s((2, 1, 1))
    rng = random.Random(5)
    for deg in range(1, 6):
        f = _random_symfunc(rng, deg)
        assert omega(omega(f)) == f


def test_hall_omega_invariance():
    rng = random.Random(11)
    for deg in range(1, 7):
        f = _random_symfunc(rng, deg)
        g = _random_symfunc(rng, deg)
        assert hall_inner(omega(f), omega(g)) == hall_inner(f, g)


def test_plethysm_examples():
    B = alphabet_from_poly(ONE + Q)
    assert plethysm(SymFunc.e(1), B) == ONE + Q
    assert plethysm(SymFunc.e(2), B) == Q
    n, m = 5, 2
    su = plethysm(SymFunc.s((n - m, m)), alphabet_from_poly(ONE + U))
    assert su == MultiPoly([((0, 0, 0, 0, p), 1) for p in range(m, n - m + 1)])
    for lam in [(2, 1), (3,), (2, 2)]:
        f = SymFunc.s(lam)
        assert plethysm(f, x_alphabet(5)) == expand_vars(f, 5)
    # e_k of fewer than k letters vanishes
    assert plethysm(SymFunc.e(3), B) == MultiPoly.zero()


def test_from_expansion_and_symmetry_error():
    f = SymFunc("m", {(2, 1): RatFunc.from_poly(Q + T), (1, 1, 1): RatFunc.one()})
    assert from_expansion(expand_vars(f, 3), 3) == f
    bad = MultiPoly([((0, 0, 0, 0, 0, 2, 1), 1)])
    assert symmetry_violation(bad, 3) == 1
    with pytest.raises(ValueError, match="x1 <-> x2"):
        from_expansion(bad, 3)


def test_qsym_coeff():
    en = expand_vars(SymFunc.e(3), 3)
    assert qsym_coeff(en, (1, 1, 1)) == ONE
    h2 = expand_vars(SymFunc.h(2), 3)
    assert qsym_coeff(h2, (2,)) == ONE


def test_kostka():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((2, 2), (2, 1, 1)) == 1
    assert kostka((3,), (1, 1, 1)) == 1
    assert kostka((1, 1, 1), (3,)) == 0


def test_cauchy_formula():
    def xy_alphabet(nx, ny):
        out = []
        for i in range(1, nx + 1):
            for j in range(1, ny + 1):
                key = [0] * (5 + 3 + ny)
                key[4 + i] += 1
                key[4 + 3 + j] += 1
                out.append((1, tuple(key)))
        return tuple(out)

    def shift(p, off):
        items = []
        for k, c in p.terms.items():
            items.append((k[:5] + (0,) * off + k[5:], c))
        return MultiPoly(items)

    for n in range(1, 6):
        lhs = plethysm(SymFunc.e(n), xy_alphabet(3, 3))
        for ab, ba in (("m", "h"), ("s", "s")):
            rhs = MultiPoly.zero()
            for lam in partitions(n):
                aX = expand_vars(omega(SymFunc.elem(ab, lam)), 3)
                bY = shift(expand_vars(SymFunc.elem(ba, lam), 3), 3)
                rhs = rhs + aX * bY
            assert lhs == rhs, (n, ab, ba)


def test_schur_expand_positivity_report():
    good = SymFunc("m", {(1, 1): RatFunc.from_poly(Q + T + ONE), (2,): RatFunc.one()})
    coeffs, rep = schur_expand(good)
    assert rep.positive
    assert coeffs[(1, 1)] == RatFunc.from_poly(Q + T)
    bad = SymFunc("s", {(2,): RatFunc.from_poly(Q - T)})
    _, rep = schur_expand(bad)
    assert not rep.positive and rep.failures


def test_symfunc_serialization():
    f = SymFunc("m", {(2, 1): RatFunc(ONE, T - Q), (3,): RatFunc.one()})
    text = f.to_text()
    assert text.startswith("basis=m; deg=3; (3)->")
    assert SymFunc.from_text(text) == f
