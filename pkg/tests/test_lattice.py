import cmath
import itertools

import mpmath
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from pompeiu.errors import EmptySubsetError, PreconditionError
from pompeiu.lattice import (
    LaurentPoly,
    characteristic_polynomial,
    cyclotomic_factor_indices,
    energy_growth_bound,
    energy_profile,
    is_pompeiu_subset_Z,
    laurent_multiply,
    partial_energy,
    polynomial_roots,
    recurrence_witness,
    root_of_unity_is_root,
)

x = sympy.Symbol("x")

laurent = st.dictionaries(st.integers(-5, 5), st.integers(-3, 3), max_size=5).map(LaurentPoly)
laurent2 = st.dictionaries(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.integers(-3, 3),
                           max_size=4).map(lambda d: LaurentPoly(d, nvars=2))


def test_multiply_examples():
    one_plus_x = LaurentPoly({0: 1, 1: 1})
    one_minus_x = LaurentPoly({0: 1, 1: -1})
    assert laurent_multiply(one_plus_x, one_minus_x) == LaurentPoly({0: 1, 2: -1})
    p = LaurentPoly.from_subset([0, 1, 2])
    assert p * p == LaurentPoly({0: 1, 1: 2, 2: 3, 3: 2, 4: 1})
    assert LaurentPoly.monomial(0) * p == p
    assert LaurentPoly({-1: 1}) * LaurentPoly({1: 1}) == LaurentPoly.monomial(0)


@settings(max_examples=80, deadline=None)
@given(laurent, laurent, laurent, st.integers(-4, 4))
def test_ring_laws(p, q, r, k):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    # shifting is multiplication by a monomial, an automorphism of the additive group
    assert p.shift(k) == LaurentPoly.monomial(k) * p
    assert (p * q).shift(2 * k) == p.shift(k) * q.shift(k)
    assert (p + q).shift(k) == p.shift(k) + q.shift(k)


@settings(max_examples=40, deadline=None)
@given(laurent2, laurent2, laurent2)
def test_two_variable_ring_laws(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p.shift((1, -2)) == LaurentPoly.monomial((1, -2), nvars=2) * p


def test_mixed_nvars_rejected():
    with pytest.raises(ValueError):
        laurent_multiply(LaurentPoly({0: 1}), LaurentPoly({(0, 0): 1}, nvars=2))


def test_pompeiu_decision():
    assert is_pompeiu_subset_Z([5])
    assert not is_pompeiu_subset_Z([0, 1])
    assert not is_pompeiu_subset_Z([-3, 7, 100])
    with pytest.raises(EmptySubsetError):
        is_pompeiu_subset_Z([])
    with pytest.raises(PreconditionError):
        recurrence_witness([4])


def test_characteristic_polynomial():
    assert characteristic_polynomial([3, 4, 6]) == [1, 1, 0, 1]
    assert characteristic_polynomial([-2, 0]) == [1, 0, 1]


@pytest.mark.parametrize("K", [(0, 1), (0, 2), (0, 1, 2), (0, 1, 3), (0, 3, 6), (0, 1, 2, 3), (0, 2, 3, 7)])
def test_cyclotomic_factors_match_sympy(K):
    p = characteristic_polynomial(K)
    poly = sympy.Poly(list(reversed(p)), x)
    expect = [d for d in range(2, 40) if poly.rem(sympy.Poly(sympy.cyclotomic_poly(d, x), x)).is_zero]
    assert cyclotomic_factor_indices(p, bound=39) == expect


@pytest.mark.parametrize("K", [(0, 1, 3), (0, 2, 3, 7), (0, 1, 3, 5, 6), (0, 1, 2, 4)])
def test_roots_match_sympy(K):
    p = characteristic_polynomial(K)
    found = polynomial_roots(p)
    ref = [complex(r) for r in sympy.Poly(list(reversed(p)), x).nroots(n=30)]
    assert sum(m for _, m, _ in found) == len(ref)
    for r in ref:
        assert min(abs(r - z) for z, _, _ in found) < 1e-10


def test_repeated_root_multiplicity():
    # (1 + x)^2 (1 + x + x^3)
    p = [1, 3, 3, 2, 2, 1]
    found = polynomial_roots(p)
    mults = sorted(m for _, m, _ in found)
    assert mults == [1, 1, 1, 2]
    minus_one = [m for z, m, _ in found if abs(z + 1) < 1e-9]
    assert minus_one == [2]


def test_witness_examples():
    w = recurrence_witness([0, 1], 100)
    assert w.exact and w.residual == 0 and w.period == (1, -1)
    assert all(w.value(n) == (-1) ** n for n in range(-100, 101))
    w = recurrence_witness([0, 1, 2], 100)
    assert w.exact and w.residual == 0 and w.period == (1, -1, 0)
    w = recurrence_witness([0, 1, 3], 100)
    assert not w.exact and w.residual < 1e-9
    assert len(w.samples) == 201 and max(abs(s) for s in w.samples) == pytest.approx(1.0)


@pytest.mark.parametrize("K", [(0, 1, 3), (0, 1, 4), (1, 4, 5)])
def test_numerical_witness_against_mpmath(K):
    # recompute the translate sums at 50 digits from the polished root
    w = recurrence_witness(K, 100)
    with mpmath.workdps(50):
        r = mpmath.exp(mpmath.mpc(w.log_root.real, w.log_root.imag))
        p = characteristic_polynomial(K)
        assert abs(mpmath.polyval(list(reversed(p)), r)) < 1e-14
    for n in (-100, -7, 0, 13, 100):
        assert abs(w.value(n) - w.samples[n + 100]) < 1e-15


@pytest.mark.parametrize("K", [(0, 1), (0, 1, 2), (0, 3), (0, 1, 2, 3), (2, 5, 8), (0, 1, 3), (0, 2, 3, 7)])
def test_energy_divergence(K):
    w = recurrence_witness(K, 100)
    for N in (50, 100, 200, 400):
        e1, e2 = partial_energy(w, N), partial_energy(w, 2 * N)
        assert e2 > e1
        assert e2 >= e1 + energy_growth_bound(w, N)
        assert energy_growth_bound(w, N) > 0


def test_energy_examples():
    w = recurrence_witness([0, 1], 100)
    prof = energy_profile(w)
    assert prof == [2 * N + 1 for N in range(101)]
    w = recurrence_witness([0, 1, 2], 100)
    prof = energy_profile(w)
    assert all(abs(prof[N] - sympy.Rational(4, 3) * N) <= 2 for N in range(101))
    assert all(a <= b for a, b in zip(prof, prof[1:]))


def test_energy_profile_matches_closed_form():
    w = recurrence_witness([0, 1, 3], 60)
    prof = energy_profile(w, 60)
    for N in (0, 1, 10, 60):
        assert abs(prof[N] - partial_energy(w, N)) <= 1e-20 * max(1, abs(prof[N]))
    direct = sum(abs(w.value(n)) ** 2 for n in range(-60, 61))
    assert float(prof[60]) == pytest.approx(direct, rel=1e-12)


def test_zero_witness_has_no_profile():
    from dataclasses import replace

    w = replace(recurrence_witness([0, 1], 5), samples=(0,) * 11)
    with pytest.raises(PreconditionError):
        energy_profile(w)


def test_quotient_consistency():
    # a zero of the Z_n transform at character j is a root of p at exp(2 pi i j / n)
    for n in range(2, 9):
        for r in range(2, n + 1):
            for K in itertools.combinations(range(n), r):
                p = characteristic_polynomial(K)
                for j in range(n):
                    val = sum(cmath.exp(2j * cmath.pi * j * k / n) for k in K)
                    assert (abs(val) < 1e-9) == root_of_unity_is_root(p, n, j)


def test_three_way_agreement_sample():
    for K in [(0, 5), (0, 1, 7), (3, 4, 9, 12)]:
        assert not is_pompeiu_subset_Z(K)
        assert recurrence_witness(K, 100).residual <= 1e-9
