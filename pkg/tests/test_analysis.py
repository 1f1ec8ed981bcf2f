"""Size law, mu estimators, asymptotics, restart-law report."""

import math
from fractions import Fraction

import pytest

from gwsearch import analysis, offspring
from gwsearch.analysis import (DP_LIMIT, SizeLaw, enumerate_small_trees,
                               mu_analytic, mu_exact, mu_mc, rational_pmf,
                               size_pmf_asymptotic, size_pmf_exact,
                               tail_asymptotic, theorem1_check,
                               write_verification_csv)

CATALAN = offspring.make_builtin("catalan")
FULL_BINARY = offspring.make_builtin("full_binary")

# P{N=t} = C(2t, t-1) / (t 4^t) for the catalan law
CATALAN_SIZES = [Fraction(1, 4), Fraction(1, 8), Fraction(5, 64),
                 Fraction(7, 128), Fraction(21, 512)]
# P{N=t} = C(t, (t-1)/2) / (t 2^t) for full binary, odd t only
FULL_BINARY_SIZES = {1: Fraction(1, 2), 3: Fraction(1, 8), 5: Fraction(1, 16),
                     7: Fraction(5, 128), 9: Fraction(7, 256)}


def test_size_pmf_rational_catalan():
    law = size_pmf_exact(CATALAN, 5, rational=True)
    assert law.pmf[0] == 0
    assert list(law.pmf[1:]) == CATALAN_SIZES
    assert law.tail == 1 - sum(CATALAN_SIZES)


def test_size_pmf_rational_full_binary():
    law = size_pmf_exact(FULL_BINARY, 9, rational=True)
    for t in range(1, 10):
        assert law.pmf[t] == FULL_BINARY_SIZES.get(t, Fraction(0))
    assert law.tail == 1 - sum(FULL_BINARY_SIZES.values())


def test_size_pmf_float_matches_rational():
    law = size_pmf_exact(CATALAN, 5)
    for t in range(1, 6):
        assert law.pmf[t] == pytest.approx(float(CATALAN_SIZES[t - 1]), abs=1e-15)
    assert law.tail == pytest.approx(float(1 - sum(CATALAN_SIZES)), abs=1e-12)


def test_size_pmf_resource_limits():
    with pytest.raises(ValueError, match="t_max must be >= 1"):
        size_pmf_exact(CATALAN, 0)
    with pytest.raises(ValueError, match="above the convolution limit"):
        size_pmf_exact(CATALAN, DP_LIMIT + 1)
    with pytest.raises(ValueError, match="rational path capped at t_max = 512"):
        size_pmf_exact(CATALAN, 513, rational=True)
    with pytest.raises(ValueError, match="no exact rational pmf"):
        size_pmf_exact(offspring.make_builtin("geometric"), 5, rational=True)


def test_size_law_shape_guard():
    with pytest.raises(ValueError, match="t_max \\+ 1 entries"):
        SizeLaw(t_max=2, pmf=(0.0, 0.5), tail=0.5)


def test_rational_pmf_coverage():
    assert rational_pmf(offspring.make_builtin("geometric")) is None
    assert rational_pmf(offspring.make_builtin("poisson")) is None
    assert rational_pmf(offspring.make_custom([0.25, 0.5, 0.25])) is None
    har = rational_pmf(offspring.make_builtin("harmonic", 3))
    assert har == [Fraction(7, 18), Fraction(1, 3), Fraction(1, 6), Fraction(1, 9)]
    assert sum(har) == 1
    assert rational_pmf(offspring.make_builtin("binomial", 2)) == \
        rational_pmf(CATALAN)


def test_enumeration_agrees_with_convolution():
    # independent oracle: brute-force walk of every tree up to 9 nodes
    enum = enumerate_small_trees(CATALAN, 9)
    dp = size_pmf_exact(CATALAN, 9, rational=True)
    assert enum.pmf == dp.pmf  # exact Fractions on both sides
    geo = offspring.make_builtin("geometric")
    enum_f = enumerate_small_trees(geo, 9)
    dp_f = size_pmf_exact(geo, 9)
    for t in range(1, 10):
        assert abs(enum_f.pmf[t] - dp_f.pmf[t]) <= 1e-12
    with pytest.raises(ValueError, match="n_max must be in 1..12"):
        enumerate_small_trees(CATALAN, 13)


def test_mu_exact_small_budgets():
    assert mu_exact(FULL_BINARY, 2).value == pytest.approx(1.5, abs=1e-12)
    assert mu_exact(FULL_BINARY, 3).value == pytest.approx(2.0, abs=1e-12)
    assert mu_exact(CATALAN, 1).value == pytest.approx(1.0, abs=1e-15)
    assert mu_exact(CATALAN, 13).value == pytest.approx(6.368974924087524, abs=1e-12)
    assert mu_exact(CATALAN, 5).method == "exact-dp"
    with pytest.raises(ValueError, match="budget must be >= 1"):
        mu_exact(CATALAN, 0)


def test_mu_exact_monotone_and_bounded():
    values = [mu_exact(CATALAN, b).value for b in range(1, 31)]
    assert all(b >= v for b, v in enumerate(values, start=1))
    assert values == sorted(values)


def test_mu_analytic():
    assert mu_analytic(8 / math.pi, 1) == 1.0
    assert mu_analytic(1.0, 50) == math.sqrt(400 / math.pi)
    assert mu_analytic(0.5, 100) == pytest.approx(math.sqrt(1600 / math.pi))
    with pytest.raises(ValueError, match="sigma2 must be positive"):
        mu_analytic(0.0, 10)
    with pytest.raises(ValueError, match="budget must be >= 1"):
        mu_analytic(1.0, 0)


def test_mu_mc_matches_exact():
    exact = mu_exact(CATALAN, 10).value
    est = mu_mc(CATALAN, 10, samples=200_000, seed=1)
    assert est.method == "monte-carlo"
    assert est.std_error < 0.01
    assert abs(est.value - exact) <= 3 * est.std_error
    again = mu_mc(CATALAN, 10, samples=200_000, seed=1)
    assert (again.value, again.std_error) == (est.value, est.std_error)


def test_mu_mc_edge_cases():
    est = mu_mc(CATALAN, 5, samples=1, seed=0)
    assert est.std_error is None
    assert est.value == 3.0
    with pytest.raises(ValueError, match="budget must be >= 1"):
        mu_mc(CATALAN, 0)
    with pytest.raises(ValueError, match="samples must be >= 1"):
        mu_mc(CATALAN, 5, samples=0)


def test_size_pmf_asymptotic_ratio():
    for dist in (CATALAN, FULL_BINARY):
        exact = size_pmf_exact(dist, 2001).pmf[2001]
        ratio = exact / size_pmf_asymptotic(dist, 2001)
        assert 0.99 < ratio < 1.01
    with pytest.raises(ValueError, match="sizes are 1 mod 2"):
        size_pmf_asymptotic(FULL_BINARY, 2000)
    with pytest.raises(ValueError, match="n must be >= 1"):
        size_pmf_asymptotic(CATALAN, 0)


def test_tail_asymptotic():
    # sqrt(1/n) scaling: quartering n doubles the tail
    assert tail_asymptotic(CATALAN, 400) == pytest.approx(
        2 * tail_asymptotic(CATALAN, 1600), rel=1e-12)
    for dist in (CATALAN, FULL_BINARY):
        dp_tail = size_pmf_exact(dist, 1000).tail  # P{N > 1000} = P{N >= 1001}
        assert dp_tail / tail_asymptotic(dist, 1001) == pytest.approx(1.0, abs=0.01)
    with pytest.raises(ValueError, match="n must be >= 1"):
        tail_asymptotic(CATALAN, 0)


def test_theorem1_check_fields():
    rep = theorem1_check(5, 25, CATALAN, 13)
    assert (rep.n, rep.budget, rep.restarts) == (25, 13, 5)
    assert rep.sigma == math.sqrt(0.5)
    assert rep.mu_method == "exact-dp"
    assert rep.mu == pytest.approx(6.368974924087524, abs=1e-12)
    assert rep.rho_exact == pytest.approx(5 * rep.mu / 25)
    assert rep.rho_table == pytest.approx(5 / (math.sqrt(0.5) * 25))
    assert rep.estimate == pytest.approx(math.sqrt(math.pi / (8 * 13)))


def test_theorem1_check_dispatch():
    forced = theorem1_check(5, 25, CATALAN, 13, mu_method="mc",
                            mc_samples=1000, seed=5)
    assert forced.mu_method == "monte-carlo"
    auto = theorem1_check(1000, 10 ** 6, CATALAN, DP_LIMIT + 1,
                          mc_samples=50, seed=3)
    assert auto.mu_method == "monte-carlo"  # past the DP limit
    assert theorem1_check(5, 25, CATALAN, 13, mu_method="exact").mu_method == \
        "exact-dp"
    with pytest.raises(ValueError, match="mu_method must be auto, exact, or mc"):
        theorem1_check(5, 25, CATALAN, 13, mu_method="dp")


def test_write_verification_csv(tmp_path):
    rep = theorem1_check(5, 25, CATALAN, 13)
    path = tmp_path / "verification.csv"
    write_verification_csv([("catalan", rep)], path)
    assert path.read_bytes() == (
        b"dist,b,n,R,rho_table,rho_exact,estimate_sqrt_pi_over_8b\r\n"
        b"catalan,13,25,5,0.282843,1.27379,0.173803\r\n")
