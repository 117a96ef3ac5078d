import json
import math
import warnings
from fractions import Fraction

import mpmath
import pytest

from jlab.bounds import (
    ConfigError,
    Constants,
    LogReal,
    OutOfRegimeWarning,
    PreconditionError,
    bipartite_union_bound,
    chernoff_empirical_tail,
    chernoff_tail,
    frankl_furedi_alpha,
    geometric_grid,
    lemma_tech_best_c,
    lemma_tech_c2,
    lemma_tech_lhs,
    lemma_tech_margin,
    log_sum,
    p0_threshold,
    turan_chain,
    turan_n0,
    union_crossing,
    union_exponent_constant,
    vandermonde_split_violations,
)
from jlab.combinatorics import binomial


def test_logreal_arithmetic():
    a, b = LogReal.of(3.0), LogReal.of(4.0)
    assert float(a * b) == pytest.approx(12.0)
    assert float(a + b) == pytest.approx(7.0)
    assert a < b
    tiny = LogReal.from_log(-1e6)
    assert float(tiny) == 0.0 and tiny.log10 == pytest.approx(-1e6 / math.log(10))
    assert LogReal.of(0).log == -math.inf


def test_log_sum_no_underflow():
    assert log_sum([-2000.0, -2000.0]) == pytest.approx(-2000.0 + math.log(2))
    assert log_sum([]) == -math.inf


def test_lemma_lhs_examples():
    assert lemma_tech_lhs(10, 4, 3) == 9
    assert lemma_tech_lhs(10, 4, 0) == 0


def test_lemma_margin_preconditions():
    with pytest.raises(PreconditionError):
        lemma_tech_margin(3, 4, 1)
    with pytest.raises(PreconditionError):
        lemma_tech_margin(10, 4, 11)
    rep = lemma_tech_margin(40, 4, 5, 0.01)
    assert rep.satisfied and rep.margin > 0


def test_best_c_goldens():
    assert lemma_tech_best_c(4, range(8, 201)) == Fraction(3, 64)
    assert lemma_tech_best_c(5, range(10, 201)) == Fraction(1, 250)


def test_c2_and_split():
    assert lemma_tech_c2(4, range(8, 201)) == Fraction(2890, 3783)
    assert vandermonde_split_violations(4, range(8, 100)) == []


def test_chernoff():
    assert float(chernoff_tail(10, 1)) == pytest.approx(float(mpmath.exp(mpmath.mpf(-10) / 3)))
    assert float(chernoff_tail(10, 1)) == pytest.approx(0.03567, abs=1e-5)
    assert float(chernoff_tail(10, 1e-9)) == pytest.approx(1.0)
    with pytest.raises(PreconditionError):
        chernoff_tail(0, 1)


def test_chernoff_empirical_is_seeded():
    a = chernoff_empirical_tail(1000, 0.5, 0.05, 10_000, seed=5)
    assert a == chernoff_empirical_tail(1000, 0.5, 0.05, 10_000, seed=5)
    assert a <= float(chernoff_tail(500, 0.05))


def test_union_constant():
    assert union_exponent_constant() == Fraction(1, 156)


def test_p0():
    assert p0_threshold(7, 3) == 0.75
    assert p0_threshold(20, 3) == pytest.approx(math.log(20 * binomial(19, 3)) / 120)
    assert p0_threshold(20, 3) == pytest.approx(0.0822666, abs=1e-6)
    assert p0_threshold(20, 3, "2") == pytest.approx(math.log2(19380) / 120)
    with pytest.raises(PreconditionError):
        p0_threshold(6, 3)


def test_union_bound_terms():
    ub = bipartite_union_bound(30, 4)
    assert len(ub.log_terms) == 28
    exact = mpmath.log(sum(
        binomial(30, 2) * mpmath.mpf(binomial(30, 4)) ** i
        * mpmath.exp(-mpmath.mpf(1) / 156 * (binomial(25, 2) - binomial(25 - i, 2)))
        for i in range(1, 29)))
    assert ub.log_total == pytest.approx(float(exact), rel=1e-9)
    assert ub.argmax_i == 28
    assert ub.report().extra["relaxation_dominates"]
    for a, b in zip(ub.log_terms, ub.log_terms_sum_form):
        assert a == pytest.approx(b, rel=1e-12)


def test_union_zero_difference_term_is_at_least_one():
    # n=6, r=4: C(1, 2) = 0, so every exponent vanishes and no term decays
    ub = bipartite_union_bound(6, 4)
    assert all(t >= 0 for t in ub.log_terms)
    assert ub.log_terms[0] == pytest.approx(math.log(binomial(6, 2) * binomial(6, 4)))


def test_union_crossing_not_reached_by_2000():
    n_star, rows = union_crossing(4, geometric_grid(8, 2000))
    assert n_star is None
    assert rows[-1][1] > 0


def test_union_requires_r4():
    with pytest.raises(PreconditionError):
        bipartite_union_bound(20, 3)


def test_geometric_grid():
    g = geometric_grid(8, 100)
    assert g[0] == 8 and g[-1] == 100 and g == sorted(set(g))


def test_constants_defaults_r4():
    k = Constants().resolve(4)
    assert k.c == 3 / 64
    assert k.c0 == 2.67
    assert k.alpha == pytest.approx(8 / math.log(2))
    assert k.eps_prime == pytest.approx(3 / 128)
    assert k.eps == pytest.approx(k.c * k.eps_prime)


def test_constants_inconsistent_eps_prime(tmp_path):
    path = tmp_path / "k.json"
    path.write_text(json.dumps({"c": 0.05, "eps_prime": 0.5}))
    with pytest.raises(ConfigError):
        Constants.load(path).resolve(4)
    path.write_text(json.dumps({"bogus": 1}))
    with pytest.raises(ConfigError):
        Constants.load(path)


def test_turan_chain_large_n():
    reps = {r.name: r for r in turan_chain(1000, 4)}
    assert all(r.satisfied for r in reps.values())
    assert reps["maximizer_left_of_region"].extra["n0"] == 256
    assert reps["double_sum"].lhs < -1000


def test_turan_maximizer_fails_below_n0():
    reps = {r.name: r for r in turan_chain(100, 4)}
    assert not reps["maximizer_left_of_region"].satisfied


def test_turan_n0_is_least():
    k = Constants().resolve(4)
    n0 = turan_n0(4, k.alpha, k.c, k.c0)
    f = lambda n: k.alpha * math.log(n) / (2 * k.c0) < k.c * n
    assert f(n0) and not f(n0 - 1)


def test_turan_preconditions():
    with pytest.raises(PreconditionError):
        turan_chain(100, 3)
    with pytest.raises(PreconditionError):
        turan_chain(100, 4, t0=0.4)


def test_frankl_furedi():
    assert frankl_furedi_alpha(5, 2, 0) == 4
    assert frankl_furedi_alpha(10, 4, 1) == 28
    assert frankl_furedi_alpha(8, 3, 1) == 6
    with pytest.warns(OutOfRegimeWarning):
        assert frankl_furedi_alpha(8, 2, 1) == 1
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        frankl_furedi_alpha(9, 3, 1)
