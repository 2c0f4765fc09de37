from fractions import Fraction

import pytest

from errors import InvariantViolation
from models.params import ProbEstimate, WeightMode
from services.analysis import (
    any_good_tuple_probability,
    bad_tuple_survival_bound,
    complexity_estimate,
    decoder_success_probability,
    estimate_p_tau,
    good_set_probability,
    good_set_probability_exact,
    gs_branch_budget,
    proposition_discrepancies,
    weight_compositions,
)
from services.reed_solomon import RSCode


def test_good_set_probability_half():
    assert good_set_probability(15, 2, 2, 7, [3]) == Fraction(1, 2)
    # the last bound is ignored
    assert good_set_probability(15, 2, 2, 7, [3, 7]) == Fraction(1, 2)


def test_good_set_probability_edges():
    assert good_set_probability(15, 2, 2, 0, [0]) == 1
    assert good_set_probability(15, 2, 2, 7, [7]) == 1
    assert good_set_probability(4, 3, 1, 5, []) == 1


def test_good_set_probability_checks():
    with pytest.raises(InvariantViolation):
        good_set_probability(15, 2, 3, 7, [3, 3])
    with pytest.raises(InvariantViolation):
        good_set_probability(15, 2, 2, 31, [3])
    with pytest.raises(InvariantViolation):
        good_set_probability(15, 2, 2, 7, [])


def test_exact_probability():
    assert good_set_probability_exact(15, 2, 2, 7, [3, 7]) == Fraction(1, 2)
    assert good_set_probability_exact(15, 2, 2, 7, [3, 7], index_tuple=(2, 1)) == Fraction(1, 2)
    # one error among four positions never exceeds a cap of one
    assert good_set_probability_exact(2, 2, 2, 1, [1, 1]) == 1


def test_exact_complement():
    # with seven errors exactly one of the two blocks carries at most three
    first = good_set_probability_exact(15, 2, 2, 7, [3, 7])
    second = good_set_probability_exact(15, 2, 2, 7, [3, 7], index_tuple=(2, 1))
    assert first + second == 1


def test_any_good_tuple():
    # two blocks sharing seven errors always leave one with at most three
    assert any_good_tuple_probability(15, 2, 2, 7, [3, 7]) == 1
    assert any_good_tuple_probability(15, 2, 2, 8, [3, 7]) < 1


def test_weight_compositions():
    assert sorted(weight_compositions(2, 2, 1)) == [(1, 1)]
    assert sorted(weight_compositions(2, 2, 2)) == [(0, 2), (1, 1), (2, 0)]


def test_proposition_sweep_finds_capped_last_block():
    gaps = proposition_discrepancies([2], l=2, s=2, max_tau=2)
    assert any(g.tau == 2 and g.taus == [2, 1] and g.formula == "1" and g.exact == "5/6" for g in gaps)
    for gap in gaps:
        assert gap.formula != gap.exact


def test_success_probability():
    assert decoder_success_probability([Fraction(1, 10), Fraction(1, 5)]) == Fraction(18, 25)
    assert decoder_success_probability([]) == 1
    assert decoder_success_probability([0.1, 0.2]) == pytest.approx(0.72)
    with pytest.raises(InvariantViolation):
        decoder_success_probability([Fraction(3, 2)])


def test_bad_tuple_bound():
    assert bad_tuple_survival_bound(2, Fraction(3, 10)) == Fraction(3, 5)
    assert bad_tuple_survival_bound(4, Fraction(1, 2)) == 1


def test_complexity_estimate():
    assert complexity_estimate(2, 1, [1], [1]) == 2
    assert complexity_estimate(2, 2, [2, 8], [1, 1]) == 8
    assert complexity_estimate(3, 2, [2, 2], [5, 5]) == 6 * (2 + 2 * 5)
    with pytest.raises(InvariantViolation):
        complexity_estimate(2, 2, [2], [1, 1])
    with pytest.raises(InvariantViolation):
        complexity_estimate(2, 1, [0], [1])


def test_gs_branch_budget(nested_gf8):
    budget = gs_branch_budget(nested_gf8.decoder)
    assert budget.list_caps == [2, 8]
    assert budget.tuples == 2
    assert budget.per_tuple == 16
    assert budget.decoder_calls == 8


def test_p_tau_is_deterministic(gf8):
    code = RSCode(gf8, 3)
    first = estimate_p_tau(code, 1, trials=20, seed=7)
    again = estimate_p_tau(code, 1, trials=20, seed=7, workers=3)
    assert first.hits == again.hits
    assert first.tau == 2
    assert 0 <= first.estimate <= 1
    uniform = estimate_p_tau(code, 1, trials=5, seed=7, weight_mode=WeightMode.UNIFORM)
    assert uniform.weight_mode == WeightMode.UNIFORM


def test_p_tau_needs_trials(gf8):
    with pytest.raises(InvariantViolation):
        estimate_p_tau(RSCode(gf8, 3), 1, trials=0, seed=1)


def test_prob_estimate_validation():
    estimate = ProbEstimate.from_counts(3, 12, seed=1)
    assert estimate.estimate == 0.25
    with pytest.raises(ValueError):
        ProbEstimate(estimate=0.5, trials=4, hits=1, seed=1, std_error=0.25)
