import numpy as np
import pytest

from errors import InvariantViolation
from services.simulation import random_error, run_trials, simulate, trial_rng


def test_random_error_weight(gf8, rng):
    for weight in (0, 3, 14):
        error = random_error(gf8, 14, weight, rng)
        assert np.count_nonzero(error) == weight
        assert error.max(initial=0) < 8
    with pytest.raises(InvariantViolation):
        random_error(gf8, 14, 15, rng)


def test_trial_streams_are_independent_of_workers():
    def draw(t):
        return (int(trial_rng(5, t).integers(0, 1000)),)

    assert run_trials(draw, 12, workers=1) == run_trials(draw, 12, workers=4)


def test_no_errors(nested_gf8):
    report = simulate(nested_gf8.decoder, weight=0, trials=10, seed=1)
    assert report.member_rate == 1.0
    assert report.exact_rate == 1.0
    assert report.max_list_size == 1


def test_list_mode_up_to_radius(nested_gf8):
    report = simulate(nested_gf8.decoder, weight=5, trials=20, seed=3, spec_name="gf8")
    assert report.tau == 5
    assert report.member_hits == 20
    assert report.spec_name == "gf8"


def test_deterministic(nested_gf8):
    a = simulate(nested_gf8.decoder, weight=6, trials=15, seed=11)
    b = simulate(nested_gf8.decoder, weight=6, trials=15, seed=11, workers=3)
    assert (a.member_hits, a.exact_hits, a.empty_outputs, a.max_list_size) == (
        b.member_hits, b.exact_hits, b.empty_outputs, b.max_list_size
    )


def test_unique_mode(nested_gf8):
    report = simulate(nested_gf8.decoder, weight=3, trials=10, seed=2, unique=True, distance=7)
    assert report.unique
    assert report.exact_rate == 1.0


def test_argument_checks(nested_gf8):
    with pytest.raises(InvariantViolation):
        simulate(nested_gf8.decoder, weight=2, trials=0)
    with pytest.raises(InvariantViolation):
        simulate(nested_gf8.decoder, weight=15, trials=1)
    with pytest.raises(InvariantViolation):
        simulate(nested_gf8.decoder, weight=2, trials=1, unique=True)


def test_default_seed(nested_gf8, settings_env):
    settings_env(default_seed=99)
    assert simulate(nested_gf8.decoder, weight=1, trials=2).seed == 99
