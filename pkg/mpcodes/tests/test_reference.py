import pytest

from reference import golden
from reference.checks import run_reference_checks
from services.codespec import load_and_build
from services.linear_code import min_distance_bruteforce
from services.simulation import simulate
from services.unit_mpc import d_star


def test_reference_checks_pass():
    report = run_reference_checks(trials=2, seed=0, slow=False)
    assert report.passed, [f"{c.name}: expected {c.expected}, got {c.actual}" for c in report.failures]
    names = [c.name for c in report.checks]
    assert len([n for n in names if n.startswith("gs-params")]) == len(golden.GS_TAUS)
    assert len([n for n in names if n.startswith("unique radius")]) == len(golden.BOUND_UNIQUE_RADII)
    assert not any(n.startswith("min distance") for n in names)


def test_golden_words_have_code_length():
    assert len(golden.NESTED_RECEIVED.split(",")) == 30
    assert len(golden.NESTED_STAGE1_WORD.split(",")) == 15


@pytest.mark.slow
def test_quasi_cyclic_distance_beats_d_star():
    code = load_and_build("qc_30_5").code
    assert d_star(code).d_star == 22
    assert min_distance_bruteforce(code.to_linear_code(), workers=4) == 24


@pytest.mark.slow
@pytest.mark.parametrize(
    "name,weight,unique,trials",
    [
        ("rs_nested_30_14", 7, False, 1000),
        ("qc_30_8", 9, True, 500),
        ("qc_30_5", 11, True, 500),
        ("qc_30_21", 3, True, 500),
    ],
)
def test_decoding_radius_sweep(name, weight, unique, trials):
    built = load_and_build(name)
    assert built.decoder.tau == weight
    report = simulate(built.decoder, weight, trials, seed=7, unique=unique,
                      distance=built.true_distance(), workers=4, spec_name=name)
    if unique:
        assert report.exact_hits == trials
    else:
        assert report.member_hits == trials


@pytest.mark.slow
def test_full_reference_run():
    report = run_reference_checks(trials=20, seed=3, slow=True, workers=4)
    assert report.passed, [f"{c.name}: expected {c.expected}, got {c.actual}" for c in report.failures]
    assert any(n.startswith("min distance") for n in (c.name for c in report.checks))
