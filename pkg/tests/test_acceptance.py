"""
End-to-end checks of the model's growth laws, overtaking and stability results,
at the default horizons of the verify command.
"""

import time

import pytest

from cli import verify

YEARS = 10_000
HORIZON = 1000


def test_solo_growth_closed_form():
    started = time.perf_counter()
    passed, measured = verify.check_solo_growth(YEARS)
    assert passed, measured
    assert time.perf_counter() - started < 5


def test_two_paper_growth_schedule():
    passed, measured = verify.check_two_paper_growth(YEARS)
    assert passed, measured


def test_single_joint_linear_bound():
    passed, measured = verify.check_pair_linear_bound(YEARS)
    assert passed, measured


def test_single_paper_overtakes_splits():
    passed, measured = verify.check_solo_overtakes_splits(HORIZON)
    assert passed, measured


def test_pair_profile_stability():
    passed, measured = verify.check_pair_stability(HORIZON)
    assert passed, measured


def test_matching_stability_contrast():
    passed, measured = verify.check_matching_stability(HORIZON)
    assert passed, measured


def test_growth_law_fits():
    passed, measured = verify.check_growth_fits(YEARS)
    assert passed, measured


def test_conservation_over_random_games():
    passed, measured = verify.check_conservation(100, 50, seed=20240101)
    assert passed, measured


def test_calibration_closure():
    passed, measured = verify.check_calibration_closure(100)
    assert passed, measured


@pytest.mark.parametrize("horizon", [100])
def test_verification_at_small_horizon(horizon):
    results = verify.run_verification(horizon=horizon)
    failed = [r for r in results if not r.passed]
    assert not failed, [(r.name, r.measured) for r in failed]


def test_growth_fits_keep_long_series_at_small_horizon():
    assert verify.fit_years(100) == verify.MIN_FIT_YEARS
    assert verify.fit_years(2000) == 20_000
    passed, measured = verify.check_growth_fits(verify.fit_years(100))
    assert passed, measured
