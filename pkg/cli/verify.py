"""
Built-in verification suite.

Each check simulates the model and compares against a closed form, a bound,
an overtaking verdict or a brute-force oracle. Results are printed as a table;
``run_verification`` returns them for the exit code.
"""

import logging
import time
from math import isqrt
from typing import Callable, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel

from analysis import GrowthModel, Verdict, find_unstable_set, fit_growth, overtakes
from bibliometrics import h_augmenting_profile, h_index, h_profile, strongly_h_preferable, weakly_h_preferable
from calibration import curve_as_map, single_author_curve, spearman, synthetic_corpus, two_author_curve
from config.settings import get_settings
from game.engine import run_game
from game.models import GameState
from strategies import (
    PairSingleJoint,
    PairTwoJointEvenSplit,
    SoloSinglePaper,
    SoloSplit,
    Strategy,
    StrategyProfile,
    matching_profile,
)

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

# Shortest series the growth-law fits run on, whatever the verdict horizon.
MIN_FIT_YEARS = 10_000


class CheckResult(BaseModel):
    name: str
    passed: bool
    measured: str
    seconds: float = 0.0


# Closed forms

def solo_closed_form(n: int) -> int:
    """h after n years of one solo paper per year: floor((-1 + sqrt(1 + 8n)) / 2)."""
    return (isqrt(8 * n + 1) - 1) // 2


def two_paper_bound(n: int) -> int:
    """floor((-1 + sqrt(1 + 16n)) / 2), an upper bound on the two-paper pair."""
    return (isqrt(16 * n + 1) - 1) // 2


def two_paper_schedule(n: int) -> int:
    """
    Exact h after n years of the two-paper even split: the pair needs
    ceil(i/2) years to reach h = i, so h is the largest value whose cumulative
    cost (m(m+1) for h = 2m, (m+1)^2 for h = 2m+1) fits in n.
    """
    def cost(h: int) -> int:
        m = h // 2
        return m * (m + 1) if h % 2 == 0 else (m + 1) ** 2

    h = two_paper_bound(n)
    while cost(h) > n:
        h -= 1
    return h


# Brute-force definitions

def oracle_h(values: List[int]) -> int:
    return max(h for h in range(len(values) + 1) if sum(1 for v in values if v >= h) >= h)


def _oracle_counts(z: List[int], zp: List[int]) -> Tuple[int, List[Tuple[int, int]]]:
    hz = oracle_h(z)
    top = max(z + zp + [0]) + 1
    return hz, [
        (sum(1 for v in z if v >= t), sum(1 for v in zp if v >= t)) for t in range(hz + 1, top + 1)
    ]


def oracle_weak(z: List[int], zp: List[int]) -> bool:
    hz, counts = _oracle_counts(z, zp)
    return hz >= oracle_h(zp) and all(a >= b for a, b in counts)


def oracle_strong(z: List[int], zp: List[int]) -> bool:
    hz, counts = _oracle_counts(z, zp)
    return oracle_weak(z, zp) and (hz > oracle_h(zp) or any(a > b for a, b in counts))


def _series(profile: StrategyProfile, horizon: int, player: int = 0) -> List[int]:
    initial = GameState.initial(len(profile))
    return run_game(initial, profile, horizon, record_profiles=False).utility_series(player)


def _solo(strategy: Strategy) -> StrategyProfile:
    return StrategyProfile({0: strategy})


def _pair(cls) -> StrategyProfile:
    return StrategyProfile({0: cls(partner=1), 1: cls(partner=0)})


# Checks

def check_solo_growth(years: int) -> Tuple[bool, str]:
    series = _series(_solo(SoloSinglePaper()), years)
    bad = [n for n, h in enumerate(series, start=1) if h != solo_closed_form(n)]
    return not bad, f"{years} years, {len(bad)} mismatches, h({years})={series[-1]}"


def check_two_paper_growth(years: int) -> Tuple[bool, str]:
    series = _series(_pair(PairTwoJointEvenSplit), years)
    bad = [n for n, h in enumerate(series, start=1) if h != two_paper_schedule(n)]
    over = [n for n, h in enumerate(series, start=1) if h > two_paper_bound(n)]
    anchors = {n: series[n - 1] for n in (1, 2, 4) if n <= years}
    ok = not bad and not over and anchors == {n: v for n, v in {1: 1, 2: 2, 4: 3}.items() if n <= years}
    return ok, f"{len(bad)} schedule mismatches, {len(over)} bound violations, anchors {anchors}"


def check_pair_linear_bound(years: int) -> Tuple[bool, str]:
    series = _series(_pair(PairSingleJoint), years)
    below = [n for n, h in enumerate(series, start=1) if h < n // 2]
    anchors = {n: series[n - 1] for n in (2, 4, 11) if n <= years}
    ok = not below and anchors == {n: v for n, v in {2: 2, 4: 3, 11: 7}.items() if n <= years}
    return ok, f"{len(below)} years below n/2, anchors {anchors}"


def check_solo_overtakes_splits(horizon: int) -> Tuple[bool, str]:
    single = _series(_solo(SoloSinglePaper()), horizon)
    verdicts = {k: overtakes(single, _series(_solo(SoloSplit(k=k)), horizon)).verdict for k in (2, 3)}
    ok = all(v is Verdict.FIRST_OVERTAKES_SECOND for v in verdicts.values())
    return ok, ", ".join(f"k={k}: {v.value}" for k, v in verdicts.items())


def check_pair_stability(horizon: int) -> Tuple[bool, str]:
    joint = find_unstable_set(_pair(PairSingleJoint), k=2, horizon=horizon)
    split = find_unstable_set(_pair(PairTwoJointEvenSplit), k=2, horizon=horizon)
    witness = split.witness.strategies if split.witness else {}
    expected = {0: "pair_single_joint{partner=1}", 1: "pair_single_joint{partner=0}"}
    ok = joint.stable and not split.stable and witness == expected
    return ok, f"single joint: {joint.label}; two-paper split: {split.label}, witness {witness}"


def check_matching_stability(horizon: int) -> Tuple[bool, str]:
    baseline = matching_profile([(0, 1), (2, 3)])
    solo = find_unstable_set(baseline, k=1, horizon=horizon)
    pairs = find_unstable_set(baseline, ["cross_pair_deviation"], k=2, horizon=horizon)
    verdicts = pairs.witness.verdicts if pairs.witness else {}
    ok = solo.stable and not pairs.stable and len(verdicts) == 2 and all(v.overtakes for v in verdicts.values())
    coalition = pairs.witness.coalition if pairs.witness else ()
    return ok, f"k=1: {solo.label}; k=2: {pairs.label}, coalition {coalition}"


def check_growth_fits(years: int) -> Tuple[bool, str]:
    solo = fit_growth(_series(_solo(SoloSinglePaper()), years))
    split = fit_growth(_series(_pair(PairTwoJointEvenSplit), years))
    linear = fit_growth(_series(_pair(PairSingleJoint), years), GrowthModel.LINEAR)
    ok = (
        0.45 <= solo.exponent <= 0.55
        and abs(solo.coefficient - np.sqrt(2)) <= 0.1 * np.sqrt(2)
        and 0.45 <= split.exponent <= 0.55
        and abs(split.coefficient - 2) <= 0.2
        and linear.coefficient >= 0.5
    )
    return ok, (
        f"solo p={solo.exponent:.3f} c={solo.coefficient:.3f}; "
        f"two-paper p={split.exponent:.3f} c={split.coefficient:.3f}; single joint slope={linear.coefficient:.3f}"
    )


def check_bibliometric_oracles(samples: int, seed: int) -> Tuple[bool, str]:
    rng = np.random.default_rng(seed)
    mismatches = 0
    for _ in range(samples):
        z = rng.integers(0, 51, size=rng.integers(0, 31)).tolist()
        zp = rng.integers(0, 51, size=rng.integers(0, 31)).tolist()
        h = oracle_h(z)
        mismatches += h_index(z) != h
        mismatches += list(h_profile(z)) != sorted(v for v in z if v >= h)
        mismatches += list(h_augmenting_profile(z)) != sorted(v for v in z if v > h)
        mismatches += weakly_h_preferable(z, zp) != oracle_weak(z, zp)
        mismatches += strongly_h_preferable(z, zp) != oracle_strong(z, zp)
    return mismatches == 0, f"{samples} random profile pairs, {mismatches} discrepancies"


def random_static_profile(rng: np.random.Generator, num_players: int) -> StrategyProfile:
    """A random assignment of catalog strategies over `num_players` players."""
    assignment = {}
    for player in range(num_players):
        others = [p for p in range(num_players) if p != player]
        choice = int(rng.integers(0, 5 if others else 2))
        if choice == 0:
            assignment[player] = SoloSinglePaper()
        elif choice == 1:
            assignment[player] = SoloSplit(k=int(rng.integers(2, 4)))
        else:
            partner = int(others[rng.integers(0, len(others))])
            assignment[player] = (PairSingleJoint if choice in (2, 3) else PairTwoJointEvenSplit)(partner=partner)
    return StrategyProfile(assignment)


def check_conservation(games: int, horizon: int, seed: int) -> Tuple[bool, str]:
    rng = np.random.default_rng(seed)
    violations = 0
    for _ in range(games):
        num_players = int(rng.integers(1, 7))
        initial = GameState.initial(
            num_players,
            {p: rng.integers(0, 6, size=rng.integers(0, 4)).tolist() for p in range(num_players)},
        )
        trajectory = run_game(initial, random_static_profile(rng, num_players), horizon, record_profiles=False)
        before = initial.h_values()
        for record in trajectory.records:
            produced = sum(paper.citations for paper in record.papers)
            violations += produced != sum(h + 1 for h in before)
            before = record.utilities
    return violations == 0, f"{games} games x {horizon} years, {violations} violations"


def check_calibration_closure(horizon: int) -> Tuple[bool, str]:
    profile = StrategyProfile({0: SoloSinglePaper(), 1: PairSingleJoint(partner=2), 2: PairSingleJoint(partner=1)})
    corpus = synthetic_corpus(run_game(GameState.initial(3), profile, horizon, record_profiles=False))
    single = curve_as_map(single_author_curve(corpus))
    double = curve_as_map(two_author_curve(corpus))
    curves_ok = bool(single) and bool(double)
    curves_ok = curves_ok and all(m == h + 1 for h, m in single.items())
    curves_ok = curves_ok and all(m == h + 2 for h, m in double.items())
    rho = (spearman([1, 2, 3], [10, 20, 30]), spearman([1, 2, 3], [30, 20, 10]), spearman([1, 2, 3, 4], [2, 1, 4, 3]))
    rho_ok = all(abs(a - b) <= 1e-9 for a, b in zip(rho, (1.0, -1.0, 0.6)))
    return curves_ok and rho_ok, f"{len(single)} single-author bins, {len(double)} two-author bins, spearman {rho}"


def fit_years(horizon: int) -> int:
    """Series length used by the growth-law fits for a verdict horizon."""
    return max(10 * horizon, MIN_FIT_YEARS)


def build_checks(horizon: int, seed: int) -> List[Tuple[str, Callable[[], Tuple[bool, str]]]]:
    years = 10 * horizon
    return [
        ("Solo paper growth ~ sqrt(2n)", lambda: check_solo_growth(years)),
        ("Two-paper pair growth ~ 2 sqrt(n)", lambda: check_two_paper_growth(years)),
        ("Single joint pair h >= n/2", lambda: check_pair_linear_bound(years)),
        ("One paper overtakes splitting", lambda: check_solo_overtakes_splits(horizon)),
        ("Pair profiles: single joint stable, two-paper unstable", lambda: check_pair_stability(horizon)),
        ("Matching: 1-stable, cross pair breaks 2-stability", lambda: check_matching_stability(horizon)),
        ("Growth-law fits", lambda: check_growth_fits(fit_years(horizon))),
        ("Bibliometric oracles", lambda: check_bibliometric_oracles(10_000, seed)),
        ("Citation conservation", lambda: check_conservation(100, min(50, horizon), seed)),
        ("Calibration closure", lambda: check_calibration_closure(min(100, horizon))),
    ]


def run_verification(horizon: Optional[int] = None, seed: Optional[int] = None) -> List[CheckResult]:
    """Run every check and print a pass/fail table."""
    settings = get_settings()
    horizon = horizon or settings.default_horizon
    seed = settings.verify_seed if seed is None else seed

    print("=" * 60)
    print(f"AC game verification (horizon {horizon})")
    print("=" * 60)

    results: List[CheckResult] = []
    for name, check in build_checks(horizon, seed):
        started = time.perf_counter()
        try:
            passed, measured = check()
        except Exception as e:
            logger.exception(f"Check '{name}' raised: {e}")
            passed, measured = False, f"error: {e}"
        result = CheckResult(name=name, passed=passed, measured=measured, seconds=time.perf_counter() - started)
        results.append(result)
        status = "✅ PASS" if passed else "❌ FAIL"
        print(f"{status} - {name}: {measured} ({result.seconds:.1f}s)")

    passed = sum(1 for r in results if r.passed)
    print(f"\nTotal: {passed}/{len(results)} checks passed")
    return results
