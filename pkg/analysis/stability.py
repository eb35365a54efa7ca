"""
Brute-force search for unstable sets.

A coalition of at most k players is unstable when some assignment of catalog
deviations makes every member's utility series overtake the series they get
under the baseline profile. Stability is certified relative to the catalog only.
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field, model_validator
from tqdm import tqdm

from analysis.catalog import DeviationFamily, build_catalog
from analysis.errors import AnalysisError, CatalogError
from analysis.overtaking import OvertakeVerdict, Verdict, overtakes
from config.settings import get_settings
from game.engine import run_game
from game.errors import SimulationError
from game.models import GameState, Trajectory
from strategies import Strategy, StrategyProfile
from strategies.errors import StrategyError

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

SUPPORTED_K = (1, 2)

Assignment = Tuple[Tuple[int, Strategy], ...]


class DeviationWitness(BaseModel):
    """A coalition, the strategies it switches to, and each member's verdict."""

    coalition: Tuple[int, ...]
    strategies: Dict[int, str] = Field(..., description="Deviation label per coalition member")
    verdicts: Dict[int, OvertakeVerdict]


class StabilityReport(BaseModel):
    stable: bool
    k: int
    horizon: int
    catalog: List[str]
    candidates_checked: int = Field(..., ge=0)
    witness: Optional[DeviationWitness] = None
    witnesses: List[DeviationWitness] = Field(default_factory=list)

    @model_validator(mode="after")
    def _witness_iff_unstable(self) -> "StabilityReport":
        if self.stable == (self.witness is not None):
            raise ValueError("A witness must be present exactly when the profile is unstable")
        return self

    @property
    def label(self) -> str:
        return "stable w.r.t. catalog" if self.stable else "unstable"


def _member_candidates(
    player: int,
    coalition: Tuple[int, ...],
    baseline: StrategyProfile,
    catalog: Sequence[DeviationFamily],
) -> List[Strategy]:
    seen = set()
    ordered: List[Strategy] = []
    for family in catalog:
        for strategy in family.candidates(player, coalition, baseline):
            # keeping the baseline strategy is not a deviation
            if strategy == baseline[player] or strategy in seen:
                continue
            seen.add(strategy)
            ordered.append(strategy)
    return ordered


def enumerate_deviations(
    baseline: StrategyProfile,
    catalog: Sequence[DeviationFamily],
    k: int,
) -> Iterator[Assignment]:
    """
    Candidate assignments in search order: coalition sizes from k down to 1,
    coalitions in lexicographic order, then catalog order per member.
    """
    for size in range(k, 0, -1):
        for coalition in combinations(baseline.players, size):
            options = [_member_candidates(p, coalition, baseline, catalog) for p in coalition]
            if any(not opts for opts in options):
                continue
            for choice in product(*options):
                yield tuple(zip(coalition, choice))


def _evaluate(
    assignment: Assignment,
    baseline: StrategyProfile,
    baseline_run: Trajectory,
    initial: GameState,
    horizon: int,
    burn_in_fraction: float,
) -> Optional[DeviationWitness]:
    try:
        deviated = baseline.with_overrides(dict(assignment))
        run = run_game(initial, deviated, horizon, record_profiles=False)
    except (StrategyError, SimulationError) as e:
        logger.warning(f"Skipping deviation {[(p, s.label) for p, s in assignment]}: {e}")
        return None

    verdicts: Dict[int, OvertakeVerdict] = {}
    for player, _ in assignment:
        verdict = overtakes(run.utility_series(player), baseline_run.utility_series(player), burn_in_fraction)
        if verdict.verdict is not Verdict.FIRST_OVERTAKES_SECOND:
            return None
        verdicts[player] = verdict

    return DeviationWitness(
        coalition=tuple(p for p, _ in assignment),
        strategies={p: s.label for p, s in assignment},
        verdicts=verdicts,
    )


def find_unstable_set(
    profile: StrategyProfile,
    catalog: Union[Sequence[str], Sequence[DeviationFamily], None] = None,
    k: int = 2,
    horizon: Optional[int] = None,
    burn_in_fraction: Optional[float] = None,
    initial: Optional[GameState] = None,
    max_workers: Optional[int] = None,
    exhaustive: bool = False,
    show_progress: bool = False,
) -> StabilityReport:
    """
    Search for a coalition of at most `k` players with a profitable deviation.

    Candidates are simulated concurrently in batches; results are reduced in
    candidate order, so the reported witness is the first one in search order
    regardless of thread scheduling. With `exhaustive` every witness is collected.
    """
    if k not in SUPPORTED_K:
        raise AnalysisError(f"k must be one of {SUPPORTED_K}, got {k}")
    settings = get_settings()
    families = build_catalog() if catalog is None else list(catalog)
    if not families:
        raise CatalogError("Deviation catalog is empty")
    if isinstance(families[0], str):
        families = build_catalog(families)

    horizon = horizon or settings.default_horizon
    burn_in = settings.burn_in_fraction if burn_in_fraction is None else burn_in_fraction
    workers = max_workers or settings.max_workers
    initial = initial or GameState.initial(len(profile))

    baseline_run = run_game(initial, profile, horizon, record_profiles=False)
    candidates = list(enumerate_deviations(profile, families, k))
    logger.info(f"Checking {len(candidates)} deviations for coalitions of size <= {k} over {horizon} years")

    witnesses: List[DeviationWitness] = []
    checked = 0
    batch_size = max(1, workers * 4)

    with ThreadPoolExecutor(max_workers=workers) as executor, tqdm(
        total=len(candidates), desc="Deviations", disable=not show_progress
    ) as progress:
        for start in range(0, len(candidates), batch_size):
            batch = candidates[start:start + batch_size]
            future_to_index = {
                executor.submit(_evaluate, assignment, profile, baseline_run, initial, horizon, burn_in): i
                for i, assignment in enumerate(batch)
            }
            results: List[Optional[DeviationWitness]] = [None] * len(batch)
            for future in as_completed(future_to_index):
                results[future_to_index[future]] = future.result()
                progress.update(1)

            stop = False
            for result in results:
                checked += 1
                if result is None:
                    continue
                witnesses.append(result)
                logger.info(f"Unstable coalition {result.coalition}: {result.strategies}")
                if not exhaustive:
                    stop = True
                    break
            if stop:
                break

    return StabilityReport(
        stable=not witnesses,
        k=k,
        horizon=horizon,
        catalog=[family.label for family in families],
        candidates_checked=checked,
        witness=witnesses[0] if witnesses else None,
        witnesses=witnesses,
    )
