"""Adversarial instance generation and restricted lower-bound demonstrators.

The adversary exploits the two levers a strategy cannot see: which side of
the origin the target starts on, and (against zigzag search) a starting
distance just beyond a critical threshold, so that first contact slips into
the next expansion round.  Thresholds are inflated by an exact relative
epsilon rather than hit exactly, since the worst cases are open suprema.

Lower-bound demonstrators evaluate explicit restricted strategy families
(a single turn point p) against their best adversarial placement; they do
not establish universal lower bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .kinematics import ScalarLike, TrajectoryBuilder, UniformMotion, earliest_meeting
from .scenario import Direction, KnowledgeModel, Scenario, offline_optimal_time
from .strategies import (
    DIRECTION_OF_ALG,
    AlgorithmId,
    CaptureResult,
    StrategySpec,
    competitive_ratio,
    simulate,
)

#: Exact default offset past each critical distance.
DEFAULT_EPS_REL = Fraction(1, 10**9)

_ZIGZAG_ALGS = frozenset(
    {AlgorithmId.ND_AWAY_ZIGZAG, AlgorithmId.ND_TOWARD_ZIGZAG}
)


@dataclass(frozen=True)
class InstanceRecord:
    """One evaluated scenario in a worst-case search."""

    scenario: Scenario
    cr: Fraction
    turns_r1: int
    turns_r2: int
    result: CaptureResult


@dataclass(frozen=True)
class WorstCaseReport:
    """Supremum competitive ratio over an instance grid, with witness."""

    sup_cr: Fraction
    witness: Scenario
    eps_used: Fraction
    table: tuple[InstanceRecord, ...]

    def __post_init__(self) -> None:
        if self.sup_cr != max(rec.cr for rec in self.table):
            raise ValueError("sup_cr must equal the maximum CR in the table")


def critical_distances(
    alg: AlgorithmId, v: ScalarLike, a: ScalarLike, k_max: int
) -> list[Fraction]:
    """Distances at which zigzag first contact shifts from round k-1 to k.

    Values below the admissible minimum distance 1 are clamped up to 1.
    """
    if alg not in _ZIGZAG_ALGS:
        raise ValueError(f"critical distances only apply to zigzag search, got {alg}")
    v = Fraction(v)
    a = Fraction(a)
    if a <= 1:
        raise ValueError(f"expansion ratio must exceed 1, got {a}")
    if k_max < 1:
        raise ValueError(f"k_max must be at least 1, got {k_max}")
    out = []
    for k in range(1, k_max + 1):
        if alg is AlgorithmId.ND_AWAY_ZIGZAG:
            d_k = (
                a**k - a ** (k - 1) - v * a**k - v * a ** (k - 1) + 2 * v
            ) / (a - 1)
        else:
            d_k = a ** (k - 1) * (1 + v) + 2 * v * (a ** (k - 1) - 1) / (a - 1)
        out.append(max(d_k, Fraction(1)))
    return out


def worst_case_cr(
    spec: StrategySpec,
    v: ScalarLike,
    d_set: Sequence[ScalarLike],
    eps_rel: ScalarLike = DEFAULT_EPS_REL,
    k_max: int = 8,
) -> WorstCaseReport:
    """Maximize simulated CR over both sides and an adversarial distance grid.

    For zigzag strategies the grid is extended with the critical distances up
    to ``k_max``, each inflated by the relative epsilon.
    """
    v = Fraction(v)
    eps_rel = Fraction(eps_rel)
    direction = DIRECTION_OF_ALG[spec.alg] or Direction.TOWARD

    distances = [Fraction(d) for d in d_set]
    if spec.alg in _ZIGZAG_ALGS:
        a = spec.ratio_a
        if a is None:
            from .strategies import default_parameter

            a = default_parameter(spec.alg, v)
        for d_k in critical_distances(spec.alg, v, a, k_max):
            distances.append(d_k * (1 + eps_rel))
    seen: set[Fraction] = set()
    grid = [d for d in distances if not (d in seen or seen.add(d))]

    records = []
    for d in grid:
        for side in (1, -1):
            scenario = Scenario(d=d, v=v, direction=direction, side=side)
            result = simulate(spec, scenario)
            records.append(
                InstanceRecord(
                    scenario=scenario,
                    cr=competitive_ratio(result, scenario),
                    turns_r1=result.turns_r1,
                    turns_r2=result.turns_r2,
                    result=result,
                )
            )
    best = max(records, key=lambda rec: rec.cr)
    return WorstCaseReport(
        sup_cr=best.cr, witness=best.scenario, eps_used=eps_rel, table=tuple(records)
    )


def single_turn_adversary(
    model: KnowledgeModel,
    direction: Direction,
    v: ScalarLike,
    p: ScalarLike,
) -> Union[Fraction, float]:
    """Best adversarial CR against the one-turn-point strategy family.

    The family sends the robot pair to the signed point ``p`` and then
    reverses it at full speed, with the target's initial distance normalized
    to 1.  The adversary places the target on whichever side hurts more.
    Returns ``math.inf`` when some placement is never captured, i.e. the
    family member is not a correct algorithm.
    """
    v = Fraction(v)
    p = Fraction(p)
    if p <= 0:
        raise ValueError(f"turn point must be positive, got {p}")

    if model is KnowledgeModel.FULL_KNOWLEDGE and direction is Direction.AWAY:
        if not 0 <= v < 1:
            raise ValueError(f"away-moving target requires 0 <= v < 1, got {v}")
        return _family_sup_cr(p, [UniformMotion(0, Fraction(1), v),
                                  UniformMotion(0, Fraction(-1), -v)],
                              opt=Fraction(1) / (1 - v))
    if model is KnowledgeModel.FULL_KNOWLEDGE and direction is Direction.TOWARD:
        if v <= 0:
            raise ValueError(f"requires v > 0, got {v}")
        return 1 + 1 / v + p * (v - 1) / v
    if model is KnowledgeModel.NO_SPEED and direction is Direction.TOWARD:
        return _family_sup_cr(p, [UniformMotion(0, Fraction(1), -v),
                                  UniformMotion(0, Fraction(-1), v)],
                              opt=Fraction(1) / (1 + v))
    raise ValueError(
        f"no single-turn demonstrator for ({model.value}, {direction.value})"
    )


def _family_sup_cr(
    p: Fraction, placements: Sequence[UniformMotion], opt: Fraction
) -> Union[Fraction, float]:
    """Worst CR of the go-to-p-then-reverse family over target placements."""
    traj = TrajectoryBuilder().move(1, p).move_forever(-1).build()
    worst: Union[Fraction, float] = Fraction(0)
    for target in placements:
        t = earliest_meeting(traj, target, Fraction(0))
        if t is None:
            return math.inf
        worst = max(worst, t / opt)
    return worst
