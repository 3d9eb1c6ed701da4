"""The ten search strategies and the event-driven capture simulator.

Each strategy is compiled into a *leg schedule*: a lazy sequence of
synchronized constant-velocity legs for the two robots, built only from the
knowledge its model reveals.  The simulator consumes legs in time order,
solving for the first robot/target meeting inside each leg, so doubly
exponential guessing schedules never materialize beyond the capture round.

After the "found" event the face-to-face fetch protocol runs: the finder
reverses at full speed toward its partner (which keeps executing its planned
legs), and once they are co-located both chase the target at full speed.
Capture completes when both robots sit exactly on the target.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Tuple

from .kinematics import (
    Trajectory,
    TrajectoryBuilder,
    TrajectorySegment,
    UniformMotion,
    _linear_root,
    turn_count,
)
from .scenario import (
    Direction,
    Knowledge,
    KnowledgeModel,
    Scenario,
    offline_optimal_time,
    target_motion,
    validate_for_model,
    visible_knowledge,
)


class ConfigurationError(ValueError):
    """Strategy parameters missing or outside their validity range."""


class NonTerminationError(RuntimeError):
    """The leg schedule was exhausted without the target being found."""


class AlgorithmId(enum.Enum):
    FK_AWAY = "fk-away"
    FK_TOWARD = "fk-toward"
    WAIT_AT_ORIGIN = "wait"
    ND_AWAY_ZIGZAG = "nd-away-zigzag"
    ND_AWAY_OPPOSITE = "nd-away-opposite"
    ND_TOWARD_ZIGZAG = "nd-toward-zigzag"
    ND_TOWARD_OPPOSITE = "nd-toward-opposite"
    NS_AWAY = "ns-away"
    NS_TOWARD = "ns-toward"
    NK_AWAY = "nk-away"


#: Knowledge model whose visibility rules govern each algorithm's planning.
MODEL_OF_ALG = {
    AlgorithmId.FK_AWAY: KnowledgeModel.FULL_KNOWLEDGE,
    AlgorithmId.FK_TOWARD: KnowledgeModel.FULL_KNOWLEDGE,
    AlgorithmId.WAIT_AT_ORIGIN: KnowledgeModel.FULL_KNOWLEDGE,
    AlgorithmId.ND_AWAY_ZIGZAG: KnowledgeModel.NO_DISTANCE,
    AlgorithmId.ND_AWAY_OPPOSITE: KnowledgeModel.NO_DISTANCE,
    AlgorithmId.ND_TOWARD_ZIGZAG: KnowledgeModel.NO_DISTANCE,
    AlgorithmId.ND_TOWARD_OPPOSITE: KnowledgeModel.NO_DISTANCE,
    AlgorithmId.NS_AWAY: KnowledgeModel.NO_SPEED,
    AlgorithmId.NS_TOWARD: KnowledgeModel.NO_SPEED,
    AlgorithmId.NK_AWAY: KnowledgeModel.NO_KNOWLEDGE,
}

DIRECTION_OF_ALG = {
    AlgorithmId.FK_AWAY: Direction.AWAY,
    AlgorithmId.FK_TOWARD: Direction.TOWARD,
    AlgorithmId.WAIT_AT_ORIGIN: None,  # either
    AlgorithmId.ND_AWAY_ZIGZAG: Direction.AWAY,
    AlgorithmId.ND_AWAY_OPPOSITE: Direction.AWAY,
    AlgorithmId.ND_TOWARD_ZIGZAG: Direction.TOWARD,
    AlgorithmId.ND_TOWARD_OPPOSITE: Direction.TOWARD,
    AlgorithmId.NS_AWAY: Direction.AWAY,
    AlgorithmId.NS_TOWARD: Direction.TOWARD,
    AlgorithmId.NK_AWAY: Direction.AWAY,
}


@dataclass(frozen=True)
class StrategySpec:
    """An algorithm plus its tunable parameters."""

    alg: AlgorithmId
    first_direction: int = 1
    ratio_a: Optional[Fraction] = None
    cruise_u: Optional[Fraction] = None
    max_iterations: int = 64

    def __post_init__(self) -> None:
        if self.first_direction not in (1, -1):
            raise ConfigurationError("first_direction must be +1 or -1")
        if self.max_iterations < 1:
            raise ConfigurationError("max_iterations must be positive")
        if self.ratio_a is not None:
            object.__setattr__(self, "ratio_a", Fraction(self.ratio_a))
        if self.cruise_u is not None:
            object.__setattr__(self, "cruise_u", Fraction(self.cruise_u))


@dataclass(frozen=True)
class GuessEntry:
    """One round of the doubly exponential speed/distance guessing schedule."""

    i: int
    f_i: int
    v_i: Fraction
    a_i: Fraction
    u_i: Fraction
    g_i: Optional[int] = None
    d_i: Optional[Fraction] = None


@dataclass(frozen=True)
class CaptureResult:
    """Outcome of one simulated run, with exact times and full traces."""

    found_time: Fraction
    found_by: str
    fetch_time: Fraction
    chase_time: Fraction
    capture_time: Fraction
    capture_position: Fraction
    turns_r1: int
    turns_r2: int
    iteration: int
    traj_r1: Trajectory
    traj_r2: Trajectory


def default_parameter(alg: AlgorithmId, v: Fraction) -> Fraction:
    """Closed-form optimal expansion ratio a or cruise speed u for speed v."""
    v = Fraction(v)
    if alg is AlgorithmId.ND_AWAY_ZIGZAG:
        if not 0 <= v < 1:
            raise ValueError(f"away zigzag requires 0 <= v < 1, got {v}")
        return 2 * (1 + v) / (1 - v)
    if alg is AlgorithmId.ND_TOWARD_ZIGZAG:
        if not 0 <= v < Fraction(1, 3):
            raise ValueError(f"toward zigzag ratio exceeds 1 only for v < 1/3, got {v}")
        return 2 * (1 - v) / (1 + v)
    if alg is AlgorithmId.ND_AWAY_OPPOSITE:
        if not 0 <= v < 1:
            raise ValueError(f"away cruise requires 0 <= v < 1, got {v}")
        return (3 * v + 1) / (3 + v)
    if alg is AlgorithmId.ND_TOWARD_OPPOSITE:
        if not 0 <= v < Fraction(1, 3):
            raise ValueError(f"toward cruise is positive only for v < 1/3, got {v}")
        return (1 - 3 * v) / (3 - v)
    raise ValueError(f"{alg} has no tunable parameter")


def guess_schedule(m: KnowledgeModel, i: int) -> GuessEntry:
    """Round i of the guessing schedule used when speed is unknown.

    f_i = 2^i, v_i = 1 - 2^-f_i, a_i = 1 + 2^-2^i, u_i = a_i * v_i; the
    NoKnowledge model additionally guesses the distance d_i = 2^g_i with
    g_0 = 0 and g_i = 2^i afterwards.
    """
    if m not in (KnowledgeModel.NO_SPEED, KnowledgeModel.NO_KNOWLEDGE):
        raise ValueError(f"no guessing schedule for model {m}")
    if i < 0:
        raise ValueError("iteration index must be nonnegative")
    f_i = 2**i
    v_i = 1 - Fraction(1, 2**f_i)
    a_i = 1 + Fraction(1, 2 ** (2**i))
    u_i = a_i * v_i
    g_i = None
    d_i = None
    if m is KnowledgeModel.NO_KNOWLEDGE:
        g_i = 0 if i == 0 else 2**i
        d_i = Fraction(2**g_i)
    return GuessEntry(i=i, f_i=f_i, v_i=v_i, a_i=a_i, u_i=u_i, g_i=g_i, d_i=d_i)


def next_leg_length(
    m: KnowledgeModel, e: GuessEntry, d_base: Fraction, t_cum: Fraction
) -> Fraction:
    """Distance covered in round i so a target no faster than v_i is caught.

    ``t_cum`` is the schedule's cumulative distance counter, updated by
    ``t = t + |x_i|`` between rounds.
    """
    del m  # same formula in both guessing models
    return (Fraction(d_base) + Fraction(t_cum) * e.v_i) / (e.u_i - e.v_i)


def select_algorithm(
    m: KnowledgeModel, direction: Direction, k: Knowledge
) -> StrategySpec:
    """Dispatch to the best algorithm for a model/direction pair."""
    if m is KnowledgeModel.FULL_KNOWLEDGE:
        if k.d is None or k.v is None:
            raise ConfigurationError("full knowledge dispatch needs both d and v")
        if direction is Direction.AWAY:
            return StrategySpec(AlgorithmId.FK_AWAY)
        return StrategySpec(
            AlgorithmId.FK_TOWARD if k.v < 1 else AlgorithmId.WAIT_AT_ORIGIN
        )
    if m is KnowledgeModel.NO_DISTANCE:
        if k.v is None:
            raise ConfigurationError("no-distance dispatch needs v")
        if direction is Direction.AWAY:
            return StrategySpec(
                AlgorithmId.ND_AWAY_OPPOSITE,
                cruise_u=default_parameter(AlgorithmId.ND_AWAY_OPPOSITE, k.v),
            )
        if k.v < Fraction(1, 3):
            return StrategySpec(
                AlgorithmId.ND_TOWARD_OPPOSITE,
                cruise_u=default_parameter(AlgorithmId.ND_TOWARD_OPPOSITE, k.v),
            )
        return StrategySpec(AlgorithmId.WAIT_AT_ORIGIN)
    if m is KnowledgeModel.NO_SPEED:
        if k.d is None:
            raise ConfigurationError("no-speed dispatch needs d")
        return StrategySpec(
            AlgorithmId.NS_AWAY if direction is Direction.AWAY else AlgorithmId.NS_TOWARD
        )
    if direction is Direction.AWAY:
        return StrategySpec(AlgorithmId.NK_AWAY)
    return StrategySpec(AlgorithmId.WAIT_AT_ORIGIN)


@dataclass(frozen=True)
class Leg:
    """One synchronized planning step for both robots.

    ``duration is None`` marks an unbounded final leg; ``k`` is the zigzag or
    guessing round the leg belongs to.
    """

    vel_r1: Fraction
    vel_r2: Fraction
    duration: Optional[Fraction]
    k: int


def _check_spec(spec: StrategySpec, direction: Direction, know: Knowledge) -> None:
    wanted = DIRECTION_OF_ALG[spec.alg]
    if wanted is not None and wanted is not direction:
        raise ConfigurationError(
            f"{spec.alg.value} applies to the {wanted.value} model, "
            f"scenario moves {direction.value}"
        )
    if spec.alg in (AlgorithmId.FK_AWAY, AlgorithmId.FK_TOWARD):
        if know.d is None or know.v is None:
            raise ConfigurationError(f"{spec.alg.value} needs both d and v")
    if spec.alg in (AlgorithmId.ND_AWAY_ZIGZAG, AlgorithmId.ND_TOWARD_ZIGZAG):
        if spec.ratio_a is None:
            raise ConfigurationError("zigzag strategies need ratio_a")
        if spec.ratio_a <= 1:
            raise ConfigurationError(f"zigzag ratio must exceed 1, got {spec.ratio_a}")
    if spec.alg in (AlgorithmId.ND_AWAY_OPPOSITE, AlgorithmId.ND_TOWARD_OPPOSITE):
        if spec.cruise_u is None:
            raise ConfigurationError("opposite-direction strategies need cruise_u")
        if not 0 < spec.cruise_u < 1:
            raise ConfigurationError(f"cruise speed must be in (0, 1), got {spec.cruise_u}")
    if spec.alg is AlgorithmId.ND_AWAY_OPPOSITE:
        if know.v is None:
            raise ConfigurationError("nd-away-opposite needs v")
        if spec.cruise_u <= know.v:
            raise ConfigurationError(
                f"cruise speed u={spec.cruise_u} must exceed the target speed v={know.v}"
            )
    if spec.alg in (AlgorithmId.NS_AWAY, AlgorithmId.NS_TOWARD):
        if know.d is None:
            raise ConfigurationError(f"{spec.alg.value} needs d")


def leg_schedule(spec: StrategySpec, know: Knowledge) -> Iterator[Leg]:
    """Lazy planned legs for both robots, computed from visible knowledge only."""
    f = Fraction(spec.first_direction)
    alg = spec.alg
    if alg in (AlgorithmId.FK_AWAY, AlgorithmId.FK_TOWARD):
        p = know.d / (1 - know.v) if alg is AlgorithmId.FK_AWAY else know.d / (1 + know.v)
        yield Leg(f, f, p, 0)
        yield Leg(-f, -f, None, 0)
    elif alg is AlgorithmId.WAIT_AT_ORIGIN:
        yield Leg(Fraction(0), Fraction(0), None, 0)
    elif alg is AlgorithmId.NS_TOWARD:
        yield Leg(f, f, know.d, 0)
        yield Leg(-f, -f, None, 0)
    elif alg in (AlgorithmId.ND_AWAY_OPPOSITE, AlgorithmId.ND_TOWARD_OPPOSITE):
        u = spec.cruise_u
        yield Leg(f * u, -f * u, None, 0)
    elif alg in (AlgorithmId.ND_AWAY_ZIGZAG, AlgorithmId.ND_TOWARD_ZIGZAG):
        a = spec.ratio_a
        for k in itertools.count():
            length = a**k
            yield Leg(f, -f, length, k)
            yield Leg(-f, f, length, k)
    elif alg in (AlgorithmId.NS_AWAY, AlgorithmId.NK_AWAY):
        model = MODEL_OF_ALG[alg]
        t_cum = Fraction(0)
        for i in itertools.count():
            e = guess_schedule(model, i)
            d_base = know.d if alg is AlgorithmId.NS_AWAY else e.d_i
            x_i = next_leg_length(model, e, d_base, t_cum)
            yield Leg(f * e.u_i, -f * e.u_i, x_i / e.u_i, i)
            t_cum += x_i
    else:  # pragma: no cover
        raise ConfigurationError(f"unknown algorithm {alg}")


def planned_trajectories(
    spec: StrategySpec, know: Knowledge, horizon_legs: int
) -> Tuple[Trajectory, Trajectory]:
    """The first ``horizon_legs`` planned legs of both robots as trajectories.

    Used to check knowledge isolation: the result depends only on the strategy and
    the visible knowledge, never on hidden scenario fields.
    """
    _check_spec_direction_free(spec, know)
    b1 = TrajectoryBuilder()
    b2 = TrajectoryBuilder()
    for leg in itertools.islice(leg_schedule(spec, know), horizon_legs):
        if leg.duration is None:
            b1.move_forever(leg.vel_r1)
            b2.move_forever(leg.vel_r2)
            break
        b1.move(leg.vel_r1, leg.duration)
        b2.move(leg.vel_r2, leg.duration)
    return b1.build(), b2.build()


def _check_spec_direction_free(spec: StrategySpec, know: Knowledge) -> None:
    direction = DIRECTION_OF_ALG[spec.alg] or know.direction
    _check_spec(spec, direction, know)


class _RobotTrace:
    """Mutable segment list for one robot while the simulation unfolds."""

    def __init__(self) -> None:
        self.t = Fraction(0)
        self.x = Fraction(0)
        self.segments: list[TrajectorySegment] = []

    def extend(self, vel: Fraction, duration: Optional[Fraction]) -> TrajectorySegment:
        end = None if duration is None else self.t + duration
        seg = TrajectorySegment(self.t, end, self.x, vel)
        self.segments.append(seg)
        if end is not None:
            self.t = end
            self.x = seg.x_end
        return seg

    def position_at(self, t: Fraction) -> Fraction:
        for seg in self.segments:
            if seg.contains(t):
                return seg.position_at(t)
        raise ValueError(f"time {t} not covered by trace")

    def truncated_segments(self, t: Fraction) -> list[TrajectorySegment]:
        out: list[TrajectorySegment] = []
        for seg in self.segments:
            if seg.t_end is not None and seg.t_end <= t:
                out.append(seg)
                continue
            if seg.t_start < t:
                out.append(TrajectorySegment(seg.t_start, t, seg.x_start, seg.vel))
            break
        return out


def _meet_in_segment(
    seg: TrajectorySegment, m: UniformMotion, t_from: Fraction
) -> Optional[Fraction]:
    lo = max(seg.t_start, t_from)
    if seg.t_end is not None and seg.t_end < lo:
        return None
    return _linear_root(
        seg.position_at(lo), seg.vel, m.position_at(lo), m.w, lo, lo, seg.t_end
    )


def simulate(spec: StrategySpec, s: Scenario) -> CaptureResult:
    """Run one strategy against one scenario and return the exact outcome.

    The strategy plans from visible knowledge only; the hidden scenario fields
    enter solely through event times (found / rendezvous / capture).
    """
    model = MODEL_OF_ALG[spec.alg]
    validate_for_model(s, model)
    know = visible_knowledge(model, s)
    _check_spec(spec, s.direction, know)
    target = target_motion(s)

    r1 = _RobotTrace()
    r2 = _RobotTrace()
    schedule = leg_schedule(spec, know)

    found_time: Optional[Fraction] = None
    found_by = ""
    iteration = 0
    for leg in schedule:
        if leg.k >= spec.max_iterations:
            raise NonTerminationError(
                f"{spec.alg.value}: no contact within {spec.max_iterations} "
                f"iterations (last leg k={leg.k}, t={r1.t})"
            )
        seg1 = r1.extend(leg.vel_r1, leg.duration)
        seg2 = r2.extend(leg.vel_r2, leg.duration)
        t1 = _meet_in_segment(seg1, target, seg1.t_start)
        t2 = _meet_in_segment(seg2, target, seg2.t_start)
        if t1 is not None or t2 is not None:
            if t2 is None or (t1 is not None and t1 <= t2):
                found_time, found_by = t1, "r1"
            else:
                found_time, found_by = t2, "r2"
            iteration = leg.k
            break
        if leg.duration is None:
            raise NonTerminationError(
                f"{spec.alg.value}: target never met on the final unbounded leg"
            )
    if found_time is None:  # pragma: no cover - schedules are infinite or raise
        raise NonTerminationError(f"{spec.alg.value}: leg schedule exhausted")

    finder, other = (r1, r2) if found_by == "r1" else (r2, r1)
    x_target_found = target.position_at(found_time)
    x_other = other.position_at(found_time)

    if x_other == x_target_found:
        # Both robots sit on the target: capture completes at the found event.
        segs1 = r1.truncated_segments(found_time)
        segs2 = r2.truncated_segments(found_time)
        return _result(
            found_time, found_by, found_time, found_time, x_target_found,
            iteration, segs1, segs2,
        )

    # Fetch: the finder reverses at full speed; the partner keeps cruising.
    fetch_vel = Fraction(1) if x_other > x_target_found else Fraction(-1)
    fetch = UniformMotion(found_time, x_target_found, fetch_vel)
    rendezvous: Optional[Fraction] = None
    other_is_r1 = found_by == "r2"
    if spec.alg in (AlgorithmId.NS_AWAY, AlgorithmId.NK_AWAY):
        # The partner cannot know the target was found, and the guessing
        # rounds are over for this run: it holds the round's cruise speed.
        freeze_vel = leg.vel_r1 if other_is_r1 else leg.vel_r2
        other_segs_pre = other.truncated_segments(found_time)
        frozen = TrajectorySegment(found_time, None, x_other, freeze_vel)
        rendezvous = _meet_in_segment(frozen, fetch, found_time)
        if rendezvous is None:  # pragma: no cover - closing speed 1-u > 0
            raise NonTerminationError(f"{spec.alg.value}: fetch cannot close")
        other_segs = other_segs_pre
        if rendezvous > found_time:
            other_segs.append(
                TrajectorySegment(found_time, rendezvous, x_other, freeze_vel)
            )
    else:
        for seg in _pending_other_segments(
            other, other_is_r1, schedule, spec, found_time
        ):
            rendezvous = _meet_in_segment(seg, fetch, found_time)
            if rendezvous is not None:
                break
        if rendezvous is None:
            raise NonTerminationError(
                f"{spec.alg.value}: fetch did not rendezvous within "
                f"{spec.max_iterations} iterations"
            )
        other_segs = other.truncated_segments(rendezvous)
    x_meet = fetch.position_at(rendezvous)

    finder_segs = finder.truncated_segments(found_time)
    if rendezvous > found_time:
        finder_segs.append(
            TrajectorySegment(found_time, rendezvous, x_target_found, fetch_vel)
        )

    # Chase: both robots head for the target's current position at full speed.
    x_target_now = target.position_at(rendezvous)
    if x_target_now == x_meet:
        capture_time = rendezvous
        capture_position = x_meet
    else:
        chase_vel = Fraction(1) if x_target_now > x_meet else Fraction(-1)
        capture_time = _linear_root(
            x_meet, chase_vel, x_target_now, target.w, rendezvous, rendezvous, None
        )
        if capture_time is None:
            raise NonTerminationError(
                f"{spec.alg.value}: target outruns the final chase "
                f"(v={s.v}, direction={s.direction.value})"
            )
        capture_position = x_meet + chase_vel * (capture_time - rendezvous)
        for segs in (finder_segs, other_segs):
            segs.append(
                TrajectorySegment(rendezvous, capture_time, x_meet, chase_vel)
            )

    segs1, segs2 = (finder_segs, other_segs) if found_by == "r1" else (other_segs, finder_segs)
    return _result(
        found_time, found_by, rendezvous, capture_time, capture_position,
        iteration, segs1, segs2,
    )


def _pending_other_segments(
    other: _RobotTrace,
    other_is_r1: bool,
    schedule: Iterator[Leg],
    spec: StrategySpec,
    t_from: Fraction,
) -> Iterator[TrajectorySegment]:
    """The partner's current and future planned segments, in time order."""
    for seg in other.segments:
        if seg.t_end is None or seg.t_end >= t_from:
            yield seg
    if other.segments and other.segments[-1].t_end is None:
        return
    for leg in schedule:
        if leg.k >= 2 * spec.max_iterations:
            return
        yield other.extend(leg.vel_r1 if other_is_r1 else leg.vel_r2, leg.duration)
        if leg.duration is None:
            return


def _result(
    found_time: Fraction,
    found_by: str,
    rendezvous: Fraction,
    capture_time: Fraction,
    capture_position: Fraction,
    iteration: int,
    segs1: list[TrajectorySegment],
    segs2: list[TrajectorySegment],
) -> CaptureResult:
    traj1 = Trajectory(segs1)
    traj2 = Trajectory(segs2)
    return CaptureResult(
        found_time=found_time,
        found_by=found_by,
        fetch_time=rendezvous - found_time,
        chase_time=capture_time - rendezvous,
        capture_time=capture_time,
        capture_position=capture_position,
        turns_r1=turn_count(traj1),
        turns_r2=turn_count(traj2),
        iteration=iteration,
        traj_r1=traj1,
        traj_r2=traj2,
    )


def competitive_ratio(r: CaptureResult, s: Scenario) -> Fraction:
    """Exact capture time over the full-information optimum."""
    return r.capture_time / offline_optimal_time(s)
