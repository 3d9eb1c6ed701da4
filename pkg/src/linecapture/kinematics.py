"""Exact piecewise-linear motion on the infinite line.

Everything in this module is computed over ``fractions.Fraction``: positions,
velocities and times are exact rationals, so meeting times come out of linear
solves with no rounding and equality tests are meaningful.  This is the only
module in which positions evolve in time.

A robot's motion is a :class:`Trajectory`: a time-contiguous, position-
continuous chain of constant-velocity segments, the last of which may extend
to +infinity.  The target's motion is a single :class:`UniformMotion`.
Meeting solvers treat segments as closed intervals, so a meeting exactly at a
turn point counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

#: Exact scalar type used throughout the kernel.
Scalar = Fraction

ScalarLike = Union[Fraction, int, str]


def scalar(value: ScalarLike) -> Fraction:
    """Coerce ints, ``p/q`` strings or Fractions to an exact Fraction."""
    return Fraction(value)


@dataclass(frozen=True)
class UniformMotion:
    """Unbounded constant-velocity motion, defined for all t >= t0."""

    t0: Fraction
    x0: Fraction
    w: Fraction

    def position_at(self, t: Fraction) -> Fraction:
        if t < self.t0:
            raise ValueError(f"time {t} precedes motion start {self.t0}")
        return self.x0 + self.w * (t - self.t0)

    def reflected(self) -> "UniformMotion":
        return UniformMotion(self.t0, -self.x0, -self.w)


@dataclass(frozen=True)
class TrajectorySegment:
    """One constant-velocity leg of a robot trajectory.

    ``t_end is None`` means the segment extends to +infinity; only the final
    segment of a trajectory may be unbounded.  Robot speed is capped at 1.
    """

    t_start: Fraction
    t_end: Optional[Fraction]
    x_start: Fraction
    vel: Fraction

    def __post_init__(self) -> None:
        if self.t_end is not None and self.t_end <= self.t_start:
            raise ValueError(
                f"zero or negative segment duration: [{self.t_start}, {self.t_end}]"
            )
        if abs(self.vel) > 1:
            raise ValueError(f"robot speed |{self.vel}| exceeds the cap of 1")

    @property
    def unbounded(self) -> bool:
        return self.t_end is None

    @property
    def x_end(self) -> Fraction:
        if self.t_end is None:
            raise ValueError("unbounded segment has no end position")
        return self.x_start + self.vel * (self.t_end - self.t_start)

    def contains(self, t: Fraction) -> bool:
        if t < self.t_start:
            return False
        return self.t_end is None or t <= self.t_end

    def position_at(self, t: Fraction) -> Fraction:
        if not self.contains(t):
            raise ValueError(f"time {t} outside segment [{self.t_start}, {self.t_end}]")
        return self.x_start + self.vel * (t - self.t_start)


class Trajectory:
    """An ordered, contiguous, position-continuous chain of segments."""

    __slots__ = ("segments",)

    def __init__(self, segments: Iterable[TrajectorySegment]) -> None:
        segs = tuple(segments)
        if not segs:
            raise ValueError("trajectory needs at least one segment")
        for prev, cur in zip(segs, segs[1:]):
            if prev.t_end is None:
                raise ValueError("only the final segment may be unbounded")
            if cur.t_start != prev.t_end:
                raise ValueError(
                    f"segments not time-contiguous at t={prev.t_end}"
                )
            if cur.x_start != prev.x_end:
                raise ValueError(
                    f"position discontinuity at t={prev.t_end}: "
                    f"{prev.x_end} != {cur.x_start}"
                )
        self.segments = segs

    @property
    def t_start(self) -> Fraction:
        return self.segments[0].t_start

    @property
    def t_end(self) -> Optional[Fraction]:
        return self.segments[-1].t_end

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Trajectory):
            return NotImplemented
        return self.segments == other.segments

    def __hash__(self) -> int:
        return hash(self.segments)

    def __repr__(self) -> str:
        return f"Trajectory({list(self.segments)!r})"

    def position_at(self, t: Fraction) -> Fraction:
        if t < self.t_start:
            raise ValueError(f"time {t} precedes trajectory start {self.t_start}")
        for seg in self.segments:
            if seg.contains(t):
                return seg.position_at(t)
        raise ValueError(f"time {t} beyond trajectory end {self.t_end}")

    def velocity_at(self, t: Fraction) -> Fraction:
        """Velocity on the segment active at t (right-continuous at joints)."""
        if t < self.t_start:
            raise ValueError(f"time {t} precedes trajectory start {self.t_start}")
        for seg in self.segments:
            if seg.t_end is None or t < seg.t_end:
                return seg.vel
        if t == self.t_end:
            return self.segments[-1].vel
        raise ValueError(f"time {t} beyond trajectory end {self.t_end}")

    def truncated(self, t: Fraction) -> "Trajectory":
        """The prefix of this trajectory ending exactly at time t."""
        if t <= self.t_start:
            raise ValueError("cannot truncate to an empty trajectory")
        out = []
        for seg in self.segments:
            if seg.t_end is not None and seg.t_end <= t:
                out.append(seg)
                if seg.t_end == t:
                    break
                continue
            out.append(TrajectorySegment(seg.t_start, t, seg.x_start, seg.vel))
            break
        return Trajectory(out)

    def reflected(self) -> "Trajectory":
        """Mirror image through the origin."""
        return Trajectory(
            TrajectorySegment(s.t_start, s.t_end, -s.x_start, -s.vel)
            for s in self.segments
        )


class TrajectoryBuilder:
    """Incremental construction keeping contiguity/continuity by design."""

    def __init__(self, t0: ScalarLike = 0, x0: ScalarLike = 0) -> None:
        self.t = Fraction(t0)
        self.x = Fraction(x0)
        self.segments: list[TrajectorySegment] = []
        self._closed = False

    def move(self, vel: ScalarLike, duration: ScalarLike) -> "TrajectoryBuilder":
        if self._closed:
            raise ValueError("cannot extend past an unbounded segment")
        vel = Fraction(vel)
        duration = Fraction(duration)
        seg = TrajectorySegment(self.t, self.t + duration, self.x, vel)
        self.segments.append(seg)
        self.t = seg.t_end
        self.x = seg.x_end
        return self

    def move_forever(self, vel: ScalarLike) -> "TrajectoryBuilder":
        if self._closed:
            raise ValueError("cannot extend past an unbounded segment")
        self.segments.append(TrajectorySegment(self.t, None, self.x, Fraction(vel)))
        self._closed = True
        return self

    def build(self) -> Trajectory:
        return Trajectory(self.segments)


def _linear_root(
    x_a: Fraction,
    v_a: Fraction,
    x_b: Fraction,
    v_b: Fraction,
    t_ref: Fraction,
    lo: Fraction,
    hi: Optional[Fraction],
) -> Optional[Fraction]:
    """Earliest t in [lo, hi] where two lines through (t_ref, x) coincide.

    Both lines are given by position x at time t_ref and constant velocity.
    ``hi is None`` means the interval is unbounded above.
    """
    diff0 = x_a - x_b
    dv = v_a - v_b
    if dv == 0:
        return lo if diff0 == 0 else None
    t = t_ref - diff0 / dv
    if t < lo:
        return None
    if hi is not None and t > hi:
        return None
    return t


def earliest_meeting(
    traj: Trajectory, m: UniformMotion, t_from: Fraction
) -> Optional[Fraction]:
    """First time t >= t_from at which the trajectory meets the uniform motion.

    Solves one linear equation per segment in time order; endpoints of
    segments are inclusive.  Returns None when they never meet.
    """
    t_from = Fraction(t_from)
    if t_from < traj.t_start or t_from < m.t0:
        raise ValueError("t_from precedes a motion's start")
    for seg in traj.segments:
        lo = max(seg.t_start, t_from)
        if seg.t_end is not None and seg.t_end < lo:
            continue
        t = _linear_root(
            seg.position_at(lo),
            seg.vel,
            m.position_at(lo),
            m.w,
            lo,
            lo,
            seg.t_end,
        )
        if t is not None:
            return t
    return None


def _breakpoints(a: Trajectory, b: Trajectory, t_from: Fraction) -> list[Fraction]:
    pts = {t_from}
    for traj in (a, b):
        for seg in traj.segments:
            if seg.t_start > t_from:
                pts.add(seg.t_start)
            if seg.t_end is not None and seg.t_end > t_from:
                pts.add(seg.t_end)
    return sorted(pts)


def earliest_co_location(
    a: Trajectory, b: Trajectory, t_from: Fraction
) -> Optional[Fraction]:
    """First time t >= t_from at which the two trajectories are co-located."""
    t_from = Fraction(t_from)
    lo_bound = max(a.t_start, b.t_start)
    if t_from < lo_bound:
        raise ValueError("t_from precedes a trajectory's start")
    ends = [t for t in (a.t_end, b.t_end) if t is not None]
    hi_bound = min(ends) if len(ends) == 2 else (ends[0] if ends else None)
    if hi_bound is not None and hi_bound < t_from:
        raise ValueError("t_from beyond a trajectory's end")
    pts = [t for t in _breakpoints(a, b, t_from) if hi_bound is None or t <= hi_bound]
    intervals = list(zip(pts, pts[1:]))
    if hi_bound is None:
        intervals.append((pts[-1], None))
    elif not intervals:
        # Degenerate overlap: a single shared instant.
        return t_from if a.position_at(t_from) == b.position_at(t_from) else None
    for lo, hi in intervals:
        t = _linear_root(
            a.position_at(lo),
            a.velocity_at(lo),
            b.position_at(lo),
            b.velocity_at(lo),
            lo,
            lo,
            hi,
        )
        if t is not None:
            return t
    return None


def turn_count(traj: Trajectory) -> int:
    """Number of direction reversals along the trajectory.

    Speed changes without a sign change are free, and stationary stretches
    between two legs in the same direction do not add a turn.
    """
    signs = [1 if s.vel > 0 else -1 for s in traj.segments if s.vel != 0]
    return sum(1 for prev, cur in zip(signs, signs[1:]) if prev != cur)
