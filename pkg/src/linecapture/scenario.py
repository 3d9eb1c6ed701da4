"""Ground-truth problem instances and knowledge-model filtering.

A :class:`Scenario` carries the hidden truth: the target's initial distance d,
speed v, direction of travel relative to the origin, and which side of the
origin it starts on.  Strategies never see the side; which of d and v they see
is governed by the :class:`KnowledgeModel`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .kinematics import ScalarLike, UniformMotion


class InvalidScenarioError(ValueError):
    """Scenario parameters outside the model's validity range."""


class Direction(enum.Enum):
    AWAY = "away"
    TOWARD = "toward"


class KnowledgeModel(enum.Enum):
    FULL_KNOWLEDGE = "fk"
    NO_DISTANCE = "nd"
    NO_SPEED = "ns"
    NO_KNOWLEDGE = "nk"


@dataclass(frozen=True)
class Scenario:
    """Hidden ground truth of one capture instance."""

    d: Fraction
    v: Fraction
    direction: Direction
    side: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "d", Fraction(self.d))
        object.__setattr__(self, "v", Fraction(self.v))
        if self.d <= 0:
            raise InvalidScenarioError(f"initial distance must be positive, got {self.d}")
        if self.v < 0:
            raise InvalidScenarioError(f"speed must be nonnegative, got {self.v}")
        if self.direction is Direction.AWAY and self.v >= 1:
            raise InvalidScenarioError(
                f"an away-moving target requires v < 1, got v={self.v}"
            )
        if self.side not in (1, -1):
            raise InvalidScenarioError(f"side must be +1 or -1, got {self.side}")


@dataclass(frozen=True)
class Knowledge:
    """What a strategy is allowed to see: direction always, d and v per model."""

    direction: Direction
    d: Optional[Fraction] = None
    v: Optional[Fraction] = None


def validate_for_model(s: Scenario, m: KnowledgeModel) -> None:
    """Model-specific admissibility on top of the Scenario invariants.

    The distance-guessing schedules start their sweeps at distance 1, so the
    models with unknown distance only admit d >= 1.
    """
    if m in (KnowledgeModel.NO_DISTANCE, KnowledgeModel.NO_KNOWLEDGE) and s.d < 1:
        raise InvalidScenarioError(
            f"{m.value} model requires initial distance >= 1, got {s.d}"
        )


def target_motion(s: Scenario) -> UniformMotion:
    """The target's uniform motion: it never turns, even past the origin."""
    if s.direction is Direction.AWAY:
        w = s.side * s.v
    else:
        w = -s.side * s.v
    return UniformMotion(Fraction(0), s.side * s.d, w)


def visible_knowledge(m: KnowledgeModel, s: Scenario) -> Knowledge:
    """Filter the scenario down to what the given model reveals."""
    show_d = m in (KnowledgeModel.FULL_KNOWLEDGE, KnowledgeModel.NO_SPEED)
    show_v = m in (KnowledgeModel.FULL_KNOWLEDGE, KnowledgeModel.NO_DISTANCE)
    return Knowledge(
        direction=s.direction,
        d=s.d if show_d else None,
        v=s.v if show_v else None,
    )


def offline_optimal_time(s: Scenario) -> Fraction:
    """Capture time with full information: both robots head straight for it."""
    if s.direction is Direction.AWAY:
        return s.d / (1 - s.v)
    return s.d / (1 + s.v)


def scenario_to_str(s: Scenario) -> str:
    """Serialize as ``d,v,direction,side`` with rationals as p/q."""
    side = "+1" if s.side == 1 else "-1"
    return f"{_frac_str(s.d)},{_frac_str(s.v)},{s.direction.value},{side}"


def scenario_from_str(text: str) -> Scenario:
    parts = text.strip().split(",")
    if len(parts) != 4:
        raise InvalidScenarioError(
            f"expected 'd,v,direction,side', got {text!r}"
        )
    d_str, v_str, dir_str, side_str = (p.strip() for p in parts)
    try:
        direction = Direction(dir_str.lower())
    except ValueError as exc:
        raise InvalidScenarioError(f"unknown direction {dir_str!r}") from exc
    try:
        side = int(side_str)
        d = Fraction(d_str)
        v = Fraction(v_str)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidScenarioError(f"bad scenario field in {text!r}: {exc}") from exc
    return Scenario(d=d, v=v, direction=direction, side=side)


def _frac_str(x: ScalarLike) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
