"""Exact simulation of two-robot capture of a moving target on a line.

Two unit-speed robots start at the origin; an oblivious target starts at an
unknown side at distance d and moves at constant speed v, either away from or
toward the origin.  Capture requires both robots on the target simultaneously
(face-to-face communication: information is exchanged only when co-located).
This package simulates the capture strategies for the four knowledge models
with exact rational arithmetic and verifies their competitive ratios against
closed-form theory.
"""

from .adversary import (
    WorstCaseReport,
    critical_distances,
    single_turn_adversary,
    worst_case_cr,
)
from .kinematics import (
    Scalar,
    Trajectory,
    TrajectoryBuilder,
    TrajectorySegment,
    UniformMotion,
    earliest_co_location,
    earliest_meeting,
    scalar,
    turn_count,
)
from .scenario import (
    Direction,
    InvalidScenarioError,
    Knowledge,
    KnowledgeModel,
    Scenario,
    offline_optimal_time,
    scenario_from_str,
    scenario_to_str,
    target_motion,
    validate_for_model,
    visible_knowledge,
)
from .strategies import (
    AlgorithmId,
    CaptureResult,
    ConfigurationError,
    NonTerminationError,
    StrategySpec,
    competitive_ratio,
    default_parameter,
    guess_schedule,
    leg_schedule,
    planned_trajectories,
    select_algorithm,
    simulate,
)
from .theory import (
    BoundKind,
    CrBound,
    check_local_optimality,
    cr_exact,
    cr_lower,
    nk_away_cr_bound,
    ns_away_cr_bound,
    zigzag_turn_bound,
)

__version__ = "0.1.0"

__all__ = [
    "AlgorithmId",
    "BoundKind",
    "CaptureResult",
    "ConfigurationError",
    "CrBound",
    "Direction",
    "InvalidScenarioError",
    "Knowledge",
    "KnowledgeModel",
    "NonTerminationError",
    "Scalar",
    "Scenario",
    "StrategySpec",
    "Trajectory",
    "TrajectoryBuilder",
    "TrajectorySegment",
    "UniformMotion",
    "WorstCaseReport",
    "check_local_optimality",
    "competitive_ratio",
    "cr_exact",
    "cr_lower",
    "critical_distances",
    "default_parameter",
    "earliest_co_location",
    "earliest_meeting",
    "guess_schedule",
    "leg_schedule",
    "nk_away_cr_bound",
    "ns_away_cr_bound",
    "offline_optimal_time",
    "planned_trajectories",
    "scalar",
    "scenario_from_str",
    "scenario_to_str",
    "select_algorithm",
    "simulate",
    "single_turn_adversary",
    "target_motion",
    "turn_count",
    "validate_for_model",
    "visible_knowledge",
    "worst_case_cr",
    "zigzag_turn_bound",
]
