"""Closed-form competitive ratios, bounds, and optimality checks.

Exact worst-case ratios stay rational; the guessing-schedule upper bounds
involve logarithms and are computed in floating point (they are one-sided
comparisons with large slack).  All logarithms here are base 2 except the
zigzag turn bound, whose derivation divides exponents of the expansion ratio
and is therefore taken base a.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .scenario import Direction, KnowledgeModel
from .strategies import AlgorithmId, default_parameter


class BoundKind(enum.Enum):
    EXACT_WORST_CASE = "exact_worst_case"
    UPPER_BOUND = "upper_bound"
    LOWER_BOUND = "lower_bound"


@dataclass(frozen=True)
class CrBound:
    """A labelled competitive-ratio quantity."""

    value: Union[Fraction, float]
    kind: BoundKind
    source: str

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError(f"competitive ratios are never below 1, got {self.value}")


def cr_exact(alg: AlgorithmId, v: Fraction) -> Fraction:
    """Worst-case competitive ratio of an algorithm at target speed v."""
    v = Fraction(v)
    if alg is AlgorithmId.FK_AWAY:
        _require(0 <= v < 1, alg, v)
        return (3 - v) / (1 - v)
    if alg is AlgorithmId.FK_TOWARD:
        _require(0 <= v <= 1, alg, v)
        return (3 + v) / (1 + v)
    if alg is AlgorithmId.WAIT_AT_ORIGIN:
        _require(v > 0, alg, v)
        return (v + 1) / v
    if alg in (AlgorithmId.ND_AWAY_ZIGZAG, AlgorithmId.ND_AWAY_OPPOSITE):
        _require(0 <= v < 1, alg, v)
        return (v + 3) ** 2 / (1 - v) ** 2
    if alg in (AlgorithmId.ND_TOWARD_ZIGZAG, AlgorithmId.ND_TOWARD_OPPOSITE):
        _require(0 <= v <= Fraction(1, 3), alg, v)
        return 1 + 8 * (1 - v) / (1 + v) ** 2
    if alg is AlgorithmId.NS_TOWARD:
        _require(v >= 0, alg, v)
        return Fraction(3)
    raise ValueError(f"no exact competitive-ratio formula for {alg}")


def cr_lower(m: KnowledgeModel, direction: Direction, v: Fraction) -> Fraction:
    """Best-possible competitive ratio over all algorithms, where proven."""
    v = Fraction(v)
    if m is KnowledgeModel.FULL_KNOWLEDGE and direction is Direction.AWAY:
        _require(0 <= v < 1, m, v)
        return (3 - v) / (1 - v)
    if m is KnowledgeModel.FULL_KNOWLEDGE and direction is Direction.TOWARD:
        if v > 1:
            return (v + 1) / v
        return (3 + v) / (1 + v)
    if m is KnowledgeModel.NO_SPEED and direction is Direction.TOWARD:
        return Fraction(3)
    if m is KnowledgeModel.NO_KNOWLEDGE and direction is Direction.TOWARD:
        _require(v > 0, m, v)
        return 1 + 1 / v
    raise ValueError(f"no lower bound known for ({m.value}, {direction.value})")


def ns_away_cr_bound(v: float) -> float:
    """Upper bound for the speed-guessing away strategy, in floats."""
    v = float(v)
    if not 0 <= v < 1:
        raise ValueError(f"requires 0 <= v < 1, got {v}")
    inv = 1.0 / (1.0 - v)
    return 2.5 * inv**6 + 22.0 * math.log2(inv) ** 2 * inv**8


def nk_away_cr_bound(d: float, v: float) -> float:
    """Upper bound for the no-knowledge away strategy, in floats."""
    d = float(d)
    v = float(v)
    if d < 1:
        raise ValueError(f"requires d >= 1, got {d}")
    if not 0 <= v < 1:
        raise ValueError(f"requires 0 <= v < 1, got {v}")
    big_m = max(d, 1.0 / (1.0 - v))
    log_m = math.log2(big_m)
    # log log M is negative (or undefined) for M <= 2; it only appears as a
    # slack factor, so it is clamped at zero there.
    loglog_m = math.log2(log_m) if big_m > 2 else 0.0
    return 12.0 * big_m**7 + 192.0 * (loglog_m + 3.0) * big_m**10 * log_m**2 / d


def zigzag_turn_bound(a: Fraction, d: Fraction, v: Fraction) -> float:
    """Per-robot turn bound for zigzag search, log taken base a."""
    a, d, v = float(a), float(d), float(v)
    if a <= 1 or d < 1 or v >= 1:
        raise ValueError("requires a > 1, d >= 1, v < 1")
    return 1.0 + 2.0 * math.log(2.0 * d / (1.0 - v)) / math.log(a)


#: Competitive ratio as a function of the tunable parameter, per algorithm.
_PARAM_CR: dict[AlgorithmId, Callable[[Fraction, Fraction], Fraction]] = {
    AlgorithmId.ND_AWAY_ZIGZAG: lambda a, v: 1 + 2 * a**2 / (a - 1 - a * v - v),
    AlgorithmId.ND_AWAY_OPPOSITE: lambda u, v: (1 - v + 3 * u + u * v)
    / ((u - v) * (1 - u)),
    AlgorithmId.ND_TOWARD_ZIGZAG: lambda a, v: 1 + 2 * a**2 / (a + a * v + v - 1),
    AlgorithmId.ND_TOWARD_OPPOSITE: lambda u, v: 1
    + (1 + u) ** 2 / ((1 - u) * (u + v)),
}


def _param_in_range(alg: AlgorithmId, p: Fraction, v: Fraction) -> bool:
    if alg is AlgorithmId.ND_AWAY_ZIGZAG:
        return p - 1 - p * v - v > 0
    if alg is AlgorithmId.ND_TOWARD_ZIGZAG:
        return p + p * v + v - 1 > 0 and p > 1
    if alg is AlgorithmId.ND_AWAY_OPPOSITE:
        return v < p < 1
    if alg is AlgorithmId.ND_TOWARD_OPPOSITE:
        return 0 < p < 1
    return False


def check_local_optimality(alg: AlgorithmId, v: Fraction, delta: float) -> bool:
    """True iff the closed-form parameter is a local minimum of the CR curve."""
    v = Fraction(v)
    if alg not in _PARAM_CR:
        raise ValueError(f"{alg} has no tunable parameter")
    f = _PARAM_CR[alg]
    p_star = default_parameter(alg, v)
    step = Fraction(delta)
    if not (
        _param_in_range(alg, p_star - step, v) and _param_in_range(alg, p_star + step, v)
    ):
        step = step / 10
        if not (
            _param_in_range(alg, p_star - step, v)
            and _param_in_range(alg, p_star + step, v)
        ):
            raise ValueError(
                f"perturbation {delta} leaves the validity range at v={v}"
            )
    base = f(p_star, v)
    return f(p_star - step, v) >= base and f(p_star + step, v) >= base


def _require(ok: bool, what: object, v: Fraction) -> None:
    if not ok:
        raise ValueError(f"speed v={v} outside validity range of {what}")
