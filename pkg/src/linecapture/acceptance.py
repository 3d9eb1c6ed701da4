"""Acceptance suite: one function per verification criterion.

Each criterion evaluates a fixed battery of exact (rational) or
float-with-stated-slack checks and reports PASS/FAIL with details.  The same
functions back both ``linecapture verify`` and the test suite, so the CLI and
pytest can never disagree.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from . import adversary, theory
from .scenario import (
    Direction,
    KnowledgeModel,
    Scenario,
    offline_optimal_time,
    visible_knowledge,
)
from .strategies import (
    AlgorithmId,
    StrategySpec,
    competitive_ratio,
    guess_schedule,
    next_leg_length,
    planned_trajectories,
    select_algorithm,
    simulate,
)

#: Relative slack for comparisons against float-valued bounds.
FLOAT_SLACK = 1e-12


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    details: tuple[str, ...] = ()

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"


class _Checker:
    """Collects named checks; the criterion passes iff all checks do."""

    def __init__(self) -> None:
        self.failures: list[str] = []

    def check(self, ok: bool, label: str) -> None:
        if not ok:
            self.failures.append(label)

    def equal(self, got: object, want: object, label: str) -> None:
        self.check(got == want, f"{label}: got {got}, want {want}")

    def result(self, number: int, name: str) -> CriterionResult:
        return CriterionResult(number, name, not self.failures, tuple(self.failures))


def _worst_side_cr(spec: StrategySpec, d: Fraction, v: Fraction,
                   direction: Direction) -> Fraction:
    crs = []
    for side in (1, -1):
        s = Scenario(d=d, v=v, direction=direction, side=side)
        crs.append(competitive_ratio(simulate(spec, s), s))
    return max(crs)


def criterion_1() -> CriterionResult:
    """FK away: worst-side CR is (3-v)/(1-v), right-side CR is 1, exactly."""
    c = _Checker()
    for v in (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
        for d in (Fraction(1), Fraction(5)):
            spec = StrategySpec(AlgorithmId.FK_AWAY, first_direction=1)
            want = (3 - v) / (1 - v)
            for side, want_cr in ((-1, want), (1, Fraction(1))):
                s = Scenario(d=d, v=v, direction=Direction.AWAY, side=side)
                cr = competitive_ratio(simulate(spec, s), s)
                c.equal(cr, want_cr, f"fk-away v={v} d={d} side={side:+d}")
    return c.result(1, "FK Away exactness")


def criterion_2() -> CriterionResult:
    """FK toward: moving CR (3+v)/(1+v) for slow, waiting (v+1)/v for fast."""
    c = _Checker()
    for d in (Fraction(1), Fraction(3)):
        for v in (Fraction(1, 4), Fraction(1, 2)):
            cr = _worst_side_cr(
                StrategySpec(AlgorithmId.FK_TOWARD), d, v, Direction.TOWARD
            )
            c.equal(cr, (3 + v) / (1 + v), f"fk-toward v={v} d={d}")
        for v in (Fraction(2), Fraction(4)):
            cr = _worst_side_cr(
                StrategySpec(AlgorithmId.WAIT_AT_ORIGIN), d, v, Direction.TOWARD
            )
            c.equal(cr, (v + 1) / v, f"wait v={v} d={d}")
        for alg in (AlgorithmId.FK_TOWARD, AlgorithmId.WAIT_AT_ORIGIN):
            cr = _worst_side_cr(StrategySpec(alg), d, Fraction(1), Direction.TOWARD)
            c.equal(cr, Fraction(2), f"{alg.value} v=1 d={d}")
    return c.result(2, "FK Toward exactness")


def criterion_3() -> CriterionResult:
    """ND away opposite: CR, total turns, and T1/T2/T3 closed forms, exactly."""
    c = _Checker()
    for v in (Fraction(0), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2)):
        u = (3 * v + 1) / (3 + v)
        spec = StrategySpec(AlgorithmId.ND_AWAY_OPPOSITE, cruise_u=u)
        for d in (Fraction(1), Fraction(2), Fraction(7)):
            t1 = d / (u - v)
            t2 = 2 * u * t1 / (1 - u)
            t3 = (d + (v + u) * (t1 + t2)) / (1 - v)
            for side in (1, -1):
                s = Scenario(d=d, v=v, direction=Direction.AWAY, side=side)
                r = simulate(spec, s)
                tag = f"nd-away v={v} d={d} side={side:+d}"
                c.equal(competitive_ratio(r, s), (v + 3) ** 2 / (1 - v) ** 2,
                        f"{tag} cr")
                c.equal(r.turns_r1 + r.turns_r2, 3, f"{tag} turns")
                c.equal(r.found_time, t1, f"{tag} T1")
                c.equal(r.fetch_time, t2, f"{tag} T2")
                c.equal(r.chase_time, t3, f"{tag} T3")
    return c.result(3, "ND Away opposite-direction exactness")


def _ceil_log(base: Fraction, x: Fraction) -> int:
    """Smallest integer n >= 0 with base**n >= x, for base > 1."""
    n = 0
    power = Fraction(1)
    while power < x:
        power *= base
        n += 1
    return n


def criterion_4() -> CriterionResult:
    """ND away zigzag: CR below the bound, near-tight at k=8, few turns."""
    c = _Checker()
    eps = adversary.DEFAULT_EPS_REL
    for v in (Fraction(0), Fraction(1, 4), Fraction(1, 2)):
        a = 2 * (1 + v) / (1 - v)
        spec = StrategySpec(AlgorithmId.ND_AWAY_ZIGZAG, ratio_a=a)
        bound = (v + 3) ** 2 / (1 - v) ** 2
        best = Fraction(0)
        for d_k in adversary.critical_distances(AlgorithmId.ND_AWAY_ZIGZAG, v, a, 8):
            d = d_k * (1 + eps)
            turn_cap = 1 + 2 * _ceil_log(a, 2 * d / (1 - v)) + 2
            for side in (1, -1):
                s = Scenario(d=d, v=v, direction=Direction.AWAY, side=side)
                r = simulate(spec, s)
                cr = competitive_ratio(r, s)
                tag = f"zigzag v={v} d={float(d):.6g} side={side:+d}"
                c.check(cr <= bound, f"{tag}: cr {float(cr)} > bound {float(bound)}")
                c.check(
                    max(r.turns_r1, r.turns_r2) <= turn_cap,
                    f"{tag}: turns {r.turns_r1}/{r.turns_r2} > cap {turn_cap}",
                )
                best = max(best, cr)
        c.check(
            best >= Fraction(19, 20) * bound,
            f"zigzag v={v}: max cr {float(best)} < 0.95*bound {float(bound) * 0.95}",
        )
    return c.result(4, "ND Away zigzag bound and turn count")


def criterion_5() -> CriterionResult:
    """ND toward: opposite CR for slow targets, waiting for fast, exactly."""
    c = _Checker()
    for d in (Fraction(1), Fraction(5)):
        for v in (Fraction(1, 10), Fraction(1, 5), Fraction(3, 10)):
            u = (1 - 3 * v) / (3 - v)
            spec = StrategySpec(AlgorithmId.ND_TOWARD_OPPOSITE, cruise_u=u)
            want = 1 + 8 * (1 - v) / (1 + v) ** 2
            for side in (1, -1):
                s = Scenario(d=d, v=v, direction=Direction.TOWARD, side=side)
                r = simulate(spec, s)
                tag = f"nd-toward v={v} d={d} side={side:+d}"
                c.equal(competitive_ratio(r, s), want, f"{tag} cr")
                c.equal(r.turns_r1 + r.turns_r2, 3, f"{tag} turns")
        for v in (Fraction(1, 2), Fraction(2)):
            cr = _worst_side_cr(
                StrategySpec(AlgorithmId.WAIT_AT_ORIGIN), d, v, Direction.TOWARD
            )
            c.equal(cr, 1 + 1 / v, f"wait v={v} d={d}")
    v = Fraction(1, 3)
    c.equal(1 + 8 * (1 - v) / (1 + v) ** 2, Fraction(4), "boundary moving formula")
    c.equal(1 + 1 / v, Fraction(4), "boundary waiting formula")
    return c.result(5, "ND Toward exactness")


def _within_bound(cr: Fraction, bound: float) -> bool:
    return float(cr) <= bound * (1 + FLOAT_SLACK)


def criterion_6() -> CriterionResult:
    """NS away: capture in 3 turns under the speed-guessing bound."""
    c = _Checker()
    spec = StrategySpec(AlgorithmId.NS_AWAY)
    for v in (Fraction(0), Fraction(1, 2), Fraction(7, 8)):
        bound = theory.ns_away_cr_bound(float(v))
        for d in (Fraction(1), Fraction(10)):
            for side in (1, -1):
                s = Scenario(d=d, v=v, direction=Direction.AWAY, side=side)
                tag = f"ns-away v={v} d={d} side={side:+d}"
                try:
                    r = simulate(spec, s)
                except Exception as exc:  # noqa: BLE001 - reported, not hidden
                    c.check(False, f"{tag}: no capture ({exc})")
                    continue
                c.check(r.iteration < spec.max_iterations, f"{tag}: iteration cap")
                c.equal(r.turns_r1 + r.turns_r2, 3, f"{tag} turns")
                cr = competitive_ratio(r, s)
                c.check(
                    _within_bound(cr, bound),
                    f"{tag}: cr {float(cr):.6g} > bound {bound:.6g}",
                )
    d_base, t_cum = Fraction(1), Fraction(0)
    prev = None
    for i in range(8):
        e = guess_schedule(KnowledgeModel.NO_SPEED, i)
        x_i = next_leg_length(KnowledgeModel.NO_SPEED, e, d_base, t_cum)
        if prev is not None:
            e_prev, x_prev = prev
            c.equal(e_prev.u_i, e.v_i, f"identity u_{i-1} = v_{i}")
            c.check(
                x_i <= 4 * 2**e.f_i * x_prev,
                f"growth x_{i} = {float(x_i):.6g} > 4*2^f_{i}*x_{i-1}",
            )
        prev = (e, x_i)
        t_cum += x_i
    return c.result(6, "NS Away guessing schedule")


def criterion_7() -> CriterionResult:
    """NS toward: CR exactly 3 (2 in the overtake case), never above 3."""
    c = _Checker()
    spec = StrategySpec(AlgorithmId.NS_TOWARD)
    for d in (Fraction(1), Fraction(4)):
        for v, want in (
            (Fraction(1, 10), Fraction(3)),
            (Fraction(1), Fraction(3)),
            (Fraction(3, 2), Fraction(3)),
            (Fraction(3), Fraction(2)),
        ):
            cr = _worst_side_cr(spec, d, v, Direction.TOWARD)
            c.equal(cr, want, f"ns-toward v={v} d={d}")
            c.check(cr <= 3, f"ns-toward v={v} d={d} above 3")
    for v in (Fraction(1, 10), Fraction(1), Fraction(3, 2)):
        got = adversary.single_turn_adversary(
            KnowledgeModel.NO_SPEED, Direction.TOWARD, v, Fraction(1)
        )
        c.equal(got, Fraction(3), f"single-turn demonstrator v={v}")
    return c.result(7, "NS Toward exactness")


def criterion_8() -> CriterionResult:
    """NK away: capture in 3 turns under the no-knowledge bound."""
    c = _Checker()
    spec = StrategySpec(AlgorithmId.NK_AWAY)
    for v in (Fraction(0), Fraction(1, 2)):
        for d in (Fraction(1), Fraction(8)):
            bound = theory.nk_away_cr_bound(float(d), float(v))
            for side in (1, -1):
                s = Scenario(d=d, v=v, direction=Direction.AWAY, side=side)
                tag = f"nk-away v={v} d={d} side={side:+d}"
                try:
                    r = simulate(spec, s)
                except Exception as exc:  # noqa: BLE001 - reported, not hidden
                    c.check(False, f"{tag}: no capture ({exc})")
                    continue
                c.equal(r.turns_r1 + r.turns_r2, 3, f"{tag} turns")
                cr = competitive_ratio(r, s)
                c.check(
                    _within_bound(cr, bound),
                    f"{tag}: cr {float(cr):.6g} > bound {bound:.6g}",
                )
    return c.result(8, "NK Away bound")


def criterion_9() -> CriterionResult:
    """Theory identities, bound ordering, and local optimality."""
    c = _Checker()
    for k in range(1, 51):
        v = Fraction(k, 53)
        lhs = (v - 3) ** 2 / (v + 1) ** 2
        rhs = 1 + 8 * (1 - v) / (1 + v) ** 2
        c.equal(lhs, rhs, f"identity at v={v}")
    ordering = [
        (AlgorithmId.FK_AWAY, KnowledgeModel.FULL_KNOWLEDGE, Direction.AWAY,
         (Fraction(0), Fraction(1, 2), Fraction(9, 10))),
        (AlgorithmId.FK_TOWARD, KnowledgeModel.FULL_KNOWLEDGE, Direction.TOWARD,
         (Fraction(1, 4), Fraction(1))),
        (AlgorithmId.WAIT_AT_ORIGIN, KnowledgeModel.FULL_KNOWLEDGE, Direction.TOWARD,
         (Fraction(3, 2), Fraction(4))),
        (AlgorithmId.NS_TOWARD, KnowledgeModel.NO_SPEED, Direction.TOWARD,
         (Fraction(1, 2), Fraction(2))),
    ]
    for alg, model, direction, vs in ordering:
        for v in vs:
            c.check(
                theory.cr_exact(alg, v) >= theory.cr_lower(model, direction, v),
                f"cr_exact < cr_lower for {alg.value} at v={v}",
            )
    delta = Fraction(1, 1000)
    away_grid = (Fraction(1, 10), Fraction(1, 5), Fraction(1, 4),
                 Fraction(1, 3), Fraction(1, 2))
    toward_grid = (Fraction(1, 10), Fraction(1, 5), Fraction(1, 4))
    for alg, grid in (
        (AlgorithmId.ND_AWAY_ZIGZAG, away_grid),
        (AlgorithmId.ND_AWAY_OPPOSITE, away_grid),
        (AlgorithmId.ND_TOWARD_ZIGZAG, toward_grid),
        (AlgorithmId.ND_TOWARD_OPPOSITE, toward_grid),
    ):
        for v in grid:
            c.check(
                theory.check_local_optimality(alg, v, delta),
                f"local optimality fails for {alg.value} at v={v}",
            )
    return c.result(9, "Theory identities and optimality")


def criterion_10() -> CriterionResult:
    """Knowledge isolation: hidden fields never leak into planned motion."""
    c = _Checker()
    rng = random.Random(0x1C4B)
    models = [KnowledgeModel.NO_DISTANCE, KnowledgeModel.NO_SPEED,
              KnowledgeModel.NO_KNOWLEDGE]

    def rand_d() -> Fraction:
        return 1 + Fraction(rng.randint(0, 60), rng.randint(1, 7))

    def rand_v(direction: Direction) -> Fraction:
        if direction is Direction.AWAY:
            return Fraction(rng.randint(0, 19), 20)
        return Fraction(rng.randint(0, 59), 20)

    for trial in range(100):
        model = rng.choice(models)
        direction = rng.choice([Direction.AWAY, Direction.TOWARD])
        side = rng.choice([1, -1])
        d1 = rand_d()
        v1 = rand_v(direction)
        hide_d = model in (KnowledgeModel.NO_DISTANCE, KnowledgeModel.NO_KNOWLEDGE)
        hide_v = model in (KnowledgeModel.NO_SPEED, KnowledgeModel.NO_KNOWLEDGE)
        d2 = d1
        while hide_d and d2 == d1:
            d2 = rand_d()
        v2 = v1
        while hide_v and v2 == v1:
            v2 = rand_v(direction)
        s1 = Scenario(d=d1, v=v1, direction=direction, side=side)
        s2 = Scenario(d=d2, v=v2, direction=direction, side=side)
        k1 = visible_knowledge(model, s1)
        k2 = visible_knowledge(model, s2)
        spec = select_algorithm(model, direction, k1)
        plan1 = planned_trajectories(spec, k1, horizon_legs=12)
        plan2 = planned_trajectories(spec, k2, horizon_legs=12)
        c.equal(
            plan1, plan2,
            f"trial {trial}: {model.value}/{direction.value} plans diverge",
        )
    return c.result(10, "Knowledge isolation")


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
}

SUITES: dict[str, tuple[int, ...]] = {
    "fk": (1, 2),
    "nd": (3, 4, 5),
    "ns": (6, 7),
    "nk": (8,),
    "theory": (9,),
    "isolation": (10,),
}


def run_criteria(numbers: Optional[Iterable[int]] = None) -> list[CriterionResult]:
    chosen = sorted(set(numbers)) if numbers is not None else sorted(CRITERIA)
    unknown = [n for n in chosen if n not in CRITERIA]
    if unknown:
        raise ValueError(f"unknown criteria: {unknown}")
    return [CRITERIA[n]() for n in chosen]
