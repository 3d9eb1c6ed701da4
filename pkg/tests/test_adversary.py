"""Tests for adversarial instance generation and lower-bound demonstrators."""

import math
from fractions import Fraction as F

import pytest

from linecapture.adversary import (
    DEFAULT_EPS_REL,
    WorstCaseReport,
    critical_distances,
    single_turn_adversary,
    worst_case_cr,
)
from linecapture.scenario import Direction, KnowledgeModel
from linecapture.strategies import AlgorithmId, StrategySpec


class TestCriticalDistances:
    def test_doubling_thresholds_at_zero_speed(self):
        assert critical_distances(AlgorithmId.ND_AWAY_ZIGZAG, F(0), F(2), 3) == [
            1, 2, 4
        ]

    def test_small_thresholds_clamp_to_one(self):
        out = critical_distances(AlgorithmId.ND_AWAY_ZIGZAG, F(1, 3), F(4), 1)
        assert out == [1]

    def test_toward_thresholds_grow_geometrically(self):
        out = critical_distances(AlgorithmId.ND_TOWARD_ZIGZAG, F(1, 10), F(3, 2), 6)
        assert all(b > a for a, b in zip(out, out[1:]) if a > 1)

    def test_non_zigzag_rejected(self):
        with pytest.raises(ValueError):
            critical_distances(AlgorithmId.FK_AWAY, F(0), F(2), 3)

    def test_ratio_must_exceed_one(self):
        with pytest.raises(ValueError):
            critical_distances(AlgorithmId.ND_AWAY_ZIGZAG, F(0), F(1), 3)


class TestWorstCaseCr:
    def test_fk_away_supremum_and_witness(self):
        report = worst_case_cr(StrategySpec(AlgorithmId.FK_AWAY), F(1, 2), [F(1)])
        assert report.sup_cr == 5
        assert report.witness.side == -1  # opposite the first search direction

    def test_ns_toward_supremum(self):
        report = worst_case_cr(StrategySpec(AlgorithmId.NS_TOWARD), F(1), [F(1), F(3)])
        assert report.sup_cr == 3

    def test_nd_away_opposite_is_scale_invariant(self):
        spec = StrategySpec(AlgorithmId.ND_AWAY_OPPOSITE, cruise_u=F(3, 5))
        report = worst_case_cr(spec, F(1, 3), [F(1), F(2), F(7)])
        assert report.sup_cr == 25
        assert {rec.cr for rec in report.table} == {F(25)}

    def test_fk_side_supremum_reproduces_cr_exact(self):
        for v in (F(0), F(1, 4), F(1, 2)):
            report = worst_case_cr(StrategySpec(AlgorithmId.FK_AWAY), v, [F(1)])
            assert report.sup_cr == (3 - v) / (1 - v)

    def test_zigzag_grid_approaches_the_bound_from_below(self):
        v = F(1, 4)
        a = 2 * (1 + v) / (1 - v)
        spec = StrategySpec(AlgorithmId.ND_AWAY_ZIGZAG, ratio_a=a)
        report = worst_case_cr(spec, v, [F(1)], eps_rel=DEFAULT_EPS_REL, k_max=8)
        bound = (v + 3) ** 2 / (1 - v) ** 2
        assert F(19, 20) * bound <= report.sup_cr <= bound

    def test_report_invariant_enforced(self):
        report = worst_case_cr(StrategySpec(AlgorithmId.FK_AWAY), F(1, 2), [F(1)])
        with pytest.raises(ValueError):
            WorstCaseReport(
                sup_cr=F(1), witness=report.witness,
                eps_used=report.eps_used, table=report.table,
            )


class TestSingleTurnAdversary:
    def test_fk_away_minimal_turn_point(self):
        got = single_turn_adversary(
            KnowledgeModel.FULL_KNOWLEDGE, Direction.AWAY, F(1, 2), F(2)
        )
        assert got == 5

    def test_fk_toward_formula(self):
        got = single_turn_adversary(
            KnowledgeModel.FULL_KNOWLEDGE, Direction.TOWARD, F(2), F(1, 3)
        )
        assert got == F(5, 3)

    def test_ns_toward_placement(self):
        for v in (F(1, 10), F(1), F(2)):
            got = single_turn_adversary(
                KnowledgeModel.NO_SPEED, Direction.TOWARD, v, F(1)
            )
            assert got == 3

    def test_too_small_turn_point_never_captures(self):
        got = single_turn_adversary(
            KnowledgeModel.FULL_KNOWLEDGE, Direction.AWAY, F(1, 2), F(3, 2)
        )
        assert math.isinf(got)

    def test_family_never_beats_the_lower_bound(self):
        for v in (F(0), F(1, 4), F(1, 2), F(3, 4)):
            p_min = 1 / (1 - v)
            bound = (3 - v) / (1 - v)
            for j in range(21):
                p = p_min * (1 + F(j, 10))
                got = single_turn_adversary(
                    KnowledgeModel.FULL_KNOWLEDGE, Direction.AWAY, v, p
                )
                assert got >= bound

    def test_unsupported_family_rejected(self):
        with pytest.raises(ValueError):
            single_turn_adversary(
                KnowledgeModel.NO_KNOWLEDGE, Direction.AWAY, F(0), F(1)
            )
