"""Analyzer-chain simulation: exact distributions and seeded sampling."""

import math

import numpy as np
import pytest

from polamp import (
    Branch,
    Direction,
    MeasurementScenario,
    StageCapError,
    exact_distribution,
    plus,
    probability,
    sample,
)
from polamp.directions import BranchLabel
from polamp.simulate import index_to_sequence, sequence_to_index, sequence_to_str, str_to_sequence

TOL = 1e-12

P, M = Branch.PLUS, Branch.MINUS


def malus_chain():
    """Initial x polarization through analyzers at 45 and 90 degrees."""
    return MeasurementScenario(
        initial=plus(0.0, 0.0),
        stages=(Direction(math.pi / 4, 0.0), Direction(math.pi / 2, 0.0)),
    )


class TestSequenceIndexing:

    def test_round_trip(self):
        for i in range(8):
            assert sequence_to_index(index_to_sequence(i, 3)) == i

    def test_first_stage_is_most_significant(self):
        assert sequence_to_index((M, P, P)) == 4
        assert index_to_sequence(1, 3) == (P, P, M)

    def test_string_round_trip(self):
        assert sequence_to_str((P, M, P)) == "+-+"
        assert str_to_sequence("+-+") == (P, M, P)


class TestExactDistribution:

    def test_repeated_direction_is_certain(self):
        d = Direction(0.4, 1.7)
        dist = exact_distribution(MeasurementScenario(initial=BranchLabel(d, P), stages=(d,)))
        assert dist[(P,)] == pytest.approx(1.0, abs=TOL)
        assert dist[(M,)] == pytest.approx(0.0, abs=TOL)

    def test_single_stage_matches_probability(self):
        initial = plus(0.3, 0.8)
        stage = Direction(1.4, 2.1)
        dist = exact_distribution(MeasurementScenario(initial=initial, stages=(stage,)))
        assert dist[(P,)] == pytest.approx(probability(initial, BranchLabel(stage, P)), abs=TOL)
        assert dist[(M,)] == pytest.approx(probability(initial, BranchLabel(stage, M)), abs=TOL)

    def test_malus_chain(self):
        dist = exact_distribution(malus_chain())
        assert abs(dist[(P, P)] - 0.25) < 1e-15

    def test_repeated_stage_never_flips(self):
        d1 = Direction(0.9, 0.3)
        scenario = MeasurementScenario(initial=plus(0.2, 1.1), stages=(d1, d1))
        dist = exact_distribution(scenario)
        assert dist[(P, M)] == pytest.approx(0.0, abs=TOL)
        assert dist[(M, P)] == pytest.approx(0.0, abs=TOL)

    def test_normalization_and_size(self):
        rng = np.random.default_rng(5)
        stages = tuple(Direction(t, a) for t, a in rng.uniform(-3, 3, (6, 2)))
        dist = exact_distribution(MeasurementScenario(initial=plus(0.5, 0.5), stages=stages))
        assert len(dist) == 2 ** 6
        assert dist.total() == pytest.approx(1.0, abs=TOL)

    def test_marginalizing_last_stage(self):
        rng = np.random.default_rng(6)
        stages = tuple(Direction(t, a) for t, a in rng.uniform(-3, 3, (4, 2)))
        scenario = MeasurementScenario(initial=plus(1.0, 0.2), stages=stages)
        full = exact_distribution(scenario)
        shorter = exact_distribution(
            MeasurementScenario(initial=scenario.initial, stages=stages[:-1])
        )
        np.testing.assert_allclose(
            full.marginal_dropping_last().probs, shorter.probs, atol=TOL
        )

    def test_stage_cap(self):
        stages = tuple(Direction(0.1 * k) for k in range(5))
        scenario = MeasurementScenario(initial=plus(0.0), stages=stages)
        with pytest.raises(StageCapError, match="cap"):
            exact_distribution(scenario, stage_cap=4)
        exact_distribution(scenario, stage_cap=5)

    def test_empty_stages_rejected(self):
        with pytest.raises(ValueError, match="stage"):
            MeasurementScenario(initial=plus(0.0), stages=())


class TestSample:

    def test_certain_outcome(self):
        d = Direction(0.7, 0.1)
        scenario = MeasurementScenario(initial=BranchLabel(d, P), stages=(d,))
        report = sample(scenario, seed=3, trials=5000)
        assert report[(P,)] == 5000
        assert report[(M,)] == 0
        assert report.max_abs_deviation_sigma == 0.0

    def test_determinism(self):
        scenario = malus_chain()
        r1 = sample(scenario, seed=123, trials=20000)
        r2 = sample(scenario, seed=123, trials=20000)
        assert np.array_equal(r1.counts, r2.counts)
        assert r1.max_abs_deviation_sigma == r2.max_abs_deviation_sigma

    def test_seed_changes_counts(self):
        scenario = malus_chain()
        r1 = sample(scenario, seed=1, trials=20000)
        r2 = sample(scenario, seed=2, trials=20000)
        assert not np.array_equal(r1.counts, r2.counts)

    def test_block_partitioning_is_bit_identical(self):
        # the stream-split rule: any 4-aligned partition of the trial space
        scenario = malus_chain()
        whole = sample(scenario, seed=99, trials=12345)
        for block in (4, 64, 1000, 4096):
            split = sample(scenario, seed=99, trials=12345, block_size=block)
            assert np.array_equal(whole.counts, split.counts)

    def test_misaligned_block_rejected(self):
        with pytest.raises(ValueError, match="multiple of 4"):
            sample(malus_chain(), seed=0, trials=100, block_size=10)

    def test_counts_sum_to_trials(self):
        report = sample(malus_chain(), seed=11, trials=33333)
        assert int(report.counts.sum()) == 33333

    def test_malus_frequencies_within_five_sigma(self):
        report = sample(malus_chain(), seed=2024, trials=1_000_000)
        assert report.max_abs_deviation_sigma <= 5.0

    def test_zero_trials_rejected(self):
        with pytest.raises(ValueError, match="trials"):
            sample(malus_chain(), seed=0, trials=0)

    def test_negative_seed_rejected(self):
        with pytest.raises(ValueError, match="seed"):
            sample(malus_chain(), seed=-1, trials=10)
