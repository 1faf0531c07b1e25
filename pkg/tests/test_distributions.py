import random
from fractions import Fraction
from typing import Dict

import pytest

from netlex.core.distributions import (
    average_distribution,
    bin_distribution,
    bin_index,
    cross_dataset_correlations,
    pearson_correlation,
    trim_bins,
)
from netlex.models.distributions import BIN_COUNT, BinnedDistribution
from netlex.models.exceptions import DegenerateDistributionError, ValidationError
from netlex.models.metrics import MetricName, MetricVector, Normalization


def binned(counts: Dict[int, int], metric: MetricName = MetricName.DEGREE) -> BinnedDistribution:
    bins = [0] * BIN_COUNT
    for k, c in counts.items():
        bins[k] = c
    return BinnedDistribution(metric=metric, bins=bins, total=sum(bins))


def ramp(offset: int = 0) -> list:
    return [float((i + offset) % BIN_COUNT) for i in range(BIN_COUNT)]


class TestBinning:
    @pytest.mark.parametrize(
        "value, expected",
        [(0.0, 0), (0.014, 1), (0.015, 2), (0.005, 1), (0.5, 50), (0.999, 100), (1.0, 100)],
    )
    def test_rounds_half_up(self, value, expected):
        assert bin_index(value) == expected

    def test_fraction_values(self):
        assert bin_index(Fraction(1, 3)) == 33

    @pytest.mark.parametrize("value", [-0.01, 1.01])
    def test_out_of_range(self, value):
        with pytest.raises(ValidationError):
            bin_index(value)

    def test_histogram(self):
        vector = MetricVector(
            MetricName.CLOSENESS, (0.0, 0.014, 0.015, 1.0, 0.5, 0.5), Normalization.NORMALIZED_01
        )
        d = bin_distribution(vector)
        assert d.total == 6
        assert (d.bins[0], d.bins[1], d.bins[2], d.bins[50], d.bins[100]) == (1, 1, 1, 2, 1)
        assert sum(d.bins) == 6

    def test_raw_vector_rejected(self):
        with pytest.raises(ValidationError, match="raw"):
            bin_distribution(MetricVector(MetricName.DEGREE, (3.0, 1.0)))

    def test_bins_must_sum_to_total(self):
        with pytest.raises(ValueError):
            BinnedDistribution(metric=MetricName.DEGREE, bins=[1] * BIN_COUNT, total=5)


class TestAverage:
    def test_per_bin_mean(self):
        average = average_distribution([binned({0: 2, 10: 4}), binned({0: 4, 20: 2})])
        assert average[0] == 3.0
        assert average[10] == 2.0
        assert average[20] == 1.0
        assert len(average) == BIN_COUNT

    def test_order_of_samples_does_not_matter(self):
        rng = random.Random(5)
        samples = [
            binned({rng.randrange(BIN_COUNT): rng.randrange(1, 50) for _ in range(8)})
            for _ in range(7)
        ]
        expected = average_distribution(samples)
        for _ in range(10):
            rng.shuffle(samples)
            assert average_distribution(samples) == pytest.approx(expected)

    def test_empty(self):
        with pytest.raises(ValidationError):
            average_distribution([])

    def test_mixed_metrics(self):
        with pytest.raises(ValidationError, match="different metrics"):
            average_distribution([binned({0: 1}), binned({0: 1}, MetricName.CLOSENESS)])


class TestPearson:
    def test_identical(self):
        assert pearson_correlation(ramp(), ramp()) == pytest.approx(1.0)

    def test_reversed(self):
        assert pearson_correlation(ramp(), ramp()[::-1]) == pytest.approx(-1.0)

    def test_affine_invariant(self):
        x = ramp(7)
        y = [3 * v + 2 for v in x]
        assert pearson_correlation(x, y) == pytest.approx(1.0)

    def test_symmetric_and_bounded(self):
        x, y = ramp(3), [float((i * i) % 17) for i in range(BIN_COUNT)]
        r = pearson_correlation(x, y)
        assert r == pytest.approx(pearson_correlation(y, x))
        assert -1.0 <= r <= 1.0

    def test_zero_variance(self):
        with pytest.raises(DegenerateDistributionError, match="second vector"):
            pearson_correlation(ramp(), [4.0] * BIN_COUNT)

    def test_wrong_length(self):
        with pytest.raises(ValidationError):
            pearson_correlation([1.0, 2.0], [2.0, 1.0])


class TestTrim:
    def test_cuts_tails_keeps_interior(self):
        counts = [0, 0, 3, 0, 5, 0]
        trimmed = trim_bins(counts, MetricName.DEGREE)
        assert trimmed.first_bin == 2
        assert trimmed.counts == [3.0, 0.0, 5.0]
        assert trimmed.last_bin == 4
        assert trimmed.trimmed
        assert counts == [0, 0, 3, 0, 5, 0]

    def test_threshold(self):
        trimmed = trim_bins([1, 4, 2, 1], MetricName.STRENGTH, threshold=2)
        assert trimmed.items() == [(1, 4.0), (2, 2.0)]

    def test_nothing_to_trim(self):
        trimmed = trim_bins([1.0, 2.0], MetricName.CLOSENESS)
        assert not trimmed.trimmed
        assert trimmed.counts == [1.0, 2.0]

    def test_zero_threshold_keeps_everything(self):
        assert trim_bins([0, 0, 1], MetricName.ECCENTRICITY, threshold=0).counts == [0.0, 0.0, 1.0]

    def test_all_below_threshold(self):
        trimmed = trim_bins([0, 0, 0], MetricName.BETWEENNESS)
        assert trimmed.counts == []
        assert trimmed.first_bin == 0
        assert trimmed.trimmed


class TestCrossDataset:
    def test_matrix(self):
        matrix = cross_dataset_correlations(
            {
                "a": binned({0: 5, 50: 3, 100: 1}),
                "b": binned({0: 5, 50: 3, 100: 1}),
                "c": binned({10: 2, 60: 7}),
            }
        )
        assert matrix["a"]["a"] == 1.0
        assert matrix["a"]["b"] == pytest.approx(1.0)
        assert matrix["a"]["c"] == matrix["c"]["a"]
        assert set(matrix) == {"a", "b", "c"}

    def test_degenerate_pairs_left_empty(self):
        matrix = cross_dataset_correlations({"a": binned({0: 5, 3: 1}), "empty": binned({})})
        assert matrix["a"]["empty"] is None
        assert matrix["empty"]["empty"] is None
        assert matrix["a"]["a"] == 1.0

    def test_mixed_metrics(self):
        with pytest.raises(ValidationError):
            cross_dataset_correlations(
                {"a": binned({0: 1}), "b": binned({0: 1}, MetricName.LOCAL_CC)}
            )
