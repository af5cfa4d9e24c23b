import math

import numpy as np
import pytest

from core.errors import DimensionMismatchError, EmptyInputError, InvalidMetricError
from core.metrics import MetricTag, PointSet, hamming_distance, lp_distance, render_key, row_keys


class TestMetricTag:
    @pytest.mark.parametrize("text,kind,p", [
        ("l1", "lp", 1.0),
        ("L2", "lp", 2.0),
        ("l2.5", "lp", 2.5),
        ("lp:3", "lp", 3.0),
        ("l0", "hamming", None),
        ("hamming", "hamming", None),
        ("linf", "linf", None),
        ("edit", "edit", None),
        ("ulam", "ulam", None),
    ])
    def test_parse(self, text, kind, p):
        tag = MetricTag.parse(text)
        assert tag.kind == kind
        assert tag.p == p

    @pytest.mark.parametrize("text", ["l0.5", "lp:0.2", "euclid", "l-3"])
    def test_parse_rejects(self, text):
        with pytest.raises(InvalidMetricError):
            MetricTag.parse(text)

    def test_lp_folds_special_exponents(self):
        assert MetricTag.lp(0) == MetricTag("hamming")
        assert MetricTag.lp(math.inf) == MetricTag("linf")
        assert MetricTag.lp(1).label == "l1"

    def test_fractional_p_rejected(self):
        with pytest.raises(InvalidMetricError):
            MetricTag("lp", 0.5)

    def test_label_round_trips(self):
        for text in ("l1", "l2", "l2.5", "hamming", "linf", "edit", "ulam"):
            tag = MetricTag.parse(text)
            assert MetricTag.parse(tag.label) == tag


class TestLpDistance:
    def test_pythagorean(self):
        d = lp_distance([0, 0], [3, 4], MetricTag.lp(2))
        assert d.value == 5
        assert d.power_sum == 25

    @pytest.mark.parametrize("p", [0, 1, 2, 3.5, math.inf])
    def test_identity(self, p):
        assert lp_distance([1, 7], [1, 7], MetricTag.lp(p)).value == 0

    def test_hamming_count(self):
        assert lp_distance([0, 1, 1], [1, 1, 0], MetricTag.lp(0)).value == 2

    def test_linf(self):
        assert lp_distance([0, 5, -2], [3, 1, -2], MetricTag("linf")).value == 4

    def test_power_sum_is_exact_for_large_integers(self):
        big = 10 ** 12
        d = lp_distance([0, 0], [big, big], MetricTag.lp(3))
        assert d.power_sum == 2 * big ** 3

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            lp_distance([1, 2], [1, 2, 3], MetricTag.lp(1))

    def test_sequence_tag_rejected(self):
        with pytest.raises(InvalidMetricError):
            lp_distance([1], [2], MetricTag("edit"))

    @pytest.mark.parametrize("p", [0, 1, 2, 3, math.inf])
    def test_metric_axioms(self, rng, p):
        tag = MetricTag.lp(p)
        pts = rng.integers(-20, 20, size=(10_000, 3, 4))
        for x, y, z in pts:
            dxy = lp_distance(x, y, tag).value
            assert lp_distance(x, x, tag).value == 0
            assert dxy == lp_distance(y, x, tag).value
            assert lp_distance(x, z, tag).value <= dxy + lp_distance(y, z, tag).value + 1e-9


class TestPointSet:
    def test_one_dimensional_input_becomes_column(self):
        ps = PointSet(np.arange(10), MetricTag.lp(1))
        assert (ps.n, ps.dim) == (10, 1)
        assert ps.is_integer

    def test_empty(self):
        with pytest.raises(EmptyInputError):
            PointSet(np.zeros((0, 2)), MetricTag.lp(1))

    def test_ragged_rows(self):
        with pytest.raises(DimensionMismatchError):
            PointSet.from_rows([[1, 2], [3]], MetricTag.lp(1))

    def test_sequence_metric_rejected(self):
        with pytest.raises(InvalidMetricError):
            PointSet([[1, 2]], MetricTag("ulam"))

    def test_float_coordinates(self):
        ps = PointSet([[0.5, 1.0]], MetricTag.lp(2))
        assert not ps.is_integer


def test_row_keys_match_pairwise_distances(rng):
    coords = rng.integers(-50, 50, size=(20, 3))
    for p in (0, 1, 2, math.inf):
        tag = MetricTag.lp(p)
        ps = PointSet(coords, tag)
        keys = row_keys(ps, coords[3])
        for j in range(ps.n):
            expected = lp_distance(coords[3], coords[j], tag)
            assert render_key(tag, keys[j]) == pytest.approx(expected.value)


def test_hamming_distance():
    assert hamming_distance("0110", "0011") == 2
    assert hamming_distance((1, 0), (1, 0)) == 0
    with pytest.raises(DimensionMismatchError):
        hamming_distance("01", "011")
