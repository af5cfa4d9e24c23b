import numpy as np
import pytest

from core.brute_force import brute_force_solve
from core.errors import InvalidParameterError
from core.hitting_set import (
    HittingSetInstance, bits_to_mask, gen_hitting_set, hsc_brute_force, hsc_to_lp, mask_to_bits,
)
from core.metrics import lp_distance


def power_sum(gadget, i, j):
    coords = gadget.points.coords
    return lp_distance(coords[i], coords[j], gadget.points.tag).power_sum


def test_bit_strings():
    assert mask_to_bits(0b101, 4) == "1010"
    assert bits_to_mask("1010") == 5
    with pytest.raises(InvalidParameterError):
        bits_to_mask("10x")


class TestBruteForce:
    def test_full_set_hits_everything(self):
        assert hsc_brute_force(HittingSetInstance(3, (0b111,), (0b001,)))

    def test_empty_a_set_hits_nothing(self):
        assert not hsc_brute_force(HittingSetInstance(3, (0,), (0b010,)))

    def test_empty_b_collection_is_vacuous(self):
        assert hsc_brute_force(HittingSetInstance(3, (0,), ()))

    def test_needs_a_set(self):
        assert not hsc_brute_force(HittingSetInstance(3, (), (0b1,)))


class TestGenerator:
    def test_planted_no(self):
        inst = gen_hitting_set(2, 4, "planted-no", seed=7)
        assert inst.planted_answer is False
        assert hsc_brute_force(inst) is False

    def test_random_has_no_planted_answer(self):
        inst = gen_hitting_set(8, 8, "random", 0.5, seed=1)
        assert inst.planted_answer is None
        assert len(inst.A) == len(inst.B) == 8

    @pytest.mark.parametrize("seed", range(20))
    def test_planted_answers_hold(self, seed):
        for mode, expected in (("planted-yes", True), ("planted-no", False)):
            inst = gen_hitting_set(1 + seed % 12, 1 + seed % 10, mode, 0.5, seed)
            assert inst.planted_answer is expected
            assert hsc_brute_force(inst) is expected

    def test_deterministic(self):
        assert gen_hitting_set(10, 9, "planted-yes", seed=3) == gen_hitting_set(10, 9, "planted-yes", seed=3)

    @pytest.mark.parametrize("kwargs", [
        {"n": 0, "m": 3},
        {"n": 2, "m": 0},
        {"n": 2, "m": 64},
        {"n": 2, "m": 3, "mode": "maybe"},
        {"n": 2, "m": 3, "density": 1.5},
    ])
    def test_invalid_sizes(self, kwargs):
        with pytest.raises(InvalidParameterError):
            gen_hitting_set(**kwargs)

    def test_instance_rejects_out_of_universe_sets(self):
        with pytest.raises(InvalidParameterError):
            HittingSetInstance(2, (0b100,), ())

    def test_rows_round_trip(self):
        inst = gen_hitting_set(5, 6, "planted-yes", seed=2)
        again = HittingSetInstance.from_rows(6, inst.rows(), inst.planted_answer)
        assert again == inst


class TestLpGadget:
    def test_shape_and_thresholds(self):
        inst = gen_hitting_set(4, 3, seed=0)
        gadget = hsc_to_lp(inst)
        assert gadget.points.coords.shape == (9, 17)
        assert set(np.unique(gadget.points.coords)) <= {0, 1}
        assert gadget.thresholds == (9, 10)
        assert gadget.roles[0] == ("A", 0) and gadget.roles[-1] == ("s", 0)

    def test_displayed_distance_example(self):
        # S = {1, 2}, T = {2, 3}: one shared element
        inst = HittingSetInstance(3, (0b011,), (0b110,))
        gadget = hsc_to_lp(inst, p=2)
        assert power_sum(gadget, 0, 1) == 8

    @pytest.mark.parametrize("p", [0, 1, 2])
    def test_distance_formulas(self, p):
        inst = gen_hitting_set(6, 5, "random", 0.4, seed=11)
        m = inst.m
        gadget = hsc_to_lp(inst, p)
        n_a, n_b = len(inst.A), len(inst.B)
        s = n_a + n_b
        for i, a in enumerate(inst.A):
            assert power_sum(gadget, i, s) == 2 * m + 1
            for k in range(n_a):
                assert power_sum(gadget, i, k) <= 2 * m
            for t, b in enumerate(inst.B):
                shared = bin(a & b).count("1")
                assert power_sum(gadget, i, n_a + t) == 3 * m + 1 - 2 * shared
        for t in range(n_b):
            assert power_sum(gadget, n_a + t, s) == 3 * m + 2

    @pytest.mark.parametrize("seed", range(100))
    def test_completeness_and_soundness(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(1, 33))
        m = int(rng.integers(1, 13))
        mode = "planted-yes" if seed % 2 == 0 else "planted-no"
        inst = gen_hitting_set(n, m, mode, 0.5, seed)
        truth = hsc_brute_force(inst)
        for p in (0, 1, 2):
            gadget = hsc_to_lp(inst, p)
            result = brute_force_solve(gadget.points, objective="center")
            if truth:
                assert result.radius_key <= gadget.yes_threshold
            else:
                assert result.radius_key >= gadget.no_threshold
            assert gadget.decide() is truth
