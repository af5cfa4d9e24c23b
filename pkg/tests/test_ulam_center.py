import pytest

from core.brute_force import brute_force_solve, eccentricity
from core.errors import EmptyInputError, InvalidParameterError, ScriptMismatchError, SymbolSetMismatchError
from core.estimator import UlamEstimator, Value
from core.generation_service import random_permutations
from core.metrics import MetricTag
from core.ulam import EditScript, ulam_edit, ulam_edit_script, ulam_moves, weighted_ulam
from core.ulam_center import (
    HighRegime, LowRegime, bucket_decomposition, ceil_sqrt, compress, compress_pair, detect_regime,
    successor_buckets, ulam_center_approx, ulam_center_exact,
)

ULAM = MetricTag("ulam")


def identity(d):
    return tuple(range(1, d + 1))


def rotate_block(d, start, length):
    """Identity with the block [start, start+length) moved to the front: `length` moves when short."""
    base = list(identity(d))
    block = base[start:start + length]
    del base[start:start + length]
    return tuple(block + base)


def test_ceil_sqrt():
    assert [ceil_sqrt(d) for d in (0, 1, 2, 4, 5, 99, 100, 101)] == [0, 1, 2, 2, 3, 10, 10, 11]


class TestDetectRegime:
    def test_identical_strings_are_low_with_empty_scripts(self):
        regime = detect_regime([identity(9)] * 4)
        assert isinstance(regime, LowRegime)
        assert all(script.moves == 0 for script in regime.scripts)

    def test_far_string_is_high(self):
        far = identity(100)[25:] + identity(100)[:25]
        assert ulam_moves(identity(100), far) == 25
        regime = detect_regime([identity(100), far])
        assert isinstance(regime, HighRegime)
        assert regime.threshold == 10

    def test_near_strings_are_low(self):
        perms = [identity(100)] + [rotate_block(100, 40 + k, 5) for k in range(4)]
        regime = detect_regime(perms)
        assert isinstance(regime, LowRegime)
        assert regime.threshold == 20
        assert regime.max_anchor_moves == 5

    def test_mismatched_lengths(self):
        with pytest.raises(SymbolSetMismatchError):
            detect_regime([identity(4), identity(5)])

    def test_empty(self):
        with pytest.raises(EmptyInputError):
            detect_regime([])


class TestCompression:
    def test_identical_strings_compress_to_one_symbol(self):
        s = identity(12)
        empty = ulam_edit_script(s, s)
        a, b = compress_pair(s, s, empty, empty)
        assert len(a) == len(b) == 1
        assert a.weights == (12,)
        assert weighted_ulam(a, b) == 0

    def test_small_swap(self):
        s_i = (1, 2, 3, 4, 5)
        s_j = (1, 2, 4, 3, 5)
        a, b = compress_pair(s_i, s_j, ulam_edit_script(s_i, s_i), ulam_edit_script(s_i, s_j))
        assert len(a) <= 5 and len(b) <= 5
        assert a.total_weight == b.total_weight == 5
        assert weighted_ulam(a, b) == 2

    def test_marked_symbols_are_singletons(self):
        s_i = identity(10)
        s_j = rotate_block(10, 6, 2)
        decomposition = bucket_decomposition(
            s_i, s_j, ulam_edit_script(s_i, s_i), ulam_edit_script(s_i, s_j)
        )
        for bucket in decomposition.buckets:
            if len(bucket) > 1:
                assert not set(bucket) & decomposition.marked
        assert sorted(v for bucket in decomposition.buckets for v in bucket) == list(s_i)

    @pytest.mark.parametrize("d", [64, 256, 1024])
    def test_compression_preserves_distance(self, d):
        perms = [identity(d)] + random_permutations(8, d, seed=d, moves=ceil_sqrt(d))
        regime = detect_regime(perms)
        assert isinstance(regime, LowRegime)
        for i in range(len(perms)):
            for j in range(i + 1, len(perms)):
                s_i, s_j = perms[i], perms[j]
                a, b = compress_pair(s_i, s_j, regime.scripts[i], regime.scripts[j])
                exact = ulam_edit(s_i, s_j)
                assert a.total_weight == b.total_weight == d
                assert weighted_ulam(a, b) == exact
                assert weighted_ulam(*compress(s_j, successor_buckets(s_i, s_j))) == exact

    def test_successor_buckets_on_random_pairs(self, rng):
        for _ in range(100):
            d = int(rng.integers(1, 40))
            s_i = tuple(int(v) for v in rng.permutation(d) + 1)
            s_j = tuple(int(v) for v in rng.permutation(d) + 1)
            assert weighted_ulam(*compress(s_j, successor_buckets(s_i, s_j))) == ulam_edit(s_i, s_j)

    def test_script_mismatch(self):
        s_i = identity(5)
        s_j = (1, 2, 4, 3, 5)
        bogus = EditScript(kept=(5, 1), moved=frozenset({2, 3, 4}))
        with pytest.raises(ScriptMismatchError):
            compress_pair(s_i, s_j, bogus, ulam_edit_script(s_i, s_j))

    def test_symbol_mismatch(self):
        script = ulam_edit_script(identity(3), identity(3))
        with pytest.raises(SymbolSetMismatchError):
            compress_pair(identity(3), (1, 2, 4), script, script)


class TestUlamCenterApprox:
    def test_singleton(self):
        result = ulam_center_approx([identity(7)], 0.1)
        assert (result.index, result.radius) == (0, 0)

    def test_small_perturbations_are_exact(self):
        d = 16
        base = list(identity(d))
        perms = [
            tuple(base),
            (2, 1) + tuple(base[2:]),
            (1, 3, 2) + tuple(base[3:]),
            tuple(base[:10]) + (12, 11) + tuple(base[12:]),
        ]
        result = ulam_center_approx(perms, 0.1)
        oracle = brute_force_solve(perms, ULAM)
        assert result.diagnostics["regime"] == "low"
        assert result.diagnostics["exact"] is True
        assert (result.index, result.radius) == (oracle.index, oracle.radius)
        assert result.diagnostics["radius_edit_ops"] == 2 * oracle.radius

    @pytest.mark.parametrize("seed", range(25))
    def test_low_regime_equals_oracle(self, seed):
        perms = random_permutations(12, 64, seed=seed, moves=4)
        result = ulam_center_approx(perms, 0.1, keep_eccentricities=True)
        oracle = brute_force_solve(perms, ULAM, keep_eccentricities=True)
        assert result.diagnostics["regime"] == "low"
        assert result.radius == oracle.radius
        assert result.index == oracle.index
        assert result.eccentricities == oracle.eccentricities

    @pytest.mark.parametrize("seed", range(25))
    def test_high_regime_within_factor(self, seed):
        perms = random_permutations(16, 128, seed=100 + seed)
        result = ulam_center_approx(perms, 0.1)
        oracle = brute_force_solve(perms, ULAM)
        assert result.diagnostics["regime"] == "high"
        true_ecc = eccentricity(perms, result.index, ULAM)
        assert oracle.radius <= true_ecc <= result.radius <= 1.1 * oracle.radius

    def test_inflating_estimator_stays_within_factor(self):
        class Inflating(UlamEstimator):
            name = "inflating"

            def estimate(self, sigma, tau, threshold, eps):
                d = ulam_moves(sigma, tau)
                if d < threshold:
                    return Value(d, d)
                return Value(int(d * (1 + eps)), d)

        perms = random_permutations(10, 100, seed=7)
        eps = 0.2
        result = ulam_center_approx(perms, eps, estimator=Inflating())
        oracle = brute_force_solve(perms, ULAM)
        assert result.diagnostics["estimator"] == "inflating"
        assert eccentricity(perms, result.index, ULAM) <= (1 + eps) * oracle.radius

    def test_threads_do_not_change_answer(self):
        perms = random_permutations(10, 64, seed=3, moves=3)
        assert ulam_center_approx(perms, 0.1, threads=1) == ulam_center_approx(perms, 0.1, threads=4)

    def test_bad_eps(self):
        with pytest.raises(InvalidParameterError):
            ulam_center_approx([identity(3)], 0)

    def test_empty(self):
        with pytest.raises(EmptyInputError):
            ulam_center_approx([], 0.1)


def test_exact_center_matches_brute_force(rng):
    perms = [tuple(int(v) for v in rng.permutation(9) + 1) for _ in range(10)]
    result = ulam_center_exact(perms)
    oracle = brute_force_solve(perms, ULAM)
    assert (result.index, result.radius) == (oracle.index, oracle.radius)
    assert result.diagnostics["radius_edit_ops"] == 2 * oracle.radius
