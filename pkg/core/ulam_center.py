"""
Approximate 1-center under the Ulam metric.

Two regimes, decided from the distances to an anchor string (index 0):

* Low: every string is within 2*ceil(sqrt(d)) moves of the anchor. Edit
  scripts from the anchor give, for each pair, a transformation touching
  few symbols; the pair is compressed into weighted super-symbols and its
  distance computed exactly on the short sequences. The answer is exact.
* High: the optimal radius exceeds ceil(sqrt(d)), so a budgeted estimator
  that only resolves distances >= ceil(sqrt(d)) suffices for a (1+eps)
  approximation.

All radii are in moves; the insert/delete count (twice the moves) is
reported in the diagnostics.
"""

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Hashable, List, Optional, Sequence, Tuple, Union

from .brute_force import brute_force_solve
from .errors import EmptyInputError, InvalidParameterError, ScriptMismatchError, SymbolSetMismatchError
from .estimator import ExactUlamEstimator, UlamEstimator, Value
from .logger import get_logger
from .metrics import MetricTag
from .parallel import argmin_pairs, parallel_map
from .solvers import CenterResult
from .ulam import EditScript, Permutation, WeightedSeq, as_permutation, position_map, ulam_edit_script, weighted_ulam

logger = get_logger()


def ceil_sqrt(d: int) -> int:
    root = math.isqrt(d)
    return root if root * root == d else root + 1


@dataclass(frozen=True)
class LowRegime:
    """Every string within `threshold` moves of the anchor; scripts anchored there."""
    scripts: Tuple[EditScript, ...]
    threshold: int
    max_anchor_moves: int
    name: str = "low"


@dataclass(frozen=True)
class HighRegime:
    """The optimal radius is known to exceed `threshold`."""
    threshold: int
    max_anchor_moves: int
    name: str = "high"


Regime = Union[LowRegime, HighRegime]


@dataclass(frozen=True)
class BucketDecomposition:
    """Blocks contiguous and identically ordered in two strings, in the first string's order."""
    buckets: Tuple[Tuple[Hashable, ...], ...]
    marked: FrozenSet[Hashable] = field(default_factory=frozenset)

    def __len__(self) -> int:
        return len(self.buckets)


def as_permutation_set(strings: Sequence[Sequence[int]]) -> List[Permutation]:
    """Validate n >= 1 permutations of a common 1..d."""
    perms = [as_permutation(s) for s in strings]
    if not perms:
        raise EmptyInputError("Permutation set is empty")
    d = len(perms[0])
    for k, perm in enumerate(perms):
        if len(perm) != d:
            raise SymbolSetMismatchError(
                f"String {k} has length {len(perm)}, expected {d}", index=k
            )
    return perms


def detect_regime(strings: Sequence[Sequence[int]], threads: Optional[int] = None) -> Regime:
    """Anchor at string 0 and decide between the Low and High regimes."""
    perms = as_permutation_set(strings)
    anchor = perms[0]
    d = len(anchor)
    scripts = parallel_map(lambda s: ulam_edit_script(anchor, s), perms, threads)
    max_moves = max(script.moves for script in scripts)
    threshold = 2 * ceil_sqrt(d)
    logger.debug(f"detect_regime: d={d} max_anchor_moves={max_moves} threshold={threshold}")
    if max_moves <= threshold:
        return LowRegime(scripts=tuple(scripts), threshold=threshold, max_anchor_moves=max_moves)
    return HighRegime(threshold=ceil_sqrt(d), max_anchor_moves=max_moves)


def _same_symbols(s_i: Sequence[Hashable], s_j: Sequence[Hashable]) -> Dict[Hashable, int]:
    pos_j = position_map(s_j)
    if len(s_i) != len(s_j) or set(position_map(s_i)) != set(pos_j):
        raise SymbolSetMismatchError("Strings are not permutations of the same symbols")
    return pos_j


def _split_runs(
    s_i: Sequence[Hashable], pos_j: Dict[Hashable, int], marked: FrozenSet[Hashable]
) -> Tuple[Tuple[Hashable, ...], ...]:
    buckets: List[List[Hashable]] = []
    prev = None
    for symbol in s_i:
        if (
            prev is None
            or symbol in marked
            or prev in marked
            or pos_j[symbol] != pos_j[prev] + 1
        ):
            buckets.append([symbol])
        else:
            buckets[-1].append(symbol)
        prev = symbol
    return tuple(tuple(b) for b in buckets)


def bucket_decomposition(
    s_i: Sequence[Hashable],
    s_j: Sequence[Hashable],
    tr_i: EditScript,
    tr_j: EditScript,
) -> BucketDecomposition:
    """
    Buckets for a pair from two anchored scripts.

    Moved symbols of either script, and their neighbours in either string,
    are singletons; the rest are cut into maximal runs that are contiguous
    and identically ordered in both strings.
    """
    pos_j = _same_symbols(s_i, s_j)
    if not tr_i.is_consistent_with(s_i):
        raise ScriptMismatchError("First script does not describe the first string")
    if not tr_j.is_consistent_with(s_j):
        raise ScriptMismatchError("Second script does not describe the second string")

    seed = tr_i.moved | tr_j.moved
    marked = set(seed)
    for seq, pos in ((s_i, position_map(s_i)), (s_j, pos_j)):
        for symbol in seed:
            k = pos[symbol]
            if k > 0:
                marked.add(seq[k - 1])
            if k + 1 < len(seq):
                marked.add(seq[k + 1])
    marked = frozenset(marked)
    return BucketDecomposition(_split_runs(s_i, pos_j, marked), marked)


def successor_buckets(s_i: Sequence[Hashable], s_j: Sequence[Hashable]) -> BucketDecomposition:
    """Independent decomposition: cut wherever a symbol's successor differs between the strings."""
    pos_j = _same_symbols(s_i, s_j)
    return BucketDecomposition(_split_runs(s_i, pos_j, frozenset()))


def compress(
    s_j: Sequence[Hashable], decomposition: BucketDecomposition
) -> Tuple[WeightedSeq, WeightedSeq]:
    """Replace every bucket with one super-symbol weighted by its length."""
    pos_j = position_map(s_j)
    first = [bucket[0] for bucket in decomposition.buckets]
    weights = [len(bucket) for bucket in decomposition.buckets]
    a = WeightedSeq(tuple(first), tuple(weights))
    order = sorted(range(len(first)), key=lambda k: pos_j[first[k]])
    b = WeightedSeq(tuple(first[k] for k in order), tuple(weights[k] for k in order))
    return a, b


def compress_pair(
    s_i: Sequence[Hashable],
    s_j: Sequence[Hashable],
    tr_i: EditScript,
    tr_j: EditScript,
) -> Tuple[WeightedSeq, WeightedSeq]:
    """Compressed pair whose weighted Ulam equals the pair's insert/delete distance."""
    return compress(s_j, bucket_decomposition(s_i, s_j, tr_i, tr_j))


def _low_regime_center(perms, regime: LowRegime, threads) -> Tuple[List[int], Dict]:
    n = len(perms)
    pairs = list(combinations(range(n), 2))

    def _pair(pair):
        i, j = pair
        a, b = compress_pair(perms[i], perms[j], regime.scripts[i], regime.scripts[j])
        return weighted_ulam(a, b) // 2, len(a)

    results = parallel_map(_pair, pairs, threads)
    ecc = [0] * n
    for (i, j), (moves, _) in zip(pairs, results):
        ecc[i] = max(ecc[i], moves)
        ecc[j] = max(ecc[j], moves)
    longest = max((length for _, length in results), default=0)
    return ecc, {"max_compressed_length": longest}


def _high_regime_center(perms, regime: HighRegime, eps, estimator, threads) -> Tuple[List[int], Dict]:
    n = len(perms)
    pairs = list(combinations(range(n), 2))
    theta = regime.threshold
    outcomes = parallel_map(
        lambda pair: estimator.estimate(perms[pair[0]], perms[pair[1]], theta, eps), pairs, threads
    )
    mx = [-1] * n
    below = 0
    for (i, j), outcome in zip(pairs, outcomes):
        if isinstance(outcome, Value):
            mx[i] = max(mx[i], outcome.value)
            mx[j] = max(mx[j], outcome.value)
        else:
            below += 1
    for i in range(n):
        if mx[i] < 0:
            # every distance from i certified below theta
            logger.warning(f"ulam_center_approx: candidate {i} has no estimate >= {theta}")
            mx[i] = theta - 1
    return mx, {"below_outcomes": below, "estimator": estimator.name}


def ulam_center_approx(
    strings: Sequence[Sequence[int]],
    eps: float,
    estimator: Optional[UlamEstimator] = None,
    threads: Optional[int] = None,
    keep_eccentricities: bool = False,
) -> CenterResult:
    """
    (1+eps)-approximate Ulam 1-center; exact in the Low regime.

    The returned candidate's true eccentricity is at most (1+eps) times the
    optimum for any estimator honouring the Below/Value contract.
    """
    if not eps > 0:
        raise InvalidParameterError(f"eps must be > 0, got {eps}")
    perms = as_permutation_set(strings)
    d = len(perms[0])
    estimator = estimator or ExactUlamEstimator()
    with logger.timed("detect_regime"):
        regime = detect_regime(perms, threads)

    with logger.timed(f"{regime.name} regime pairs"):
        if isinstance(regime, LowRegime):
            ecc, extra = _low_regime_center(perms, regime, threads)
            exact = True
        else:
            ecc, extra = _high_regime_center(perms, regime, eps, estimator, threads)
            exact = False

    index = argmin_pairs(ecc)
    radius = ecc[index]
    diagnostics = {
        "regime": regime.name,
        "exact": exact,
        "eps": eps,
        "threshold": regime.threshold,
        "max_anchor_moves": regime.max_anchor_moves,
        "radius_edit_ops": 2 * radius,
        "d": d,
    }
    diagnostics.update(extra)
    logger.info(
        f"ulam_center_approx: n={len(perms)} d={d} regime={regime.name} index={index} radius={radius}"
    )
    return CenterResult(
        index=index,
        radius=radius,
        algorithm="ulam-approx",
        eccentricities=ecc if keep_eccentricities else None,
        diagnostics=diagnostics,
    )


def ulam_center_exact(
    strings: Sequence[Sequence[int]],
    threads: Optional[int] = None,
    keep_eccentricities: bool = False,
) -> CenterResult:
    """Exact Ulam 1-center in moves by the all-pairs scan."""
    perms = as_permutation_set(strings)
    result = brute_force_solve(
        perms, MetricTag("ulam"), "center", threads=threads, keep_eccentricities=keep_eccentricities
    )
    result.diagnostics["radius_edit_ops"] = 2 * result.radius
    return result
