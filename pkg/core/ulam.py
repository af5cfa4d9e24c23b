"""
Ulam distance for OneCenter
Distances between permutations: character moves via LIS, the insert/delete
operation count, deterministic edit scripts, and weighted Ulam on
compressed (bucketed) sequences.
"""

from bisect import bisect_left
from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, List, Sequence, Tuple

from .errors import SymbolSetMismatchError, WeightMismatchError, InvalidParameterError
from .fenwick import MaxFenwickTree

Permutation = Tuple[int, ...]


def as_permutation(seq: Sequence[int]) -> Permutation:
    """Validate that seq is a bijection onto 1..d and return it as a tuple."""
    perm = tuple(int(v) for v in seq)
    d = len(perm)
    if sorted(perm) != list(range(1, d + 1)):
        raise SymbolSetMismatchError(
            f"Sequence of length {d} is not a permutation of 1..{d}"
        )
    return perm


def position_map(seq: Sequence[Hashable]) -> Dict[Hashable, int]:
    positions = {symbol: i for i, symbol in enumerate(seq)}
    if len(positions) != len(seq):
        raise SymbolSetMismatchError("Sequence repeats a symbol")
    return positions


def _relative_order(sigma: Sequence[Hashable], tau: Sequence[Hashable]) -> List[int]:
    """Positions in tau of sigma's symbols, read in sigma's order."""
    if len(sigma) != len(tau):
        raise SymbolSetMismatchError(
            f"Permutations differ in length: {len(sigma)} vs {len(tau)}"
        )
    pos_tau = position_map(tau)
    try:
        order = [pos_tau[symbol] for symbol in sigma]
    except KeyError as e:
        raise SymbolSetMismatchError(f"Symbol {e.args[0]!r} missing from target")
    if len(set(order)) != len(order):
        raise SymbolSetMismatchError("Source repeats a symbol")
    return order


def lis_length(values: Sequence[int]) -> int:
    """Length of the longest strictly increasing subsequence (patience sort)."""
    tails: List[int] = []
    for v in values:
        k = bisect_left(tails, v)
        if k == len(tails):
            tails.append(v)
        else:
            tails[k] = v
    return len(tails)


def ulam_moves(sigma: Sequence[Hashable], tau: Sequence[Hashable]) -> int:
    """Number of characters that must be moved to turn sigma into tau."""
    order = _relative_order(sigma, tau)
    return len(order) - lis_length(order)


def ulam_edit(sigma: Sequence[Hashable], tau: Sequence[Hashable]) -> int:
    """Insert/delete operations between two permutations: two per move."""
    return 2 * ulam_moves(sigma, tau)


@dataclass(frozen=True)
class EditScript:
    """
    A minimal move set between two permutations.

    `kept` is a longest common subsequence in source order; `moved` holds
    every other symbol.
    """
    kept: Tuple[Hashable, ...]
    moved: FrozenSet[Hashable]

    @property
    def moves(self) -> int:
        return len(self.moved)

    def is_consistent_with(self, seq: Sequence[Hashable]) -> bool:
        """True when kept is a subsequence of seq and kept + moved covers it."""
        if len(self.kept) + len(self.moved) != len(seq):
            return False
        if set(self.kept) & self.moved:
            return False
        if set(self.kept) | self.moved != set(seq):
            return False
        it = iter(seq)
        return all(symbol in it for symbol in self.kept)

    def to_dict(self) -> dict:
        return {"kept": list(self.kept), "moved": sorted(self.moved)}


def _lis_from_each(values: Sequence[int]) -> List[int]:
    """For every index k, the longest increasing subsequence starting at k."""
    n = len(values)
    starts = [0] * n
    tails: List[int] = []
    # scanning right-to-left, an increasing run from k is a decreasing run
    # read backwards; negate to reuse the ascending patience stack
    for k in range(n - 1, -1, -1):
        v = -values[k]
        j = bisect_left(tails, v)
        if j == len(tails):
            tails.append(v)
        else:
            tails[j] = v
        starts[k] = j + 1
    return starts


def ulam_edit_script(sigma: Sequence[Hashable], tau: Sequence[Hashable]) -> EditScript:
    """
    Edit script from sigma to tau.

    Among all longest common subsequences the one whose positions in sigma
    are lexicographically smallest is kept.
    """
    order = _relative_order(sigma, tau)
    starts = _lis_from_each(order)
    remaining = max(starts, default=0)
    kept: List[Hashable] = []
    last = -1
    k = 0
    while remaining > 0:
        while not (starts[k] == remaining and order[k] > last):
            k += 1
        kept.append(sigma[k])
        last = order[k]
        remaining -= 1
        k += 1
    kept_set = set(kept)
    moved = frozenset(symbol for symbol in sigma if symbol not in kept_set)
    return EditScript(tuple(kept), moved)


@dataclass(frozen=True)
class WeightedSeq:
    """Sequence of distinct super-symbols, each carrying a positive weight."""
    symbols: Tuple[Hashable, ...]
    weights: Tuple[int, ...]

    def __post_init__(self):
        if len(self.symbols) != len(self.weights):
            raise InvalidParameterError(
                f"{len(self.symbols)} symbols but {len(self.weights)} weights"
            )
        if len(set(self.symbols)) != len(self.symbols):
            raise SymbolSetMismatchError("Weighted sequence repeats a super-symbol")
        for w in self.weights:
            if int(w) != w or w <= 0:
                raise InvalidParameterError(f"Weights must be positive integers, got {w}")

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def __len__(self) -> int:
        return len(self.symbols)

    @classmethod
    def from_permutation(cls, seq: Sequence[Hashable]) -> "WeightedSeq":
        return cls(tuple(seq), (1,) * len(seq))

    @classmethod
    def from_pairs(cls, pairs: Sequence[Tuple[Hashable, int]]) -> "WeightedSeq":
        return cls(tuple(s for s, _ in pairs), tuple(int(w) for _, w in pairs))


def max_common_weight(a: WeightedSeq, b: WeightedSeq) -> int:
    """Heaviest common subsequence, by weighted LIS over a prefix-max tree."""
    pos_a = {symbol: (i, w) for i, (symbol, w) in enumerate(zip(a.symbols, a.weights))}
    tree = MaxFenwickTree(max(1, len(a)))
    best = 0
    for symbol, w in zip(b.symbols, b.weights):
        hit = pos_a.get(symbol)
        if hit is None:
            continue
        i, wa = hit
        if wa != w:
            raise WeightMismatchError(
                f"Super-symbol {symbol!r} weighs {wa} on one side and {w} on the other",
                symbol=str(symbol),
            )
        score = (tree.prefix_max(i - 1) if i > 0 else 0) + w
        tree.update(i, score)
        if score > best:
            best = score
    return best


def weighted_ulam(a: WeightedSeq, b: WeightedSeq) -> int:
    """Minimum total weight of insertions plus deletions turning a into b."""
    return a.total_weight + b.total_weight - 2 * max_common_weight(a, b)
