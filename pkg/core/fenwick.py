"""
Prefix-maximum Fenwick tree used by the weighted LIS.
"""

from typing import List


def lsb(x: int) -> int:
    return x & -x


class MaxFenwickTree:
    """
    Fenwick tree over positions 0..size-1 answering prefix maxima.

    Values only ever grow (update keeps the larger of old and new), which is
    all a longest-increasing-subsequence scan needs.
    """

    __slots__ = ("size", "tree")

    def __init__(self, size: int):
        self.size = size
        self.tree: List[int] = [0] * (size + 1)

    def update(self, i: int, value: int) -> None:
        """Raise position i to at least `value`."""
        i += 1  # 1-based internally
        while i <= self.size:
            if self.tree[i] < value:
                self.tree[i] = value
            i += lsb(i)

    def prefix_max(self, i: int) -> int:
        """Maximum over positions 0..i; 0 for an empty prefix."""
        i = min(i, self.size - 1) + 1
        best = 0
        while i > 0:
            if self.tree[i] > best:
                best = self.tree[i]
            i -= lsb(i)
        return best
