"""
Edit distance for OneCenter
Levenshtein distance by a row-vectorised dynamic program, plus a banded
variant that stops as soon as the distance is known to exceed a threshold.
"""

from typing import Sequence, Union

import numpy as np

from .errors import InvalidParameterError

StringLike = Union[str, bytes, Sequence]


class _AboveThreshold:
    """Marker returned when a bounded computation exceeds its threshold."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "AboveThreshold"

    def __bool__(self) -> bool:
        return False


AboveThreshold = _AboveThreshold()


def as_codes(s: StringLike) -> np.ndarray:
    """Encode a string, bytes or symbol sequence as an int64 array."""
    if isinstance(s, (bytes, bytearray)):
        return np.frombuffer(bytes(s), dtype=np.uint8).astype(np.int64)
    if isinstance(s, str):
        return np.array([ord(c) for c in s], dtype=np.int64)
    return np.asarray(list(s), dtype=np.int64)


def edit_distance(s: StringLike, t: StringLike) -> int:
    """
    Minimum number of insertions, deletions and substitutions turning s into t.

    Each DP row is computed in one shot: the diagonal/vertical candidates are
    vectorised, and the horizontal (insertion) chain is a running minimum of
    A[j] - j shifted back by j.
    """
    a = as_codes(s)
    b = as_codes(t)
    if len(a) > len(b):
        a, b = b, a
    n, m = len(a), len(b)
    if n == 0:
        return m

    idx = np.arange(m + 1, dtype=np.int64)
    prev = idx.copy()
    cand = np.empty(m + 1, dtype=np.int64)
    for i in range(1, n + 1):
        cost = (b != a[i - 1]).astype(np.int64)
        cand[0] = i
        np.minimum(prev[1:] + 1, prev[:-1] + cost, out=cand[1:])
        prev = np.minimum.accumulate(cand - idx) + idx
    return int(prev[m])


def edit_distance_bounded(s: StringLike, t: StringLike, threshold: int):
    """
    Edit distance if it is at most `threshold`, else AboveThreshold.

    Only the diagonal band |i - j| <= threshold is filled, and the scan stops
    early once a whole band row exceeds the threshold.
    """
    if threshold < 0:
        raise InvalidParameterError(f"threshold must be >= 0, got {threshold}")
    a = as_codes(s)
    b = as_codes(t)
    n, m = len(a), len(b)
    if abs(n - m) > threshold:
        return AboveThreshold
    if n == 0 or m == 0:
        return max(n, m)

    cap = threshold + 1
    prev = np.full(m + 1, cap, dtype=np.int64)
    width = min(m, threshold)
    prev[: width + 1] = np.arange(width + 1)
    for i in range(1, n + 1):
        lo = max(0, i - threshold)
        hi = min(m, i + threshold)
        cur = np.full(m + 1, cap, dtype=np.int64)
        js = np.arange(lo, hi + 1, dtype=np.int64)
        cand = np.empty(len(js), dtype=np.int64)
        start = 0
        if lo == 0:
            cand[0] = i
            start = 1
        inner = js[start:]
        if len(inner):
            cost = (b[inner - 1] != a[i - 1]).astype(np.int64)
            cand[start:] = np.minimum(prev[inner] + 1, prev[inner - 1] + cost)
        band = np.minimum.accumulate(cand - js) + js
        cur[lo : hi + 1] = np.minimum(band, cap)
        if cur[lo : hi + 1].min() > threshold:
            return AboveThreshold
        prev = cur
    value = int(prev[m])
    return value if value <= threshold else AboveThreshold
