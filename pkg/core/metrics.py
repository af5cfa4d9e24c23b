"""
Point metrics for OneCenter
Metric tags, point sets and exact l_p / Hamming / l_inf distances.
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from .errors import DimensionMismatchError, EmptyInputError, InvalidMetricError

Number = Union[int, float]

POINT_KINDS = ("lp", "hamming", "linf")
SEQUENCE_KINDS = ("edit", "ulam")


@dataclass(frozen=True)
class MetricTag:
    """
    Which distance a data set is measured in.

    kind is one of lp, hamming, linf, edit, ulam. `p` is only set for lp
    and is always >= 1; p = 0 is spelled as kind hamming and p = inf as linf.
    """
    kind: str
    p: Optional[float] = None

    def __post_init__(self):
        if self.kind not in POINT_KINDS + SEQUENCE_KINDS:
            raise InvalidMetricError(f"Unknown metric kind: {self.kind}")
        if self.kind == "lp":
            if self.p is None or math.isnan(self.p):
                raise InvalidMetricError("lp metric needs a value for p")
            if self.p < 1 or math.isinf(self.p):
                raise InvalidMetricError(
                    f"p must be 0, >= 1 or inf; got {self.p}", p=self.p
                )
        elif self.p is not None:
            raise InvalidMetricError(f"{self.kind} metric takes no p")

    @classmethod
    def lp(cls, p: float) -> "MetricTag":
        """Tag for l_p, folding p = 0 into Hamming and p = inf into l_inf."""
        p = float(p)
        if p == 0:
            return cls("hamming")
        if math.isinf(p) and p > 0:
            return cls("linf")
        return cls("lp", p)

    @classmethod
    def parse(cls, text: str) -> "MetricTag":
        """
        Parse names such as l1, l2, l2.5, lp:3, l0, hamming, linf, edit, ulam.
        """
        name = text.strip().lower()
        if name in ("hamming", "l0", "p0"):
            return cls("hamming")
        if name in ("linf", "l-inf", "inf", "chebyshev"):
            return cls("linf")
        if name in ("edit", "levenshtein"):
            return cls("edit")
        if name == "ulam":
            return cls("ulam")
        if name.startswith("lp:"):
            value = name[3:]
        elif name.startswith("l"):
            value = name[1:]
        else:
            raise InvalidMetricError(f"Unknown metric: {text}")
        try:
            p = float(value)
        except ValueError:
            raise InvalidMetricError(f"Unknown metric: {text}")
        if p < 0 or 0 < p < 1:
            raise InvalidMetricError(f"p must be 0, >= 1 or inf; got {value}", p=value)
        return cls.lp(p)

    @property
    def label(self) -> str:
        if self.kind == "lp":
            p = self.p
            return f"l{int(p)}" if float(p).is_integer() else f"l{p}"
        return self.kind

    @property
    def is_point_metric(self) -> bool:
        return self.kind in POINT_KINDS

    @property
    def integer_p(self) -> Optional[int]:
        """p as an int when it is integral, else None."""
        if self.kind == "lp" and float(self.p).is_integer():
            return int(self.p)
        return None

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class LpDistance:
    """
    An l_p style distance.

    `value` is the metric value (p-th root applied); `power_sum` is the
    unrooted sum of |x_j - y_j|^p, an exact int for integer coordinates and
    integer p. For Hamming both fields are the mismatch count; for l_inf
    power_sum is None.
    """
    value: Number
    power_sum: Optional[Number]


@dataclass
class PointSet:
    """n x d coordinates measured under one point metric."""
    coords: np.ndarray
    tag: MetricTag

    def __post_init__(self):
        coords = np.asarray(self.coords)
        if coords.ndim == 1:
            coords = coords.reshape(-1, 1)
        if coords.ndim != 2:
            raise DimensionMismatchError(f"Point set must be n x d, got shape {coords.shape}")
        if coords.shape[0] == 0:
            raise EmptyInputError("Point set is empty")
        if coords.shape[1] == 0:
            raise DimensionMismatchError("Points must have positive dimension")
        if coords.dtype == bool or np.issubdtype(coords.dtype, np.integer):
            coords = coords.astype(np.int64)
        elif np.issubdtype(coords.dtype, np.floating):
            coords = coords.astype(np.float64)
        else:
            raise DimensionMismatchError(f"Unsupported coordinate type: {coords.dtype}")
        if not self.tag.is_point_metric:
            raise InvalidMetricError(f"{self.tag} is not a point metric")
        self.coords = coords

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    @property
    def dim(self) -> int:
        return self.coords.shape[1]

    @property
    def is_integer(self) -> bool:
        return np.issubdtype(self.coords.dtype, np.integer)

    def with_tag(self, tag: MetricTag) -> "PointSet":
        return PointSet(self.coords, tag)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]], tag: MetricTag) -> "PointSet":
        if len(rows) == 0:
            raise EmptyInputError("Point set is empty")
        widths = {len(row) for row in rows}
        if len(widths) != 1:
            raise DimensionMismatchError(f"Rows have differing dimensions: {sorted(widths)}")
        return cls(np.array(rows), tag)


def _check_point_tag(tag: MetricTag) -> None:
    if not tag.is_point_metric:
        raise InvalidMetricError(f"{tag} is not an l_p style metric")


def lp_distance(x: Sequence[Number], y: Sequence[Number], tag: MetricTag) -> LpDistance:
    """
    Distance between two points under an l_p, Hamming or l_inf tag.

    Integer coordinates with integer p are summed with Python ints so the
    power sum is exact at any size.
    """
    _check_point_tag(tag)
    x = np.asarray(x)
    y = np.asarray(y)
    if x.shape != y.shape or x.ndim != 1:
        raise DimensionMismatchError(
            f"Points differ in dimension: {x.shape} vs {y.shape}"
        )
    integral = np.issubdtype(x.dtype, np.integer) and np.issubdtype(y.dtype, np.integer)
    if integral:
        diff = [abs(int(a) - int(b)) for a, b in zip(x.tolist(), y.tolist())]
    else:
        diff = np.abs(x.astype(np.float64) - y.astype(np.float64))

    if tag.kind == "hamming":
        count = int(sum(1 for v in diff if v != 0))
        return LpDistance(count, count)
    if tag.kind == "linf":
        top = max(diff) if len(diff) else 0
        return LpDistance(top if integral else float(top), None)

    p_int = tag.integer_p
    if integral and p_int is not None:
        total = sum(v ** p_int for v in diff)
        if p_int == 1:
            return LpDistance(total, total)
        return LpDistance(_root(total, p_int), total)
    total = float(np.sum(np.asarray(diff, dtype=np.float64) ** tag.p))
    return LpDistance(total ** (1.0 / tag.p), total)


def _root(total: int, p: int) -> Number:
    """p-th root, returned as an int when the power sum is a perfect power."""
    guess = round(total ** (1.0 / p))
    for candidate in (guess - 1, guess, guess + 1):
        if candidate >= 0 and candidate ** p == total:
            return candidate
    return total ** (1.0 / p)


def hamming_distance(a: Sequence, b: Sequence) -> int:
    """Number of positions where two equal-length sequences differ."""
    if len(a) != len(b):
        raise DimensionMismatchError(f"Lengths differ: {len(a)} vs {len(b)}")
    return sum(1 for u, v in zip(a, b) if u != v)


def row_keys(points: PointSet, x: np.ndarray, rows: Optional[slice] = None) -> np.ndarray:
    """
    Exact comparison keys from x to every point (or a slice of points).

    Keys are power sums for l_p, mismatch counts for Hamming and maxima for
    l_inf; they order exactly like the distances.
    """
    block = points.coords if rows is None else points.coords[rows]
    tag = points.tag
    diff = np.abs(block - x)
    if tag.kind == "hamming":
        return np.count_nonzero(diff, axis=1).astype(np.int64)
    if tag.kind == "linf":
        return diff.max(axis=1)
    p_int = tag.integer_p
    if points.is_integer and p_int is not None:
        if p_int == 1:
            return diff.sum(axis=1)
        top = int(diff.max()) if diff.size else 0
        if top == 0 or points.dim * float(top) ** p_int < 2.0 ** 62:
            return (diff ** p_int).sum(axis=1)
        return (diff.astype(object) ** p_int).sum(axis=1)
    return (diff.astype(np.float64) ** tag.p).sum(axis=1)


def render_key(tag: MetricTag, key: Number) -> Number:
    """Turn a comparison key back into a metric value."""
    if tag.kind == "lp" and tag.p != 1:
        p_int = tag.integer_p
        if p_int is not None and float(key).is_integer():
            return _root(int(key), p_int)
        return float(key) ** (1.0 / tag.p)
    return to_python(key)


def to_python(value) -> Number:
    """numpy scalar -> plain int/float."""
    if isinstance(value, np.generic):
        return value.item()
    return value
