"""
Brute-force oracles for OneCenter.

The O(n^2) scan over all pairs: 1-center, 1-median and diameter in any
supported metric, plus the facility-restricted center. These are the
reference answers every faster solver is checked against.
"""

from typing import Callable, Hashable, Optional, Sequence, Tuple, Union

import numpy as np

from .edit_distance import edit_distance
from .errors import EmptyInputError, InvalidMetricError, InvalidParameterError
from .logger import get_logger
from .metrics import MetricTag, Number, PointSet, hamming_distance, render_key, row_keys, to_python
from .parallel import argmax_pairs, argmin_pairs, parallel_map
from .solvers import CenterResult, DiameterResult
from .ulam import ulam_moves

logger = get_logger()

OBJECTIVES = ("center", "median", "diameter")

Distance = Callable[[Sequence[Hashable], Sequence[Hashable]], Number]
MetricLike = Union[MetricTag, Distance, None]
Items = Union[PointSet, Sequence[Sequence[Hashable]]]


def sequence_distance(tag: MetricTag) -> Distance:
    """Distance function for permutation / string data under `tag`."""
    if tag.kind == "ulam":
        return ulam_moves
    if tag.kind == "edit":
        return edit_distance
    if tag.kind == "hamming":
        return hamming_distance
    raise InvalidMetricError(f"{tag} is not defined on sequences")


class _Rows:
    """Per-row distance access shared by the three objectives."""

    def __init__(self, data: Items, metric: MetricLike):
        if isinstance(data, PointSet):
            if isinstance(metric, MetricTag):
                data = data.with_tag(metric)
            elif metric is not None:
                raise InvalidMetricError("Point sets take a MetricTag, not a callable")
            self.points = data
            self.tag = data.tag
            self.n = data.n
            self.distance = None
        else:
            self.points = None
            self.items = list(data)
            self.n = len(self.items)
            if callable(metric) and not isinstance(metric, MetricTag):
                self.tag = None
                self.distance = metric
            elif isinstance(metric, MetricTag):
                self.tag = metric
                self.distance = sequence_distance(metric)
            else:
                raise InvalidMetricError("Sequence data needs a metric")
        if self.n == 0:
            raise EmptyInputError("Nothing to solve: input is empty")

    def keys(self, i: int) -> np.ndarray:
        """Exact comparison keys from element i to every element."""
        if self.points is not None:
            return row_keys(self.points, self.points.coords[i])
        x = self.items[i]
        return np.array([self.distance(x, y) for y in self.items], dtype=object)

    def values(self, keys: np.ndarray) -> np.ndarray:
        """Metric values for a row of keys (differs from keys only for l_p, p > 1)."""
        if self.tag is not None and self.tag.kind == "lp" and self.tag.p != 1:
            return np.array([render_key(self.tag, k) for k in keys], dtype=object)
        return keys

    def render(self, key: Number) -> Number:
        if self.tag is None:
            return to_python(key)
        return render_key(self.tag, key)


def _row_summary(rows: _Rows, i: int) -> Tuple[Number, int, Number]:
    keys = rows.keys(i)
    far = int(np.argmax(keys))
    total = to_python(rows.values(keys).sum())
    return to_python(keys[far]), far, total


def brute_force_solve(
    data: Items,
    metric: MetricLike = None,
    objective: str = "center",
    threads: Optional[int] = None,
    keep_eccentricities: bool = False,
) -> Union[CenterResult, DiameterResult]:
    """
    Exact optimum by scanning every pair; smallest-index tie-break.

    For point sets `metric` optionally overrides the set's own tag; for
    sequences it is a MetricTag (ulam, edit, hamming) or a distance callable.
    """
    if objective not in OBJECTIVES:
        raise InvalidParameterError(f"Unknown objective: {objective}")
    rows = _Rows(data, metric)
    summaries = parallel_map(lambda i: _row_summary(rows, i), range(rows.n), threads)
    label = rows.tag.label if rows.tag is not None else getattr(rows.distance, "__name__", "custom")

    if objective == "diameter":
        eccs = [s[0] for s in summaries]
        i = argmax_pairs(eccs)
        value_key = eccs[i]
        if rows.n == 1:
            i, j = 0, 0
        elif value_key == 0:
            i, j = 0, 1
        else:
            j = summaries[i][1]
            i, j = min(i, j), max(i, j)
        logger.info(f"brute_force diameter: n={rows.n} metric={label} pair=({i},{j})")
        return DiameterResult(i=i, j=j, value=rows.render(value_key), value_key=value_key,
                              algorithm="brute")

    if objective == "center":
        scores = [s[0] for s in summaries]
        index = argmin_pairs(scores)
        result = CenterResult(
            index=index,
            radius=rows.render(scores[index]),
            radius_key=scores[index],
            objective="center",
            algorithm="brute",
        )
    else:
        scores = [s[2] for s in summaries]
        index = argmin_pairs(scores)
        result = CenterResult(index=index, radius=scores[index], objective="median",
                              algorithm="brute")
    if keep_eccentricities:
        result.eccentricities = [rows.render(s[0]) for s in summaries]
    logger.info(
        f"brute_force {objective}: n={rows.n} metric={label} index={result.index} value={result.radius}"
    )
    return result


def eccentricity(data: Items, index: int, metric: MetricLike = None) -> Number:
    """Exact eccentricity of one element, in metric units."""
    rows = _Rows(data, metric)
    if not 0 <= index < rows.n:
        raise InvalidParameterError(f"Index {index} out of range for {rows.n} elements")
    keys = rows.keys(index)
    return rows.render(to_python(keys.max()))


def facility_center(
    facilities: Sequence[Sequence[Hashable]],
    clients: Sequence[Sequence[Hashable]],
    metric: MetricLike,
    threads: Optional[int] = None,
) -> CenterResult:
    """
    Facility minimising the maximum distance to every client.

    Works on sequences or on raw coordinate rows (with a point MetricTag).
    """
    facilities = list(facilities)
    clients = list(clients)
    if not facilities or not clients:
        raise EmptyInputError("Facility center needs facilities and clients")

    if isinstance(metric, MetricTag) and metric.is_point_metric:
        client_set = PointSet(np.array(clients), metric)

        def _cost(f):
            keys = row_keys(client_set, np.asarray(f))
            return to_python(keys.max())

        render = lambda key: render_key(metric, key)
    else:
        distance = metric if not isinstance(metric, MetricTag) else sequence_distance(metric)

        def _cost(f):
            return max(distance(f, c) for c in clients)

        render = to_python

    costs = parallel_map(_cost, facilities, threads)
    index = argmin_pairs(costs)
    logger.info(f"facility_center: |F|={len(facilities)} |C|={len(clients)} index={index}")
    return CenterResult(index=index, radius=render(costs[index]), radius_key=costs[index],
                        objective="facility-center", algorithm="brute")
