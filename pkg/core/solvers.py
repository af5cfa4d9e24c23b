"""
Exact 1-center and diameter solvers for OneCenter.

l_1: every point's farthest neighbour is the maximiser of one of the 2^d
signed sums f_i(u) = sum_j s_ij * u_j, where s_ij = +1 if bit j of i is set
and -1 otherwise. Tabulating the maxima once makes each eccentricity a
max over 2^d differences.

l_inf: eccentricity is read off the per-coordinate column extremes.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from .config_manager import get_config
from .errors import (
    DimensionCapError,
    InvalidMetricError,
    InvalidParameterError,
    OverflowRiskError,
)
from .logger import get_logger
from .metrics import Number, PointSet, to_python
from .parallel import chunk_ranges, parallel_map

logger = get_logger()

_INT64_LIMIT = 2 ** 63 - 1


@dataclass
class CenterResult:
    """Chosen element and its objective value."""
    index: int
    radius: Number
    radius_key: Number = None
    objective: str = "center"
    algorithm: str = ""
    eccentricities: Optional[List[Number]] = None
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.radius_key is None:
            self.radius_key = self.radius

    def to_dict(self) -> Dict[str, Any]:
        return {
            "objective": self.objective,
            "algorithm": self.algorithm,
            "index": self.index,
            "value": self.radius,
            "value_key": self.radius_key,
            "eccentricities": self.eccentricities,
            "diagnostics": dict(self.diagnostics),
        }


@dataclass
class DiameterResult:
    """Farthest pair (i < j unless n == 1) and its distance."""
    i: int
    j: int
    value: Number
    value_key: Number = None
    algorithm: str = ""
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.value_key is None:
            self.value_key = self.value

    @property
    def pair(self) -> Tuple[int, int]:
        return (self.i, self.j)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "objective": "diameter",
            "algorithm": self.algorithm,
            "pair": [self.i, self.j],
            "value": self.value,
            "value_key": self.value_key,
            "diagnostics": dict(self.diagnostics),
        }


@dataclass
class SignedSumTable:
    """
    maxima[i] = max_p f_i(p) and argmax[i] = smallest index attaining it.
    """
    maxima: np.ndarray
    argmax: np.ndarray
    dim: int

    @property
    def size(self) -> int:
        return len(self.maxima)


def mask_signs(masks: np.ndarray, dim: int) -> np.ndarray:
    """Sign matrix for the given masks: column j is +1 where bit j is set."""
    bits = (masks[:, None] >> np.arange(dim, dtype=np.int64)) & 1
    return (2 * bits - 1).astype(np.int64)


def signed_sum(u: np.ndarray, mask: int) -> Number:
    """f_mask(u) evaluated directly from the definition."""
    signs = mask_signs(np.array([mask], dtype=np.int64), len(u))[0]
    return to_python(np.dot(signs, np.asarray(u)))


def _check_l1(points: PointSet) -> None:
    tag = points.tag
    if tag.kind != "lp" or tag.p != 1:
        raise InvalidMetricError(f"Signed-sum solver needs the l1 metric, got {tag}")
    cap = get_config().l1_dimension_cap
    if points.dim > cap:
        raise DimensionCapError(
            f"Dimension {points.dim} exceeds the signed-sum cap of {cap}; "
            f"use --algo brute instead",
            dim=points.dim, cap=cap,
        )
    if points.is_integer:
        top = int(np.abs(points.coords).max())
        # eccentricities are differences of two sums: keep 2x headroom on top
        if 4 * points.dim * top > _INT64_LIMIT:
            raise OverflowRiskError(
                f"Coordinates up to {top} in dimension {points.dim} overflow 64-bit sums",
                max_abs=top, dim=points.dim,
            )


def _mask_blocks(dim: int) -> List[range]:
    return chunk_ranges(1 << dim, get_config().mask_chunk_size)


def signed_sums(points: PointSet, threads: Optional[int] = None) -> SignedSumTable:
    """Tabulate max_p f_i(p) and its first maximiser for every mask i."""
    _check_l1(points)
    dim = points.dim
    coords = points.coords
    point_chunks = chunk_ranges(points.n, get_config().point_chunk_size)
    dtype = coords.dtype

    def _block(masks: range) -> Tuple[np.ndarray, np.ndarray]:
        signs = mask_signs(np.arange(masks.start, masks.stop, dtype=np.int64), dim).astype(dtype)
        best = None
        where = None
        for rows in point_chunks:
            values = coords[rows.start:rows.stop] @ signs.T
            local = values.max(axis=0)
            local_at = values.argmax(axis=0) + rows.start
            if best is None:
                best, where = local, local_at
            else:
                # strict > keeps the earlier chunk on ties
                better = local > best
                best = np.where(better, local, best)
                where = np.where(better, local_at, where)
        return best, where

    with logger.timed(f"signed_sums (n={points.n}, d={dim})"):
        blocks = parallel_map(_block, _mask_blocks(dim), threads)
    maxima = np.concatenate([b[0] for b in blocks])
    argmax = np.concatenate([b[1] for b in blocks]).astype(np.int64)
    logger.debug(f"signed_sums: n={points.n} d={dim} masks={len(maxima)}")
    return SignedSumTable(maxima=maxima, argmax=argmax, dim=dim)


def l1_eccentricities(
    points: PointSet,
    table: Optional[SignedSumTable] = None,
    threads: Optional[int] = None,
) -> np.ndarray:
    """max_i (M_i - f_i(x)) for every input point x."""
    if table is None:
        table = signed_sums(points, threads)
    else:
        _check_l1(points)
    coords = points.coords
    dim = points.dim
    blocks = _mask_blocks(dim)
    mask_signs_blocks = [
        mask_signs(np.arange(b.start, b.stop, dtype=np.int64), dim).astype(coords.dtype)
        for b in blocks
    ]

    def _chunk(rows: range) -> np.ndarray:
        chunk = coords[rows.start:rows.stop]
        ecc = None
        for b, signs in zip(blocks, mask_signs_blocks):
            gaps = (table.maxima[b.start:b.stop] - chunk @ signs.T).max(axis=1)
            ecc = gaps if ecc is None else np.maximum(ecc, gaps)
        return ecc

    parts = parallel_map(_chunk, chunk_ranges(points.n, get_config().point_chunk_size), threads)
    return np.concatenate(parts)


def l1_farthest(
    points: PointSet, table: SignedSumTable, query: np.ndarray
) -> Tuple[Number, int]:
    """
    Farthest input point from an arbitrary query point.

    Returns (distance, index); among several farthest points the smallest
    index is returned.
    """
    query = np.asarray(query)
    if query.shape != (table.dim,):
        raise InvalidParameterError(f"Query must have dimension {table.dim}")
    best_value = None
    best_index = -1
    for b in _mask_blocks(table.dim):
        signs = mask_signs(np.arange(b.start, b.stop, dtype=np.int64), table.dim)
        gaps = table.maxima[b.start:b.stop] - signs @ query
        top = gaps.max()
        if best_value is not None and top < best_value:
            continue
        at = int(table.argmax[b.start:b.stop][gaps == top].min())
        if best_value is None or top > best_value:
            best_value, best_index = top, at
        else:
            best_index = min(best_index, at)
    return to_python(best_value), best_index


def l1_eccentricity(points: PointSet, x: int, table: Optional[SignedSumTable] = None) -> Number:
    """Eccentricity of input point x through the extreme-point table."""
    if table is None:
        table = signed_sums(points)
    return l1_farthest(points, table, points.coords[x])[0]


def l1_center(
    points: PointSet, threads: Optional[int] = None, keep_eccentricities: bool = False
) -> CenterResult:
    """Exact l1 1-center in O(2^d * n * d)."""
    table = signed_sums(points, threads)
    ecc = l1_eccentricities(points, table, threads)
    index = int(np.argmin(ecc))
    radius = to_python(ecc[index])
    logger.info(f"l1_center: n={points.n} d={points.dim} index={index} radius={radius}")
    return CenterResult(
        index=index,
        radius=radius,
        algorithm="l1-fast",
        eccentricities=ecc.tolist() if keep_eccentricities else None,
        diagnostics={"masks": table.size},
    )


def l1_diameter(points: PointSet, threads: Optional[int] = None) -> DiameterResult:
    """Exact l1 farthest pair in O(2^d * n * d)."""
    if points.n < 2:
        raise InvalidParameterError("Diameter needs at least two points", n=points.n)
    table = signed_sums(points, threads)
    ecc = l1_eccentricities(points, table, threads)
    x = int(np.argmax(ecc))
    value = to_python(ecc[x])
    candidates = np.unique(table.argmax)
    candidates = candidates[candidates != x]
    if value == 0 or candidates.size == 0:
        j = 1 if x == 0 else 0
    else:
        # candidates are sorted, so argmax keeps the smallest index on ties
        dists = np.abs(points.coords[candidates] - points.coords[x]).sum(axis=1)
        best = int(np.argmax(dists))
        j = int(candidates[best])
        value = to_python(dists[best])
    i, j = min(x, j), max(x, j)
    logger.info(f"l1_diameter: n={points.n} d={points.dim} pair=({i},{j}) value={value}")
    return DiameterResult(i=i, j=j, value=value, algorithm="l1-fast",
                          diagnostics={"masks": table.size})


def linf_projected_bound(points: PointSet) -> Number:
    """
    Max over coordinates of the discrete 1-center cost of the projection.

    A lower bound on the l_inf radius, not always equal to it.
    """
    best = None
    for column in points.coords.T:
        values = np.unique(column)
        lo, hi = values[0], values[-1]
        k = int(np.searchsorted(values, (lo + hi) / 2))
        costs = [
            max(values[c] - lo, hi - values[c])
            for c in (k - 1, k)
            if 0 <= c < len(values)
        ]
        cost = min(costs)
        best = cost if best is None else max(best, cost)
    return to_python(best)


def linf_center(
    points: PointSet, threads: Optional[int] = None, keep_eccentricities: bool = False
) -> CenterResult:
    """Exact l_inf 1-center from column minima and maxima in O(n * d)."""
    if points.tag.kind != "linf":
        raise InvalidMetricError(f"Coordinate-scan solver needs l_inf, got {points.tag}")
    coords = points.coords
    lo = coords.min(axis=0)
    hi = coords.max(axis=0)

    def _chunk(rows: range) -> np.ndarray:
        block = coords[rows.start:rows.stop]
        return np.maximum(block - lo, hi - block).max(axis=1)

    ecc = np.concatenate(
        parallel_map(_chunk, chunk_ranges(points.n, get_config().point_chunk_size), threads)
    )
    index = int(np.argmin(ecc))
    radius = to_python(ecc[index])
    bound = linf_projected_bound(points)
    logger.info(f"linf_center: n={points.n} d={points.dim} index={index} radius={radius}")
    return CenterResult(
        index=index,
        radius=radius,
        algorithm="linf-fast",
        eccentricities=ecc.tolist() if keep_eccentricities else None,
        diagnostics={"projected_bound": bound},
    )
