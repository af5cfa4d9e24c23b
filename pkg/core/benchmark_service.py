"""
Benchmark Service for OneCenter
Timed scaling runs written as CSV; medians go to the log.
"""

import csv
import statistics
import time
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, TextIO, Tuple

from .brute_force import brute_force_solve
from .errors import InvalidParameterError
from .generation_service import random_permutations, random_points
from .logger import get_logger
from .solvers import l1_center
from .ulam import ulam_edit, weighted_ulam
from .ulam_center import LowRegime, ceil_sqrt, compress_pair, detect_regime

logger = get_logger()

SUITES = ("l1-scaling", "ulam-pairs")
CSV_FIELDS = ["suite", "n", "d", "algo", "rep", "wall_time", "checksum"]


class BenchmarkService:
    """Runs a benchmark suite and returns one row per (n, d, algo, repetition)."""

    def __init__(self, threads: Optional[int] = None, seed: int = 0):
        self.threads = threads
        self.seed = seed

    def run(self, suite: str, **params) -> List[Dict]:
        if suite == "l1-scaling":
            return self.l1_scaling(**params)
        if suite == "ulam-pairs":
            return self.ulam_pairs(**params)
        raise InvalidParameterError(f"Unknown suite {suite!r}; choose from {', '.join(SUITES)}")

    def _timed(self, fn) -> Tuple[float, object]:
        start = time.perf_counter()
        out = fn()
        return time.perf_counter() - start, out

    def l1_scaling(
        self,
        d: int = 8,
        sizes: Sequence[int] = (2 ** 14, 2 ** 15, 2 ** 16, 2 ** 17),
        reps: int = 3,
        brute_sizes: Sequence[int] = (),
    ) -> List[Dict]:
        """l1-fast over `sizes`; brute force only over `brute_sizes`."""
        rows = []
        for n in sorted(set(sizes) | set(brute_sizes)):
            points = random_points(n, d, -10 ** 6, 10 ** 6, self.seed + n)
            for rep in range(reps):
                if n in sizes:
                    elapsed, result = self._timed(lambda: l1_center(points, self.threads))
                    rows.append(self._row("l1-scaling", n, d, "l1-fast", rep, elapsed, result.radius))
                if n in brute_sizes:
                    elapsed, result = self._timed(lambda: brute_force_solve(points, threads=self.threads))
                    rows.append(self._row("l1-scaling", n, d, "brute", rep, elapsed, result.radius))
        self.log_medians(rows)
        return rows

    def ulam_pairs(self, n: int = 64, d: int = 256, reps: int = 1, moves: Optional[int] = None) -> List[Dict]:
        """
        All pair distances of a Low-regime set, computed directly and through
        bucket compression. Checksums are the distance sums and must match.
        """
        moves = ceil_sqrt(d) if moves is None else moves
        rows = []
        for rep in range(reps):
            perms = random_permutations(n, d, self.seed + rep, moves)
            pairs = list(combinations(range(n), 2))
            elapsed, exact = self._timed(lambda: sum(ulam_edit(perms[i], perms[j]) for i, j in pairs))
            rows.append(self._row("ulam-pairs", n, d, "exact-pairs", rep, elapsed, exact))

            def _compressed():
                regime = detect_regime(perms, self.threads)
                if not isinstance(regime, LowRegime):
                    raise InvalidParameterError(
                        f"Instance left the Low regime (max anchor moves {regime.max_anchor_moves}); lower --moves"
                    )
                return sum(
                    weighted_ulam(*compress_pair(perms[i], perms[j], regime.scripts[i], regime.scripts[j]))
                    for i, j in pairs
                )

            elapsed, compressed = self._timed(_compressed)
            rows.append(self._row("ulam-pairs", n, d, "compressed-pairs", rep, elapsed, compressed))
            if compressed != exact:
                logger.error(f"ulam-pairs rep {rep}: compressed sum {compressed} != exact sum {exact}")
        self.log_medians(rows)
        return rows

    @staticmethod
    def _row(suite, n, d, algo, rep, elapsed, checksum) -> Dict:
        return {
            "suite": suite,
            "n": n,
            "d": d,
            "algo": algo,
            "rep": rep,
            "wall_time": f"{elapsed:.6f}",
            "checksum": checksum,
        }

    @staticmethod
    def medians(rows: Iterable[Dict]) -> Dict[Tuple[int, int, str], float]:
        grouped: Dict[Tuple[int, int, str], List[float]] = {}
        for row in rows:
            grouped.setdefault((row["n"], row["d"], row["algo"]), []).append(float(row["wall_time"]))
        return {key: statistics.median(times) for key, times in grouped.items()}

    def log_medians(self, rows: List[Dict]) -> None:
        for (n, d, algo), median in sorted(self.medians(rows).items()):
            logger.info(f"bench median: n={n} d={d} algo={algo} wall_time={median:.6f}s")

    @staticmethod
    def write_csv(rows: Iterable[Dict], stream: TextIO) -> None:
        writer = csv.DictWriter(stream, fieldnames=CSV_FIELDS, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
