"""
Solve Service for OneCenter
Picks a solver for an instance file and wraps its answer in a ResultRecord.
"""

import time
from typing import Optional, Tuple

from .brute_force import OBJECTIVES, brute_force_solve
from .config_manager import get_config
from .errors import IncompatibleAlgorithmError, InvalidParameterError
from .instance_io import InstanceFile, ResultRecord
from .logger import get_logger
from .metrics import MetricTag
from .solvers import l1_center, l1_diameter, linf_center
from .ulam_center import ulam_center_approx

logger = get_logger()

ALGORITHMS = ("auto", "l1-fast", "linf-fast", "ulam-approx", "brute")
EXACT_ALGORITHMS = ("l1-fast", "linf-fast", "brute")


def _is_l1(tag: MetricTag) -> bool:
    return tag.kind == "lp" and tag.p == 1


class SolveService:
    """Runs one objective on one instance with an explicit or automatic algorithm."""

    def __init__(self, threads: Optional[int] = None):
        self.threads = threads
        self.config = get_config()

    def resolve_tag(self, instance: InstanceFile, metric: Optional[str] = None) -> MetricTag:
        if instance.kind == "hitting-set":
            raise IncompatibleAlgorithmError(
                "Hitting-set instances are not metric data; convert them with gen --gadget hsc-lp"
            )
        if metric:
            return MetricTag.parse(metric)
        if instance.tag is None:
            raise InvalidParameterError("Instance has no metric; pass --metric")
        return instance.tag

    def select_algorithm(
        self, instance: InstanceFile, tag: MetricTag, objective: str, algo: str = "auto",
        eps: Optional[float] = None,
    ) -> str:
        """
        Resolve `auto` and reject algorithm / metric / objective combinations that do not fit.

        `auto` only picks the approximate Ulam solver when an eps was asked for.
        """
        if algo not in ALGORITHMS:
            raise InvalidParameterError(f"Unknown algorithm {algo!r}; choose from {', '.join(ALGORITHMS)}")
        if objective not in OBJECTIVES:
            raise InvalidParameterError(f"Unknown objective {objective!r}")
        points = instance.kind == "points"

        if algo == "auto":
            if points and _is_l1(tag) and objective in ("center", "diameter") \
                    and (instance.dim or 0) <= self.config.l1_dimension_cap:
                return "l1-fast"
            if points and tag.kind == "linf" and objective == "center":
                return "linf-fast"
            if instance.kind == "permutations" and tag.kind == "ulam" and objective == "center" \
                    and eps is not None:
                return "ulam-approx"
            return "brute"

        fits = {
            "l1-fast": points and _is_l1(tag) and objective in ("center", "diameter"),
            "linf-fast": points and tag.kind == "linf" and objective == "center",
            "ulam-approx": instance.kind == "permutations" and tag.kind == "ulam" and objective == "center",
            "brute": points == tag.is_point_metric or tag.kind == "hamming",
        }
        if not fits[algo]:
            raise IncompatibleAlgorithmError(
                f"--algo {algo} does not support objective {objective} under metric {tag} "
                f"on {instance.kind} data",
                algorithm=algo, metric=tag.label, objective=objective,
            )
        return algo

    def _run(self, instance: InstanceFile, tag: MetricTag, objective: str, algo: str,
             eps: float, keep_eccentricities: bool):
        threads = self.threads
        if algo == "brute":
            data = instance.to_point_set().with_tag(tag) if instance.kind == "points" else instance.to_sequences()
            return brute_force_solve(data, tag, objective, threads, keep_eccentricities)
        if algo == "ulam-approx":
            return ulam_center_approx(instance.to_sequences(), eps, threads=threads,
                                      keep_eccentricities=keep_eccentricities)
        points = instance.to_point_set().with_tag(tag)
        if algo == "linf-fast":
            return linf_center(points, threads, keep_eccentricities)
        if objective == "diameter":
            return l1_diameter(points, threads)
        return l1_center(points, threads, keep_eccentricities)

    def solve(
        self,
        instance: InstanceFile,
        objective: str = "center",
        algo: str = "auto",
        metric: Optional[str] = None,
        eps: Optional[float] = None,
        keep_eccentricities: bool = False,
    ) -> ResultRecord:
        tag = self.resolve_tag(instance, metric)
        chosen = self.select_algorithm(instance, tag, objective, algo, eps)
        eps = self.config.default_eps if eps is None else eps
        if not eps > 0:
            raise InvalidParameterError(f"eps must be > 0, got {eps}")
        logger.info(f"solve: objective={objective} metric={tag} algo={chosen} (requested {algo})")

        start = time.perf_counter()
        result = self._run(instance, tag, objective, chosen, eps, keep_eccentricities)
        elapsed = time.perf_counter() - start
        return ResultRecord.from_result(result, tag.label, instance.n, elapsed)

    def solve_pair(self, instance: InstanceFile, objective: str, algo: str,
                   metric: Optional[str] = None, eps: Optional[float] = None) -> Tuple[ResultRecord, ResultRecord]:
        """The requested algorithm's answer next to the brute-force oracle's."""
        candidate = self.solve(instance, objective, algo, metric, eps)
        oracle = self.solve(instance, objective, "brute", metric, eps)
        return candidate, oracle
