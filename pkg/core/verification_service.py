"""
Verification Service for OneCenter
Cross-checks a solver against the brute-force oracle.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from .brute_force import eccentricity
from .instance_io import InstanceFile, ResultRecord
from .logger import get_logger
from .solve_service import SolveService

logger = get_logger()


@dataclass
class VerificationReport:
    """Outcome of one verify run."""
    passed: bool
    algorithm: str
    objective: str
    candidate: ResultRecord
    oracle: ResultRecord
    detail: str = ""
    extra: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "algorithm": self.algorithm,
            "objective": self.objective,
            "candidate": self.candidate.to_dict(),
            "oracle": self.oracle.to_dict(),
            "detail": self.detail,
            **self.extra,
        }


def _same_value(a, b) -> bool:
    if isinstance(a, int) and isinstance(b, int):
        return a == b
    return math.isclose(float(a), float(b), rel_tol=1e-9, abs_tol=1e-12)


class VerificationService:
    """Runs an algorithm and the oracle on the same instance and compares."""

    def __init__(self, threads: Optional[int] = None):
        self.solver = SolveService(threads)

    def verify(
        self,
        instance: InstanceFile,
        objective: str = "center",
        algo: str = "auto",
        metric: Optional[str] = None,
        eps: Optional[float] = None,
    ) -> VerificationReport:
        """
        Pass iff the values agree (exact algorithms) or the candidate's true
        eccentricity is within (1+eps) of the optimum (ulam-approx).
        """
        candidate, oracle = self.solver.solve_pair(instance, objective, algo, metric, eps)
        if candidate.algorithm == "ulam-approx":
            tag = self.solver.resolve_tag(instance, metric)
            report = self._check_approx(instance, tag, candidate, oracle, objective)
        else:
            passed = _same_value(candidate.value_key, oracle.value_key)
            detail = "values agree" if passed else (
                f"value {candidate.value} differs from oracle {oracle.value}"
            )
            report = VerificationReport(passed, candidate.algorithm, objective, candidate, oracle, detail)
        log = logger.info if report.passed else logger.warning
        log(f"verify {report.algorithm}/{objective}: {'PASS' if report.passed else 'FAIL'} ({report.detail})")
        return report

    def _check_approx(self, instance, tag, candidate, oracle, objective) -> VerificationReport:
        eps = candidate.diagnostics["eps"]
        true_ecc = eccentricity(instance.to_sequences(), candidate.index, tag)
        bound = (1 + eps) * oracle.value
        passed = true_ecc <= bound
        if candidate.diagnostics.get("regime") == "low":
            passed = passed and true_ecc == oracle.value and candidate.value == oracle.value
        detail = (
            f"regime={candidate.diagnostics.get('regime')} true eccentricity {true_ecc} "
            f"vs oracle {oracle.value} (bound {bound:g})"
        )
        return VerificationReport(
            passed, candidate.algorithm, objective, candidate, oracle, detail,
            extra={"true_eccentricity": true_ecc, "bound": bound},
        )
