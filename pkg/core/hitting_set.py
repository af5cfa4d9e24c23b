"""
Hitting-set instances and their l_p gadget.

Sets over the universe {1..m} are stored as integer bitmasks, element k
at bit k-1, so m is capped at 63. The gadget maps an instance to 2n+1
points in {0,1}^(5m+2) whose 1-center power-sum radius is at most 3m on
yes-instances and at least 3m+1 on no-instances.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .brute_force import brute_force_solve
from .errors import InvalidParameterError
from .logger import get_logger
from .metrics import MetricTag, PointSet
from .parallel import parallel_map

logger = get_logger()

MAX_UNIVERSE = 63
MODES = ("random", "planted-yes", "planted-no")


def mask_to_bits(mask: int, m: int) -> str:
    return "".join("1" if (mask >> k) & 1 else "0" for k in range(m))


def bits_to_mask(bits: str) -> int:
    if any(ch not in "01" for ch in bits):
        raise InvalidParameterError(f"Not a bit string: {bits!r}")
    return sum(1 << k for k, ch in enumerate(bits) if ch == "1")


@dataclass(frozen=True)
class HittingSetInstance:
    """Two collections of subsets of {1..m}; asks whether some A-set meets every B-set."""
    m: int
    A: Tuple[int, ...]
    B: Tuple[int, ...]
    planted_answer: Optional[bool] = None

    def __post_init__(self):
        if not 1 <= self.m <= MAX_UNIVERSE:
            raise InvalidParameterError(f"Universe size must be in [1, {MAX_UNIVERSE}], got {self.m}")
        limit = 1 << self.m
        for name, family in (("A", self.A), ("B", self.B)):
            for k, mask in enumerate(family):
                if not 0 <= mask < limit:
                    raise InvalidParameterError(
                        f"{name}[{k}] is not a subset of the universe", m=self.m
                    )

    @property
    def full(self) -> int:
        return (1 << self.m) - 1

    def rows(self) -> List[Tuple[str, str]]:
        """("A", bits) / ("B", bits) rows in file order."""
        return [("A", mask_to_bits(a, self.m)) for a in self.A] + [
            ("B", mask_to_bits(b, self.m)) for b in self.B
        ]

    @classmethod
    def from_rows(cls, m: int, rows: Sequence[Tuple[str, str]], planted_answer=None) -> "HittingSetInstance":
        A, B = [], []
        for side, bits in rows:
            if len(bits) != m:
                raise InvalidParameterError(f"Row {bits!r} has length {len(bits)}, expected {m}")
            if side == "A":
                A.append(bits_to_mask(bits))
            elif side == "B":
                B.append(bits_to_mask(bits))
            else:
                raise InvalidParameterError(f"Unknown side {side!r}")
        return cls(m, tuple(A), tuple(B), planted_answer)


def _random_masks(rng: np.random.Generator, n: int, m: int, density: float) -> List[int]:
    bits = rng.random((n, m)) < density
    weights = 1 << np.arange(m, dtype=np.int64)
    return [int(v) for v in (bits.astype(np.int64) * weights).sum(axis=1)]


def _random_bit(rng: np.random.Generator, mask: int, m: int) -> int:
    """A uniformly chosen element of `mask`, as a one-bit mask."""
    members = [k for k in range(m) if (mask >> k) & 1]
    return 1 << members[int(rng.integers(len(members)))]


def _plant_yes(rng, A: List[int], B: List[int], m: int) -> None:
    full = (1 << m) - 1
    k = int(rng.integers(len(A)))
    for t, b in enumerate(B):
        if b == 0:
            b = B[t] = _random_bit(rng, full, m)
        if A[k] & b == 0:
            A[k] |= _random_bit(rng, b, m)


def _plant_no(rng, A: List[int], B: List[int], m: int) -> None:
    full = (1 << m) - 1
    for s, a in enumerate(A):
        if a == full:
            A[s] = a & ~_random_bit(rng, full, m)
    owner = rng.integers(len(B), size=len(A))
    for t in range(len(B)):
        union = 0
        for s in np.flatnonzero(owner == t):
            union |= A[int(s)]
        if not union:
            continue
        B[t] &= ~union
        if B[t] == 0 and union != full:
            B[t] = _random_bit(rng, full & ~union, m)


def gen_hitting_set(
    n: int, m: int, mode: str = "random", density: float = 0.5, seed: int = 0
) -> HittingSetInstance:
    """
    Seeded instance with n A-sets and n B-sets over {1..m}.

    planted-yes makes one A-set hit every B-set; planted-no makes every
    A-set miss some B-set. Random instances leave planted_answer unset.
    """
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    if not 1 <= m <= MAX_UNIVERSE:
        raise InvalidParameterError(f"m must be in [1, {MAX_UNIVERSE}], got {m}")
    if mode not in MODES:
        raise InvalidParameterError(f"Unknown mode {mode!r}; choose from {', '.join(MODES)}")
    if not 0.0 <= density <= 1.0:
        raise InvalidParameterError(f"density must be in [0, 1], got {density}")

    rng = np.random.default_rng(seed)
    A = _random_masks(rng, n, m, density)
    B = _random_masks(rng, n, m, density)
    planted = None
    if mode == "planted-yes":
        _plant_yes(rng, A, B, m)
        planted = True
    elif mode == "planted-no":
        _plant_no(rng, A, B, m)
        planted = False
    logger.debug(f"gen_hitting_set: n={n} m={m} mode={mode} seed={seed}")
    return HittingSetInstance(m, tuple(A), tuple(B), planted)


def hsc_brute_force(inst: HittingSetInstance, threads: Optional[int] = None) -> bool:
    """True iff some A-set intersects every B-set (vacuously true when B is empty)."""
    if not inst.A:
        return False
    B = np.array(inst.B, dtype=np.int64)
    hits = parallel_map(lambda a: bool(np.all((B & np.int64(a)) != 0)), inst.A, threads)
    return any(hits)


@dataclass(frozen=True)
class LpGadget:
    """Gadget point set with the role of every point and the decision thresholds."""
    points: PointSet
    roles: Tuple[Tuple[str, int], ...]
    m: int
    yes_threshold: int
    no_threshold: int

    @property
    def thresholds(self) -> Tuple[int, int]:
        return self.yes_threshold, self.no_threshold

    def decide(self, threads: Optional[int] = None) -> bool:
        """Yes iff the exact 1-center power-sum radius is within the yes threshold."""
        result = brute_force_solve(self.points, objective="center", threads=threads)
        return result.radius_key <= self.yes_threshold


def _tau_a(mask: int, m: int) -> np.ndarray:
    row = np.zeros(5 * m + 2, dtype=np.int64)
    member = np.array([(mask >> k) & 1 for k in range(m)], dtype=np.int64)
    row[:m] = member
    row[m:2 * m] = 1 - member
    row[4 * m + 1:] = 1
    return row


def _tau_b(mask: int, m: int) -> np.ndarray:
    row = np.zeros(5 * m + 2, dtype=np.int64)
    member = np.array([(mask >> k) & 1 for k in range(m)], dtype=np.int64)
    row[:m] = member
    row[2 * m:3 * m] = 1 - member
    return row


def hsc_to_lp(inst: HittingSetInstance, p: float = 1) -> LpGadget:
    """
    Points tau_A(S) for S in A, tau_B(T) for T in B and the special point s.

    Power-sum distances on these 0/1 points are p-independent:
    A-B is 3m+1-2|S n T|, A-A and B-B at most 2m, A-s is 2m+1, B-s is 3m+2.
    """
    m = inst.m
    rows = [_tau_a(a, m) for a in inst.A] + [_tau_b(b, m) for b in inst.B]
    special = np.zeros(5 * m + 2, dtype=np.int64)
    special[3 * m:] = 1
    rows.append(special)
    roles = tuple(("A", k) for k in range(len(inst.A))) + tuple(
        ("B", k) for k in range(len(inst.B))
    ) + (("s", 0),)
    points = PointSet(np.vstack(rows), MetricTag.lp(p))
    logger.debug(f"hsc_to_lp: {points.n} points in dimension {points.dim}")
    return LpGadget(points, roles, m, 3 * m, 3 * m + 1)
