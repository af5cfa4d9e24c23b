"""
Generation Service for OneCenter
Builds seeded instance files: hitting-set gadgets, embeddings and random data.
"""

from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .embeddings import encode, hamming_to_ulam, make_edit_codec, pad_facilities_edit
from .errors import InvalidParameterError
from .hitting_set import HittingSetInstance, gen_hitting_set, hsc_to_lp
from .instance_io import InstanceFile
from .logger import get_logger
from .metrics import MetricTag, PointSet

logger = get_logger()

GADGETS = ("hsc", "hsc-lp", "ham2ulam", "ham2edit", "pad-edit", "random-points", "random-perms")


def random_points(n: int, d: int, low: int = -10, high: int = 10, seed: int = 0,
                  metric: str = "l1") -> PointSet:
    """n integer points drawn uniformly from [low, high]^d."""
    if n < 1 or d < 1:
        raise InvalidParameterError(f"Need n >= 1 and d >= 1, got n={n} d={d}")
    if low > high:
        raise InvalidParameterError(f"Empty coordinate range [{low}, {high}]")
    rng = np.random.default_rng(seed)
    coords = rng.integers(low, high, size=(n, d), endpoint=True, dtype=np.int64)
    return PointSet(coords, MetricTag.parse(metric))


def random_permutations(n: int, d: int, seed: int = 0, moves: Optional[int] = None) -> List[Tuple[int, ...]]:
    """
    n permutations of 1..d: uniform, or `moves` random relocations away from the identity.
    """
    if n < 1 or d < 1:
        raise InvalidParameterError(f"Need n >= 1 and d >= 1, got n={n} d={d}")
    rng = np.random.default_rng(seed)
    perms = []
    for _ in range(n):
        if moves is None:
            perms.append(tuple(int(v) for v in rng.permutation(d) + 1))
            continue
        perm = list(range(1, d + 1))
        for _ in range(moves):
            symbol = perm.pop(int(rng.integers(d)))
            perm.insert(int(rng.integers(d)), symbol)
        perms.append(tuple(perm))
    return perms


def random_bit_vectors(n: int, d: int, seed: int = 0, flips: Optional[int] = None) -> List[str]:
    """n bit strings of length d; with `flips`, each is a random base with that many bits flipped."""
    rng = np.random.default_rng(seed)
    if flips is None:
        bits = rng.integers(0, 2, size=(n, d))
    else:
        base = rng.integers(0, 2, size=d)
        bits = np.tile(base, (n, 1))
        for row in bits:
            row[rng.choice(d, size=min(flips, d), replace=False)] ^= 1
    return ["".join(map(str, row)) for row in bits]


class GenerationService:
    """Dispatches `gen --gadget` requests; every output is a function of (params, seed)."""

    def __init__(self, threads: Optional[int] = None):
        self.threads = threads
        self._gadgets: Dict[str, Callable[[Dict[str, Any], int], InstanceFile]] = {
            "hsc": self._hsc,
            "hsc-lp": self._hsc_lp,
            "ham2ulam": self._ham2ulam,
            "ham2edit": self._ham2edit,
            "pad-edit": self._pad_edit,
            "random-points": self._random_points,
            "random-perms": self._random_perms,
        }

    def generate(self, gadget: str, params: Optional[Dict[str, Any]] = None, seed: int = 0,
                 source: Optional[InstanceFile] = None) -> InstanceFile:
        """Build one instance; `source` feeds an existing hitting-set file to hsc-lp."""
        if gadget not in self._gadgets:
            raise InvalidParameterError(f"Unknown gadget {gadget!r}; choose from {', '.join(GADGETS)}")
        params = {k: v for k, v in (params or {}).items() if v is not None}
        if source is not None:
            if gadget != "hsc-lp":
                raise InvalidParameterError("--input is only used by the hsc-lp gadget")
            params["_source"] = source
        instance = self._gadgets[gadget](params, seed)
        public = {k: v for k, v in params.items() if not k.startswith("_")}
        instance.metadata.update({"generator": gadget, "params": public, "seed": seed})
        logger.info(f"gen {gadget}: kind={instance.kind} n={instance.n} dim={instance.dim} seed={seed}")
        return instance

    @staticmethod
    def _hitting_set(params: Dict[str, Any], seed: int) -> HittingSetInstance:
        source = params.get("_source")
        if source is not None:
            return source.to_hitting_set()
        return gen_hitting_set(
            params.get("n", 8), params.get("m", 8), params.get("mode", "random"),
            params.get("density", 0.5), seed,
        )

    def _hsc(self, params, seed) -> InstanceFile:
        return InstanceFile.from_hitting_set(self._hitting_set(params, seed))

    def _hsc_lp(self, params, seed) -> InstanceFile:
        inst = self._hitting_set(params, seed)
        gadget = hsc_to_lp(inst, params.get("p", 1))
        metadata = {
            "thresholds": list(gadget.thresholds),
            "m": inst.m,
            "roles": ["".join(map(str, role)) for role in gadget.roles],
        }
        if inst.planted_answer is not None:
            metadata["planted_answer"] = inst.planted_answer
        return InstanceFile.from_point_set(gadget.points, metadata)

    @staticmethod
    def _bit_rows(params: Dict[str, Any], seed: int) -> Sequence[str]:
        if "bits" in params:
            return list(params["bits"])
        return random_bit_vectors(params.get("n", 8), params.get("d", 8), seed, params.get("flips"))

    def _ham2ulam(self, params, seed) -> InstanceFile:
        rows = [hamming_to_ulam(bits) for bits in self._bit_rows(params, seed)]
        return InstanceFile.from_sequences("permutations", rows, "ulam")

    def _ham2edit(self, params, seed) -> InstanceFile:
        vectors = self._bit_rows(params, seed)
        d = len(vectors[0]) if vectors else params.get("d", 8)
        codec = make_edit_codec(d, seed, self.threads)
        rows = [encode(codec, bits) for bits in vectors]
        metadata = {
            "block_len": codec.block_len,
            "min_separation": codec.min_separation,
            "reseeds": codec.reseeds,
        }
        return InstanceFile.from_sequences("strings", rows, "edit", metadata)

    def _pad_edit(self, params, seed) -> InstanceFile:
        if "facilities" in params or "clients" in params:
            facilities = list(params.get("facilities", []))
            clients = list(params.get("clients", []))
        else:
            n, m = params.get("n", 4), params.get("m", 8)
            facilities = random_bit_vectors(n, m, seed)
            clients = random_bit_vectors(n, m, seed + 1)
        padded = pad_facilities_edit(facilities, clients)
        metadata = {
            "m": padded.m,
            "facilities": len(padded.facilities),
            "clients": len(padded.clients),
        }
        return InstanceFile.from_sequences("strings", padded.strings, "edit", metadata)

    def _random_points(self, params, seed) -> InstanceFile:
        points = random_points(
            params.get("n", 16), params.get("d", 2), params.get("low", -10), params.get("high", 10),
            seed, params.get("metric", "l1"),
        )
        return InstanceFile.from_point_set(points)

    def _random_perms(self, params, seed) -> InstanceFile:
        perms = random_permutations(params.get("n", 8), params.get("d", 16), seed, params.get("moves"))
        return InstanceFile.from_sequences("permutations", perms, "ulam")
