"""
Metric embeddings used to build hard instances.

* Hamming -> Ulam: swap the pair (2k-1, 2k) when bit k is set; Ulam
  insert/delete distance becomes twice the Hamming distance.
* Hamming -> Edit: each bit is followed by a random separator block; with
  well-separated blocks edit distance equals Hamming distance.
* Facility padding: wraps facility and client strings so that a plain
  1-center over the union is forced onto the facility side.
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from .config_manager import get_config
from .edit_distance import AboveThreshold, edit_distance_bounded
from .errors import CodecSeparationError, DimensionMismatchError, InvalidParameterError
from .logger import get_logger
from .parallel import parallel_map
from .ulam import Permutation

logger = get_logger()

BitsLike = Union[str, Sequence[int]]


def as_bits(a: BitsLike) -> Tuple[int, ...]:
    """Bit vector from "0101" text or a 0/1 sequence."""
    bits = tuple(int(ch) for ch in a) if isinstance(a, str) else tuple(int(v) for v in a)
    if any(v not in (0, 1) for v in bits):
        raise InvalidParameterError("Bit vectors may only contain 0 and 1")
    return bits


def hamming_to_ulam(a: BitsLike) -> Permutation:
    """Permutation of 1..2d: positions 2k-1 and 2k are swapped iff a_k = 1."""
    out = []
    for k, bit in enumerate(as_bits(a), start=1):
        lo, hi = 2 * k - 1, 2 * k
        out.extend((hi, lo) if bit else (lo, hi))
    return tuple(out)


@dataclass(frozen=True)
class EditCodec:
    """
    Separator blocks l_1..l_d for the Hamming -> Edit encoding.

    Every pair of blocks is at Hamming distance >= min_separation and edit
    distance >= min_edit_separation.
    """
    d: int
    block_len: int
    blocks: Tuple[str, ...]
    seed: int
    min_separation: int
    min_edit_separation: int
    reseeds: int = 0

    @property
    def encoded_length(self) -> int:
        return self.d * (self.block_len + 1)


def block_length(d: int, factor: Optional[int] = None) -> int:
    factor = factor if factor is not None else get_config().codec_block_factor
    return math.ceil(factor * math.log2(d))


def _separated(blocks: np.ndarray, min_sep: int, min_edit: int, threads: Optional[int]) -> bool:
    texts = ["".join(map(str, row)) for row in blocks]

    def _row_ok(i: int) -> bool:
        return all(
            edit_distance_bounded(texts[i], texts[j], min_edit - 1) is AboveThreshold
            for j in range(i + 1, len(texts))
        )

    # Hamming is checked for every pair before any edit-distance work
    if not all(
        np.count_nonzero(blocks[i + 1:] != blocks[i], axis=1).min() >= min_sep
        for i in range(len(texts) - 1)
    ):
        return False
    return all(parallel_map(_row_ok, range(len(texts)), threads))


def make_edit_codec(d: int, seed: int = 0, threads: Optional[int] = None) -> EditCodec:
    """
    Draw random separator blocks and validate their pairwise separation.

    Blocks must be ceil(L / codec_separation_divisor) apart in Hamming
    distance and ceil(L / codec_edit_separation_divisor) apart in edit
    distance; failing draws are retried with a derived seed.
    """
    if d < 4:
        raise InvalidParameterError(f"Edit codec needs d >= 4, got {d}")
    config = get_config()
    length = block_length(d, config.codec_block_factor)
    min_sep = math.ceil(length / config.codec_separation_divisor)
    min_edit = max(1, math.ceil(length / config.codec_edit_separation_divisor))
    for attempt in range(config.codec_max_reseeds + 1):
        rng = np.random.default_rng([seed, attempt])
        blocks = rng.integers(0, 2, size=(d, length), dtype=np.int8)
        if _separated(blocks, min_sep, min_edit, threads):
            logger.debug(f"make_edit_codec: d={d} L={length} accepted after {attempt} reseeds")
            return EditCodec(
                d=d,
                block_len=length,
                blocks=tuple("".join(map(str, row)) for row in blocks),
                seed=seed,
                min_separation=min_sep,
                min_edit_separation=min_edit,
                reseeds=attempt,
            )
    raise CodecSeparationError(
        f"No codec with separation {min_sep} (edit {min_edit}) after "
        f"{config.codec_max_reseeds} reseeds",
        d=d, seed=seed,
    )


def encode(codec: EditCodec, a: BitsLike) -> str:
    """Concatenation of a_i followed by block l_i."""
    bits = as_bits(a)
    if len(bits) != codec.d:
        raise DimensionMismatchError(f"Codec is for d={codec.d}, got a vector of length {len(bits)}")
    return "".join(f"{bit}{block}" for bit, block in zip(bits, codec.blocks))


@dataclass(frozen=True)
class PaddedEditInstance:
    """Padded facilities, padded clients and the all-zero origin string."""
    m: int
    facilities: Tuple[str, ...]
    clients: Tuple[str, ...]
    origin: str

    @property
    def strings(self) -> Tuple[str, ...]:
        return self.facilities + self.clients + (self.origin,)

    @property
    def roles(self) -> Tuple[Tuple[str, int], ...]:
        return (
            tuple(("F", k) for k in range(len(self.facilities)))
            + tuple(("C", k) for k in range(len(self.clients)))
            + (("origin", 0),)
        )


def pad_facility(x: str, m: int) -> str:
    return "1" * m + x + "0" * (2 * m)


def pad_client(x: str, m: int) -> str:
    return "1" * m + x + "1" * (2 * m)


def pad_facilities_edit(facilities: Sequence[str], clients: Sequence[str]) -> PaddedEditInstance:
    """
    1^m f 0^2m for facilities, 1^m c 1^2m for clients, plus 0^4m.

    A facility and a client are between 2m and 2m + ED(f, c) apart; the
    upper end is not always reached (1010 vs 1100 at m=4 gives 9, not 10).
    """
    strings = list(facilities) + list(clients)
    if not strings:
        raise InvalidParameterError("Padding needs at least one string")
    m = len(strings[0])
    for s in strings:
        if len(s) != m:
            raise DimensionMismatchError(f"Strings must share one length: {len(s)} vs {m}", expected=m)
        as_bits(s)
    return PaddedEditInstance(
        m=m,
        facilities=tuple(pad_facility(f, m) for f in facilities),
        clients=tuple(pad_client(c, m) for c in clients),
        origin="0" * (4 * m),
    )
