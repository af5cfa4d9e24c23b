"""
Instance and result files for OneCenter.

Instance files are JSON lines: one header object (kind, metric, dim, n,
metadata) followed by one payload row per point, permutation, string or
set. Headers are written with sorted keys and compact separators so a
read/write cycle reproduces the file byte for byte.
"""

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, TextIO, Union

from .errors import InstanceParseError, OneCenterError
from .hitting_set import HittingSetInstance
from .metrics import MetricTag, Number, PointSet, to_python
from .solvers import CenterResult, DiameterResult

FORMAT_NAME = "onecenter-instance"
FORMAT_VERSION = 1
KINDS = ("points", "permutations", "strings", "hitting-set")
DEFAULT_METRICS = {"permutations": "ulam", "strings": "edit"}

PathOrStream = Union[str, Path, TextIO]


@dataclass
class InstanceFile:
    """Header fields plus payload rows, validated against `kind`."""
    kind: str
    rows: List[Any]
    metric: Optional[str] = None
    dim: Optional[int] = None
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InstanceParseError(f"Unknown instance kind: {self.kind!r}")
        if self.metric is None:
            self.metric = DEFAULT_METRICS.get(self.kind)
        if self.metric is not None:
            try:
                MetricTag.parse(self.metric)
            except OneCenterError as e:
                raise InstanceParseError(f"Bad metric in header: {e}") from e
        self.rows = [self._check_row(k, row) for k, row in enumerate(self.rows)]
        if self.dim is None:
            self.dim = self._infer_dim()

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def tag(self) -> Optional[MetricTag]:
        return MetricTag.parse(self.metric) if self.metric else None

    def _check_row(self, k: int, row: Any) -> Any:
        where = f"row {k + 1}"
        if self.kind == "strings":
            if not isinstance(row, str):
                raise InstanceParseError(f"{where}: expected a string")
            return row
        if self.kind == "hitting-set":
            if (
                not isinstance(row, (list, tuple))
                or len(row) != 2
                or row[0] not in ("A", "B")
                or not isinstance(row[1], str)
                or any(ch not in "01" for ch in row[1])
            ):
                raise InstanceParseError(f"{where}: expected [\"A\"|\"B\", bit string]")
            return [row[0], row[1]]
        if not isinstance(row, (list, tuple)) or not row:
            raise InstanceParseError(f"{where}: expected a non-empty list of numbers")
        for v in row:
            if isinstance(v, bool) or not isinstance(v, (int, float)) or (
                isinstance(v, float) and not math.isfinite(v)
            ):
                raise InstanceParseError(f"{where}: {v!r} is not a finite number")
        if self.kind == "permutations":
            if any(not isinstance(v, int) for v in row) or sorted(row) != list(range(1, len(row) + 1)):
                raise InstanceParseError(f"{where}: not a permutation of 1..{len(row)}")
        if self.dim is not None and len(row) != self.dim:
            raise InstanceParseError(f"{where}: length {len(row)}, header says {self.dim}")
        return list(row)

    def _infer_dim(self) -> Optional[int]:
        if not self.rows:
            return None
        if self.kind == "hitting-set":
            lengths = {len(row[1]) for row in self.rows}
        else:
            lengths = {len(row) for row in self.rows}
        if len(lengths) == 1:
            return lengths.pop()
        if self.kind == "strings":
            return None
        raise InstanceParseError(f"Rows have differing lengths: {sorted(lengths)}")

    def to_point_set(self) -> PointSet:
        if self.kind != "points":
            raise InstanceParseError(f"{self.kind} instance is not a point set")
        return PointSet.from_rows(self.rows, self.tag)

    def to_sequences(self) -> List[Any]:
        if self.kind == "permutations":
            return [tuple(row) for row in self.rows]
        if self.kind == "strings":
            return list(self.rows)
        raise InstanceParseError(f"{self.kind} instance has no sequence payload")

    def to_hitting_set(self) -> HittingSetInstance:
        if self.kind != "hitting-set":
            raise InstanceParseError(f"{self.kind} instance is not a hitting-set instance")
        if self.dim is None:
            raise InstanceParseError("Hitting-set header needs dim (universe size)")
        return HittingSetInstance.from_rows(
            self.dim, self.rows, self.metadata.get("planted_answer")
        )

    @classmethod
    def from_point_set(cls, points: PointSet, metadata: Optional[Dict] = None) -> "InstanceFile":
        return cls("points", points.coords.tolist(), points.tag.label, points.dim, dict(metadata or {}))

    @classmethod
    def from_sequences(
        cls, kind: str, rows: Sequence[Any], metric: Optional[str] = None, metadata: Optional[Dict] = None
    ) -> "InstanceFile":
        rows = list(rows) if kind == "strings" else [list(r) for r in rows]
        return cls(kind, rows, metric, None, dict(metadata or {}))

    @classmethod
    def from_hitting_set(cls, inst: HittingSetInstance, metadata: Optional[Dict] = None) -> "InstanceFile":
        metadata = dict(metadata or {})
        if inst.planted_answer is not None:
            metadata["planted_answer"] = inst.planted_answer
        return cls("hitting-set", [list(r) for r in inst.rows()], None, inst.m, metadata)


def _dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def dumps_instance(instance: InstanceFile) -> str:
    header = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "kind": instance.kind,
        "metric": instance.metric,
        "dim": instance.dim,
        "n": instance.n,
        "metadata": instance.metadata,
    }
    lines = [_dumps(header)] + [_dumps(row) for row in instance.rows]
    return "\n".join(lines) + "\n"


def loads_instance(text: str) -> InstanceFile:
    """Parse instance text; any structural problem raises InstanceParseError."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise InstanceParseError("Instance file is empty")
    parsed = []
    for number, line in enumerate(lines, start=1):
        try:
            parsed.append(json.loads(line))
        except json.JSONDecodeError as e:
            raise InstanceParseError(f"line {number}: {e.msg}", line=number) from e
    header, rows = parsed[0], parsed[1:]
    if not isinstance(header, dict) or header.get("format") != FORMAT_NAME:
        raise InstanceParseError("Missing instance header")
    if header.get("version") != FORMAT_VERSION:
        raise InstanceParseError(f"Unsupported format version: {header.get('version')!r}")
    if header.get("n") is not None and header["n"] != len(rows):
        raise InstanceParseError(f"Header says n={header['n']}, found {len(rows)} rows")
    metadata = header.get("metadata") or {}
    if not isinstance(metadata, dict):
        raise InstanceParseError("metadata must be an object")
    return InstanceFile(
        kind=header.get("kind"),
        rows=rows,
        metric=header.get("metric"),
        dim=header.get("dim"),
        metadata=metadata,
    )


def write_instance(instance: InstanceFile, target: PathOrStream) -> None:
    text = dumps_instance(instance)
    if isinstance(target, (str, Path)):
        Path(target).write_text(text, encoding="utf-8", newline="\n")
    else:
        target.write(text)


def read_instance(source: PathOrStream) -> InstanceFile:
    if isinstance(source, (str, Path)):
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as e:
            raise InstanceParseError(f"Cannot read {source}: {e}") from e
    else:
        text = source.read()
    return loads_instance(text)


@dataclass
class ResultRecord:
    """One solver answer as printed on standard output."""
    objective: str
    algorithm: str
    metric: str
    n: int
    value: Number
    value_key: Number = None
    index: Optional[int] = None
    pair: Optional[List[int]] = None
    eccentricities: Optional[List[Number]] = None
    diagnostics: Dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def value_real(self) -> float:
        return float(self.value)

    @classmethod
    def from_result(
        cls, result: Union[CenterResult, DiameterResult], metric: str, n: int, wall_time: float = 0.0
    ) -> "ResultRecord":
        if isinstance(result, DiameterResult):
            return cls(
                objective="diameter",
                algorithm=result.algorithm,
                metric=metric,
                n=n,
                value=to_python(result.value),
                value_key=to_python(result.value_key),
                pair=list(result.pair),
                diagnostics=dict(result.diagnostics),
                wall_time=wall_time,
            )
        return cls(
            objective=result.objective,
            algorithm=result.algorithm,
            metric=metric,
            n=n,
            value=to_python(result.radius),
            value_key=to_python(result.radius_key),
            index=result.index,
            eccentricities=(
                [to_python(v) for v in result.eccentricities] if result.eccentricities is not None else None
            ),
            diagnostics=dict(result.diagnostics),
            wall_time=wall_time,
        )

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "objective": self.objective,
            "algorithm": self.algorithm,
            "metric": self.metric,
            "n": self.n,
            "value": self.value,
            "value_key": self.value_key,
            "value_real": self.value_real,
            "diagnostics": self.diagnostics,
            "wall_time": round(self.wall_time, 6),
        }
        if self.index is not None:
            data["index"] = self.index
        if self.pair is not None:
            data["pair"] = self.pair
        if self.eccentricities is not None:
            data["eccentricities"] = self.eccentricities
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, default=to_python)
