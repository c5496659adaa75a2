"""Point loading, pairwise distances, and cutoff-distance resolution."""

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import kernels


class PointFormatError(ValueError):
    """Raised when an input file cannot be parsed into points."""


class DcResolutionError(ValueError):
    """Raised when no cutoff distance can satisfy the requested target."""


@dataclass(frozen=True)
class PointSet:
    """Input points with optional ground-truth labels."""

    points: np.ndarray  # (n, D) float64
    truth_labels: Optional[np.ndarray] = None  # (n,) int64 or None

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
            raise ValueError("points must be a nonempty (n, D) array")
        object.__setattr__(self, "points", pts)
        if self.truth_labels is not None:
            labels = np.asarray(self.truth_labels, dtype=np.int64)
            if labels.shape != (pts.shape[0],):
                raise ValueError("truth_labels must have one entry per point")
            object.__setattr__(self, "truth_labels", labels)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]


@dataclass(frozen=True)
class DcSpec:
    """How to turn the cutoff-distance parameter into an absolute length.

    mode "absolute": value is the cutoff itself.
    mode "max-rho-percent": smallest cutoff making the maximum density
        reach ceil(value% of n).
    mode "avg-neighbor-percent": smallest cutoff making the mean density
        reach value% of n.
    """

    mode: str
    value: float

    MODES = ("max-rho-percent", "avg-neighbor-percent", "absolute")

    def __post_init__(self):
        if self.mode not in self.MODES:
            raise ValueError(f"unknown dc mode {self.mode!r}")
        if self.mode == "absolute":
            if not self.value > 0:
                raise ValueError("absolute dc must be positive")
        elif not 0 < self.value <= 100:
            raise ValueError("dc percentage must be in (0, 100]")


def load_points(
    path: str | Path,
    delimiter: Optional[str] = None,
    label_column: Optional[int] = None,
    header: bool = False,
) -> PointSet:
    """Parse a delimiter-separated text file into a PointSet.

    delimiter None auto-detects: comma if the first data line contains
    one, otherwise any whitespace. label_column (0-based) extracts an
    integer truth label from that column.
    """
    path = Path(path)
    lines = path.read_text().splitlines()
    if header:
        lines = lines[1:]
    rows: list[list[float]] = []
    labels: list[int] = []
    dim: Optional[int] = None
    sep = delimiter
    for lineno, line in enumerate(lines, start=2 if header else 1):
        line = line.strip()
        if not line:
            continue
        if sep is None:
            sep = "," if "," in line else None  # None -> split on whitespace
            if sep is None:
                sep = ""  # sentinel: whitespace
        fields = line.split(sep if sep else None)
        fields = [f for f in (f.strip() for f in fields) if f]
        try:
            values = [float(f) for f in fields]
        except ValueError as exc:
            raise PointFormatError(f"{path}: malformed row at line {lineno}: {line!r}") from exc
        if label_column is not None:
            col = label_column if label_column >= 0 else len(values) + label_column
            if not 0 <= col < len(values):
                raise PointFormatError(f"{path}: line {lineno} has no column {label_column}")
            labels.append(int(values[col]))
            values = values[:col] + values[col + 1:]
        if dim is None:
            dim = len(values)
            if dim == 0:
                raise PointFormatError(f"{path}: line {lineno} has no coordinates")
        elif len(values) != dim:
            raise PointFormatError(
                f"{path}: line {lineno} has {len(values)} coordinates, expected {dim}"
            )
        rows.append(values)
    if not rows:
        raise PointFormatError(f"{path}: no data rows")
    return PointSet(
        points=np.array(rows, dtype=np.float64),
        truth_labels=np.array(labels, dtype=np.int64) if label_column is not None else None,
    )


def pairwise_distance(ps: PointSet) -> np.ndarray:
    """Symmetric Euclidean distance matrix with zero diagonal."""
    return kernels.pairwise_distances(ps.points)


def _row_kth_smallest(dm: np.ndarray, k: int) -> np.ndarray:
    """Per-row k-th smallest off-diagonal distance (1-based k)."""
    n = dm.shape[0]
    out = np.empty(n, dtype=np.float64)
    chunk = max(1, min(n, 512))
    for start in range(0, n, chunk):
        stop = min(start + chunk, n)
        block = dm[start:stop].copy()
        for r in range(start, stop):
            block[r - start, r] = np.inf
        out[start:stop] = np.partition(block, k - 1, axis=1)[:, k - 1]
    return out


def resolve_dc(dm: np.ndarray, spec: DcSpec) -> float:
    """Resolve a DcSpec against a distance matrix into an absolute cutoff.

    Density uses a strict d < dc comparison, so the returned cutoff is
    nudged one ulp above the critical distance value.
    """
    if spec.mode == "absolute":
        return float(spec.value)
    n = dm.shape[0]
    if n < 2:
        raise DcResolutionError("percentage dc modes need at least 2 points")
    if spec.mode == "max-rho-percent":
        target = math.ceil(spec.value / 100.0 * n)
        if target > n - 1:
            raise DcResolutionError(
                f"max-rho target {target} unreachable: max achievable density is {n - 1} "
                f"({100.0 * (n - 1) / n:.3f}%)"
            )
        critical = float(_row_kth_smallest(dm, target).min())
    else:  # avg-neighbor-percent
        target = spec.value / 100.0 * n  # required mean density
        k = math.ceil(target * n)  # required count of off-diagonal pairs
        total = n * (n - 1)
        if k > total:
            raise DcResolutionError(
                f"avg-neighbor target {target:.3f} unreachable: max achievable mean "
                f"density is {n - 1}"
            )
        # the n diagonal zeros are <= every distance, so the k-th smallest
        # off-diagonal value is the (k + n)-th smallest of the full matrix
        critical = float(np.partition(dm.ravel(), k + n - 1)[k + n - 1])
    return float(np.nextafter(critical, np.inf))
