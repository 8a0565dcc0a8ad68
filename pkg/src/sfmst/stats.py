"""Empirical distributions, tail fits, and the MST efficiency measure.

Histograms use globally anchored grids (linear bins at multiples of the
width, logarithmic bins at integer powers of the ratio) so histograms of
different samples with the same binning can be pooled bin-by-bin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

import numpy as np

from .graph import WeightedGraph
from .mst import SpanningTree, verify_spanning_tree

__all__ = [
    "StatsError",
    "InvalidBinningError",
    "EmptyDataError",
    "InsufficientBinsError",
    "UnverifiableTreeError",
    "NonPositiveGraphWeightError",
    "LinearBinning",
    "LogBinning",
    "Binning",
    "Histogram",
    "FitResult",
    "histogram",
    "merge_histograms",
    "degree_histogram",
    "weight_histogram",
    "ccdf_points",
    "fit_tail_exponent",
    "fit_decay_rate",
    "mst_efficiency",
    "write_histogram_csv",
    "read_histogram_csv",
    "HISTOGRAM_CSV_COLUMNS",
]


class StatsError(Exception):
    """Base class for statistics errors."""


class InvalidBinningError(StatsError):
    """Binning parameters or sample domain unusable (e.g. log bins on x <= 0)."""


class EmptyDataError(StatsError):
    """No samples to bin."""


class InsufficientBinsError(StatsError):
    """Fewer than 3 occupied bins in the requested fit range."""


class UnverifiableTreeError(StatsError):
    """The tree failed verification against its graph."""


class NonPositiveGraphWeightError(StatsError):
    """Total graph weight must be positive for the efficiency ratio."""


@dataclass(frozen=True)
class LinearBinning:
    """Bins ``[i*width, (i+1)*width)`` for integer i."""

    width: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.width) and self.width > 0):
            raise InvalidBinningError(f"bin width must be positive, got {self.width!r}")


@dataclass(frozen=True)
class LogBinning:
    """Bins ``[ratio**i, ratio**(i+1))`` for integer i; samples must be positive."""

    ratio: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.ratio) and self.ratio > 1):
            raise InvalidBinningError(f"bin ratio must exceed 1, got {self.ratio!r}")


Binning = Union[LinearBinning, LogBinning]


@dataclass(frozen=True)
class Histogram:
    """Binned empirical distribution; densities integrate to 1."""

    binning: Binning
    lowers: np.ndarray
    uppers: np.ndarray
    counts: np.ndarray
    densities: np.ndarray
    n_samples: int

    def __post_init__(self) -> None:
        for a in (self.lowers, self.uppers, self.counts, self.densities):
            a.setflags(write=False)

    def rows(self) -> Iterable[tuple[float, float, int, float]]:
        return zip(
            self.lowers.tolist(), self.uppers.tolist(), self.counts.tolist(), self.densities.tolist()
        )

    def mass_between(self, lo: float, hi: float) -> float:
        """Probability mass of the bins entirely inside ``[lo, hi]``."""
        inside = (self.lowers >= lo) & (self.uppers <= hi)
        return float(self.counts[inside].sum() / self.n_samples)


@dataclass(frozen=True)
class FitResult:
    """Least-squares fit summary; `exponent` is positive for a decaying law."""

    exponent: float
    intercept: float
    fit_range: tuple[float, float]
    r_squared: float


def _bin_indices(x: np.ndarray, binning: Binning) -> np.ndarray:
    if isinstance(binning, LinearBinning):
        w = binning.width
        idx = np.floor(x / w).astype(np.int64)
        idx[x < idx * w] -= 1
        idx[x >= (idx + 1) * w] += 1
        return idx
    if (x <= 0).any():
        raise InvalidBinningError("logarithmic binning requires positive samples")
    r = binning.ratio
    idx = np.floor(np.log(x) / math.log(r)).astype(np.int64)
    idx[x < np.power(r, idx)] -= 1
    idx[x >= np.power(r, idx + 1)] += 1
    return idx


def _grid_edges(binning: Binning, i_min: int, i_max: int) -> tuple[np.ndarray, np.ndarray]:
    ii = np.arange(i_min, i_max + 2, dtype=np.float64)
    edges = ii * binning.width if isinstance(binning, LinearBinning) else np.power(binning.ratio, ii)
    return edges[:-1], edges[1:]


def _grid_index(binning: Binning, lower: float) -> int:
    if isinstance(binning, LinearBinning):
        return round(lower / binning.width)
    return round(math.log(lower) / math.log(binning.ratio))


def histogram(samples: Sequence[float] | np.ndarray, binning: Binning) -> Histogram:
    """Bin samples on the global grid; zero-count bins inside the span are kept."""
    x = np.asarray(samples, dtype=np.float64).ravel()
    if x.size == 0:
        raise EmptyDataError("cannot bin an empty sample")
    if not np.isfinite(x).all():
        raise InvalidBinningError("samples must be finite")
    idx = _bin_indices(x, binning)
    i_min, i_max = int(idx.min()), int(idx.max())
    counts = np.bincount(idx - i_min, minlength=i_max - i_min + 1).astype(np.int64)
    lowers, uppers = _grid_edges(binning, i_min, i_max)
    densities = counts / (x.size * (uppers - lowers))
    return Histogram(binning, lowers, uppers, counts, densities, int(x.size))


def merge_histograms(hists: Sequence[Histogram]) -> Histogram:
    """Pool histograms sharing one binning by summing counts bin-by-bin."""
    if not hists:
        raise EmptyDataError("nothing to merge")
    binning = hists[0].binning
    if any(h.binning != binning for h in hists):
        raise InvalidBinningError("cannot merge histograms with different binnings")
    pooled: dict[int, int] = {}
    n_total = 0
    for h in hists:
        n_total += h.n_samples
        base = _grid_index(binning, float(h.lowers[0]))
        for off, c in enumerate(h.counts.tolist()):
            if c:
                pooled[base + off] = pooled.get(base + off, 0) + c
    i_min, i_max = min(pooled), max(pooled)
    counts = np.zeros(i_max - i_min + 1, dtype=np.int64)
    for i, c in pooled.items():
        counts[i - i_min] = c
    lowers, uppers = _grid_edges(binning, i_min, i_max)
    densities = counts / (n_total * (uppers - lowers))
    return Histogram(binning, lowers, uppers, counts, densities, n_total)


def degree_histogram(obj: WeightedGraph | SpanningTree, binning: Binning) -> Histogram:
    """Normalized degree distribution of a graph, or of a tree's own edges."""
    if isinstance(obj, SpanningTree):
        if obj.n_nodes == 0:
            raise EmptyDataError("tree has no nodes")
        tu, tv = obj.edge_endpoint_arrays()
        degs = np.bincount(np.concatenate([tu, tv]), minlength=obj.n_nodes)
    else:
        if obj.n_nodes == 0:
            raise EmptyDataError("graph has no nodes")
        degs = obj.degrees()
    return histogram(degs.astype(np.float64), binning)


def weight_histogram(t: SpanningTree, g: WeightedGraph, binning: Binning) -> Histogram:
    """Distribution of the graph weights of the tree's edges."""
    check = verify_spanning_tree(g, t)
    if not check:
        raise UnverifiableTreeError(f"tree failed verification: {check.reason}")
    tu, tv = t.edge_endpoint_arrays()
    return histogram(g.edge_weights(tu, tv), binning)


def _least_squares(x: np.ndarray, y: np.ndarray) -> tuple[float, float, float]:
    slope, intercept = np.polyfit(x, y, 1)
    pred = slope * x + intercept
    ss_res = float(((y - pred) ** 2).sum())
    ss_tot = float(((y - y.mean()) ** 2).sum())
    r2 = 1.0 if ss_tot == 0.0 else max(0.0, 1.0 - ss_res / ss_tot)
    return float(slope), float(intercept), r2


def _centers(h: Histogram) -> np.ndarray:
    if isinstance(h.binning, LogBinning):
        return np.sqrt(h.lowers * h.uppers)
    return 0.5 * (h.lowers + h.uppers)


def _select(h: Histogram, fit_range: tuple[float, float] | None) -> np.ndarray:
    keep = h.counts > 0
    if fit_range is not None:
        lo, hi = fit_range
        c = _centers(h)
        keep &= (c >= lo) & (c <= hi)
    return keep


def ccdf_points(
    h: Histogram, fit_range: tuple[float, float] | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Survival function ``P(X >= lower)`` sampled at positive bin lower edges.

    The empirical CCDF is monotone and free of bin-width artifacts, which
    makes it the preferred basis for shape fits on discrete-valued data.
    """
    survival = np.cumsum(h.counts[::-1])[::-1] / h.n_samples
    keep = (survival > 0) & (h.lowers > 0)
    if fit_range is not None:
        keep &= (h.lowers >= fit_range[0]) & (h.lowers <= fit_range[1])
    return h.lowers[keep], survival[keep]


def fit_tail_exponent(
    h: Histogram,
    fit_range: tuple[float, float] | None = None,
    *,
    use_ccdf: bool = False,
) -> FitResult:
    """Power-law exponent of a decaying density, ``p(x) ~ x**(-exponent)``.

    Fits log density against log x over the occupied bins in range. With
    ``use_ccdf=True`` the fit runs on the survival function instead
    (slope -(exponent - 1), converted back), which is less sensitive to
    binning noise.
    """
    if use_ccdf:
        x, survival = ccdf_points(h, fit_range)
        if x.size < 3:
            raise InsufficientBinsError(f"need >= 3 usable bins, have {x.size}")
        slope, intercept, r2 = _least_squares(np.log(x), np.log(survival))
        return FitResult(1.0 - slope, intercept, (float(x.min()), float(x.max())), r2)
    keep = _select(h, fit_range)
    if (_centers(h)[keep] <= 0).any():
        raise InvalidBinningError("log-log fit requires positive bin positions")
    if int(keep.sum()) < 3:
        raise InsufficientBinsError(f"need >= 3 occupied bins in range, have {int(keep.sum())}")
    c = _centers(h)[keep]
    x = np.log(c)
    y = np.log(h.densities[keep])
    slope, intercept, r2 = _least_squares(x, y)
    return FitResult(-slope, intercept, (float(c.min()), float(c.max())), r2)


def fit_decay_rate(
    h: Histogram,
    fit_range: tuple[float, float] | None = None,
    *,
    use_ccdf: bool = False,
) -> FitResult:
    """Exponential decay rate, ``p(x) ~ exp(-exponent * x)`` (lin-log fit).

    With ``use_ccdf=True`` the fit runs on the survival function at the
    same points `fit_tail_exponent(use_ccdf=True)` would use, so the two
    r-squared values are directly comparable for shape discrimination.
    """
    if use_ccdf:
        x, survival = ccdf_points(h, fit_range)
        if x.size < 3:
            raise InsufficientBinsError(f"need >= 3 usable bins, have {x.size}")
        slope, intercept, r2 = _least_squares(x, np.log(survival))
        return FitResult(-slope, intercept, (float(x.min()), float(x.max())), r2)
    keep = _select(h, fit_range)
    if int(keep.sum()) < 3:
        raise InsufficientBinsError(f"need >= 3 occupied bins in range, have {int(keep.sum())}")
    c = _centers(h)[keep]
    y = np.log(h.densities[keep])
    slope, intercept, r2 = _least_squares(c, y)
    return FitResult(-slope, intercept, (float(c.min()), float(c.max())), r2)


def mst_efficiency(t: SpanningTree, g: WeightedGraph) -> float:
    """Tree weight over total graph weight; in (0, 1] for positive weights."""
    check = verify_spanning_tree(g, t)
    if not check:
        raise UnverifiableTreeError(f"tree failed verification: {check.reason}")
    total = g.total_weight
    if total <= 0:
        raise NonPositiveGraphWeightError(f"graph weight must be positive, got {total}")
    return t.total_weight / total


# -- CSV ------------------------------------------------------------------

HISTOGRAM_CSV_COLUMNS = ("bin_lower", "bin_upper", "count", "density")


class HistogramTable(NamedTuple):
    lowers: np.ndarray
    uppers: np.ndarray
    counts: np.ndarray
    densities: np.ndarray
    meta: dict[str, str]


def write_histogram_csv(
    path: str | Path, h: Histogram, metadata: Mapping[str, str] | None = None
) -> None:
    """CSV with `# key=value` comment headers and the documented column schema."""
    with open(path, "w") as fh:
        for k, v in (metadata or {}).items():
            fh.write(f"# {k}={v}\n")
        fh.write(",".join(HISTOGRAM_CSV_COLUMNS) + "\n")
        for lo, hi, c, d in h.rows():
            fh.write(f"{lo!r},{hi!r},{c},{d!r}\n")


def read_histogram_csv(path: str | Path) -> HistogramTable:
    meta: dict[str, str] = {}
    rows: list[tuple[float, float, int, float]] = []
    with open(path) as fh:
        header_seen = False
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                for token in line[1:].split():
                    key, _, value = token.partition("=")
                    meta[key] = value
                continue
            if not header_seen:
                cols = tuple(c.strip() for c in line.split(","))
                if cols != HISTOGRAM_CSV_COLUMNS:
                    raise StatsError(
                        f"{path}:{lineno}: expected columns {HISTOGRAM_CSV_COLUMNS}, got {cols}"
                    )
                header_seen = True
                continue
            parts = line.split(",")
            if len(parts) != 4:
                raise StatsError(f"{path}:{lineno}: expected 4 fields, got {len(parts)}")
            rows.append((float(parts[0]), float(parts[1]), int(parts[2]), float(parts[3])))
    if not header_seen:
        raise StatsError(f"{path}: missing column header")
    arr = np.array(rows, dtype=np.float64).reshape(-1, 4)
    return HistogramTable(
        arr[:, 0], arr[:, 1], arr[:, 2].astype(np.int64), arr[:, 3], meta
    )
