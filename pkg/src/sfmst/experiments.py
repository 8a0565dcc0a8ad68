"""Seed-reproducible ensemble experiments over disorder types and sizes.

Each realization runs generate -> assign weights -> Kruskal -> verify ->
measure. Realization ``r`` of size index ``s`` uses seed
``base_seed + s * realizations + r``, so any run can be replayed from the
metadata alone. Aggregation pools raw bin counts (not densities), which
makes the result independent of scheduling order.
"""

from __future__ import annotations

import concurrent.futures
import json
import multiprocessing
import time
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np

from . import __version__
from . import _kernels
from .generate import (
    RNG_ALGORITHM,
    DisorderType,
    GeneratorParams,
    assign_disorder,
    generate_preferential_attachment,
)
from .mst import kruskal
from .stats import (
    Binning,
    Histogram,
    LinearBinning,
    LogBinning,
    degree_histogram,
    merge_histograms,
    mst_efficiency,
    weight_histogram,
    write_histogram_csv,
)

__all__ = [
    "ExperimentError",
    "ConfigError",
    "ExperimentConfig",
    "RunMeasurement",
    "SizeResult",
    "EnsembleResult",
    "EfficiencyRow",
    "EfficiencyScaling",
    "default_binnings",
    "run_single",
    "run_ensemble",
    "efficiency_table",
    "efficiency_scaling",
    "load_config",
    "EFFICIENCY_CSV_COLUMNS",
]

EFFICIENCY_CSV_COLUMNS = ("n", "mean_alpha", "std_alpha", "realizations")


class ExperimentError(Exception):
    """A realization or ensemble failed; message carries the seed for replay."""


class ConfigError(Exception):
    """Bad experiment configuration (file parse errors carry line numbers)."""


@dataclass(frozen=True)
class ExperimentConfig:
    """Declarative ensemble description."""

    sizes: tuple[int, ...]
    m: int
    disorder: DisorderType | None
    realizations: int
    base_seed: int
    output_dir: Path | None = None

    def __post_init__(self) -> None:
        if not self.sizes:
            raise ConfigError("sizes must be non-empty")
        if list(self.sizes) != sorted(set(self.sizes)):
            raise ConfigError("sizes must be strictly ascending")
        if self.realizations < 1:
            raise ConfigError("realizations must be >= 1")

    @property
    def disorder_tag(self) -> str:
        return self.disorder.value if self.disorder else "none"


class RunMeasurement(NamedTuple):
    degree_hist: Histogram
    weight_hist: Histogram
    alpha: float


@dataclass(frozen=True)
class SizeResult:
    """Aggregated measurements for one graph size."""

    n: int
    degree_hist: Histogram
    weight_hist: Histogram
    alphas: np.ndarray
    alpha_mean: float
    alpha_std: float
    seeds: tuple[int, ...]
    failures: tuple[tuple[int, str], ...]


@dataclass(frozen=True)
class EnsembleResult:
    config: ExperimentConfig
    per_size: dict[int, SizeResult]
    metadata: dict


class EfficiencyRow(NamedTuple):
    n: int
    mean_alpha: float
    std_alpha: float
    realizations: int


@dataclass(frozen=True)
class EfficiencyScaling:
    rows: tuple[EfficiencyRow, ...]
    loglog_slope: float


def default_binnings(disorder: DisorderType | None) -> tuple[Binning, Binning]:
    """Panel-appropriate (degree, weight) binnings for a disorder type.

    Power-law-shaped distributions get logarithmic bins (ratio 1.3),
    exponential-shaped ones linear bins, mirroring how the two disorder
    types behave.
    """
    if disorder is DisorderType.TYPE2:
        return LogBinning(1.3), LinearBinning(0.005)
    if disorder is DisorderType.TYPE1:
        return LinearBinning(1.0), LogBinning(1.3)
    return LinearBinning(1.0), LinearBinning(1.0)


def run_single(
    n: int,
    m: int,
    disorder: DisorderType | None,
    seed: int,
    degree_binning: Binning | None = None,
    weight_binning: Binning | None = None,
) -> RunMeasurement:
    """One realization: returns the MST degree/weight histograms and efficiency."""
    db, wb = default_binnings(disorder)
    degree_binning = degree_binning or db
    weight_binning = weight_binning or wb
    try:
        g = generate_preferential_attachment(GeneratorParams(n, m, seed))
        if disorder is not None:
            g = assign_disorder(g, disorder)
        tree = kruskal(g)
        degree_hist = degree_histogram(tree, degree_binning)
        weight_hist = weight_histogram(tree, g, weight_binning)
        alpha = mst_efficiency(tree, g)
    except Exception as exc:
        raise ExperimentError(
            f"realization failed (n={n}, m={m}, "
            f"disorder={disorder.value if disorder else 'none'}, seed={seed}): {exc}"
        ) from exc
    return RunMeasurement(degree_hist, weight_hist, alpha)


def _run_task(task) -> tuple:
    n, m, disorder_name, seed = task
    disorder = DisorderType(disorder_name) if disorder_name else None
    try:
        return ("ok", n, seed, run_single(n, m, disorder, seed))
    except ExperimentError as exc:
        return ("err", n, seed, str(exc))


def run_ensemble(cfg: ExperimentConfig, n_jobs: int = 1) -> EnsembleResult:
    """Run all (size, realization) pairs and aggregate per size.

    Realizations are independent tasks (parallel across processes when
    ``n_jobs > 1``); pooled counts make aggregation order-independent. A
    size fails the whole run only if fewer than half its realizations
    succeed; individual failures are recorded with their seeds.
    """
    t_start = time.perf_counter()
    tasks = []
    for s_idx, n in enumerate(cfg.sizes):
        for r in range(cfg.realizations):
            seed = cfg.base_seed + s_idx * cfg.realizations + r
            tasks.append((n, cfg.m, cfg.disorder.value if cfg.disorder else "", seed))
    if n_jobs > 1 and len(tasks) > 1:
        ctx = multiprocessing.get_context("fork")
        with concurrent.futures.ProcessPoolExecutor(
            max_workers=min(n_jobs, len(tasks)), mp_context=ctx
        ) as pool:
            outcomes = list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * n_jobs))))
    else:
        outcomes = [_run_task(t) for t in tasks]

    per_size: dict[int, SizeResult] = {}
    for n in cfg.sizes:
        mine = [o for o in outcomes if o[1] == n]
        ok = [(seed, meas) for status, _, seed, meas in mine if status == "ok"]
        failures = tuple((seed, msg) for status, _, seed, msg in mine if status == "err")
        if len(ok) * 2 < cfg.realizations:
            detail = "; ".join(f"seed={s}: {m}" for s, m in failures[:5])
            raise ExperimentError(
                f"size {n}: only {len(ok)}/{cfg.realizations} realizations succeeded ({detail})"
            )
        alphas = np.array([meas.alpha for _, meas in ok])
        if ((alphas <= 0) | (alphas > 1)).any():
            raise ExperimentError(f"size {n}: efficiency outside (0, 1]")
        per_size[n] = SizeResult(
            n=n,
            degree_hist=merge_histograms([meas.degree_hist for _, meas in ok]),
            weight_hist=merge_histograms([meas.weight_hist for _, meas in ok]),
            alphas=alphas,
            alpha_mean=float(alphas.mean()),
            alpha_std=float(alphas.std(ddof=1)) if alphas.size > 1 else 0.0,
            seeds=tuple(seed for seed, _ in ok),
            failures=failures,
        )

    db, wb = default_binnings(cfg.disorder)
    metadata = {
        "m": cfg.m,
        "disorder": cfg.disorder_tag,
        "sizes": list(cfg.sizes),
        "realizations": cfg.realizations,
        "base_seed": cfg.base_seed,
        "rng": RNG_ALGORITHM,
        "backend": _kernels.backend_name(),
        "version": __version__,
        "numpy": np.__version__,
        "degree_binning": _binning_tag(db),
        "weight_binning": _binning_tag(wb),
        "histograms_n": max(cfg.sizes),
        "seeds": {str(n): list(per_size[n].seeds) for n in cfg.sizes},
        "failed": {str(n): [list(f) for f in per_size[n].failures] for n in cfg.sizes},
        "wall_time_s": round(time.perf_counter() - t_start, 3),
    }
    result = EnsembleResult(cfg, per_size, metadata)
    if cfg.output_dir is not None:
        persist_result(result)
    return result


def _binning_tag(b: Binning) -> str:
    if isinstance(b, LinearBinning):
        return f"linear:{b.width!r}"
    return f"log:{b.ratio!r}"


def persist_result(result: EnsembleResult) -> None:
    """Write degree/weight/efficiency CSVs plus `meta.json` to the output dir.

    The degree and weight histogram files describe the largest configured
    size (the distribution panels); the efficiency file covers all sizes.
    """
    cfg = result.config
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    tag = cfg.disorder_tag
    n_big = max(cfg.sizes)
    big = result.per_size[n_big]
    common = {
        "n": str(n_big),
        "m": str(cfg.m),
        "disorder": tag,
        "realizations": str(cfg.realizations),
        "base_seed": str(cfg.base_seed),
        "rng": RNG_ALGORITHM,
    }
    write_histogram_csv(
        out / f"degree_{tag}.csv",
        big.degree_hist,
        {**common, "quantity": "mst_degree", "binning": _binning_tag(big.degree_hist.binning)},
    )
    write_histogram_csv(
        out / f"weight_{tag}.csv",
        big.weight_hist,
        {**common, "quantity": "mst_weight", "binning": _binning_tag(big.weight_hist.binning)},
    )
    with open(out / f"efficiency_{tag}.csv", "w") as fh:
        for k, v in common.items():
            if k != "n":
                fh.write(f"# {k}={v}\n")
        fh.write(",".join(EFFICIENCY_CSV_COLUMNS) + "\n")
        for row in efficiency_table(result):
            fh.write(f"{row.n},{row.mean_alpha!r},{row.std_alpha!r},{row.realizations}\n")
    with open(out / f"meta_{tag}.json", "w") as fh:
        json.dump(result.metadata, fh, indent=2)
        fh.write("\n")


def efficiency_table(result: EnsembleResult) -> list[EfficiencyRow]:
    return [
        EfficiencyRow(n, sr.alpha_mean, sr.alpha_std, len(sr.seeds))
        for n, sr in sorted(result.per_size.items())
    ]


def efficiency_scaling(cfg: ExperimentConfig, n_jobs: int = 1) -> EfficiencyScaling:
    """Per-size efficiency statistics plus the log-log slope across sizes."""
    if len(cfg.sizes) < 3:
        raise ConfigError(f"efficiency scaling needs >= 3 sizes, got {len(cfg.sizes)}")
    result = run_ensemble(cfg, n_jobs=n_jobs)
    rows = efficiency_table(result)
    x = np.log([r.n for r in rows])
    y = np.log([r.mean_alpha for r in rows])
    slope = float(np.polyfit(x, y, 1)[0])
    return EfficiencyScaling(tuple(rows), slope)


# -- config files -----------------------------------------------------------

_CONFIG_KEYS = {"sizes", "m", "disorder", "realizations", "seed", "out", "threads"}


def load_config(path: str | Path) -> tuple[ExperimentConfig, int | None]:
    """Parse a flat `key=value` config file; returns (config, threads or None)."""
    values: dict[str, str] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not sep or not key or not value:
                raise ConfigError(f"{path}:{lineno}: expected `key=value`, got {raw.strip()!r}")
            if key not in _CONFIG_KEYS:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            if key in values:
                raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
            values[key] = value

    def _int(key: str, default: int | None = None) -> int:
        if key not in values:
            if default is None:
                raise ConfigError(f"{path}: missing required key {key!r}")
            return default
        try:
            return int(values[key])
        except ValueError:
            raise ConfigError(f"{path}: key {key!r} must be an integer, got {values[key]!r}") from None

    if "sizes" not in values:
        raise ConfigError(f"{path}: missing required key 'sizes'")
    try:
        sizes = tuple(int(s) for s in values["sizes"].split(",") if s.strip())
    except ValueError:
        raise ConfigError(f"{path}: sizes must be comma-separated integers") from None
    disorder_name = values.get("disorder", "none").lower()
    if disorder_name == "none":
        disorder = None
    elif disorder_name in ("type1", "type2"):
        disorder = DisorderType(disorder_name)
    else:
        raise ConfigError(f"{path}: disorder must be none|type1|type2, got {disorder_name!r}")
    try:
        cfg = ExperimentConfig(
            sizes=sizes,
            m=_int("m", 2),
            disorder=disorder,
            realizations=_int("realizations", 100),
            base_seed=_int("seed", 1),
            output_dir=Path(values["out"]) if "out" in values else None,
        )
    except ConfigError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    threads = _int("threads", 0)
    return cfg, (threads if threads > 0 else None)
