"""Random instances and jump-count experiments.

Texts are i.i.d. uniform over a synthetic alphabet. Queries are either
quasi-balanced (every component drawn from the integers strictly inside
(x - eps, x + eps), x = m / sigma) or uniform over all Parikh vectors of a
fixed length. Every (m, repetition) cell draws from its own PCG64 stream,
spawned from the experiment seed, so results do not depend on scheduling.
"""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
import pandas as pd
from numpy.random import PCG64, Generator, SeedSequence

from jpm.core import window_scan
from jpm.errors import CapabilityError, FitError, InvariantViolation
from jpm.helpers.csv_columns import CSV_SCHEMA_VERSION, cell_columns, run_columns
from jpm.jumping import build_jump_index, jump_search
from jpm.models import (
    Alphabet,
    BackendChoices,
    EncodedText,
    ExperimentConfig,
    ExperimentResult,
    ParikhVector,
    QueryModelChoices,
    TrendReport,
)
from jpm.utils.timing import median_ns

logger = logging.getLogger(__name__)

SeedLike = int | Generator | None


def make_rng(seed: SeedLike = None, *cell: int) -> Generator:
    if isinstance(seed, Generator):
        return seed
    return Generator(PCG64(SeedSequence(seed, spawn_key=tuple(cell))))


def gen_text(n: int, sigma: int, seed: SeedLike = None) -> EncodedText:
    if n < 1 or sigma < 1:
        raise ValueError(f"need n >= 1 and sigma >= 1, got n={n}, sigma={sigma}")
    rng = make_rng(seed)
    return EncodedText(Alphabet.synthetic(sigma), rng.integers(0, sigma, size=n))


def quasi_balanced_range(x: float, epsilon: int) -> tuple[int, int, bool]:
    """Integers strictly inside (x - eps, x + eps), cut at 0; the flag tells whether the cut happened"""
    lo = math.floor(x - epsilon) + 1
    hi = math.ceil(x + epsilon) - 1
    return max(0, lo), hi, lo < 0


def gen_quasi_balanced(sigma: int, x: float, epsilon: int, seed: SeedLike = None) -> ParikhVector:
    if epsilon < 1:
        raise ValueError("epsilon must be >= 1")
    rng = make_rng(seed)
    lo, hi, _ = quasi_balanced_range(x, epsilon)
    if hi < 0 or (hi == 0 and lo == 0):
        raise ValueError(f"no positive query has all components in ({x - epsilon}, {x + epsilon})")
    while True:
        counts = rng.integers(lo, hi + 1, size=sigma)
        if counts.any():
            return ParikhVector.of(counts.tolist())


def gen_fixed_length(sigma: int, m: int, seed: SeedLike = None) -> ParikhVector:
    """Uniform over the C(m + sigma - 1, sigma - 1) compositions of m (stars and bars)"""
    if m < 1:
        raise ValueError("m must be >= 1")
    rng = make_rng(seed)
    bars = np.sort(rng.choice(m + sigma - 1, size=sigma - 1, replace=False))
    edges = np.concatenate(([-1], bars, [m + sigma - 1]))
    return ParikhVector.of((np.diff(edges) - 1).tolist())


def gen_query(cfg: ExperimentConfig, m: int, rng: Generator) -> tuple[ParikhVector, bool]:
    if cfg.query_model is QueryModelChoices.FIXED_LENGTH:
        return gen_fixed_length(cfg.sigma, m, rng), False
    x = m / cfg.sigma
    _, _, clamped = quasi_balanced_range(x, cfg.epsilon)
    return gen_quasi_balanced(cfg.sigma, x, cfg.epsilon, rng), clamped


@dataclass
class _Cell:
    config: ExperimentConfig
    m_index: int
    m: int
    rep: int
    text: EncodedText | None


def _run_cell(cell: _Cell) -> list[dict]:
    cfg = cell.config
    rng = make_rng(cfg.seed, cell.m_index, cell.rep)
    text = cell.text if cell.text is not None else gen_text(cfg.n, cfg.sigma, rng)
    indexes = {backend: build_jump_index(text, backend) for backend in cfg.backends}
    repeats = cfg.timing_repeats if cfg.timing else 1

    rows = []
    for query_no in range(cfg.queries_per_text):
        q, clamped = gen_query(cfg, cell.m, rng)
        baseline_steps, window_ns, expected = None, None, None
        if cfg.baseline:
            scan, window_ns = median_ns(lambda: window_scan(text, q), repeats)
            baseline_steps, expected = scan.steps, scan.starts
        for backend, index in indexes.items():
            result, jump_ns = median_ns(lambda: jump_search(index, q), repeats)
            if expected is not None and result.occurrences != expected:
                raise InvariantViolation(f"{backend.value} back-end disagrees with the window scan on q={q}")
            counters = result.trace.counters
            rows.append(
                {
                    "n": text.n,
                    "sigma": cfg.sigma,
                    "m": cell.m,
                    "query_model": cfg.query_model.value,
                    "epsilon": cfg.epsilon if cfg.query_model is QueryModelChoices.QUASI_BALANCED else None,
                    "backend": backend.value,
                    "rep": cell.rep,
                    "query": query_no,
                    "length": q.length,
                    "jumps": result.trace.iterations,
                    "occurrences": len(result.occurrences),
                    "r_updates": result.trace.r_updates,
                    "l_updates": result.trace.l_updates,
                    "search_probes": counters.search_probes,
                    "lookups": counters.lookups,
                    "node_visits": counters.node_visits,
                    "gap_sum": result.trace.gap_sum,
                    "gap_count": result.trace.gap_count,
                    "baseline_steps": baseline_steps,
                    "clamped": clamped,
                    "jump_ns": jump_ns if cfg.timing else None,
                    "window_ns": window_ns if cfg.timing else None,
                }
            )
    return rows


def aggregate(runs: pd.DataFrame) -> pd.DataFrame:
    """Per-(m, back-end) means, results averaged over all queries of the same nominal size"""
    keys = ["n", "sigma", "m", "query_model", "epsilon", "backend"]
    cells = (
        runs.groupby(keys, sort=True, dropna=False)
        .agg(
            samples=("jumps", "count"),
            mean_length=("length", "mean"),
            mean_jumps=("jumps", "mean"),
            mean_occurrences=("occurrences", "mean"),
            mean_r_updates=("r_updates", "mean"),
            mean_l_updates=("l_updates", "mean"),
            mean_search_probes=("search_probes", "mean"),
            mean_lookups=("lookups", "mean"),
            mean_node_visits=("node_visits", "mean"),
            gap_sum=("gap_sum", "sum"),
            gap_count=("gap_count", "sum"),
            mean_baseline_steps=("baseline_steps", "mean"),
            clamped=("clamped", "any"),
            median_jump_ns=("jump_ns", "median"),
            median_window_ns=("window_ns", "median"),
        )
        .reset_index()
    )
    cells["mean_gap"] = cells["gap_sum"] / cells["gap_count"].where(cells["gap_count"] > 0)
    cells["schema_version"] = CSV_SCHEMA_VERSION
    return cells[cell_columns]


def run_experiment(
    cfg: ExperimentConfig,
    backend: BackendChoices | None = None,
    text: EncodedText | None = None,
) -> ExperimentResult:
    """Jump statistics over fresh random texts, or over one fixed text with random queries"""
    if backend is not None:
        if not backend.jumps:
            raise CapabilityError(f"the {backend.value} back-end cannot drive a jump search")
        cfg = cfg.copy(update={"backends": [backend]})
    if text is not None:
        if text.sigma != cfg.sigma:
            raise CapabilityError(f"text has {text.sigma} symbols, experiment expects sigma={cfg.sigma}")
        cfg = cfg.copy(update={"n": text.n})

    lengths = cfg.lengths()
    cells = [
        _Cell(cfg, m_index, m, rep, text)
        for m_index, m in enumerate(lengths)
        for rep in range(cfg.reps)
    ]
    logger.info(
        "Running %d cells: n=%d, sigma=%d, m in %s, %s queries",
        len(cells),
        cfg.n,
        cfg.sigma,
        lengths,
        cfg.query_model.value,
    )
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            batches = list(pool.map(_run_cell, cells))
    else:
        batches = [_run_cell(cell) for cell in cells]

    runs = pd.DataFrame([row for batch in batches for row in batch], columns=run_columns)
    # optional columns are all None when their feature is off
    runs = runs.astype({"epsilon": "Int64", "baseline_steps": "float64", "jump_ns": "float64", "window_ns": "float64"})
    result = ExperimentResult(cfg, runs, aggregate(runs))
    for row in result.cells.itertuples():
        logger.info("m=%d %s: mean J=%.1f over %d queries", row.m, row.backend, row.mean_jumps, row.samples)
    return result


def compare_models(
    cfg: ExperimentConfig,
    backend: BackendChoices = BackendChoices.TABLE,
    text: EncodedText | None = None,
) -> pd.DataFrame:
    """Mean J per m for quasi-balanced against fixed-length queries on the same texts"""
    frames = []
    for model in QueryModelChoices:
        result = run_experiment(cfg.copy(update={"query_model": model}), backend, text)
        frames.append(result.cells[["m", "mean_jumps"]].rename(columns={"mean_jumps": model.value}))
    merged = frames[0].merge(frames[1], on="m")
    merged["ratio"] = merged[QueryModelChoices.QUASI_BALANCED.value] / merged[QueryModelChoices.FIXED_LENGTH.value]
    return merged


def trend_check(result: ExperimentResult, backend: str | None = None, min_points: int = 5) -> TrendReport:
    """Fit mean J against c * n / sqrt(m sigma ln sigma) on log scale.

    The regression runs over the realized mean query length of each cell.
    The report is flagged when mean J does not fall by sqrt(m_hi / m_lo) / 2
    between the shortest and the longest queries.
    """
    cells = result.backend_cells(backend)
    n, sigma = result.config.n, result.config.sigma
    if len(cells) <= 1:
        raise FitError(f"cannot fit a trend through {len(cells)} point(s)")
    if sigma < 2:
        raise FitError("the trend model needs sigma >= 2")
    if len(cells) < min_points:
        logger.warning("Trend fit over only %d points (want %d)", len(cells), min_points)

    lengths = cells["mean_length"].to_numpy(dtype=float)
    jumps = cells["mean_jumps"].to_numpy(dtype=float)
    x, y = np.log(lengths), np.log(jumps)
    exponent, intercept = np.polyfit(x, y, 1)
    residuals = y - (exponent * x + intercept)
    model = np.log(n / np.sqrt(lengths * sigma * math.log(sigma)))
    coefficient = float(np.exp(np.mean(y - model)))

    decrease = float(jumps[0] / jumps[-1])
    required = math.sqrt(lengths[-1] / lengths[0]) / 2
    reasons = []
    if decrease < required:
        reasons.append(f"mean J fell by {decrease:.2f}, expected at least {required:.2f}")
    report = TrendReport(
        coefficient=coefficient,
        exponent=float(exponent),
        intercept=float(intercept),
        residuals=residuals.tolist(),
        lengths=lengths.tolist(),
        mean_jumps=jumps.tolist(),
        decrease_factor=decrease,
        required_factor=required,
        flagged=bool(reasons),
        reasons=reasons,
    )
    logger.info("Trend fit: exponent %.3f, c=%.3f, flagged=%s", report.exponent, report.coefficient, report.flagged)
    return report
