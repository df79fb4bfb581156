"""Baseline optimizers, run records, and the experiment runner.

A run produces a RunRecord: an evaluation-indexed trace of normalized
hypervolume at archive-change events plus the final archive.  Records are
written as line-oriented text files (see ``write_record``) so re-runs with
identical configuration are byte-identical.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass, field

import numpy as np

from .constants import PENALTY_EDGE
from .indicator import Archive
from .suite import (
    BiObjProblem,
    ProblemId,
    enumerate_suite,
    instantiate_problem,
    manifest_lines,
)

DEFAULT_BUDGET_MULTIPLIER = 1000
DEFAULT_SEEDS = tuple(range(1, 16))
DEFAULT_SIGMA = 0.5

OPTIMIZERS = ("random-search", "archive-evolver")


@dataclass
class RunRecord:
    problem: ProblemId
    optimizer: str
    seed: int
    budget: int
    group: str
    ideal: tuple[float, float]
    nadir: tuple[float, float]
    trace: list[tuple[int, float]]
    archive: Archive
    sigma: float | None = None

    @property
    def final_hv(self) -> float:
        return self.trace[-1][1] if self.trace else 0.0


def _run_rng(problem: BiObjProblem, seed: int, tag: int) -> np.random.Generator:
    pid = problem.id
    return np.random.default_rng(
        [seed, pid.pair_index, pid.dim, pid.instance, tag]
    )


def _record_from(problem, optimizer, seed, budget, trace, archive, sigma=None):
    return RunRecord(
        problem=problem.id,
        optimizer=optimizer,
        seed=seed,
        budget=budget,
        group=problem.group,
        ideal=problem.ideal,
        nadir=problem.nadir,
        trace=trace,
        archive=archive,
        sigma=sigma,
    )


def run_random_search(problem: BiObjProblem, budget: int, seed: int) -> RunRecord:
    """Uniform sampling in [-5, 5]^D; exactly ``budget`` evaluations."""
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    rng = _run_rng(problem, seed, 0)
    archive = Archive(problem.ideal, problem.nadir)
    trace: list[tuple[int, float]] = []
    d = problem.dim
    for i in range(1, budget + 1):
        x = rng.uniform(-PENALTY_EDGE, PENALTY_EDGE, d)
        if archive.insert(x, problem.evaluate(x)):
            trace.append((i, archive.hypervolume_value))
    return _record_from(problem, "random-search", seed, budget, trace, archive)


def run_archive_evolver(
    problem: BiObjProblem,
    budget: int,
    seed: int,
    step_sigma: float = DEFAULT_SIGMA,
) -> RunRecord:
    """Mutate uniformly chosen archive members with Gaussian steps."""
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    if step_sigma <= 0:
        raise ValueError(f"step sigma must be positive, got {step_sigma}")
    rng = _run_rng(problem, seed, 1)
    archive = Archive(problem.ideal, problem.nadir)
    trace: list[tuple[int, float]] = []
    d = problem.dim
    for i in range(1, budget + 1):
        if archive.entries:
            parent = archive.entries[rng.integers(len(archive.entries))].x
            x = parent + step_sigma * rng.standard_normal(d)
        else:
            x = rng.uniform(-PENALTY_EDGE, PENALTY_EDGE, d)
        if archive.insert(x, problem.evaluate(x)):
            trace.append((i, archive.hypervolume_value))
    return _record_from(
        problem, "archive-evolver", seed, budget, trace, archive, step_sigma
    )


def run_optimizer(
    name: str, problem: BiObjProblem, budget: int, seed: int, sigma: float = DEFAULT_SIGMA
) -> RunRecord:
    if name == "random-search":
        return run_random_search(problem, budget, seed)
    if name == "archive-evolver":
        return run_archive_evolver(problem, budget, seed, sigma)
    raise ValueError(f"unknown optimizer {name!r}; expected one of {OPTIMIZERS}")


# ---------------------------------------------------------------------------
# Record files
# ---------------------------------------------------------------------------


def record_filename(record: RunRecord) -> str:
    return f"{record.problem}_{record.optimizer}_s{record.seed:03d}.rec"


def format_record(record: RunRecord) -> str:
    pid = record.problem
    header = [
        f"pair_index: {pid.pair_index}",
        f"dim: {pid.dim}",
        f"instance: {pid.instance}",
        f"group: {record.group}",
        f"optimizer: {record.optimizer}",
        f"seed: {record.seed}",
        f"budget: {record.budget}",
        f"ideal: {record.ideal[0]!r} {record.ideal[1]!r}",
        f"nadir: {record.nadir[0]!r} {record.nadir[1]!r}",
    ]
    if record.sigma is not None:
        header.append(f"sigma: {record.sigma!r}")
    parts = header + ["trace:"]
    parts += [f"{i} {hv!r}" for i, hv in record.trace]
    # archive section: normalized pair, raw pair, then the decision vector
    parts.append("archive:")
    parts += record.archive.dump_lines()
    return "\n".join(parts) + "\n"


def write_record(record: RunRecord, directory: str) -> str:
    """Atomically write one record file (temp file + rename)."""
    path = os.path.join(directory, record_filename(record))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(format_record(record))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


class RecordError(ValueError):
    """A record file is missing fields or violates trace invariants."""


def read_record(path: str) -> dict:
    """Parse a record file; validates the trace invariants on load."""
    with open(path) as fh:
        lines = [ln.rstrip("\n") for ln in fh]
    meta: dict = {}
    trace: list[tuple[int, float]] = []
    archive_rows: list[list[float]] = []
    section = "header"
    for ln in lines:
        if not ln:
            continue
        if ln == "trace:":
            section = "trace"
            continue
        if ln == "archive:":
            section = "archive"
            continue
        if section == "header":
            if ": " not in ln:
                raise RecordError(f"{path}: malformed header line {ln!r}")
            key, val = ln.split(": ", 1)
            meta[key] = val
        elif section == "trace":
            i_str, hv_str = ln.split()
            trace.append((int(i_str), float(hv_str)))
        else:
            archive_rows.append([float(v) for v in ln.split()])
    for key in ("pair_index", "dim", "instance", "group", "optimizer", "seed", "budget"):
        if key not in meta:
            raise RecordError(f"{path}: missing header field {key!r}")
    for prev, cur in zip(trace, trace[1:]):
        if cur[0] <= prev[0] or cur[1] < prev[1]:
            raise RecordError(f"{path}: trace not monotone at eval {cur[0]}")
    if trace and trace[-1][0] > int(meta["budget"]):
        raise RecordError(f"{path}: trace exceeds budget")
    return {
        "pair_index": int(meta["pair_index"]),
        "dim": int(meta["dim"]),
        "instance": int(meta["instance"]),
        "group": meta["group"],
        "optimizer": meta["optimizer"],
        "seed": int(meta["seed"]),
        "budget": int(meta["budget"]),
        "ideal": tuple(float(v) for v in meta["ideal"].split()),
        "nadir": tuple(float(v) for v in meta["nadir"].split()),
        "trace": trace,
        "final_hv": trace[-1][1] if trace else 0.0,
        "archive": archive_rows,
    }


# ---------------------------------------------------------------------------
# Experiments
# ---------------------------------------------------------------------------


@dataclass
class ExperimentConfig:
    out_dir: str
    functions: tuple[int, ...] | None = None
    dims: tuple[int, ...] | None = None
    instances: tuple[int, ...] | None = None
    optimizers: tuple[str, ...] = ("random-search",)
    seeds: tuple[int, ...] = DEFAULT_SEEDS
    budget_multiplier: int = DEFAULT_BUDGET_MULTIPLIER
    sigma: float = DEFAULT_SIGMA
    problem_ids: list = field(init=False)

    def __post_init__(self):
        if self.budget_multiplier < 1:
            raise ValueError("budget multiplier must be >= 1")
        if not self.seeds:
            raise ValueError("at least one seed is required")
        for name in self.optimizers:
            if name not in OPTIMIZERS:
                raise ValueError(f"unknown optimizer {name!r}")
        self.problem_ids = enumerate_suite(self.functions, self.dims, self.instances)
        if not self.problem_ids:
            raise ValueError("experiment filters select no problems")


def run_experiment(config: ExperimentConfig, progress=None) -> str:
    """Execute all (problem, optimizer, seed) cells; returns the results dir.

    Re-running with the same configuration overwrites the same files with
    identical bytes.  Each cell owns a fresh problem handle, so its final
    evaluation count equals the budget exactly.
    """
    os.makedirs(config.out_dir, exist_ok=True)
    manifest_path = os.path.join(config.out_dir, "manifest.txt")
    fd, tmp = tempfile.mkstemp(dir=config.out_dir, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write("\n".join(manifest_lines(config.problem_ids)) + "\n")
    os.replace(tmp, manifest_path)

    for pid in config.problem_ids:
        budget = config.budget_multiplier * pid.dim
        for optimizer in config.optimizers:
            for seed in config.seeds:
                problem = instantiate_problem(pid.pair_index, pid.dim, pid.instance)
                record = run_optimizer(optimizer, problem, budget, seed, config.sigma)
                assert problem.eval_count == budget
                write_record(record, config.out_dir)
                if progress is not None:
                    progress(record)
    return config.out_dir
