# -*- coding: utf-8 -*-
"""
Timing harness for the closure modules and pipelines.

Samples run one after another. A sample that passes the timeout is recorded
as a timeout row and ends the run; it never raises.
"""
import csv
import logging
import time
from dataclasses import dataclass, field

import numpy as np

from ..datalog.codec import select
from ..engine.modules import rms, smp
from ..engine.pipeline import run_pipeline
from ..errors import EvaluationTimeout

logger = logging.getLogger(__name__)

TASKS = ("dg", "dg-partial", "pipeline")
CSV_HEADER = ["task", "n", "p_t", "repeat", "cpu_seconds", "iterations", "derived_facts"]
DEFAULT_TIMEOUT = 15000.0


@dataclass(frozen=True)
class BenchInputs:
    """
    What a task runs on.

    ``dg`` needs ``matrix``; ``dg-partial`` also needs ``source``; ``pipeline``
    needs ``pipeline``, ``facts`` and ``output``. ``p_t`` only labels the report.
    """
    matrix: object = None
    symbols: object = None
    source: str = None
    pipeline: object = None
    facts: object = None
    output: str = None
    p_t: float = None


@dataclass(frozen=True)
class Sample:
    repeat: int
    cpu_seconds: float
    wall_seconds: float
    iterations: int = None
    derived_facts: int = None
    timed_out: bool = False


@dataclass
class BenchReport:
    task: str
    n: int
    p_t: float = None
    samples: list = field(default_factory=list)

    @property
    def completed(self):
        return [s for s in self.samples if not s.timed_out]

    @property
    def timed_out(self):
        return any(s.timed_out for s in self.samples)

    @property
    def mean(self):
        """Mean CPU seconds over completed samples (NaN if none)."""
        times = [s.cpu_seconds for s in self.completed]
        return float(np.mean(times)) if times else float("nan")

    @property
    def std(self):
        times = [s.cpu_seconds for s in self.completed]
        return float(np.std(times)) if times else float("nan")

    def rows(self):
        for s in self.samples:
            yield {
                "task": self.task,
                "n": self.n,
                "p_t": "" if self.p_t is None else self.p_t,
                "repeat": s.repeat,
                "cpu_seconds": f"{s.cpu_seconds:.6f}",
                "iterations": "" if s.iterations is None else s.iterations,
                "derived_facts": "timeout" if s.timed_out else s.derived_facts,
            }


def _run_once(task, inputs, deadline):
    if task == "dg":
        result = rms(inputs.matrix, deadline=deadline)
        return result.iterations, result.closure.count()
    if task == "dg-partial":
        v = select([inputs.source], inputs.symbols)
        result = smp(v, inputs.matrix, deadline=deadline)
        return result.iterations, result.reachable.count()
    results = run_pipeline(inputs.pipeline, inputs.facts, inputs.symbols, deadline=deadline)
    output = inputs.output or inputs.pipeline.outputs[-1]
    return None, results[output].count()


def bench_run(task, inputs, repeats, timeout=DEFAULT_TIMEOUT):
    """
    Times ``task`` ``repeats`` times.

    Args:
        task (str): One of ``dg``, ``dg-partial``, ``pipeline``.
        inputs (BenchInputs): Compiled inputs for the task.
        repeats (int): Number of samples; 0 runs nothing.
        timeout (float): Per-sample cap in seconds.

    Returns:
        BenchReport: One sample per completed run plus at most one timeout.
    """
    if task not in TASKS:
        raise ValueError(f"unknown task '{task}', expected one of {', '.join(TASKS)}")
    n = len(inputs.symbols) if inputs.symbols is not None else inputs.matrix.rows
    report = BenchReport(task, n, inputs.p_t)
    for repeat in range(repeats):
        cpu_start, wall_start = time.process_time(), time.perf_counter()
        try:
            iterations, derived = _run_once(task, inputs, time.monotonic() + timeout)
        except EvaluationTimeout as e:
            report.samples.append(Sample(repeat, time.process_time() - cpu_start,
                                         time.perf_counter() - wall_start,
                                         iterations=e.iterations, timed_out=True))
            logger.warning("%s repeat %d timed out after %.0f s", task, repeat, timeout)
            break
        sample = Sample(repeat, time.process_time() - cpu_start, time.perf_counter() - wall_start,
                        iterations, derived)
        report.samples.append(sample)
        logger.info("%s repeat %d: %.4f s cpu, %s passes, %d facts",
                    task, repeat, sample.cpu_seconds, iterations, derived)
    return report


def write_csv(reports, handle):
    """Writes the rows of every report to an open text handle."""
    writer = csv.DictWriter(handle, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    for report in reports:
        writer.writerows(report.rows())
