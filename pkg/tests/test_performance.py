import statistics
import time

import pytest

from src.bmlp.benchgen.bench import BenchInputs, bench_run
from src.bmlp.benchgen.graphs import GraphGenParams, gen_matrix, node_name
from src.bmlp.cli import main


@pytest.mark.slow
def test_dense_closure_finishes_on_a_desktop(tmp_path):
    """Tests that the DG benchmark at n=2000, p_t=0.5 completes within ten minutes."""
    start = time.perf_counter()
    assert main(["bench", "--task", "dg", "--n", "2000", "--p", "0.5",
                 "--csv", str(tmp_path / "dg.csv")]) == 0
    assert time.perf_counter() - start < 600


@pytest.mark.slow
def test_closure_time_is_insensitive_to_density():
    times = []
    for p_t in (0.01, 0.1, 0.5):
        m, st = gen_matrix(GraphGenParams(2000, p_t, seed=0))
        report = bench_run("dg", BenchInputs(matrix=m, symbols=st, p_t=p_t), repeats=1)
        times.append(report.mean)
    assert max(times) < 5 * min(times)


@pytest.mark.slow
def test_partial_closure_grows_slower_than_cubic():
    means = []
    for n in (250, 500, 1000, 2000):
        m, st = gen_matrix(GraphGenParams(n, 0.001, seed=0))
        inputs = BenchInputs(matrix=m, symbols=st, source=node_name(0), p_t=0.001)
        means.append(statistics.fmean(s.wall_seconds for s in bench_run("dg-partial", inputs, 10).samples))
    for small, large in zip(means, means[1:]):
        assert large / small <= 9
