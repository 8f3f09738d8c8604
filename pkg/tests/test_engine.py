import math
import time

import pytest

from src.bmlp.benchgen.graphs import GraphGenParams, gen_graph, gen_matrix
from src.bmlp.datalog.codec import select, to_facts
from src.bmlp.engine.modules import rms, smp
from src.bmlp.errors import EvaluationTimeout, ShapeError
from src.bmlp.matrix.bitmat import BitMatrix, BitVector, add, mul, row
from src.bmlp.oracle.closure import floyd_warshall_closure, naive_closure
from src.bmlp.oracle.evaluator import evaluate
from src.bmlp.oracle.rules import transitive_program


def chain(n):
    return BitMatrix.from_pairs(n, n, [(i, i + 1) for i in range(n - 1)], name="edge")


# --- rms ---

def test_rms_example(edge_matrix, example_symbols):
    """Tests the closure of the a -> b -> c chain."""
    result = rms(edge_matrix, name="path")
    assert result.closure.to_rows() == [[0, 1, 1], [0, 0, 1], [0, 0, 0]]
    assert result.closure.name == "path"
    assert result.iterations == 2
    assert [str(f) for f in to_facts(result.closure, "path", example_symbols)] == [
        "path(a,b)", "path(a,c)", "path(b,c)",
    ]


def test_rms_of_zero_matrix_takes_one_pass():
    result = rms(BitMatrix.zeros(5, 5))
    assert result.iterations == 1
    assert result.closure == BitMatrix.zeros(5, 5)


def test_rms_does_not_add_reflexive_pairs():
    """Only nodes on a cycle reach themselves."""
    m = BitMatrix.from_pairs(4, 4, [(0, 1), (1, 0), (2, 3)])
    closure = rms(m).closure
    assert closure.get(0, 0) and closure.get(1, 1)
    assert not closure.get(2, 2) and not closure.get(3, 3)


def test_rms_single_self_loop():
    m = BitMatrix.from_rows([[1]])
    assert rms(m).closure == m


def test_rms_matches_reference_closures(rng, make_matrix):
    for _ in range(100):
        n = int(rng.integers(1, 33))
        m = make_matrix(n, density=float(rng.choice([0.02, 0.05, 0.1, 0.3])))
        closure = rms(m).closure
        assert closure == naive_closure(m)
        assert set(closure.pairs()) == floyd_warshall_closure(n, m.pairs())


def test_rms_pass_count_is_logarithmic(rng, make_matrix):
    for n in (1, 2, 3, 17, 64, 100):
        bound = math.ceil(math.log2(n)) + 1
        assert rms(chain(n)).iterations <= bound
        assert rms(make_matrix(n, density=0.05)).iterations <= bound


def test_rms_is_idempotent(make_matrix):
    for _ in range(10):
        closure = rms(make_matrix(20, density=0.1)).closure
        assert rms(closure).closure == closure
        assert add(closure, mul(closure, closure)) == closure


def test_rms_rejects_non_square():
    with pytest.raises(ShapeError):
        rms(BitMatrix.zeros(2, 3))


def test_rms_deadline():
    with pytest.raises(EvaluationTimeout) as info:
        rms(chain(20), deadline=time.monotonic() - 1)
    assert info.value.module == "rms"
    assert info.value.exit_code == 5


# --- smp ---

def test_smp_example(edge_matrix, example_symbols):
    """Tests reachability from a in the a -> b -> c chain."""
    result = smp(select(["a"], example_symbols), edge_matrix)
    assert isinstance(result.reachable, BitVector)
    assert result.reachable.to_rows() == [[0, 1, 1]]
    assert result.iterations == 3


def test_smp_from_sink_is_empty(edge_matrix, example_symbols):
    assert smp(select(["c"], example_symbols), edge_matrix).reachable.count() == 0


def test_smp_zero_vector():
    result = smp(BitVector(4), chain(4))
    assert result.iterations == 1
    assert result.reachable.count() == 0


def test_smp_unit_vector_equals_closure_row(rng, make_matrix):
    for _ in range(30):
        n = int(rng.integers(1, 40))
        m = make_matrix(n, density=0.08)
        closure = rms(m).closure
        for i in range(n):
            result = smp(BitVector.from_indices(n, [i]), m)
            assert result.reachable == row(closure, i)
            assert result.iterations <= n


def test_smp_multi_source_is_union_of_rows(make_matrix):
    m = make_matrix(30, density=0.05)
    closure = rms(m).closure
    result = smp(BitVector.from_indices(30, [3, 7, 11]), m).reachable
    assert result == add(add(row(closure, 3), row(closure, 7)), row(closure, 11))


def test_smp_shape_checks():
    with pytest.raises(ShapeError):
        smp(BitVector(3), BitMatrix.zeros(4, 4))
    with pytest.raises(ShapeError):
        smp(BitVector(3), BitMatrix.zeros(3, 4))


def test_smp_deadline():
    with pytest.raises(EvaluationTimeout):
        smp(BitVector.from_indices(20, [0]), chain(20), deadline=time.monotonic() - 1)


def test_agrees_with_oracle_on_seeded_graphs(rng):
    """Tests rms and smp against rule evaluation and Warshall's closure on 200 seeded graphs."""
    for case in range(200):
        params = GraphGenParams(int(rng.integers(4, 65)), float(rng.choice([0.05, 0.2, 0.5])), seed=case)
        fb = gen_graph(params)
        m, st = gen_matrix(params)
        result = rms(m, name="path")
        assert result.iterations <= math.ceil(math.log2(params.n)) + 1

        assert to_facts(result.closure, "path", st) == evaluate(transitive_program(), fb)
        assert set(result.closure.pairs()) == floyd_warshall_closure(params.n, m.pairs())

        for i in range(params.n):
            reached = smp(BitVector.from_indices(params.n, [i]), m)
            assert reached.reachable == row(result.closure, i)
            assert reached.iterations <= params.n
