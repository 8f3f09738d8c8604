import pytest

from src.bmlp.datalog.store import dumps_matrix, load_matrix, loads_matrix, save_matrix
from src.bmlp.datalog.symbols import SymbolTable
from src.bmlp.errors import MatrixFormatError
from src.bmlp.matrix.bitmat import BitMatrix, BitVector


def universe(n):
    return SymbolTable([f"c{i}" for i in range(n)])


def test_dump_format(edge_matrix, example_symbols):
    """Tests the exact text of a small matrix file."""
    assert dumps_matrix(edge_matrix, example_symbols) == (
        "bmlp-matrix v1\n"
        "name: edge\n"
        "dim: 3 3\n"
        "universe: a b c\n"
        "row 0: 2\n"
        "row 1: 4\n"
        "row 2: 0\n"
    )


@pytest.mark.parametrize("n", [1, 63, 64, 65])
def test_round_trip_at_word_boundaries(n, make_matrix):
    st = universe(n)
    m = make_matrix(n, density=0.5, name="r")
    loaded, loaded_st = loads_matrix(dumps_matrix(m, st))
    assert loaded == m
    assert loaded.name == "r"
    assert loaded_st == st


def test_round_trip_random_shapes(rng, make_matrix):
    for _ in range(100):
        n = int(rng.integers(1, 140))
        rows = int(rng.choice([1, n]))
        m = make_matrix(rows, n, density=float(rng.random()))
        loaded, _ = loads_matrix(dumps_matrix(m.with_name("m"), universe(n)))
        assert loaded == m


def test_vector_round_trip():
    v = BitVector.from_indices(5, [0, 4], name="q")
    loaded, _ = loads_matrix(dumps_matrix(v, universe(5)))
    assert isinstance(loaded, BitVector)
    assert loaded == v


def test_dump_rejects_universe_mismatch(edge_matrix):
    with pytest.raises(ValueError):
        dumps_matrix(edge_matrix, universe(4))


GOOD = "bmlp-matrix v1\nname: edge\ndim: 2 2\nuniverse: a b\nrow 0: 2\nrow 1: 0\n"


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("bmlp-matrix v2\n", 1),
    (GOOD.replace("name: edge", "name:"), 2),
    (GOOD.replace("dim: 2 2", "dim: two 2"), 3),
    (GOOD.replace("universe: a b", "universe: a"), 4),
    (GOOD.replace("universe: a b", "universe: a a"), 4),
    (GOOD.replace("row 1: 0\n", ""), 6),
    (GOOD.replace("row 1: 0", "row 1: zz"), 6),
    (GOOD.replace("row 1: 0", "row 3: 0"), 6),
    (GOOD.replace("row 0: 2", "row 0: 4"), 5),
    (GOOD + "row 2: 0\n", 7),
])
def test_malformed_files_report_the_line(text, line):
    with pytest.raises(MatrixFormatError) as info:
        loads_matrix(text)
    assert info.value.line == line
    assert info.value.exit_code == 2


def test_trailing_blank_lines_are_accepted():
    m, st = loads_matrix(GOOD + "\n\n")
    assert m.to_rows() == [[0, 1], [0, 0]]
    assert st.universe == ("a", "b")


def test_save_and_load(tmp_path, edge_matrix, example_symbols):
    path = tmp_path / "nested" / "edge.bmlp"
    save_matrix(edge_matrix, example_symbols, path)
    m, st = load_matrix(path)
    assert m == edge_matrix
    assert st == example_symbols
    assert [p.name for p in path.parent.iterdir()] == ["edge.bmlp"]


def test_save_leaves_no_temp_file_on_failure(tmp_path, edge_matrix):
    path = tmp_path / "edge.bmlp"
    with pytest.raises(ValueError):
        save_matrix(edge_matrix, universe(2), path)
    assert list(tmp_path.iterdir()) == []


def test_zero_matrix_round_trip():
    m = BitMatrix.zeros(3, 3, name="empty")
    loaded, _ = loads_matrix(dumps_matrix(m, universe(3)))
    assert loaded == m
