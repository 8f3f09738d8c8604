import numpy as np
import pytest

from src.bmlp.errors import ShapeError
from src.bmlp.matrix.bitmat import (
    BitMatrix, BitVector, add, add_identity, equals, mul, negate, row, transpose, words_for,
)


def naive_product(a, b):
    """Triple-loop boolean product used as the reference for mul."""
    A, B = a.to_rows(), b.to_rows()
    return [[int(any(A[i][k] and B[k][j] for k in range(a.cols))) for j in range(b.cols)]
            for i in range(a.rows)]


def padding_is_clean(m):
    tail = m.cols % 64
    if not tail or not m.rows:
        return True
    return not np.any(m.data[:, -1] >> np.uint64(tail))


def test_add_is_element_wise_or():
    """Tests that add ORs corresponding entries."""
    a = BitMatrix.from_rows([[0, 1], [0, 0]])
    b = BitMatrix.from_rows([[0, 0], [1, 0]])
    assert add(a, b).to_rows() == [[0, 1], [1, 0]]


def test_add_identity_and_idempotence(make_matrix):
    a = make_matrix(9)
    assert add(a, BitMatrix.zeros(9, 9)) == a
    assert add(a, a) == a


def test_add_shape_mismatch_names_both_dimensions():
    with pytest.raises(ShapeError) as info:
        add(BitMatrix.zeros(2, 3), BitMatrix.zeros(3, 3))
    assert "2x3" in str(info.value)
    assert "3x3" in str(info.value)


def test_mul_matches_hand_example():
    a = BitMatrix.from_rows([[0, 1], [0, 0]])
    b = BitMatrix.from_rows([[0, 0], [0, 1]])
    assert mul(a, b).to_rows() == [[0, 1], [0, 0]]


def test_mul_identity_and_annihilator(make_matrix):
    a = make_matrix(12)
    assert mul(BitMatrix.identity(12), a) == a
    assert mul(a, BitMatrix.zeros(12, 12)) == BitMatrix.zeros(12, 12)


def test_mul_inner_dimension_mismatch():
    with pytest.raises(ShapeError):
        mul(BitMatrix.zeros(2, 3), BitMatrix.zeros(2, 3))


def test_mul_matches_triple_loop_on_random_instances(rng, make_matrix):
    """Tests mul against the brute-force product on 200 random shapes up to 32."""
    for _ in range(200):
        rows, inner, cols = (int(x) for x in rng.integers(1, 33, size=3))
        density = float(rng.choice([0.05, 0.2, 0.5]))
        a = make_matrix(rows, inner, density)
        b = make_matrix(inner, cols, density)
        product = mul(a, b)
        assert product.shape == (rows, cols)
        assert product.to_rows() == naive_product(a, b)
        assert padding_is_clean(product)


def test_semiring_laws(make_matrix):
    for _ in range(20):
        a, b, c = make_matrix(16), make_matrix(16), make_matrix(16)
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
        assert add(a, b) == add(b, a)
        assert add(add(a, b), c) == add(a, add(b, c))


def test_transpose_of_product(make_matrix):
    for _ in range(20):
        a, b = make_matrix(11, 7), make_matrix(7, 13)
        assert transpose(mul(a, b)) == mul(transpose(b), transpose(a))


def test_transpose_definition_and_involution(make_matrix):
    single = BitMatrix.from_pairs(3, 3, [(0, 1)])
    assert transpose(single) == BitMatrix.from_pairs(3, 3, [(1, 0)])
    assert transpose(BitMatrix.identity(5)) == BitMatrix.identity(5)
    a = make_matrix(5, 70)
    assert transpose(a).shape == (70, 5)
    assert transpose(transpose(a)) == a


def test_negate_flips_only_in_range_bits():
    assert negate(BitMatrix.zeros(2, 2)) == BitMatrix.ones(2, 2)
    assert negate(BitMatrix.identity(2)).to_rows() == [[0, 1], [1, 0]]
    wide = negate(BitMatrix.zeros(3, 70))
    assert wide.count() == 210
    assert padding_is_clean(wide)


def test_negate_is_an_involution(make_matrix):
    a = make_matrix(6, 65)
    assert negate(negate(a)) == a


def test_add_identity():
    assert add_identity(BitMatrix.zeros(3, 3)) == BitMatrix.identity(3)
    assert add_identity(BitMatrix.identity(3)) == BitMatrix.identity(3)
    assert add_identity(BitMatrix.from_rows([[0, 1], [0, 0]])).to_rows() == [[1, 1], [0, 1]]
    with pytest.raises(ShapeError):
        add_identity(BitMatrix.zeros(2, 3))


def test_equals():
    a = BitMatrix.from_rows([[1, 0], [1, 1]])
    assert equals(a, a)
    assert not equals(BitMatrix.zeros(2, 2), BitMatrix.identity(2))
    assert not equals(BitMatrix.zeros(2, 2), BitMatrix.zeros(2, 3))


def test_equality_ignores_names():
    assert BitMatrix.identity(3, name="a") == BitMatrix.identity(3, name="b")


def test_row():
    assert row(BitMatrix.identity(3), 1).to_rows() == [[0, 1, 0]]
    assert row(BitMatrix.zeros(2, 5), 0).to_rows() == [[0, 0, 0, 0, 0]]
    assert isinstance(row(BitMatrix.identity(3), 0), BitVector)
    with pytest.raises(IndexError):
        row(BitMatrix.identity(3), 3)


def test_vector_behaves_like_one_row_matrix(make_matrix):
    r = make_matrix(8)
    v = BitVector.from_indices(8, [0, 5])
    as_matrix = BitMatrix.from_pairs(1, 8, [(0, 0), (0, 5)])
    assert v == as_matrix
    assert mul(v, r) == mul(as_matrix, r)
    assert isinstance(mul(v, r), BitVector)
    assert isinstance(add(v, v), BitVector)


def test_row_int_round_trip_across_word_boundaries():
    for cols in (1, 63, 64, 65, 130):
        values = [0, 1, (1 << cols) - 1, 1 << (cols - 1)]
        m = BitMatrix.from_row_ints(cols, values)
        assert m.data.shape == (4, words_for(cols))
        assert [m.row_int(i) for i in range(4)] == values


def test_constructor_rejects_stray_padding_bits():
    data = np.zeros((1, 1), dtype=np.uint64)
    data[0, 0] = np.uint64(1 << 5)
    with pytest.raises(ValueError):
        BitMatrix(1, 3, data)


def test_matrices_are_immutable():
    m = BitMatrix.identity(2)
    with pytest.raises(AttributeError):
        m.rows = 3
    with pytest.raises(ValueError):
        m.data[0, 0] = 0


def test_pairs_are_row_major():
    m = BitMatrix.from_pairs(3, 3, [(2, 0), (0, 2), (0, 1)])
    assert m.pairs() == [(0, 1), (0, 2), (2, 0)]
    assert m.count() == 3
