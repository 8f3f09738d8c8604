# -*- coding: utf-8 -*-
"""
Dense bit-packed boolean matrices.

Each row is stored as a run of little-endian 64-bit words: bit ``j`` of row
``i`` (value ``2**j`` in the row's integer reading) is entry ``(i, j)``. Bits
at column index ``>= cols`` are kept at zero by every constructor and kernel,
so equality is a plain word comparison.

Values are immutable. Every kernel returns a new matrix.
"""
import hashlib
import logging

import numpy as np

from ..errors import IndexOutOfRange, _check_shape

logger = logging.getLogger(__name__)

WORD_BITS = 64
WORD = np.dtype("<u8")
_ALL_ONES = np.uint64(0xFFFFFFFFFFFFFFFF)


def words_for(cols):
    """Number of 64-bit words needed to hold ``cols`` bits."""
    return (cols + WORD_BITS - 1) // WORD_BITS


def _row_mask(cols):
    """Per-word mask with exactly the in-range column bits set."""
    mask = np.full(words_for(cols), _ALL_ONES, dtype=WORD)
    tail = cols % WORD_BITS
    if tail:
        mask[-1] = np.uint64((1 << tail) - 1)
    return mask


def _pack(bits):
    """Packs a 2-D boolean array into a (rows, words) word array."""
    rows, cols = bits.shape
    packed = np.packbits(bits.astype(bool, copy=False), axis=1, bitorder="little")
    padded = np.zeros((rows, words_for(cols) * 8), dtype=np.uint8)
    padded[:, :packed.shape[1]] = packed
    return padded.view(WORD)


def _unpack(data, cols):
    """Expands a word array back into a (rows, cols) boolean array."""
    as_bytes = np.ascontiguousarray(data).view(np.uint8)
    return np.unpackbits(as_bytes, axis=1, bitorder="little")[:, :cols].astype(bool)


class BitMatrix:
    """
    An immutable ``rows x cols`` boolean matrix with bit-packed rows.

    Args:
        rows (int): Number of rows.
        cols (int): Number of columns.
        data (numpy.ndarray, optional): ``(rows, words_for(cols))`` array of
            little-endian uint64 words. Defaults to all zeros.
        name (str, optional): Identifier used when the matrix is printed,
            decoded or saved.
    """
    __slots__ = ("rows", "cols", "data", "name")

    def __init__(self, rows, cols, data=None, name=None):
        if rows < 0 or cols < 0:
            raise ValueError(f"negative dimensions {rows}x{cols}")
        width = words_for(cols)
        if data is None:
            data = np.zeros((rows, width), dtype=WORD)
        else:
            data = np.array(data, dtype=WORD, copy=True).reshape(rows, width)
            if rows and width and np.any(data & ~_row_mask(cols)):
                raise ValueError(f"stray bits beyond column {cols - 1}")
        data.flags.writeable = False
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "name", name)

    def __setattr__(self, key, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    # --- Constructors ---

    @classmethod
    def zeros(cls, rows, cols, name=None):
        return cls(rows, cols, name=name)

    @classmethod
    def ones(cls, rows, cols, name=None):
        data = np.tile(_row_mask(cols), (rows, 1))
        return cls(rows, cols, data, name=name)

    @classmethod
    def identity(cls, n, name=None):
        return cls.from_bool(np.eye(n, dtype=bool), name=name)

    @classmethod
    def from_bool(cls, bits, name=None):
        """Builds a matrix from a 2-D array-like of truthy values."""
        bits = np.asarray(bits, dtype=bool)
        if bits.ndim == 1:
            bits = bits.reshape(1, -1)
        rows, cols = bits.shape
        return cls(rows, cols, _pack(bits), name=name)

    @classmethod
    def from_rows(cls, rows, name=None):
        """Builds a matrix from nested 0/1 lists, e.g. ``[[0, 1], [0, 0]]``."""
        return cls.from_bool(rows, name=name)

    @classmethod
    def from_pairs(cls, rows, cols, pairs, name=None):
        """Builds a matrix with exactly the ``(i, j)`` entries in ``pairs`` set."""
        bits = np.zeros((rows, cols), dtype=bool)
        for i, j in pairs:
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexOutOfRange(f"entry ({i}, {j}) outside {rows}x{cols}")
            bits[i, j] = True
        return cls.from_bool(bits, name=name)

    @classmethod
    def from_row_ints(cls, cols, values, name=None):
        """Builds a matrix from one Python integer per row (bit j = column j)."""
        width = words_for(cols)
        data = np.zeros((len(values), width), dtype=WORD)
        for i, value in enumerate(values):
            if value.bit_length() > cols:
                raise ValueError(f"row {i} has bits beyond column {cols - 1}")
            raw = value.to_bytes(width * 8, "little")
            data[i] = np.frombuffer(raw, dtype=WORD)
        return cls(len(values), cols, data, name=name)

    # --- Accessors ---

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    def with_name(self, name):
        """Returns the same bits under a new name."""
        return type(self)._rebuild(self.rows, self.cols, self.data, name)

    @classmethod
    def _rebuild(cls, rows, cols, data, name):
        return cls(rows, cols, data, name=name)

    def get(self, i, j):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexOutOfRange(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
        word = int(self.data[i, j // WORD_BITS])
        return bool((word >> (j % WORD_BITS)) & 1)

    def row_int(self, i):
        """Row ``i`` read as a Python integer, bit j = column j."""
        return int.from_bytes(self.data[i].tobytes(), "little")

    def to_bool(self):
        return _unpack(self.data, self.cols)

    def to_rows(self):
        return self.to_bool().astype(int).tolist()

    def pairs(self):
        """Set entries as ``(i, j)`` tuples in row-major order."""
        rows, cols = np.nonzero(self.to_bool())
        return list(zip(rows.tolist(), cols.tolist()))

    def count(self):
        """Number of set bits."""
        return int(np.unpackbits(np.ascontiguousarray(self.data).view(np.uint8)).sum())

    def digest(self):
        """Content hash over dimensions and bits; the name is not included."""
        h = hashlib.sha256(f"{self.rows}x{self.cols}:".encode())
        h.update(self.data.tobytes())
        return h.hexdigest()

    # --- Python protocol ---

    def __eq__(self, other):
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return equals(self, other)

    def __hash__(self):
        return hash(self.digest())

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<{type(self).__name__}{label} {self.rows}x{self.cols} bits={self.count()}>"


class BitVector(BitMatrix):
    """A ``1 x cols`` row vector; accepted wherever a one-row BitMatrix is."""
    __slots__ = ()

    def __init__(self, cols, data=None, name=None):
        super().__init__(1, cols, data, name=name)

    @classmethod
    def _rebuild(cls, rows, cols, data, name):
        return cls(cols, data, name=name)

    @classmethod
    def from_indices(cls, cols, indices, name=None):
        bits = np.zeros(cols, dtype=bool)
        for j in indices:
            if not 0 <= j < cols:
                raise IndexOutOfRange(f"index {j} outside vector of {cols}")
            bits[j] = True
        return cls(cols, _pack(bits.reshape(1, -1)), name=name)


def _result(template, rows, cols, data):
    """Wraps kernel output, keeping vectors as vectors; padding is asserted clean."""
    if __debug__ and rows and cols:
        assert not np.any(data & ~_row_mask(cols)), "kernel left stray padding bits"
    if rows == 1 and isinstance(template, BitVector):
        return BitVector(cols, data)
    return BitMatrix(rows, cols, data)


def add(a, b):
    """Element-wise OR of two equally shaped matrices."""
    _check_shape(a.shape == b.shape, "add",
                 f"shape mismatch {a.rows}x{a.cols} vs {b.rows}x{b.cols}")
    return _result(a, a.rows, a.cols, np.bitwise_or(a.data, b.data))


def mul(a, b):
    """
    Boolean product ``a x b``.

    Row ``i`` of the result is the OR of the rows ``k`` of ``b`` for every set
    bit ``k`` in row ``i`` of ``a``.
    """
    _check_shape(a.cols == b.rows, "mul",
                 f"inner dimension mismatch {a.rows}x{a.cols} vs {b.rows}x{b.cols}")
    out = np.zeros((a.rows, words_for(b.cols)), dtype=WORD)
    if a.rows and b.cols:
        selectors = a.to_bool()
        for i in range(a.rows):
            ks = np.flatnonzero(selectors[i])
            if ks.size:
                out[i] = np.bitwise_or.reduce(b.data[ks], axis=0)
    return _result(a, a.rows, b.cols, out)


def transpose(a):
    return BitMatrix.from_bool(a.to_bool().T)


def negate(a):
    """Flips every in-range bit; padding stays zero."""
    data = np.bitwise_and(np.invert(a.data), _row_mask(a.cols))
    return _result(a, a.rows, a.cols, data)


def add_identity(a):
    _check_shape(a.is_square, "add_identity", f"matrix is not square ({a.rows}x{a.cols})")
    return add(a, BitMatrix.identity(a.rows))


def equals(a, b):
    """True iff dimensions match and every bit matches."""
    return a.shape == b.shape and np.array_equal(a.data, b.data)


def row(a, i):
    """Row ``i`` of ``a`` as a BitVector."""
    if not 0 <= i < a.rows:
        raise IndexOutOfRange(f"row {i} outside matrix with {a.rows} rows")
    return BitVector(a.cols, a.data[i:i + 1])
