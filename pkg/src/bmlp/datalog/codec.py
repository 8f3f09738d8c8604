# -*- coding: utf-8 -*-
"""
Conversion between fact bases and boolean matrices.

``compile`` encodes one binary predicate as an ``n x n`` matrix over a symbol
table; ``to_facts`` decodes it back. ``select`` builds the query vector for a
partially grounded query, and ``format_matrix`` renders either for people.
"""
import logging

import numpy as np

from ..errors import _check_shape
from ..matrix.bitmat import BitMatrix, BitVector
from .facts import Fact, FactBase

logger = logging.getLogger(__name__)


def compile(fb, predicate, st):
    """
    Encodes the binary ``predicate`` facts of ``fb`` as an ``n x n`` matrix.

    Bit ``(i, j)`` is set iff ``predicate(c_i, c_j)`` is in ``fb``.

    Raises:
        UnknownConstantError: If a fact argument is not in ``st``.
    """
    n = len(st)
    bits = np.zeros((n, n), dtype=bool)
    pairs = fb.binary(predicate)
    if pairs:
        rows = [st.index(a) for a, _ in pairs]
        cols = [st.index(b) for _, b in pairs]
        bits[rows, cols] = True
    matrix = BitMatrix.from_bool(bits, name=predicate)
    logger.debug("compiled %s: %dx%d, %d bits", predicate, n, n, len(pairs))
    return matrix


def to_facts(m, predicate, st):
    """Decodes ``m`` into ``predicate(c_i, c_j)`` facts in row-major order."""
    n = len(st)
    _check_shape(m.shape == (n, n), "to_facts",
                 f"matrix is {m.rows}x{m.cols} but the universe has {n} constants")
    universe = st.universe
    return FactBase(Fact(predicate, (universe[i], universe[j])) for i, j in m.pairs())


def select(constants, st, name="select"):
    """Encodes ``constants`` as a ``1 x n`` query vector."""
    return BitVector.from_indices(len(st), [st.index(c) for c in constants], name=name)


def vector_constants(v, st):
    """Constants whose bit is set in ``v``, in index order."""
    _check_shape(v.rows == 1 and v.cols == len(st), "vector_constants",
                 f"expected a 1x{len(st)} vector, got {v.rows}x{v.cols}")
    return [st.constant(j) for j in row_indices(v)]


def vector_to_facts(v, predicate, st, source):
    """Decodes an smp result for source ``source`` into ``predicate(source, c_j)`` facts."""
    st.index(source)
    return FactBase(Fact(predicate, (source, c)) for c in vector_constants(v, st))


def row_indices(v):
    return np.flatnonzero(v.to_bool()[0]).tolist()


def format_matrix(m, st):
    """
    Renders a matrix or vector one row per line with the decoded facts.

    Example::

        edge 3x3
        a |0 1 0| edge(a, b).
        b |0 0 1| edge(b, c).
        c |0 0 0|
    """
    n = len(st)
    _check_shape(m.cols == n and m.rows in (1, n), "format_matrix",
                 f"matrix is {m.rows}x{m.cols} but the universe has {n} constants")
    name = m.name or "matrix"
    square = m.rows == n and not isinstance(m, BitVector)
    labels = list(st.universe) if square else [name]
    width = max(len(label) for label in labels)
    lines = [f"{name} {m.rows}x{m.cols}"]
    for i, bits in enumerate(m.to_rows()):
        line = f"{labels[i]:<{width}} |{' '.join(map(str, bits))}|"
        if square:
            facts = [f"{name}({labels[i]}, {st.constant(j)})." for j, bit in enumerate(bits) if bit]
        else:
            facts = [f"{name}({st.constant(j)})." for j, bit in enumerate(bits) if bit]
        if facts:
            line += " " + " ".join(facts)
        lines.append(line)
    return "\n".join(lines)
