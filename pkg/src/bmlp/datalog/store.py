# -*- coding: utf-8 -*-
"""
Bit-exact text persistence for matrices (format ``bmlp-matrix v1``).

    bmlp-matrix v1
    name: edge
    dim: 3 3
    universe: a b c
    row 0: 2
    row 1: 4
    row 2: 0

Each row line holds the lowercase hex of the row integer, bit j = column j.
The universe lists the column constants in index order.
"""
import logging
import os
import re
import tempfile
from pathlib import Path

from ..errors import MatrixFormatError
from ..matrix.bitmat import BitMatrix, BitVector
from .symbols import SymbolTable

logger = logging.getLogger(__name__)

MAGIC = "bmlp-matrix v1"

_NAME = re.compile(r"name: (\S+)")
_DIM = re.compile(r"dim: (\d+) (\d+)")
_ROW = re.compile(r"row (\d+): ([0-9a-f]+)")


def dumps_matrix(m, st):
    """Serializes ``m`` with the column universe of ``st``."""
    if len(st) != m.cols:
        raise ValueError(f"universe of {len(st)} constants does not match {m.cols} columns")
    lines = [
        MAGIC,
        f"name: {m.name or 'matrix'}",
        f"dim: {m.rows} {m.cols}",
        "universe:" + "".join(f" {c}" for c in st.universe),
    ]
    lines.extend(f"row {i}: {m.row_int(i):x}" for i in range(m.rows))
    return "\n".join(lines) + "\n"


def loads_matrix(text):
    """
    Parses ``bmlp-matrix v1`` text.

    Returns:
        tuple: ``(BitMatrix, SymbolTable)``. One-row matrices with more than one
        column come back as BitVector.

    Raises:
        MatrixFormatError: On any deviation from the format, with the 1-based
            line number.
    """
    lines = text.splitlines()

    def line_at(k):
        if k >= len(lines):
            raise MatrixFormatError("unexpected end of file", k + 1)
        return lines[k]

    if line_at(0) != MAGIC:
        raise MatrixFormatError(f"expected header '{MAGIC}'", 1)
    name_match = _NAME.fullmatch(line_at(1))
    if not name_match:
        raise MatrixFormatError("expected 'name: <identifier>'", 2)
    dim_match = _DIM.fullmatch(line_at(2))
    if not dim_match:
        raise MatrixFormatError("expected 'dim: <rows> <cols>'", 3)
    rows, cols = int(dim_match.group(1)), int(dim_match.group(2))
    universe_line = line_at(3)
    if not (universe_line == "universe:" or universe_line.startswith("universe: ")):
        raise MatrixFormatError("expected 'universe: <constants>'", 4)
    universe = universe_line[len("universe:"):].split()
    if len(universe) != cols:
        raise MatrixFormatError(f"universe lists {len(universe)} constants for {cols} columns", 4)
    try:
        st = SymbolTable(universe)
    except ValueError as e:
        raise MatrixFormatError(str(e), 4) from None

    values = []
    for i in range(rows):
        k = 4 + i
        if k >= len(lines):
            raise MatrixFormatError(f"row count mismatch: dim says {rows}, found {i}", k + 1)
        row_match = _ROW.fullmatch(lines[k])
        if not row_match:
            raise MatrixFormatError(f"malformed row line {lines[k]!r}", k + 1)
        if int(row_match.group(1)) != i:
            raise MatrixFormatError(f"expected row {i}, found row {row_match.group(1)}", k + 1)
        value = int(row_match.group(2), 16)
        if value.bit_length() > cols:
            raise MatrixFormatError(f"row {i} sets bits beyond column {cols - 1}", k + 1)
        values.append(value)
    trailing = [k for k in range(4 + rows, len(lines)) if lines[k].strip()]
    if trailing:
        raise MatrixFormatError(f"row count mismatch: dim says {rows}, found more", trailing[0] + 1)

    name = name_match.group(1)
    m = BitMatrix.from_row_ints(cols, values, name=name)
    if rows == 1 and cols != 1:
        m = BitVector(cols, m.data, name=name)
    return m, st


def save_matrix(m, st, path):
    """Writes ``m`` to ``path`` atomically (temp file, then rename)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(dumps_matrix(m, st))
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
    logger.debug("saved %r to %s", m, path)


def load_matrix(path):
    """Reads a matrix file. See :func:`loads_matrix`."""
    path = Path(path)
    m, st = loads_matrix(path.read_text(encoding="utf-8"))
    logger.debug("loaded %r from %s", m, path)
    return m, st
