# -*- coding: utf-8 -*-
"""
Seeded random directed graphs for the DG and DG+partial benchmarks.

Every ordered pair ``(i, j)``, self-loops included, gets one uniform draw from
a Philox counter-based generator, in i-major order. The edge exists iff the
draw is below ``p_t``. For a fixed seed, raising ``p_t`` only ever adds edges.
"""
import logging
from dataclasses import dataclass

import numpy as np

from ..datalog.facts import Fact, FactBase
from ..datalog.symbols import SymbolTable
from ..matrix.bitmat import BitMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GraphGenParams:
    n: int
    p_t: float
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if not 0.0 <= self.p_t <= 1.0:
            raise ValueError(f"p_t must lie in [0, 1], got {self.p_t}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


def node_name(i):
    return f"n_{i}"


def _edge_rows(params):
    """Yields ``(i, bool row)`` for every source node, in generation order."""
    rng = np.random.Generator(np.random.Philox(params.seed))
    for i in range(params.n):
        yield i, rng.random(params.n) < params.p_t


def gen_graph(params, type_name="node", predicate="edge"):
    """Random graph as ``node/1`` and ``edge/2`` facts."""
    names = [node_name(i) for i in range(params.n)]
    facts = [Fact(type_name, (name,)) for name in names]
    for i, edges in _edge_rows(params):
        facts.extend(Fact(predicate, (names[i], names[j])) for j in np.flatnonzero(edges))
    logger.debug("generated %d edges over %d nodes (p_t=%s, seed=%d)",
                 len(facts) - params.n, params.n, params.p_t, params.seed)
    return FactBase(facts)


def gen_matrix(params, type_name="node", predicate="edge"):
    """
    The graph of :func:`gen_graph`, packed straight into a matrix.

    Returns:
        tuple: ``(BitMatrix, SymbolTable)``.
    """
    bits = np.zeros((params.n, params.n), dtype=bool)
    for i, edges in _edge_rows(params):
        bits[i] = edges
    st = SymbolTable([node_name(i) for i in range(params.n)], type_name)
    return BitMatrix.from_bool(bits, name=predicate), st
