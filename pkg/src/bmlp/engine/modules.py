# -*- coding: utf-8 -*-
"""
The two closure modules for the linear recursive program

    r2(X,Y) <- r1(X,Y).
    r2(X,Y) <- r1(X,Z), r2(Z,Y).

``rms`` derives every ``r2`` fact by repeated squaring of ``I + R1``. ``smp``
derives only the ``r2(c, Y)`` facts for the sources ``c`` encoded in a query
vector. Both stop on exact equality of consecutive iterates and end with one
multiplication by ``R1``, so the identity is never added implicitly.
"""
import logging
import time
from dataclasses import dataclass

from ..errors import EvaluationTimeout, _check_shape
from ..matrix.bitmat import BitMatrix, BitVector, add, add_identity, equals, mul

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RmsResult:
    closure: BitMatrix
    iterations: int


@dataclass(frozen=True)
class SmpResult:
    reachable: BitVector
    iterations: int


def _check_deadline(deadline, module, iterations):
    if deadline is not None and time.monotonic() > deadline:
        raise EvaluationTimeout(module, iterations)


def rms(r1, deadline=None, name=None):
    """
    Transitive closure of ``r1`` by repeated matrix squaring.

    Args:
        r1 (BitMatrix): Square matrix of the base relation.
        deadline (float, optional): ``time.monotonic()`` value after which the
            loop gives up with EvaluationTimeout.
        name (str, optional): Name of the closure matrix.

    Returns:
        RmsResult: ``closure[i, j]`` is set iff ``j`` is reachable from ``i``
        by a path of length one or more.
    """
    _check_shape(r1.is_square, "rms", f"matrix is not square ({r1.rows}x{r1.cols})")
    r = add_identity(r1)
    iterations = 0
    while True:
        iterations += 1
        squared = mul(r, r)
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug("rms pass %d: %d bits", iterations, squared.count())
        if equals(squared, r):
            break
        r = squared
        _check_deadline(deadline, "rms", iterations)
    closure = mul(squared, r1).with_name(name or r1.name)
    logger.info("rms %s: %d passes, %d facts", r1.name or "", iterations, closure.count())
    return RmsResult(closure, iterations)


def smp(v, r1, deadline=None, name=None):
    """
    Closure rows selected by the query vector ``v``.

    Args:
        v (BitVector): ``1 x n`` vector of source constants.
        r1 (BitMatrix): ``n x n`` matrix of the base relation.

    Returns:
        SmpResult: bit ``j`` of ``reachable`` is set iff ``c_j`` is reachable
        by a path of length one or more from some source in ``v``.
    """
    _check_shape(r1.is_square, "smp", f"matrix is not square ({r1.rows}x{r1.cols})")
    _check_shape(v.rows == 1 and v.cols == r1.rows, "smp",
                 f"vector is {v.rows}x{v.cols} but matrix is {r1.rows}x{r1.cols}")
    current = BitVector(v.cols, v.data)
    iterations = 0
    while True:
        iterations += 1
        expanded = add(current, mul(current, r1))
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug("smp pass %d: %d bits", iterations, expanded.count())
        if equals(expanded, current):
            break
        current = expanded
        _check_deadline(deadline, "smp", iterations)
    reachable = mul(expanded, r1).with_name(name or v.name)
    logger.info("smp %s: %d passes, %d facts", r1.name or "", iterations, reachable.count())
    return SmpResult(reachable, iterations)
