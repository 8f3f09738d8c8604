# -*- coding: utf-8 -*-
"""
Reference closures used to cross-check the closure modules.
"""
from ..errors import _check_shape
from ..matrix.bitmat import BitMatrix, add, mul


def floyd_warshall_closure(n, pairs):
    """
    Warshall's boolean transitive closure over ``n`` nodes.

    Rows are Python integers used as bitsets. The result contains ``(i, j)``
    iff ``j`` is reachable from ``i`` by a path of length one or more, so
    ``(i, i)`` appears only for nodes on a cycle.

    Returns:
        set: The closure as ``(i, j)`` pairs.
    """
    reach = [0] * n
    for i, j in pairs:
        reach[i] |= 1 << j
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if reach[i] & bit:
                reach[i] |= reach[k]
    return {(i, j) for i in range(n) for j in range(n) if reach[i] >> j & 1}


def naive_closure(r):
    """``R + R^2 + ... + R^n`` accumulated one power at a time."""
    _check_shape(r.is_square, "naive_closure", f"matrix is not square ({r.rows}x{r.cols})")
    total = power = BitMatrix(r.rows, r.cols, r.data)
    for _ in range(1, r.rows):
        power = mul(power, r)
        total = add(total, power)
    return total
