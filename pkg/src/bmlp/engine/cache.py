# -*- coding: utf-8 -*-
"""
On-disk cache of intermediate matrices.

Entries are keyed by a content hash of the operation and its input matrices,
so a cached result is reused whenever the same step sees the same bits again,
regardless of the names involved.
"""
import hashlib
import logging
from pathlib import Path

from ..datalog.store import load_matrix, save_matrix
from ..errors import MatrixFormatError

logger = logging.getLogger(__name__)


class MatrixCache:
    def __init__(self, workdir):
        self.workdir = Path(workdir)
        self.workdir.mkdir(parents=True, exist_ok=True)
        self.hits = 0
        self.misses = 0

    @staticmethod
    def key(op, inputs):
        h = hashlib.sha256(op.encode())
        for m in inputs:
            h.update(b"|")
            h.update(m.digest().encode())
        return h.hexdigest()

    def path_for(self, key):
        return self.workdir / f"{key}.bmlp"

    def get(self, key):
        """Returns the cached matrix for ``key``, or None."""
        path = self.path_for(key)
        if not path.exists():
            self.misses += 1
            return None
        try:
            m, _ = load_matrix(path)
        except MatrixFormatError as e:
            logger.warning("ignoring corrupt cache entry %s: %s", path.name, e)
            self.misses += 1
            return None
        self.hits += 1
        logger.debug("cache hit %s", key[:12])
        return m

    def put(self, key, m, st):
        save_matrix(m, st, self.path_for(key))
