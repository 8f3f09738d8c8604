# -*- coding: utf-8 -*-
"""
Run configuration shared by the command-line front end and the explorer.
"""
import logging
import os
from dataclasses import dataclass
from pathlib import Path

from .benchgen.bench import DEFAULT_TIMEOUT

WORKDIR_ENV = "BMLP_WORKDIR"
DEFAULT_WORKDIR = "bmlp_temp"
LOG_FORMAT = "[%(levelname)s] %(name)s: %(message)s"


@dataclass(frozen=True)
class CliConfig:
    """
    Settings resolved from flags and the environment.

    The cache directory is ``--workdir`` if given, else ``$BMLP_WORKDIR``, else
    ``./bmlp_temp``.
    """
    workdir: Path = Path(DEFAULT_WORKDIR)
    use_cache: bool = True
    verbose: bool = False
    timeout: float = DEFAULT_TIMEOUT

    @classmethod
    def resolve(cls, workdir=None, no_cache=False, verbose=False, timeout=None, environ=None):
        environ = os.environ if environ is None else environ
        chosen = workdir or environ.get(WORKDIR_ENV) or DEFAULT_WORKDIR
        if timeout is not None and timeout <= 0:
            raise ValueError(f"timeout must be positive, got {timeout}")
        return cls(
            workdir=Path(chosen),
            use_cache=not no_cache,
            verbose=verbose,
            timeout=DEFAULT_TIMEOUT if timeout is None else timeout,
        )

    def prepare(self):
        """Creates the cache directory when the cache is in use."""
        if self.use_cache:
            self.workdir.mkdir(parents=True, exist_ok=True)
        return self


def configure_logging(verbose=False):
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING, format=LOG_FORMAT)
