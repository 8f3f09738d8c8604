# -*- coding: utf-8 -*-
"""
The bijective mapping between constants and matrix indices.
"""
import logging

from ..errors import EmptyUniverseError, UnknownConstantError

logger = logging.getLogger(__name__)


class SymbolTable:
    """
    A fixed, totally ordered universe of constants.

    ``index(universe[k]) == k`` for every ``k``. The table never changes once
    built. ``type_name`` is descriptive only and takes no part in equality.
    """
    __slots__ = ("_universe", "_index", "type_name")

    def __init__(self, universe, type_name=None):
        universe = tuple(universe)
        index = {c: k for k, c in enumerate(universe)}
        if len(index) != len(universe):
            raise ValueError("universe contains duplicate constants")
        self._universe = universe
        self._index = index
        self.type_name = type_name

    @property
    def universe(self):
        return self._universe

    def __len__(self):
        return len(self._universe)

    def __contains__(self, constant):
        return constant in self._index

    def __eq__(self, other):
        if not isinstance(other, SymbolTable):
            return NotImplemented
        return self._universe == other._universe

    def __hash__(self):
        return hash(self._universe)

    def __repr__(self):
        return f"<SymbolTable {self.type_name} n={len(self)}>"

    def index(self, constant):
        try:
            return self._index[constant]
        except KeyError:
            raise UnknownConstantError(constant, f"not in the {self.type_name or 'matrix'} universe") from None

    def constant(self, i):
        return self._universe[i]


def build_symbols(fb, type_name):
    """
    Builds the symbol table of a fact base.

    The universe is the arguments of the unary ``type_name`` facts in order of
    first appearance.

    Raises:
        EmptyUniverseError: If there are no ``type_name`` facts.
        UnknownConstantError: If a binary fact mentions an untyped constant.
    """
    universe = list(dict.fromkeys(fb.unary(type_name)))
    if not universe:
        raise EmptyUniverseError(f"no '{type_name}' facts: the universe is empty")
    table = SymbolTable(universe, type_name)
    for fact in fb:
        if fact.arity != 2:
            continue
        for arg in fact.args:
            if arg not in table:
                raise UnknownConstantError(arg, f"in {fact}, not declared as {type_name}({arg})")
    logger.debug("built %s universe of %d constants", type_name, len(table))
    return table
