# -*- coding: utf-8 -*-
"""
Ground unary and binary facts, and the parser for ``*.pl`` style fact files.

A facts file is a sequence of statements ``ident(ident).`` or
``ident(ident,ident).`` separated by whitespace. ``%`` starts a line comment.
"""
import logging
import re
from dataclasses import dataclass
from pathlib import Path

from lark import Lark, Token
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from ..errors import FactSyntaxError, UnsupportedArityError, VariableNotAllowedError

logger = logging.getLogger(__name__)

IDENTIFIER = re.compile(r"[a-z][A-Za-z0-9_]*")

FACTS_GRAMMAR = r"""
    start: statement*
    statement: IDENT "(" args ")" "."
    args: _term ("," _term)*
    _term: IDENT | VARIABLE

    IDENT: /[a-z][A-Za-z0-9_]*/
    VARIABLE: /[A-Z_][A-Za-z0-9_]*/
    COMMENT: /%[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

_parser = Lark(FACTS_GRAMMAR, parser="lalr", propagate_positions=True)


def is_identifier(text):
    return isinstance(text, str) and IDENTIFIER.fullmatch(text) is not None


@dataclass(frozen=True, order=True)
class Fact:
    """A ground fact ``predicate(arg)`` or ``predicate(arg1, arg2)``."""
    predicate: str
    args: tuple

    def __post_init__(self):
        if not is_identifier(self.predicate):
            raise ValueError(f"invalid predicate name {self.predicate!r}")
        if len(self.args) not in (1, 2):
            raise ValueError(f"unsupported arity {len(self.args)} for {self.predicate}")
        for arg in self.args:
            if not is_identifier(arg):
                raise ValueError(f"invalid constant {arg!r} in {self.predicate}")

    @property
    def arity(self):
        return len(self.args)

    def __str__(self):
        return f"{self.predicate}({','.join(self.args)})"


class FactBase:
    """
    An ordered set of ground facts.

    Iteration follows first insertion, which is what gives symbol tables their
    deterministic index order. Equality ignores order and source.
    """

    def __init__(self, facts=(), source=None):
        self._facts = dict.fromkeys(facts)
        self.source = source

    @property
    def facts(self):
        return frozenset(self._facts)

    def __iter__(self):
        return iter(self._facts)

    def __len__(self):
        return len(self._facts)

    def __contains__(self, fact):
        return fact in self._facts

    def __eq__(self, other):
        if not isinstance(other, FactBase):
            return NotImplemented
        return self._facts.keys() == other._facts.keys()

    def __repr__(self):
        return f"<FactBase {len(self)} facts{f' from {self.source}' if self.source else ''}>"

    def union(self, other):
        return FactBase([*self, *other], source=self.source)

    def with_predicate(self, predicate):
        """Facts of one predicate, in insertion order."""
        return FactBase((f for f in self if f.predicate == predicate), source=self.source)

    def unary(self, predicate):
        return [f.args[0] for f in self if f.predicate == predicate and f.arity == 1]

    def binary(self, predicate):
        return [f.args for f in self if f.predicate == predicate and f.arity == 2]

    def predicates(self):
        return sorted({(f.predicate, f.arity) for f in self})


def parse_facts(text, source=None):
    """
    Parses fact-file text into a FactBase.

    Args:
        text (str): The file contents.
        source (str, optional): Path recorded on the result for diagnostics.

    Returns:
        FactBase: The facts in order of first appearance, duplicates collapsed.

    Raises:
        FactSyntaxError: On malformed input, with 1-based line and column.
        UnsupportedArityError: For facts with more than two arguments.
        VariableNotAllowedError: For uppercase-initial arguments.
    """
    try:
        tree = _parser.parse(text)
    except UnexpectedInput as e:
        raise _syntax_error(e, text) from None

    facts = []
    for statement in tree.children:
        predicate, args = statement.children
        terms = args.children
        if len(terms) > 2:
            raise UnsupportedArityError(
                f"{predicate}/{len(terms)}: only unary and binary facts are supported",
                predicate.line, predicate.column)
        for term in terms:
            if term.type == "VARIABLE":
                raise VariableNotAllowedError(
                    f"variable '{term}' in {predicate}: facts must be ground",
                    term.line, term.column)
        facts.append(Fact(str(predicate), tuple(str(t) for t in terms)))

    base = FactBase(facts, source=source)
    logger.debug("parsed %d facts (%d unique) from %s", len(facts), len(base), source or "<text>")
    return base


def read_facts(path):
    """Reads and parses a UTF-8 facts file."""
    path = Path(path)
    return parse_facts(path.read_text(encoding="utf-8"), source=str(path))


def write_facts(fb):
    """Serializes facts one per line, in stored order."""
    return "".join(f"{fact}.\n" for fact in fb)


def _syntax_error(e, text):
    if isinstance(e, UnexpectedEOF):
        lines = text.splitlines() or [""]
        return FactSyntaxError("unexpected end of input", len(lines), len(lines[-1]) + 1)
    if isinstance(e, UnexpectedCharacters):
        message = f"unexpected character {e.char!r}"
    elif isinstance(e, UnexpectedToken) and isinstance(e.token, Token) and e.token.type == "$END":
        lines = text.splitlines() or [""]
        return FactSyntaxError("unexpected end of input", len(lines), len(lines[-1]) + 1)
    elif isinstance(e, UnexpectedToken):
        message = f"unexpected {e.token!s}"
    else:
        message = "syntax error"
    return FactSyntaxError(message, e.line, e.column)
