# -*- coding: utf-8 -*-
"""
Pipelines: named compositions of matrix operators and closure modules.

A pipeline file holds one step per line::

    M3 = rms(contains)
    MT3 = transpose(M3)
    isForeign = negate(M5)

Inputs name either the output of an earlier step or a binary predicate of the
fact base, which is compiled on first use. ``base(p)`` binds a compiled
relation explicitly (and yields a zero matrix if ``p`` has no facts);
``select(c1, c2, ...)`` builds a query vector for ``smp``. ``%`` starts a
comment.
"""
import logging
from dataclasses import dataclass

from lark import Lark
from lark.exceptions import UnexpectedInput

from ..datalog.codec import compile, select
from ..errors import PipelineError, ShapeError
from ..matrix.bitmat import add, add_identity, mul, negate, transpose
from .modules import rms, smp

logger = logging.getLogger(__name__)

# Operator table. "inputs" is the number of matrix inputs (-1: any number of
# constants); "cached" marks steps worth persisting between runs.
OPERATIONS = {
    "base": {"inputs": 1, "args": "predicate", "cached": False},
    "select": {"inputs": -1, "args": "constants", "cached": False},
    "rms": {"inputs": 1, "args": "matrices", "cached": True},
    "smp": {"inputs": 2, "args": "matrices", "cached": True},
    "add": {"inputs": 2, "args": "matrices", "cached": False},
    "mul": {"inputs": 2, "args": "matrices", "cached": True},
    "transpose": {"inputs": 1, "args": "matrices", "cached": False},
    "negate": {"inputs": 1, "args": "matrices", "cached": False},
    "addI": {"inputs": 1, "args": "matrices", "cached": False},
}

ALIASES = {"compile": "base", "add_identity": "addI"}

STEP_GRAMMAR = r"""
    step: NAME "=" NAME "(" [NAME ("," NAME)*] ")"
    NAME: /[A-Za-z_][A-Za-z0-9_]*/

    %import common.WS_INLINE
    %ignore WS_INLINE
"""

_parser = Lark(STEP_GRAMMAR, start="step", parser="lalr")

IS_FOREIGN_PIPELINE = """\
% isForeign(X,Y) <- location(X), location(Y), not indirectlyPartOf(X,Y).
M3 = rms(contains)
MT3 = transpose(M3)
MIT3 = addI(MT3)
MT2 = transpose(adjoins)
M4 = add(adjoins, MT2)
M5 = mul(MIT3, M4)
isForeign = negate(M5)
"""


@dataclass(frozen=True)
class Step:
    output: str
    op: str
    inputs: tuple
    line: int = 0

    def __str__(self):
        return f"{self.output} = {self.op}({', '.join(self.inputs)})"


class Pipeline:
    """
    An ordered list of steps with unique output names.

    Raises:
        PipelineError: For unknown operators, wrong input counts or duplicate
            output names.
    """

    def __init__(self, steps):
        self.steps = tuple(steps)
        seen = set()
        for step in self.steps:
            definition = OPERATIONS.get(step.op)
            if definition is None:
                raise PipelineError(f"unknown operation '{step.op}'", step.output)
            expected = definition["inputs"]
            if expected >= 0 and len(step.inputs) != expected:
                raise PipelineError(
                    f"{step.op} takes {expected} input(s), got {len(step.inputs)}", step.output)
            if step.output in seen:
                raise PipelineError("output name already defined", step.output)
            seen.add(step.output)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    @property
    def outputs(self):
        return [step.output for step in self.steps]

    def __str__(self):
        return "\n".join(map(str, self.steps))


def parse_pipeline(text):
    """Parses pipeline-file text into a Pipeline."""
    steps = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        try:
            tree = _parser.parse(line)
        except UnexpectedInput as e:
            raise PipelineError(f"line {lineno}, column {e.column}: cannot parse '{line}'") from None
        output, op, *inputs = (str(token) for token in tree.children if token is not None)
        op = ALIASES.get(op, op)
        steps.append(Step(output, op, tuple(inputs), lineno))
    return Pipeline(steps)


def is_foreign_pipeline():
    """The isForeign composition over ``contains`` and ``adjoins``."""
    return parse_pipeline(IS_FOREIGN_PIPELINE)


def run_pipeline(p, fb, st, cache=None, deadline=None):
    """
    Executes ``p`` top to bottom over the relations of ``fb``.

    Args:
        p (Pipeline): The steps to run.
        fb (FactBase): Source of the base relations.
        st (SymbolTable): Universe shared by every matrix.
        cache (MatrixCache, optional): Reuses rms/smp/mul results across runs.
        deadline (float, optional): Passed through to the closure modules.

    Returns:
        dict: Every named result, compiled base relations included, in the
        order they were produced.

    Raises:
        PipelineError: When an input names nothing known, or an output
            reuses the name of a binary predicate of ``fb``.
        ShapeError: Re-raised with the failing step's name.
    """
    results = {}
    predicates = {f.predicate for f in fb if f.arity == 2}
    for step in p:
        if step.output in predicates and (step.op, step.inputs) != ("base", (step.output,)):
            raise PipelineError(f"output name collides with relation '{step.output}'", step.output)

    def resolve(name, step):
        if name in results:
            return results[name]
        if name in predicates:
            logger.debug("compiling base relation %s for step %s", name, step.output)
            results[name] = compile(fb, name, st)
            return results[name]
        raise PipelineError(f"unknown input '{name}'", step.output)

    for step in p:
        if step.output in results:
            raise PipelineError(f"output name collides with relation '{step.output}'", step.output)
        logger.info("pipeline step %s", step)
        try:
            value = _execute(step, resolve, fb, st, cache, deadline)
        except ShapeError as e:
            raise e.at_step(step.output) from None
        results[step.output] = value.with_name(step.output)
    return results


def _execute(step, resolve, fb, st, cache, deadline):
    if step.op == "base":
        return compile(fb, step.inputs[0], st)
    if step.op == "select":
        return select(step.inputs, st, name=step.output)

    inputs = [resolve(name, step) for name in step.inputs]
    key = None
    if cache is not None and OPERATIONS[step.op]["cached"]:
        key = cache.key(step.op, inputs)
        hit = cache.get(key)
        if hit is not None:
            return hit

    if step.op == "rms":
        value = rms(inputs[0], deadline=deadline).closure
    elif step.op == "smp":
        value = smp(inputs[0], inputs[1], deadline=deadline).reachable
    elif step.op == "add":
        value = add(*inputs)
    elif step.op == "mul":
        value = mul(*inputs)
    elif step.op == "transpose":
        value = transpose(inputs[0])
    elif step.op == "negate":
        value = negate(inputs[0])
    else:
        value = add_identity(inputs[0])

    if key is not None:
        cache.put(key, value, st)
    return value
