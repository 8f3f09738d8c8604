# -*- coding: utf-8 -*-
"""
Exception hierarchy shared by every bmlp sub-package.

Each exception carries an ``exit_code`` so the command-line front end can map
failures onto its exit-code taxonomy without inspecting messages.
"""


class BmlpError(Exception):
    """Base class for all bmlp failures."""
    exit_code = 1

    def __init__(self, message):
        self.message = message
        super().__init__(message)


class ShapeError(BmlpError, ValueError):
    """Raised when operand dimensions do not fit an operation."""
    exit_code = 4

    def __init__(self, operation, detail, step=None):
        self.operation = operation
        self.detail = detail
        self.step = step
        prefix = f"step '{step}': " if step else ""
        super().__init__(f"{prefix}{operation}: {detail}")

    def at_step(self, step):
        """Returns a copy of this error tagged with the failing pipeline step."""
        return ShapeError(self.operation, self.detail, step=step)


class IndexOutOfRange(BmlpError, IndexError):
    exit_code = 4


class FactSyntaxError(BmlpError):
    """Raised by the facts parser; carries the 1-based position of the problem."""
    exit_code = 2

    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class UnsupportedArityError(FactSyntaxError):
    pass


class VariableNotAllowedError(FactSyntaxError):
    pass


class UnknownConstantError(BmlpError, KeyError):
    exit_code = 3

    def __init__(self, constant, context=""):
        self.constant = constant
        suffix = f" ({context})" if context else ""
        super().__init__(f"unknown constant '{constant}'{suffix}")

    def __str__(self):
        return self.message


class EmptyUniverseError(BmlpError):
    exit_code = 3


class MatrixFormatError(BmlpError):
    exit_code = 2

    def __init__(self, message, line, source=None):
        self.line = line
        self.source = source
        where = f"{source}, line {line}" if source else f"line {line}"
        super().__init__(f"{where}: {message}")


class PipelineError(BmlpError):
    exit_code = 4

    def __init__(self, message, step=None):
        self.step = step
        prefix = f"step '{step}': " if step else ""
        super().__init__(f"{prefix}{message}")


class StratificationError(BmlpError):
    exit_code = 4


class IngestionError(BmlpError):
    exit_code = 2

    def __init__(self, message, line, source=None):
        self.line = line
        self.source = source
        where = f"{source}, line {line}" if source else f"line {line}"
        super().__init__(f"{where}: {message}")


class EvaluationTimeout(BmlpError):
    exit_code = 5

    def __init__(self, module, iterations):
        self.module = module
        self.iterations = iterations
        super().__init__(f"{module} exceeded its deadline after {iterations} passes")


class VerificationError(BmlpError):
    exit_code = 1

    def __init__(self, case, fact, expected):
        self.case = case
        self.fact = fact
        self.expected = expected
        side = "missing" if expected else "unexpected"
        super().__init__(f"case {case}: {side} fact {fact}")


def _check_shape(condition, operation, message):
    """Raises a ShapeError for ``operation`` unless ``condition`` holds."""
    if not condition:
        raise ShapeError(operation, message)
