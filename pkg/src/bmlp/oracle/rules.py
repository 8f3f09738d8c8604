# -*- coding: utf-8 -*-
"""
Rule programs for the reference evaluator.

Rules are range-restricted clauses over unary and binary predicates with
variables only. Negation is allowed on body literals whose predicate is fully
defined in an earlier stratum.
"""
from dataclasses import dataclass

from ..errors import StratificationError


def _is_variable(term):
    return isinstance(term, str) and term[:1].isupper()


@dataclass(frozen=True)
class Literal:
    predicate: str
    args: tuple
    negated: bool = False

    def __post_init__(self):
        if len(self.args) not in (1, 2):
            raise ValueError(f"{self.predicate}: arity must be 1 or 2")
        if not all(_is_variable(a) for a in self.args):
            raise ValueError(f"{self.predicate}{self.args}: arguments must be variables")

    def __str__(self):
        prefix = "not " if self.negated else ""
        return f"{prefix}{self.predicate}({','.join(self.args)})"


@dataclass(frozen=True)
class Rule:
    head: Literal
    body: tuple

    def __post_init__(self):
        if self.head.negated:
            raise ValueError("rule heads cannot be negated")
        positive = {a for lit in self.body if not lit.negated for a in lit.args}
        for lit in (self.head, *(lit for lit in self.body if lit.negated)):
            missing = set(lit.args) - positive
            if missing:
                raise ValueError(f"{self}: variables {sorted(missing)} not bound by a positive literal")

    def __str__(self):
        return f"{self.head} <- {', '.join(map(str, self.body))}."


def rule(head, *body):
    """Shorthand: ``rule(("path", "X", "Y"), ("edge", "X", "Z"), ("path", "Z", "Y"))``.

    A body entry whose first element is ``"not"`` is negated.
    """
    def literal(parts, negated=False):
        if parts[0] == "not":
            return literal(parts[1:], negated=True)
        return Literal(parts[0], tuple(parts[1:]), negated)
    return Rule(literal(head), tuple(literal(parts) for parts in body))


class RuleProgram:
    """
    Rules grouped into strata, evaluated in order.

    Raises:
        StratificationError: If a negated literal refers to a predicate defined
            in the same or a later stratum.
    """

    def __init__(self, strata):
        self.strata = tuple(tuple(s) for s in strata)
        last_defined = {}
        for k, stratum in enumerate(self.strata):
            for r in stratum:
                last_defined[r.head.predicate] = k
        for k, stratum in enumerate(self.strata):
            for r in stratum:
                for lit in r.body:
                    if lit.negated and last_defined.get(lit.predicate, -1) >= k:
                        raise StratificationError(
                            f"'{r}' negates {lit.predicate}, which is not complete before stratum {k}")

    @property
    def heads(self):
        return sorted({r.head.predicate for s in self.strata for r in s})

    @classmethod
    def from_rules(cls, rules):
        """Assigns each predicate the lowest stratum its dependencies allow."""
        rules = list(rules)
        heads = {r.head.predicate for r in rules}
        level = dict.fromkeys(heads, 0)
        for _ in range(len(heads) + 1):
            changed = False
            for r in rules:
                for lit in r.body:
                    if lit.predicate not in heads:
                        continue
                    needed = level[lit.predicate] + (1 if lit.negated else 0)
                    if level[r.head.predicate] < needed:
                        level[r.head.predicate] = needed
                        changed = True
            if not changed:
                break
        else:
            raise StratificationError("negation through recursion: the program has no stratification")
        strata = [[] for _ in range(max(level.values(), default=-1) + 1)]
        for r in rules:
            strata[level[r.head.predicate]].append(r)
        return cls(strata)

    def __str__(self):
        return "\n\n".join("\n".join(map(str, s)) for s in self.strata)


def transitive_program(r1="edge", r2="path"):
    """``r2`` as the transitive closure of ``r1``."""
    return RuleProgram.from_rules([
        rule((r2, "X", "Y"), (r1, "X", "Y")),
        rule((r2, "X", "Y"), (r1, "X", "Z"), (r2, "Z", "Y")),
    ])


def is_foreign_program(type_name="location"):
    """Locations that are not indirectly part of one another."""
    return RuleProgram.from_rules([
        rule(("hasPlace", "X", "Y"), ("contains", "X", "Y")),
        rule(("hasPlace", "X", "Y"), ("contains", "X", "Z"), ("hasPlace", "Z", "Y")),
        rule(("indirectlyPartOf", "X", "Y"), ("adjoins", "X", "Y")),
        rule(("indirectlyPartOf", "X", "Y"), ("adjoins", "Y", "X")),
        rule(("indirectlyPartOf", "X", "Y"), ("hasPlace", "Z", "X"), ("indirectlyPartOf", "Z", "Y")),
        rule(("isForeign", "X", "Y"), (type_name, "X"), (type_name, "Y"),
             ("not", "indirectlyPartOf", "X", "Y")),
    ])
