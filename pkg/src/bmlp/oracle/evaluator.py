# -*- coding: utf-8 -*-
"""
Semi-naive bottom-up evaluation of stratified rule programs.

This evaluator shares no code with the matrix engine; tests use it as ground
truth for the closure modules and for pipelines.
"""
import logging
from collections import defaultdict

from ..datalog.facts import Fact, FactBase

logger = logging.getLogger(__name__)


class _Store:
    """Relations as tuple sets, with per-position indexes built on demand."""

    def __init__(self, relations=None):
        self.relations = defaultdict(set)
        self._indexes = {}
        for predicate, tuples in (relations or {}).items():
            self.relations[predicate] = set(tuples)

    def add(self, predicate, tuples):
        new = tuples - self.relations[predicate]
        if new:
            self.relations[predicate] |= new
            for key in [k for k in self._indexes if k[0] == predicate]:
                del self._indexes[key]
        return new

    def lookup(self, predicate, position, value):
        key = (predicate, position)
        index = self._indexes.get(key)
        if index is None:
            index = defaultdict(list)
            for t in self.relations[predicate]:
                index[t[position]].append(t)
            self._indexes[key] = index
        return index.get(value, ())

    def __contains__(self, item):
        predicate, t = item
        return t in self.relations.get(predicate, ())


def _match(literal, store, bindings):
    """Extends every binding with the tuples of ``literal`` that agree with it."""
    out = []
    for binding in bindings:
        bound = [(k, binding[a]) for k, a in enumerate(literal.args) if a in binding]
        if bound:
            candidates = store.lookup(literal.predicate, *bound[0])
        else:
            candidates = store.relations[literal.predicate]
        for t in candidates:
            extended = dict(binding)
            for a, value in zip(literal.args, t):
                if extended.setdefault(a, value) != value:
                    break
            else:
                out.append(extended)
    return out


def _fire(r, store, delta=None, delta_position=None):
    """Head tuples derived by ``r``; the literal at ``delta_position`` reads ``delta``."""
    bindings = [{}]
    positive = [(k, lit) for k, lit in enumerate(r.body) if not lit.negated]
    for k, lit in positive:
        source = delta if k == delta_position else store
        bindings = _match(lit, source, bindings)
        if not bindings:
            return set()
    for lit in r.body:
        if lit.negated:
            bindings = [b for b in bindings
                        if (lit.predicate, tuple(b[a] for a in lit.args)) not in store]
    return {tuple(b[a] for a in r.head.args) for b in bindings}


def evaluate(p, fb):
    """
    Computes the least model of ``p`` over the facts of ``fb``.

    Args:
        p (RuleProgram): A stratified program.
        fb (FactBase): Ground base facts.

    Returns:
        FactBase: Facts of the program's head predicates, sorted.
    """
    relations = defaultdict(set)
    for fact in fb:
        relations[fact.predicate].add(fact.args)
    store = _Store(relations)

    for k, stratum in enumerate(p.strata):
        heads = {r.head.predicate for r in stratum}
        derived = defaultdict(set)
        for r in stratum:
            derived[r.head.predicate] |= _fire(r, store)
        delta = _Store({pred: store.add(pred, tuples) for pred, tuples in derived.items()})
        rounds = 1
        while any(delta.relations.values()):
            derived = defaultdict(set)
            for r in stratum:
                for position, lit in enumerate(r.body):
                    if lit.negated or lit.predicate not in heads:
                        continue
                    if delta.relations[lit.predicate]:
                        derived[r.head.predicate] |= _fire(r, store, delta, position)
            delta = _Store({pred: store.add(pred, tuples) for pred, tuples in derived.items()})
            rounds += 1
        logger.debug("stratum %d reached its fixpoint after %d rounds", k, rounds)

    facts = sorted(Fact(pred, t) for pred in p.heads for t in store.relations[pred])
    return FactBase(facts)
