# -*- coding: utf-8 -*-
"""
Ingestion of tab-separated knowledge-graph triples (FB15k-237 layout).

Only records whose relation is mapped become binary facts, but every entity
in the stream joins the universe as a ``location`` fact.
"""
import logging
import re
from dataclasses import dataclass
from pathlib import Path

from ..datalog.facts import Fact, FactBase
from ..errors import IngestionError

logger = logging.getLogger(__name__)

DEFAULT_RELATION_MAP = {
    "/location/location/contains": "contains",
    "/location/location/adjoins": "adjoins",
    # FB15k-237 spells the adjoins relation through its mediator node
    "/location/location/adjoin_s./location/adjoining_relationship/adjoins": "adjoins",
}

FB15K_FILES = ("train.txt", "valid.txt", "test.txt")

_NON_IDENTIFIER = re.compile(r"[^A-Za-z0-9_]")


@dataclass(frozen=True)
class TripleRecord:
    subject: str
    relation: str
    object: str


def sanitize(raw):
    """Maps a raw entity id onto the constant grammar: ``/m/0x1`` -> ``e__m_0x1``."""
    name = _NON_IDENTIFIER.sub("_", raw)
    if not name[:1].islower() or not name[:1].isascii():
        name = "e_" + name
    return name


def parse_triples(lines, first_line=1, source=None):
    """Yields a TripleRecord per non-blank line; raises IngestionError on bad ones."""
    if isinstance(lines, str):
        lines = lines.splitlines()
    for lineno, line in enumerate(lines, start=first_line):
        line = line.rstrip("\r\n")
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise IngestionError(f"expected 3 tab-separated fields, found {len(fields)}", lineno, source)
        if not all(f.strip() for f in fields):
            raise IngestionError("empty field", lineno, source)
        yield TripleRecord(*(f.strip() for f in fields))


def ingest_triples(lines, relation_map=None, type_name="location"):
    """
    Builds a fact base from triple lines.

    Args:
        lines: Text or an iterable of lines (e.g. an open file).
        relation_map (dict): Raw relation -> predicate. Defaults to
            ``contains``/``adjoins``.
        type_name (str): Unary predicate wrapping every entity.

    Returns:
        FactBase: Type facts for all entities in order of first appearance,
        followed by the kept binary facts.

    Raises:
        IngestionError: For malformed lines, or when two raw entities
            sanitize to the same constant.
    """
    return _ingest(_numbered(lines), relation_map, type_name)


def _ingest(records, relation_map, type_name):
    relation_map = DEFAULT_RELATION_MAP if relation_map is None else relation_map
    constants = {}
    raw_by_constant = {}
    kept = []
    source, lineno = None, 0

    def constant_for(raw):
        name = constants.get(raw)
        if name is None:
            name = sanitize(raw)
            clash = raw_by_constant.setdefault(name, raw)
            if clash != raw:
                raise IngestionError(f"'{raw}' and '{clash}' both sanitize to '{name}'", lineno, source)
            constants[raw] = name
        return name

    for source, lineno, record in records:
        subject = constant_for(record.subject)
        obj = constant_for(record.object)
        predicate = relation_map.get(record.relation)
        if predicate is not None:
            kept.append(Fact(predicate, (subject, obj)))

    entities = [Fact(type_name, (name,)) for name in constants.values()]
    fb = FactBase(entities + kept)
    logger.info("ingested %d entities and %d relation facts", len(entities), len(fb) - len(entities))
    return fb


def _numbered(lines, source=None):
    if isinstance(lines, str):
        lines = lines.splitlines()
    for lineno, line in enumerate(lines, start=1):
        for record in parse_triples([line], first_line=lineno, source=source):
            yield source, lineno, record


def ingest_files(paths, relation_map=None, type_name="location"):
    """
    Ingests several triple files as one stream.

    Line numbers in errors count from 1 within each file and carry its name.
    """
    paths = [Path(p) for p in paths]

    def records():
        for path in paths:
            with path.open(encoding="utf-8") as handle:
                yield from _numbered(handle, path.name)

    return _ingest(records(), relation_map, type_name)


def read_fb15k(directory, relation_map=None, type_name="location"):
    """Ingests ``train.txt``, ``valid.txt`` and ``test.txt`` from ``directory``."""
    directory = Path(directory)
    return ingest_files([directory / filename for filename in FB15K_FILES], relation_map, type_name)
