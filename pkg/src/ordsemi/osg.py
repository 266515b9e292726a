"""OSG v1: a line-oriented text format for finite ordered semigroups.

::

    # comment
    name: example26
    elements: a b c d e
    table:
    a b c d e
    ...
    order:
    c<=a
    e<=d e<=b

Table entries are row*column.  Order lines list generating pairs; reflexive
pairs may be omitted and the loader takes the reflexive-transitive closure.
Metadata keys are ``name``, ``source`` and ``compatible`` (``false`` keeps
an order that is not compatible with the product instead of rejecting it).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .core import OrderedSemigroup, SemigroupError, validate_ordered_semigroup

METADATA_KEYS = ("name", "source", "compatible")


class ParseError(SemigroupError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


@dataclass(frozen=True)
class OsgDocument:
    names: tuple[str, ...]
    table: tuple[tuple[str, ...], ...]
    pairs: tuple[tuple[str, str], ...] = ()
    metadata: dict[str, str] = field(default_factory=dict)

    def canonical(self) -> "OsgDocument":
        """Pairs deduplicated, reflexive ones dropped, sorted by element position."""
        pos = {s: i for i, s in enumerate(self.names)}
        pairs = sorted({p for p in self.pairs if p[0] != p[1]},
                       key=lambda p: (pos.get(p[0], -1), pos.get(p[1], -1), p))
        meta = {k: self.metadata[k] for k in METADATA_KEYS if k in self.metadata}
        return replace(self, pairs=tuple(pairs), metadata=meta)


def parse_osg(text: str) -> OsgDocument:
    names: tuple[str, ...] | None = None
    rows: list[tuple[str, ...]] = []
    pairs: list[tuple[str, str, int]] = []
    meta: dict[str, str] = {}
    section = None
    table_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if sep and key in ("elements", "table", "order") + METADATA_KEYS:
            rest = rest.strip()
            if key in METADATA_KEYS:
                meta[key] = rest
                section = None
            elif key == "elements":
                if names is not None:
                    raise ParseError(lineno, "duplicate elements: line")
                names = tuple(rest.split())
                if not names:
                    raise ParseError(lineno, "no elements listed")
                if len(set(names)) != len(names):
                    raise ParseError(lineno, "duplicate element names")
                for s in names:
                    if "<=" in s:
                        raise ParseError(lineno, f"bad element name {s!r}")
                section = None
            elif key == "table":
                if names is None:
                    raise ParseError(lineno, "table: before elements:")
                if rows:
                    raise ParseError(lineno, "duplicate table: section")
                section, table_line = "table", lineno
                if rest:
                    raise ParseError(lineno, "table rows start on the next line")
            else:
                section = "order"
                if rest:
                    pairs.extend(_pairs(rest, lineno))
            continue
        if section == "table":
            row = tuple(line.split())
            if len(row) != len(names):
                raise ParseError(lineno, f"table row has {len(row)} entries, expected {len(names)}")
            if len(rows) == len(names):
                raise ParseError(lineno, "too many table rows")
            rows.append(row)
        elif section == "order":
            pairs.extend(_pairs(line, lineno))
        else:
            raise ParseError(lineno, f"unexpected line {line!r}")
    if names is None:
        raise ParseError(0, "missing elements: line")
    if len(rows) != len(names):
        raise ParseError(table_line, f"table has {len(rows)} rows, expected {len(names)}")
    known = set(names)
    for row in rows:
        for s in row:
            if s not in known:
                raise ParseError(table_line, f"unknown element {s!r} in table")
    for a, b, lineno in pairs:
        for s in (a, b):
            if s not in known:
                raise ParseError(lineno, f"unknown element {s!r} in order")
    return OsgDocument(names, tuple(rows), tuple((a, b) for a, b, _ in pairs), meta)


def _pairs(text: str, lineno: int):
    out = []
    for tok in text.split():
        a, sep, b = tok.partition("<=")
        if not sep or not a or not b:
            raise ParseError(lineno, f"expected x<=y, got {tok!r}")
        out.append((a, b, lineno))
    return out


def emit_osg(doc: OsgDocument) -> str:
    doc = doc.canonical()
    lines = [f"{k}: {v}" for k, v in doc.metadata.items()]
    width = max(len(s) for s in doc.names)
    lines.append("elements: " + " ".join(doc.names))
    lines.append("table:")
    lines += [" ".join(s.ljust(width) for s in row).rstrip() for row in doc.table]
    lines.append("order:")
    lines += [f"{a}<={b}" for a, b in doc.pairs]
    return "\n".join(lines) + "\n"


def load_document(doc: OsgDocument) -> OrderedSemigroup:
    pos = {s: i for i, s in enumerate(doc.names)}
    table = [[pos[s] for s in row] for row in doc.table]
    pairs = [(pos[a], pos[b]) for a, b in doc.pairs]
    relaxed = doc.metadata.get("compatible", "true").lower() == "false"
    return validate_ordered_semigroup(table, pairs, doc.names, name=doc.metadata.get("name", ""),
                                      require_compatible=not relaxed)


def loads(text: str) -> OrderedSemigroup:
    return load_document(parse_osg(text))


def document_of(S: OrderedSemigroup, source: str | None = None) -> OsgDocument:
    meta = {}
    if S.name:
        meta["name"] = S.name
    if source:
        meta["source"] = source
    if not S.compatible:
        meta["compatible"] = "false"
    names = S.names
    table = tuple(tuple(names[v] for v in row) for row in S.table)
    pairs = tuple((names[i], names[j]) for i, j in S.order.pairs(strict=True))
    return OsgDocument(names, table, pairs, meta)
