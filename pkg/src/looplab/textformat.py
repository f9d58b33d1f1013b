"""Plain-text Cayley table format.

Line 1 holds the order ``n``; the next ``n`` lines hold ``n`` whitespace
separated 0-based entries each. ``#`` starts a comment running to the end of
the line and blank lines are ignored. Files holding several tables separate
them with blank lines (the enumerator's output).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterator

from .errors import OutOfRangeEntry, ParseError
from .table import Classification, Loop, MagmaTable, Validation, validate


@dataclass(frozen=True)
class ParsedTable:
    table: MagmaTable
    validation: Validation
    row_lines: tuple[int, ...]  # source line of each table row, 1-based

    @property
    def classification(self) -> Classification:
        return self.validation.classification

    @property
    def loop(self) -> Loop | None:
        return self.validation.loop


def _tokens(text: str) -> Iterator[tuple[int, list[tuple[int, str]]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = []
        col = 0
        for word in line.split():
            col = line.index(word, col)
            toks.append((col + 1, word))
            col += len(word)
        if toks:
            yield lineno, toks


def _int(word: str, line: int, column: int) -> int:
    try:
        return int(word)
    except ValueError:
        raise ParseError(f"expected an integer, found {word!r}", line, column) from None


def parse(text: str) -> ParsedTable:
    """Parse one table. A table that fails loop validation is returned tagged."""
    lines = list(_tokens(text))
    if not lines:
        raise ParseError("empty input: expected the table order on the first line")
    tables = _parse_lines(lines)
    if len(tables) > 1:
        line = tables[1].row_lines[0] - 1
        raise ParseError("trailing content after the table", line)
    return tables[0]


def parse_many(text: str) -> list[ParsedTable]:
    return _parse_lines(list(_tokens(text)))


def _parse_lines(lines) -> list[ParsedTable]:
    out = []
    i = 0
    while i < len(lines):
        lineno, toks = lines[i]
        if len(toks) != 1:
            raise ParseError("expected a single integer giving the table order", lineno)
        n = _int(toks[0][1], lineno, toks[0][0])
        if n < 1:
            raise ParseError(f"table order must be positive, got {n}", lineno, toks[0][0])
        rows = []
        row_lines = []
        for r in range(n):
            if i + 1 + r >= len(lines):
                raise ParseError(f"expected {n} rows, found {r}", lineno)
            rl, rtoks = lines[i + 1 + r]
            if len(rtoks) != n:
                raise ParseError(f"row {r} has {len(rtoks)} entries, expected {n}", rl)
            row = []
            for c, (col, word) in enumerate(rtoks):
                v = _int(word, rl, col)
                if not 0 <= v < n:
                    raise ParseError(str(OutOfRangeEntry(r, c, v, n)), rl, col)
                row.append(v)
            rows.append(row)
            row_lines.append(rl)
        table = MagmaTable.from_rows(rows)
        out.append(ParsedTable(table, validate(table), tuple(row_lines)))
        i += 1 + n
    return out


def format_table(table: Loop | MagmaTable, comment: str | None = None) -> str:
    products = table.products
    width = len(str(len(products) - 1))
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(str(len(products)))
    lines.extend(" ".join(str(v).rjust(width) for v in row) for row in products)
    return "\n".join(lines) + "\n"


def content_hash(table: Loop | MagmaTable) -> str:
    """sha256 of the table's canonical text (no comments), stable across reformatting."""
    return hashlib.sha256(format_table(table).encode()).hexdigest()
