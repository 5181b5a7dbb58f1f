"""Plain-text formats for Cayley tables (``.cay``) and triples (``.trp``).

Cayley: first line ``n``, then n lines of n 0-based entries.
Triple: first line ``n m``, then for every element three lines
``S <m images>``, ``T <m images>``, ``P <m images>``.
In both, ``#`` starts a comment and blank lines are ignored.
"""
from __future__ import annotations

from typing import Iterator

from .errors import ParseError
from .magma import CayleyTable
from .perm import Perm
from .triality import TranslationTriple


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split("#", 1)[0].split()
        if fields:
            yield lineno, fields


def _ints(lineno: int, fields: list[str]) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(fields)!r}") from None


def _header(lines, count: int, what: str) -> tuple[int, list[int]]:
    try:
        lineno, fields = next(lines)
    except StopIteration:
        raise ParseError(0, f"empty input, expected {what}") from None
    values = _ints(lineno, fields)
    if len(values) != count or any(v < 1 for v in values):
        raise ParseError(lineno, f"expected {what} as {count} positive integer(s)")
    return lineno, values


def parse_cayley(text: str) -> CayleyTable:
    lines = _content_lines(text)
    lineno, (n,) = _header(lines, 1, "the order n")
    rows = []
    for lineno, fields in lines:
        if len(rows) == n:
            raise ParseError(lineno, f"extra content after {n} rows")
        row = _ints(lineno, fields)
        if len(row) != n:
            raise ParseError(lineno, f"expected {n} entries, got {len(row)}")
        for x in row:
            if not 0 <= x < n:
                raise ParseError(lineno, f"entry {x} outside 0..{n - 1}")
        rows.append(tuple(row))
    if len(rows) != n:
        raise ParseError(lineno, f"expected {n} rows, got {len(rows)}")
    return CayleyTable(tuple(rows))


def emit_cayley(tbl: CayleyTable) -> str:
    width = len(str(tbl.order - 1))
    body = "\n".join(" ".join(str(x).rjust(width) for x in row) for row in tbl.table)
    return f"{tbl.order}\n{body}\n"


def parse_triple(text: str) -> TranslationTriple:
    lines = _content_lines(text)
    lineno, (n, m) = _header(lines, 2, "'n m'")
    maps = {"S": [], "T": [], "P": []}
    expected = iter([(g, letter) for g in range(n) for letter in "STP"])
    for lineno, fields in lines:
        try:
            g, letter = next(expected)
        except StopIteration:
            raise ParseError(lineno, f"extra content after {n} elements") from None
        if fields[0] != letter:
            raise ParseError(lineno, f"expected a {letter} line for element {g}, got {fields[0]!r}")
        images = _ints(lineno, fields[1:])
        if len(images) != m:
            raise ParseError(lineno, f"{letter}_{g} has {len(images)} images, expected {m}")
        if sorted(images) != list(range(m)):
            raise ParseError(lineno, f"{letter}_{g} (element {g}, map {letter}) is not a bijection")
        maps[letter].append(Perm(tuple(images)))
    if len(maps["P"]) != n:
        raise ParseError(lineno, f"expected {n} elements, file ends early")
    return TranslationTriple(maps["S"], maps["T"], maps["P"])


def emit_triple(triple: TranslationTriple) -> str:
    out = [f"{triple.n} {triple.m}"]
    for g in range(triple.n):
        out.append(f"# element {g}")
        for letter in "STP":
            out.append(f"{letter} {getattr(triple, letter)[g]}")
    return "\n".join(out) + "\n"
