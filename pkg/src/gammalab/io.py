"""The line-oriented ``.pgs`` text format and the Hasse-diagram DOT emitter.

::

    n 2
    g 1
    op 0
    0 0
    0 1
    leq
    1 1
    0 1

``op k`` opens table ``k`` (row ``a``, column ``b`` holds ``a k b``); ``leq``
rows hold 1 where row <= column.  ``#`` starts a comment.  An optional
``kind groupoid`` line after ``g`` drops the associativity axiom.  Several
documents can share one stream, separated by a line holding ``---``.
"""
from __future__ import annotations

from .core import (GROUPOID, KINDS, SEMIGROUP, PoGammaStructure,
                   StructureError, require_valid)


class ParseError(StructureError):
    def __init__(self, line: int, col: int, message: str):
        self.line, self.col = line, col
        super().__init__(f"line {line}, column {col}: {message}")


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = []
        col = 0
        for part in body.split():
            col = body.index(part, col)
            toks.append((col + 1, part))
            col += len(part)
        if toks:
            yield lineno, toks


def _int(lineno: int, tok: tuple, lo: int, hi: int | None, what: str) -> int:
    col, word = tok
    try:
        v = int(word)
    except ValueError:
        raise ParseError(lineno, col, f"{what}: expected an integer, got {word!r}") from None
    if v < lo or (hi is not None and v > hi):
        bound = f"{lo}..{hi}" if hi is not None else f">= {lo}"
        raise ParseError(lineno, col, f"{what} {v} out of range {bound}")
    return v


def parse_structure(text: str, validate: bool = True) -> PoGammaStructure:
    """Parse one document; with ``validate`` every axiom is checked
    (:class:`~gammalab.core.AxiomError` on violation)."""
    lines = list(_tokens(text))
    pos = 0

    def take(keyword: str, nargs: int):
        nonlocal pos
        if pos >= len(lines):
            last = lines[-1][0] if lines else 0
            raise ParseError(last + 1, 1, f"unexpected end of document, expected {keyword!r}")
        lineno, toks = lines[pos]
        if toks[0][1] != keyword:
            raise ParseError(lineno, toks[0][0], f"expected {keyword!r}, got {toks[0][1]!r}")
        if len(toks) != nargs + 1:
            raise ParseError(lineno, toks[0][0], f"{keyword!r} takes {nargs} argument(s)")
        pos += 1
        return lineno, toks[1:]

    def rows(n: int, hi: int, what: str) -> list[int]:
        nonlocal pos
        out = []
        for r in range(n):
            if pos >= len(lines):
                last = lines[-1][0] if lines else 0
                raise ParseError(last + 1, 1, f"{what}: missing row {r}")
            lineno, toks = lines[pos]
            if len(toks) != n:
                raise ParseError(lineno, toks[0][0], f"{what} row {r}: expected {n} entries, got {len(toks)}")
            out.extend(_int(lineno, t, 0, hi, f"{what} entry") for t in toks)
            pos += 1
        return out

    lineno, args = take("n", 1)
    n = _int(lineno, args[0], 1, 255, "n")
    lineno, args = take("g", 1)
    g = _int(lineno, args[0], 1, None, "g")
    kind = SEMIGROUP
    if pos < len(lines) and lines[pos][1][0][1] == "kind":
        lineno, args = take("kind", 1)
        kind = args[0][1]
        if kind not in KINDS:
            raise ParseError(lineno, args[0][0], f"unknown kind {kind!r}")
    tables: dict[int, list[int]] = {}
    for _ in range(g):
        lineno, args = take("op", 1)
        t = _int(lineno, args[0], 0, g - 1, "table label")
        if t in tables:
            raise ParseError(lineno, args[0][0], f"table {t} given twice")
        tables[t] = rows(n, n - 1, f"op {t}")
    take("leq", 0)
    leq = rows(n, 1, "leq")
    if pos < len(lines):
        lineno, toks = lines[pos]
        raise ParseError(lineno, toks[0][0], "trailing content after leq block")
    op = bytes(v for t in range(g) for v in tables[t])
    s = PoGammaStructure(n, g, op, bytes(leq), kind)
    return require_valid(s) if validate else s


def parse_many(text: str, validate: bool = True) -> list[PoGammaStructure]:
    docs, cur = [], []
    for line in text.splitlines():
        if line.strip() == "---":
            docs.append("\n".join(cur))
            cur = []
        else:
            cur.append(line)
    docs.append("\n".join(cur))
    return [parse_structure(d, validate) for d in docs if list(_tokens(d))]


def serialize_structure(s: PoGammaStructure) -> str:
    out = [f"n {s.n}", f"g {s.g}"]
    if s.kind == GROUPOID:
        out.append("kind groupoid")
    for t, table in enumerate(s.tables()):
        out.append(f"op {t}")
        out.extend(" ".join(map(str, row)) for row in table)
    out.append("leq")
    out.extend(" ".join(map(str, row)) for row in s.order_rows())
    return "\n".join(out) + "\n"


def covers(s: PoGammaStructure) -> list[tuple[int, int]]:
    """Cover pairs ``(a, b)``: ``a < b`` with nothing strictly between."""
    n = s.n
    lt = [[a != b and s.le(a, b) for b in range(n)] for a in range(n)]
    return [(a, b) for a in range(n) for b in range(n)
            if lt[a][b] and not any(lt[a][c] and lt[c][b] for c in range(n))]


def hasse_dot(s: PoGammaStructure, name: str = "hasse") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
    lines.extend(f"  {a};" for a in range(s.n))
    lines.extend(f"  {a} -> {b};" for a, b in covers(s))
    lines.append("}")
    return "\n".join(lines) + "\n"
