"""Plain-text graph files.

::

    # comment
    n m
    u v          (m edge lines, 0-based)
    c v k        (optional: vertex v colored k)
    x v k        (optional: external leaf of color k hung on v)

Whitespace separated, LF line endings. Several graphs may be concatenated
with ``---`` separator lines.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .forest import Forest, ForestError, Position, ColoringError, build_forest


class ParseError(ValueError):
    def __init__(self, msg: str, line: int):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def _records(text: str) -> Iterator[tuple[int, list]]:
    for lineno, raw in enumerate(text.split("\n"), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        yield lineno, s.split()


def _ints(tokens, lineno, count):
    if len(tokens) != count:
        raise ParseError(f"expected {count} fields, got {len(tokens)}", lineno)
    try:
        return [int(x) for x in tokens]
    except ValueError:
        raise ParseError(f"non-integer field in {' '.join(tokens)!r}", lineno) from None


def _fails(n, edges) -> bool:
    try:
        build_forest(n, edges)
    except ForestError:
        return True
    return False


def parse_position(text: str) -> Position:
    recs = list(_records(text))
    if not recs:
        raise ParseError("missing header 'n m'", 1)
    lineno, head = recs[0]
    n, m = _ints(head, lineno, 2)
    if n < 0 or m < 0:
        raise ParseError("negative count in header", lineno)
    if len(recs) < m + 1:
        raise ParseError(f"expected {m} edge lines", recs[-1][0])
    edges = []
    for lineno, toks in recs[1 : m + 1]:
        edges.append(tuple(_ints(toks, lineno, 2)))
    try:
        forest = build_forest(n, edges)
    except ForestError as exc:
        # rebuild prefixes to point at the first offending edge line
        bad = next(k for k in range(1, m + 1) if _fails(n, edges[:k]))
        raise ParseError(str(exc), recs[bad][0]) from exc
    coloring = [None] * n
    external = [set() for _ in range(n)]
    for lineno, toks in recs[m + 1 :]:
        tag = toks[0]
        if tag not in ("c", "x"):
            raise ParseError(f"unknown record {tag!r}", lineno)
        v, k = _ints(toks[1:], lineno, 2)
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} out of range", lineno)
        if k < 0:
            raise ParseError(f"negative color {k}", lineno)
        if tag == "c":
            coloring[v] = k
        else:
            external[v].add(k)
    try:
        return Position(forest, tuple(coloring), tuple(frozenset(e) for e in external))
    except ColoringError as exc:
        raise ParseError(str(exc), recs[-1][0]) from exc


def parse_forest(text: str) -> Forest:
    return parse_position(text).forest


def split_documents(text: str) -> list:
    docs, cur = [], []
    for line in text.split("\n"):
        if line.strip() == "---":
            docs.append("\n".join(cur))
            cur = []
        else:
            cur.append(line)
    docs.append("\n".join(cur))
    return [d for d in docs if any(r for r in _records(d))]


def format_position(p: Position | Forest, comment: str | None = None) -> str:
    if isinstance(p, Forest):
        p = Position(p)
    f = p.forest
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    edges = f.sorted_edges()
    lines.append(f"{f.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    for v, c in enumerate(p.coloring):
        if c is not None:
            lines.append(f"c {v} {c}")
    for v, ext in enumerate(p.external):
        for k in sorted(ext):
            lines.append(f"x {v} {k}")
    return "\n".join(lines) + "\n"


def format_many(graphs: Iterable[Position | Forest]) -> str:
    return "---\n".join(format_position(g) for g in graphs)


def read_position(path) -> Position:
    with open(path, encoding="utf-8") as fh:
        return parse_position(fh.read())
