"""DIMACS-style text formats for graphs, digraphs and colouring witnesses.

Undirected::

    c optional comment
    p edge <n> <m>
    e <u> <v>          (m lines, 1-based)

Oriented::

    p oriented <n> <m>
    a <u> <v>          (arc u -> v, 1-based)

Colouring witness::

    s chi <k>
    v <vertex> <colour>  (n lines, 1-based vertex, 0-based colour)

Serializers emit the canonical form (no comments, edges/arcs sorted), so
``parse(serialize(g)) == g`` and ``serialize(parse(text)) == text`` for
canonical text.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .graph import OrientedGraph, UndirectedGraph, build_graph, build_oriented

AnyGraph = Union[UndirectedGraph, OrientedGraph]


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected an integer, got {tok!r}", lineno) from None


def parse_graph(text: str) -> AnyGraph:
    """Parse either format; the ``p`` line decides which."""
    kind: str | None = None
    n = m = 0
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        tag = toks[0]
        if tag == "p":
            if kind is not None:
                raise FormatError("second problem line", lineno)
            if len(toks) != 4 or toks[1] not in ("edge", "oriented"):
                raise FormatError("problem line must be 'p edge <n> <m>' or 'p oriented <n> <m>'", lineno)
            kind = toks[1]
            n, m = _parse_int(toks[2], lineno), _parse_int(toks[3], lineno)
            if n < 1 or m < 0:
                raise FormatError(f"bad sizes n={n}, m={m}", lineno)
            continue
        if tag in ("e", "a"):
            if kind is None:
                raise FormatError(f"'{tag}' line before the problem line", lineno)
            want = "e" if kind == "edge" else "a"
            if tag != want:
                raise FormatError(f"'{tag}' line in a 'p {kind}' file", lineno)
            if len(toks) != 3:
                raise FormatError(f"'{tag}' line needs exactly two endpoints", lineno)
            u, v = _parse_int(toks[1], lineno), _parse_int(toks[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"endpoint out of range 1..{n}: {u} {v}", lineno)
            if u == v:
                raise FormatError(f"self-loop at vertex {u}", lineno)
            key = (u, v) if kind == "oriented" else (min(u, v), max(u, v))
            if key in seen:
                raise FormatError(f"duplicate {'arc' if kind == 'oriented' else 'edge'} {u} {v}", lineno)
            if kind == "oriented" and (v, u) in seen:
                raise FormatError(f"antiparallel arcs {v} {u} and {u} {v}", lineno)
            seen.add(key)
            pairs.append((u - 1, v - 1))
            continue
        raise FormatError(f"unknown line type {tag!r}", lineno)
    if kind is None:
        raise FormatError("missing problem line")
    if len(pairs) != m:
        raise FormatError(f"header declares m={m} but {len(pairs)} {'edges' if kind == 'edge' else 'arcs'} follow")
    if kind == "edge":
        return build_graph(n, pairs)
    return build_oriented(n, pairs)


def serialize_graph(g: AnyGraph) -> str:
    if isinstance(g, OrientedGraph):
        head, tag, pairs = "oriented", "a", g.arcs
    else:
        head, tag, pairs = "edge", "e", g.edges
    lines = [f"p {head} {g.n} {len(pairs)}"]
    lines += [f"{tag} {u + 1} {v + 1}" for u, v in pairs]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> AnyGraph:
    return parse_graph(Path(path).read_text())


def write_graph(g: AnyGraph, path: str | Path) -> None:
    Path(path).write_text(serialize_graph(g))


def serialize_colouring(colours: list[int] | tuple[int, ...]) -> str:
    k = len(set(colours))
    lines = [f"s chi {k}"] + [f"v {v + 1} {c}" for v, c in enumerate(colours)]
    return "\n".join(lines) + "\n"


def parse_colouring(text: str) -> tuple[int, ...]:
    k: int | None = None
    assigned: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "s" and len(toks) == 3 and toks[1] == "chi":
            k = _parse_int(toks[2], lineno)
        elif toks[0] == "v" and len(toks) == 3:
            v, c = _parse_int(toks[1], lineno), _parse_int(toks[2], lineno)
            if v < 1 or v in assigned or c < 0:
                raise FormatError(f"bad vertex line 'v {v} {c}'", lineno)
            assigned[v] = c
        else:
            raise FormatError(f"unrecognised line {raw.strip()!r}", lineno)
    if k is None:
        raise FormatError("missing 's chi <k>' line")
    n = len(assigned)
    if sorted(assigned) != list(range(1, n + 1)):
        raise FormatError("vertex lines must cover 1..n exactly")
    colours = tuple(assigned[v] for v in range(1, n + 1))
    if len(set(colours)) != k:
        raise FormatError(f"declared k={k} but {len(set(colours))} colours used")
    return colours
