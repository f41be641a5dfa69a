"""Text format for rooted graphs.

One file holds one rooted graph::

    # comment
    n m k
    x1 x2 ... xk        (the root names; may be blank when k = 0)
    u v                 (m edge lines)

Vertex names are whitespace-free ASCII tokens. Ids are assigned in order of
first appearance (roots first, then edge endpoints); if fewer than ``n`` names
appear, the remaining isolated vertices get the names ``_0``, ``_1``, ...
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, TextIO

from .errors import InvalidArgument
from .graph import Graph


@dataclass
class Names:
    """Bidirectional map between vertex ids and their textual names."""

    by_id: dict[int, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.by_name = {name: vid for vid, name in self.by_id.items()}

    @classmethod
    def default(cls, vertices: Iterable[int]) -> "Names":
        return cls({v: str(v) for v in vertices})

    def name(self, vid: int) -> str:
        return self.by_id.get(vid, str(vid))

    def id(self, name: str) -> int:
        try:
            return self.by_name[name]
        except KeyError:
            raise InvalidArgument(f"unknown vertex name {name!r}") from None

    def ids(self, names: Iterable[str]) -> list[int]:
        return [self.id(n) for n in names]

    def add(self, vid: int, name: str) -> None:
        self.by_id[vid] = name
        self.by_name[name] = vid


class ParseError(InvalidArgument):
    pass


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_rooted(text: str) -> tuple[Graph, frozenset[int], Names]:
    raw_lines = text.splitlines()
    lines = [_strip(raw) for raw in raw_lines]
    pos = 0

    def next_nonblank() -> str | None:
        nonlocal pos
        while pos < len(lines):
            line = lines[pos]
            pos += 1
            if line:
                return line
        return None

    header = next_nonblank()
    if header is None:
        raise ParseError("empty graph file")
    try:
        n, m, k = (int(tok) for tok in header.split())
    except ValueError:
        raise ParseError(f"bad header line {header!r}; expected 'n m k'") from None
    if min(n, m, k) < 0:
        raise ParseError("negative count in header")

    names = Names()

    def intern(tok: str) -> int:
        if tok not in names.by_name:
            names.add(len(names.by_id), tok)
        return names.by_name[tok]

    if k > 0:
        root_line = next_nonblank()
        root_toks = root_line.split() if root_line else []
    else:
        # the (blank) roots line is optional when k = 0
        if pos < len(raw_lines) and raw_lines[pos].strip() == "":
            pos += 1
        root_toks = []
    if len(root_toks) != k:
        raise ParseError(f"expected {k} root names, got {len(root_toks)}")
    if len(set(root_toks)) != k:
        raise ParseError("duplicate root name")
    roots = frozenset(intern(t) for t in root_toks)

    edges: set[tuple[int, int]] = set()
    count = 0
    while True:
        line = next_nonblank()
        if line is None:
            break
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"bad edge line {line!r}")
        if toks[0] == toks[1]:
            raise ParseError(f"loop at {toks[0]!r}")
        u, v = intern(toks[0]), intern(toks[1])
        key = (min(u, v), max(u, v))
        if key in edges:
            raise ParseError(f"duplicate edge {toks[0]} {toks[1]}")
        edges.add(key)
        count += 1
    if count != m:
        raise ParseError(f"header promises {m} edges, file has {count}")
    if len(names.by_id) > n:
        raise ParseError(f"header promises {n} vertices, file names {len(names.by_id)}")
    filler = 0
    while len(names.by_id) < n:
        while f"_{filler}" in names.by_name:
            filler += 1
        names.add(len(names.by_id), f"_{filler}")
    g = Graph.from_edges(sorted(edges), vertices=names.by_id)
    return g, roots, names


def read_rooted(path: str | Path) -> tuple[Graph, frozenset[int], Names]:
    return parse_rooted(Path(path).read_text())


def format_rooted(g: Graph, roots: Iterable[int], names: Names | None = None) -> str:
    names = names or Names.default(g.vertices)
    roots = sorted(roots)
    out = [f"{g.n} {g.m} {len(roots)}", " ".join(names.name(r) for r in roots)]
    out += [f"{names.name(u)} {names.name(v)}" for u, v in g.edges]
    return "\n".join(out) + "\n"


def write_rooted(stream: TextIO, g: Graph, roots: Iterable[int], names: Names | None = None) -> None:
    stream.write(format_rooted(g, roots, names))
