"""Text and JSON forms of certificates and spanning structures.

Structure files are sections opened by a keyword line, using vertex names from
the graph file::

    TREE 3 x1 x2        bound, then optional names that must be leaves
    a b                 edge lines
    SUBGRAPH 6          max degree, then edge lines
    PATH                one line: the vertex sequence
    CYCLE y1            optional names the cycle must avoid; one sequence line
    SPINE path|cycle    one sequence line
    ATTACH x            one sequence line, starting at root x
    TUTTE               one sequence line
    ANCHOR              edge lines of the anchor subgraph

Certificates are JSON: ``{"minor": [[u, v], ...], "bags": {v: [...]},
"trace": [[kept, absorbed], ...]}`` plus ``"paths"`` for topological minors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .errors import InvalidArgument
from .graph import Edge, Graph, norm_edge
from .io import Names, ParseError
from .minors import Certificate, ContractionTrace, SubdivisionEmbedding
from .structures import GeneralizedStructure

SECTIONS = ("TREE", "SUBGRAPH", "PATH", "CYCLE", "SPINE", "ATTACH", "TUTTE", "ANCHOR")


@dataclass
class Section:
    keyword: str
    args: list[str]
    lines: list[list[str]] = field(default_factory=list)


def parse_sections(text: str) -> list[Section]:
    out: list[Section] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] in SECTIONS:
            out.append(Section(toks[0], toks[1:]))
        elif not out:
            raise ParseError(f"content before the first section: {line!r}")
        else:
            out[-1].lines.append(toks)
    if not out:
        raise ParseError("empty structure file")
    return out


def _edges(sec: Section, names: Names) -> list[Edge]:
    edges = []
    for toks in sec.lines:
        if len(toks) != 2:
            raise ParseError(f"bad edge line {' '.join(toks)!r} in {sec.keyword}")
        u, v = names.ids(toks)
        edges.append(norm_edge(u, v))
    return edges


def _sequence(sec: Section, names: Names) -> list[int]:
    if len(sec.lines) != 1:
        raise ParseError(f"{sec.keyword} needs exactly one vertex-sequence line")
    return names.ids(sec.lines[0])


@dataclass
class Structure:
    """One parsed structure file; ``kind`` names which fields are set."""

    kind: str
    graph: Graph | None = None
    bound: int | None = None
    leaves: list[int] = field(default_factory=list)
    sequence: list[int] = field(default_factory=list)
    avoid: list[int] = field(default_factory=list)
    generalized: GeneralizedStructure | None = None
    anchor: Graph | None = None


def read_structure(text: str, names: Names) -> Structure:
    secs = parse_sections(text)
    head = secs[0]
    kw = head.keyword
    try:
        if kw == "TREE":
            if not head.args:
                raise ParseError("TREE needs a degree bound")
            edges = _edges(head, names)
            verts = {w for e in edges for w in e} | set(names.ids(head.args[1:]))
            return Structure("tree", Graph.from_edges(edges, vertices=verts), int(head.args[0]),
                             names.ids(head.args[1:]))
        if kw == "SUBGRAPH":
            if len(head.args) != 1:
                raise ParseError("SUBGRAPH needs a max degree")
            return Structure("subgraph", Graph.from_edges(_edges(head, names)), int(head.args[0]))
        if kw == "PATH":
            return Structure("path", sequence=_sequence(head, names))
        if kw == "CYCLE":
            return Structure("cycle", sequence=_sequence(head, names), avoid=names.ids(head.args))
        if kw == "TUTTE":
            anchor = None
            for sec in secs[1:]:
                if sec.keyword != "ANCHOR":
                    raise ParseError(f"unexpected {sec.keyword} after TUTTE")
                anchor = Graph.from_edges(_edges(sec, names))
            return Structure("tutte", sequence=_sequence(head, names), anchor=anchor)
        if kw == "SPINE":
            if head.args not in (["path"], ["cycle"]):
                raise ParseError("SPINE must be 'path' or 'cycle'")
            gs = GeneralizedStructure(_sequence(head, names), head.args[0] == "cycle")
            for sec in secs[1:]:
                if sec.keyword != "ATTACH" or len(sec.args) != 1:
                    raise ParseError("SPINE may only be followed by 'ATTACH x' sections")
                gs.attachments.append((names.id(sec.args[0]), _sequence(sec, names)))
            return Structure("generalized", generalized=gs)
    except ValueError as exc:
        if isinstance(exc, InvalidArgument):
            raise ParseError(str(exc)) from None
        raise ParseError(f"bad number in {kw} header") from None
    raise ParseError(f"a structure file cannot start with {kw}")


def _seq(seq: list[int], names: Names) -> str:
    return " ".join(names.name(v) for v in seq)


def _edge_lines(g: Graph, names: Names) -> list[str]:
    return [f"{names.name(u)} {names.name(v)}" for u, v in g.edges]


def format_tree(tree: Graph, bound: int, names: Names, leaves: list[int] = ()) -> str:
    head = " ".join(["TREE", str(bound)] + [names.name(x) for x in leaves])
    return "\n".join([head] + _edge_lines(tree, names)) + "\n"


def format_subgraph(h: Graph, max_degree: int, names: Names) -> str:
    return "\n".join([f"SUBGRAPH {max_degree}"] + _edge_lines(h, names)) + "\n"


def format_path(seq: list[int], names: Names) -> str:
    return f"PATH\n{_seq(seq, names)}\n"


def format_cycle(seq: list[int], names: Names, avoid: list[int] = ()) -> str:
    head = " ".join(["CYCLE"] + [names.name(y) for y in avoid])
    return f"{head}\n{_seq(seq, names)}\n"


def format_tutte(seq: list[int], names: Names, anchor: Graph | None = None) -> str:
    out = ["TUTTE", _seq(seq, names)]
    if anchor is not None:
        out += ["ANCHOR"] + _edge_lines(anchor, names)
    return "\n".join(out) + "\n"


def format_generalized(gs: GeneralizedStructure, names: Names) -> str:
    out = [f"SPINE {'cycle' if gs.closed else 'path'}", _seq(gs.spine, names)]
    for x, p in gs.attachments:
        out += [f"ATTACH {names.name(x)}", _seq(p, names)]
    return "\n".join(out) + "\n"


# ------------------------------------------------------------ certificates
def certificate_json(c: Certificate, names: Names, trace: ContractionTrace | None = None,
                     embedding: SubdivisionEmbedding | None = None) -> dict[str, Any]:
    n = names.name
    doc: dict[str, Any] = {
        "minor": [[n(u), n(v)] for u, v in c.minor.edges],
        "bags": {n(v): sorted((n(w) for w in c.bags[v]), key=lambda s: names.id(s)) for v in c.minor.vertices},
        "trace": [[n(a), n(b)] for a, b in trace.steps] if trace else [],
    }
    if embedding is not None:
        doc["paths"] = {f"{n(u)} {n(v)}": [n(w) for w in p] for (u, v), p in sorted(embedding.path_map.items())}
    return doc


def load_certificate(text: str, host: Graph, roots: frozenset[int], names: Names) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"certificate is not JSON: {exc}") from None
    if not isinstance(doc, dict) or not {"minor", "bags"} <= doc.keys():
        raise ParseError("certificate needs 'minor' and 'bags'")
    try:
        bags = {names.id(v): frozenset(names.ids(ws)) for v, ws in doc["bags"].items()}
        edges = [norm_edge(*names.ids(e)) for e in doc["minor"]]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed certificate: {exc}") from None
    minor = Graph.from_edges(edges, vertices=bags)
    return Certificate(minor, bags, host, roots)
