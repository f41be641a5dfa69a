"""Spanning-structure types and their invariant checks (trees, paths, cycles, generalized spines)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graph import Edge, Graph, components, induced_subgraph, norm_edge, path_edges
from .minors import Verdict


@dataclass
class GeneralizedStructure:
    """A spine (path or cycle) plus one attachment path per root that is off the spine.

    Each attachment runs from its root ``x`` to the spine vertex ``y`` where it
    lands. Roots on the spine carry no attachment (the trivial ``x = y`` case).
    """

    spine: list[int]
    closed: bool
    attachments: list[tuple[int, list[int]]] = field(default_factory=list)

    @property
    def spine_edges(self) -> list[Edge]:
        return path_edges(self.spine, closed=self.closed)

    def as_graph(self) -> Graph:
        edges = set(self.spine_edges)
        verts = set(self.spine)
        for _x, p in self.attachments:
            edges.update(path_edges(p))
            verts.update(p)
        return Graph.from_edges(sorted(edges), vertices=verts)


@dataclass
class DegreeBoundedTree:
    tree: Graph
    bound: int

    @property
    def max_degree(self) -> int:
        return self.tree.max_degree()


def is_subgraph(h: Graph, g: Graph) -> bool:
    return h.vertex_set <= g.vertex_set and all(g.has_edge(u, v) for u, v in h.edges)


def is_tree(h: Graph) -> bool:
    return h.n >= 1 and h.m == h.n - 1 and len(components(h)) == 1


def verify_path(g: Graph, p: list[int], closed: bool = False) -> Verdict:
    if len(set(p)) != len(p):
        return Verdict(False, "repeated vertex")
    if closed and len(p) < 3:
        return Verdict(False, "cycle too short")
    if not closed and len(p) < 1:
        return Verdict(False, "empty path")
    for u, v in path_edges(p, closed=closed):
        if not g.has_edge(u, v):
            return Verdict(False, f"missing edge {u}-{v}")
    return Verdict(True)


def verify_tree(g: Graph, t: Graph, roots: Iterable[int], bound: int,
                leaves: Iterable[int] = ()) -> Verdict:
    if not is_subgraph(t, g):
        return Verdict(False, "not a subgraph")
    if not is_tree(t):
        return Verdict(False, "not a tree")
    if not frozenset(roots) <= t.vertex_set:
        return Verdict(False, "root coverage")
    if t.max_degree() > bound:
        return Verdict(False, f"degree {t.max_degree()} exceeds bound {bound}")
    for x in leaves:
        if x not in t or (t.n > 1 and t.degree(x) != 1):
            return Verdict(False, f"vertex {x} is not a leaf")
    return Verdict(True)


def verify_x_path(g: Graph, p: list[int], roots: Iterable[int], start: int | None = None,
                  end: int | None = None, forced: Iterable[Edge] = ()) -> Verdict:
    ok = verify_path(g, p)
    if not ok:
        return ok
    if not frozenset(roots) <= set(p):
        return Verdict(False, "root coverage")
    if start is not None and end is not None and {p[0], p[-1]} != {start, end}:
        return Verdict(False, "wrong endpoints")
    used = set(path_edges(p))
    for e in forced:
        if norm_edge(*e) not in used:
            return Verdict(False, f"forced edge {e} missing")
    return Verdict(True)


def verify_x_cycle(g: Graph, cyc: list[int], roots: Iterable[int], avoid: Iterable[int] = ()) -> Verdict:
    ok = verify_path(g, cyc, closed=True)
    if not ok:
        return ok
    avoid = frozenset(avoid)
    if avoid & set(cyc):
        return Verdict(False, "cycle meets an avoided vertex")
    if not (frozenset(roots) - avoid) <= set(cyc):
        return Verdict(False, "root coverage")
    return Verdict(True)


def verify_generalized(g: Graph, gs: GeneralizedStructure, roots: Iterable[int]) -> Verdict:
    roots = frozenset(roots)
    ok = verify_path(g, gs.spine, closed=gs.closed)
    if not ok:
        return Verdict(False, f"spine: {ok.reason}")
    spine_set = set(gs.spine)
    spine_edges = set(gs.spine_edges)
    seen: set[int] = set()
    covered = roots & spine_set
    for x, p in gs.attachments:
        ok = verify_path(g, p)
        if not ok:
            return Verdict(False, f"attachment {x}: {ok.reason}")
        if p[0] != x:
            return Verdict(False, f"attachment {x} does not start at its root")
        if roots & set(p) != {x}:
            return Verdict(False, f"attachment {x} meets another root")
        if spine_set & set(p) != {p[-1]}:
            return Verdict(False, f"attachment {x} does not meet the spine in exactly its end")
        if set(path_edges(p)) & spine_edges:
            return Verdict(False, "edge disjointness")
        if seen & set(p):
            return Verdict(False, "attachment disjointness")
        seen |= set(p)
        covered |= {x}
    if covered != roots:
        return Verdict(False, "root coverage")
    return Verdict(True)


def is_two_connected(h: Graph) -> bool:
    if h.n < 3 or len(components(h)) != 1:
        return False
    return all(len(components(induced_subgraph(h, h.vertex_set - {v}))) == 1 for v in h.vertices)


def verify_subgraph(g: Graph, h: Graph, roots: Iterable[int], max_degree: int) -> Verdict:
    """Check an X-spanning 2-connected subgraph of bounded maximum degree."""
    if not is_subgraph(h, g):
        return Verdict(False, "not a subgraph")
    if not frozenset(roots) <= h.vertex_set:
        return Verdict(False, "root coverage")
    if not is_two_connected(h):
        return Verdict(False, "not 2-connected")
    if h.max_degree() > max_degree:
        return Verdict(False, f"degree {h.max_degree()} exceeds {max_degree}")
    return Verdict(True)
