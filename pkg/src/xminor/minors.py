"""Rooted (X-) minors: X-legal contraction search, certificates and topological minors."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .connectivity import (
    RootedGraph,
    Separator,
    SplitNetwork,
    _nonadjacent_root_pairs,
    is_k_connected,
    kappa_at_least,
    kappa_x,
    min_separator,
)
from .errors import InvalidArgument, PreconditionError
from .graph import (
    Edge,
    Graph,
    components,
    contract_edge,
    delete_vertices,
    induced_subgraph,
    is_connected,
    norm_edge,
    shortest_path,
)

log = logging.getLogger(__name__)

ALREADY_4_CONNECTED = "already-4-connected"
ALREADY_CONNECTED = "already-k-connected"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class Certificate:
    """Bags ``V_v`` of the host, one per minor vertex, witnessing ``minor`` as an X-minor."""

    minor: Graph
    bags: dict[int, frozenset[int]]
    host: Graph
    roots: frozenset[int]

    @classmethod
    def identity(cls, rg: RootedGraph) -> "Certificate":
        g = rg.graph
        return cls(g, {v: frozenset([v]) for v in g.vertices}, g, rg.roots)

    def bag_of(self) -> dict[int, int]:
        """Map from host vertex to the minor vertex whose bag holds it."""
        return {w: v for v, bag in self.bags.items() for w in bag}

    def edges_between(self, u: int, v: int) -> list[Edge]:
        """Host edges joining bags ``u`` and ``v``, least first, oriented (in V_u, in V_v)."""
        bv = self.bags[v]
        found = [(a, b) for a in self.bags[u] for b in self.host.neighbors(a) if b in bv]
        return sorted(found, key=lambda ab: (norm_edge(*ab), ab))


@dataclass
class ContractionTrace:
    steps: list[tuple[int, int]]
    initial: Graph
    final: Graph
    roots: frozenset[int] = field(default_factory=frozenset)

    def replay(self) -> Graph:
        """Re-run the contractions, checking each one is an X-legal edge when applied."""
        g = self.initial
        for kept, absorbed in self.steps:
            if absorbed in self.roots:
                raise InvalidArgument(f"step ({kept}, {absorbed}) absorbs a root")
            g = contract_edge(g, kept, absorbed)
        return g


@dataclass
class SubdivisionEmbedding:
    """Paths of the host realising each edge of ``minor``; branch vertices map to themselves."""

    minor: Graph
    path_map: dict[Edge, tuple[int, ...]]

    def host_vertices(self) -> frozenset[int]:
        out = set(self.minor.vertices)
        for p in self.path_map.values():
            out.update(p)
        return frozenset(out)


# ------------------------------------------------------------ basic checks
def is_x_legal(rg: RootedGraph, x: int, y: int) -> bool:
    if not rg.graph.has_edge(x, y):
        raise InvalidArgument(f"{x}-{y} is not an edge")
    return y not in rg.roots


def _legal_edges(g: Graph, roots: frozenset[int]) -> Iterator[tuple[int, int]]:
    for v in g.vertices:
        for y in sorted(g.neighbors(v)):
            if y not in roots:
                yield v, y


def kappa_drop_witness(rg: RootedGraph, v: int, y: int) -> Separator | None:
    """A minimum X-separator containing both ``v`` and ``y``, if one exists.

    Such a separator exists exactly when contracting ``vy`` lowers kappa_x by one.
    """
    if not is_x_legal(rg, v, y):
        raise InvalidArgument(f"({v}, {y}) is not X-legal")
    kappa = kappa_x(rg)
    if kappa < 2:
        return None
    removed = frozenset((v, y))
    net = SplitNetwork(rg.graph)
    for a, b in _nonadjacent_root_pairs(rg):
        if a in removed or b in removed:
            continue
        value, cut = net.flow(a, b, kappa - 1, removed=removed)
        if value <= kappa - 2:
            sep = cut | removed
            assert len(sep) == kappa
            return Separator(sep, (a, b))
    return None


# ------------------------------------------------------- 4-connected minors
def _root_component(rg: RootedGraph) -> Graph:
    g = rg.graph
    for comp in components(g):
        if rg.roots <= comp:
            return induced_subgraph(g, comp)
    raise PreconditionError("roots do not lie in a single component")


def _safe_contraction(g: Graph, roots: frozenset[int], k: int = 4,
                      hint: list[tuple[int, int]] | None = None) -> tuple[int, int] | str:
    if is_k_connected(g, k):
        return ALREADY_4_CONNECTED if k == 4 else ALREADY_CONNECTED
    hint = [] if hint is None else hint
    for v, y in _legal_edges(g, roots):
        if kappa_at_least(RootedGraph(contract_edge(g, v, y), roots), k, hint):
            return v, y
    raise RuntimeError(f"no kappa-preserving X-legal contraction although the graph is not {k}-connected")


def find_safe_contraction(rg: RootedGraph, k: int = 4) -> tuple[int, int] | str:
    """The least X-legal edge whose contraction keeps kappa_x >= k, or ``ALREADY_4_CONNECTED``."""
    _check_k(k)
    if not is_connected(rg.graph):
        raise InvalidArgument("graph must be connected")
    if kappa_x(rg, cap=k) < k:
        raise PreconditionError(f"kappa_x < {k}")
    return _safe_contraction(rg.graph, rg.roots, k)


def _check_k(k: int) -> None:
    if k not in (1, 2, 3, 4):
        raise InvalidArgument("k-connected X-minors are only guaranteed for k in 1..4")


def connected_x_minor(rg: RootedGraph, k: int) -> tuple[Certificate, ContractionTrace]:
    """A k-connected X-minor (k <= 4) by repeated kappa-preserving X-legal contractions."""
    _check_k(k)
    if kappa_x(rg, cap=k) < k:
        raise PreconditionError(f"kappa_x < {k}")
    g0 = _root_component(rg)
    g = g0
    bags = {v: {v} for v in g0.vertices}
    steps: list[tuple[int, int]] = []
    hint: list[tuple[int, int]] = []
    while True:
        step = _safe_contraction(g, rg.roots, k, hint)
        if isinstance(step, str):
            break
        v, y = step
        g = contract_edge(g, v, y)
        bags[v] |= bags.pop(y)
        steps.append((v, y))
    log.debug("%d-connected X-minor after %d contractions (n=%d)", k, len(steps), g.n)
    cert = Certificate(g, {v: frozenset(b) for v, b in bags.items()}, rg.graph, rg.roots)
    return cert, ContractionTrace(steps, g0, g, rg.roots)


def four_connected_x_minor(rg: RootedGraph) -> tuple[Certificate, ContractionTrace]:
    return connected_x_minor(rg, 4)


# ------------------------------------------------------ topological minors
def topological_x_minor(rg: RootedGraph, k: int) -> tuple[Graph, SubdivisionEmbedding]:
    """A k-connected topological X-minor (k <= 3) together with its subdivision paths.

    Repeatedly cut off an X-free side of a smallest separator, completing the
    separator to a clique; on the way back, any completion edge that the
    smaller minor uses is routed through the side that was cut off.
    """
    if k not in (1, 2, 3):
        raise InvalidArgument("topological X-minors are only guaranteed for k in 1..3")
    if kappa_x(rg, cap=k) < k:
        raise PreconditionError(f"kappa_x < {k}")
    stages: list[tuple[Graph, frozenset[int], list[Edge]]] = []
    g = _root_component(rg)
    while not is_k_connected(g, k):
        sep = min_separator(g)
        assert sep is not None and len(sep) < k
        rest = delete_vertices(g, sep)
        cut_off = frozenset().union(*(c for c in components(rest) if not c & rg.roots))
        assert cut_off, "every side of a small separator holds a root"
        added = [e for e in combinations(sorted(sep), 2) if not g.has_edge(*e)]
        stages.append((g, cut_off, added))
        g = induced_subgraph(g, g.vertex_set - cut_off).add_edges(added)
    minor = g
    paths: dict[Edge, tuple[int, ...]] = {e: e for e in minor.edges}
    for host, cut_off, added in reversed(stages):
        for u, v in added:
            q = shortest_path(host, u, [v], within=cut_off | {u, v})
            assert q is not None
            for key, p in paths.items():
                paths[key] = _splice(p, u, v, q)
    return minor, SubdivisionEmbedding(minor, paths)


def _splice(path: tuple[int, ...], u: int, v: int, q: list[int]) -> tuple[int, ...]:
    out: list[int] = [path[0]]
    for a, b in zip(path, path[1:]):
        if (a, b) == (u, v):
            out.extend(q[1:])
        elif (a, b) == (v, u):
            out.extend(reversed(q[:-1]))
        else:
            out.append(b)
    return tuple(out)


# ------------------------------------------------------------ verification
def verify_certificate(c: Certificate) -> Verdict:
    g, m = c.host, c.minor
    if set(c.bags) != m.vertex_set:
        return Verdict(False, "bag index")
    if any(not bag for bag in c.bags.values()):
        return Verdict(False, "bag nonempty")
    seen: set[int] = set()
    for bag in c.bags.values():
        if bag & seen:
            return Verdict(False, "bag disjointness")
        seen |= bag
    if not seen <= g.vertex_set:
        return Verdict(False, "bag membership")
    for bag in c.bags.values():
        if len(components(induced_subgraph(g, bag))) != 1:
            return Verdict(False, "bag connectivity")
    for v, bag in c.bags.items():
        if v not in bag:
            return Verdict(False, "self-containment")
    if not c.roots <= m.vertex_set:
        return Verdict(False, "root coverage")
    for u, v in m.edges:
        if not c.edges_between(u, v):
            return Verdict(False, "edge witness")
    return Verdict(True)


def verify_embedding(e: SubdivisionEmbedding, host: Graph, roots: Iterable[int] = ()) -> Verdict:
    m = e.minor
    if not frozenset(roots) <= m.vertex_set:
        return Verdict(False, "root coverage")
    if not m.vertex_set <= host.vertex_set:
        return Verdict(False, "branch vertices")
    if set(e.path_map) != set(m.edges):
        return Verdict(False, "path index")
    inner_seen: set[int] = set()
    for (u, v), p in e.path_map.items():
        if p[0] != u or p[-1] != v:
            return Verdict(False, "path endpoints")
        if any(not host.has_edge(a, b) for a, b in zip(p, p[1:])):
            return Verdict(False, "path edges")
        inner = set(p[1:-1])
        if len(inner) != len(p) - 2 or inner & m.vertex_set or inner & inner_seen:
            return Verdict(False, "path disjointness")
        inner_seen |= inner
    return Verdict(True)


def embedding_certificate(e: SubdivisionEmbedding, host: Graph, roots: Iterable[int]) -> Certificate:
    """Certificate obtained by contracting each subdivision path onto one of its ends."""
    bags = {v: {v} for v in e.minor.vertices}
    for (u, _v), p in e.path_map.items():
        bags[u].update(p[1:-1])
    return Certificate(e.minor, {v: frozenset(b) for v, b in bags.items()}, host, frozenset(roots))
