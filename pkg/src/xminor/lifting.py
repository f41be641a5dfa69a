"""Carry spanning structures of an X-minor back to the host graph.

A path or cycle of the minor becomes a generalized path or cycle of the host:
consecutive bags are joined by one host edge each, and inside a bag the
entry and exit vertices are linked by a shortest path. Roots missed by this
spine are hung on it by a path inside their own bag.

A spanning tree of the minor becomes a tree of the host whose degrees grow by
at most one: inside each bag, the endpoints of the chosen inter-bag edges are
spanned by a small Steiner tree (every leaf is such an endpoint).
"""

from __future__ import annotations

import logging
from itertools import combinations

from .errors import InvalidArgument
from .graph import Edge, Graph, induced_subgraph, norm_edge, path_edges, shortest_path
from .minors import Certificate, SubdivisionEmbedding, verify_certificate
from .oracles import spanning_tree_with_caps
from .structures import DegreeBoundedTree, GeneralizedStructure, is_tree, verify_path

log = logging.getLogger(__name__)


def _require_valid(c: Certificate) -> None:
    ok = verify_certificate(c)
    if not ok:
        raise InvalidArgument(f"invalid certificate: {ok.reason}")


def _connector(c: Certificate, u: int, v: int) -> Edge:
    """The least host edge between bags u and v, oriented (end in V_u, end in V_v)."""
    found = c.edges_between(u, v)
    if not found:
        raise InvalidArgument(f"no host edge between bags {u} and {v}")
    return found[0]


def _inside(c: Certificate, v: int, a: int, b: int) -> list[int]:
    if a == b:
        return [a]
    q = shortest_path(c.host, a, [b], within=c.bags[v])
    assert q is not None, "bags are connected"
    return q


def _lift_spine(c: Certificate, seq: list[int], closed: bool) -> GeneralizedStructure:
    k = len(seq)
    links = [_connector(c, seq[i], seq[(i + 1) % k]) for i in range(k if closed else k - 1)]
    spine: list[int] = []
    for i, v in enumerate(seq):
        entry = links[i - 1][1] if (closed or i > 0) else None
        exit_ = links[i][0] if (closed or i < k - 1) else None
        if entry is None and exit_ is None:
            spine.append(v)
        elif entry is None or exit_ is None:
            spine.append(entry if exit_ is None else exit_)
        else:
            spine.extend(_inside(c, v, entry, exit_))
    gs = GeneralizedStructure(spine, closed)
    on_spine = set(spine)
    for x in sorted(c.roots - on_spine):
        bag = c.bags[x]
        p = shortest_path(c.host, x, on_spine & bag, within=bag)
        assert p is not None, "every bag on the spine meets it"
        gs.attachments.append((x, p))
    return gs


def lift_path(c: Certificate, p: list[int]) -> GeneralizedStructure:
    """An X-spanning generalized path of the host from an X-spanning path of the minor."""
    _require_valid(c)
    ok = verify_path(c.minor, p)
    if not ok:
        raise InvalidArgument(f"not a path of the minor: {ok.reason}")
    if not c.roots <= set(p):
        raise InvalidArgument("path does not visit every root")
    return _lift_spine(c, list(p), closed=False)


def lift_cycle(c: Certificate, cy: list[int]) -> GeneralizedStructure:
    """An X-spanning generalized cycle of the host from an X-spanning cycle of the minor."""
    _require_valid(c)
    ok = verify_path(c.minor, cy, closed=True)
    if not ok:
        raise InvalidArgument(f"not a cycle of the minor: {ok.reason}")
    if not c.roots <= set(cy):
        raise InvalidArgument("cycle does not visit every root")
    return _lift_spine(c, list(cy), closed=True)


# ------------------------------------------------------------------- trees
def bag_steiner_tree(g: Graph, bag: frozenset[int], terminals: list[int]) -> set[Edge]:
    """A tree inside ``bag`` spanning ``terminals`` whose leaves are all terminals.

    Grown by repeatedly joining the nearest outside terminal along a shortest
    path. The degree bounds (|T| - 1 on terminals, |T| elsewhere) are checked
    afterwards; if they fail, an exhaustive search takes over.
    """
    tree_vertices = {terminals[0]}
    edges: set[Edge] = set()
    pending = set(terminals[1:])
    while pending:
        best: list[int] | None = None
        for term in sorted(pending):
            q = shortest_path(g, term, tree_vertices, within=bag)
            assert q is not None, "bags are connected"
            if best is None or len(q) < len(best):
                best = q
        assert best is not None
        edges.update(path_edges(best))
        tree_vertices.update(best)
        pending -= set(best)
    if not _steiner_degrees_ok(edges, terminals):
        log.warning("greedy bag tree broke the degree bounds; using exhaustive search")
        edges = _exhaustive_steiner(g, bag, terminals)
    return edges


def _steiner_degrees_ok(edges: set[Edge], terminals: list[int]) -> bool:
    term = set(terminals)
    deg: dict[int, int] = {}
    for a, b in edges:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    bound = len(term)
    return all(d <= (bound - 1 if w in term else bound) for w, d in deg.items())


def _exhaustive_steiner(g: Graph, bag: frozenset[int], terminals: list[int]) -> set[Edge]:
    term = frozenset(terminals)
    others = sorted(bag - term)
    for size in range(len(others) + 1):
        for extra in combinations(others, size):
            keep = term | frozenset(extra)
            caps = {w: (len(term) - 1 if w in term else len(term)) for w in keep}
            found = spanning_tree_with_caps(induced_subgraph(g, keep), caps)
            if found is not None:
                return set(found)
    raise AssertionError("no bag tree within the degree bounds")


def lift_tree(c: Certificate, t: Graph, bound: int) -> DegreeBoundedTree:
    """An X-spanning tree of the host with max degree <= bound + 1 from a spanning t-tree of the minor."""
    _require_valid(c)
    if t.vertex_set != c.minor.vertex_set or not is_tree(t):
        raise InvalidArgument("not a spanning tree of the minor")
    if any(not c.minor.has_edge(u, v) for u, v in t.edges):
        raise InvalidArgument("tree uses a non-edge of the minor")
    if t.max_degree() > bound:
        raise InvalidArgument(f"tree degree {t.max_degree()} exceeds bound {bound}")
    ends: dict[int, set[int]] = {v: set() for v in t.vertices}
    edges: set[Edge] = set()
    for u, v in t.edges:
        a, b = _connector(c, u, v)
        ends[u].add(a)
        ends[v].add(b)
        edges.add(norm_edge(a, b))
    covered: set[int] = set()
    for v in t.vertices:
        terminals = sorted(ends[v]) or [v]
        edges |= bag_steiner_tree(c.host, c.bags[v], terminals)
        covered.update(terminals)
    covered.update(w for e in edges for w in e)
    # a bag holds no root but its own minor vertex, so each bag gets at most one attachment
    for x in sorted(c.roots):
        if x in covered:
            continue
        bag = c.bags[x]
        q = shortest_path(c.host, x, covered & bag, within=bag)
        assert q is not None
        edges.update(path_edges(q))
        covered.update(q)
    tree = Graph.from_edges(sorted(edges), vertices=covered)
    return DegreeBoundedTree(tree, bound + 1)


def lift_subdivision(e: SubdivisionEmbedding, h: Graph) -> Graph:
    """The image of a subgraph ``h`` of the minor: every edge becomes its subdivision path."""
    if not h.vertex_set <= e.minor.vertex_set or any(not e.minor.has_edge(*uv) for uv in h.edges):
        raise InvalidArgument("h is not a subgraph of the minor")
    edges: set[Edge] = set()
    verts = set(h.vertices)
    for uv in h.edges:
        p = e.path_map[norm_edge(*uv)]
        edges.update(path_edges(list(p)))
        verts.update(p)
    return Graph.from_edges(sorted(edges), vertices=verts)
