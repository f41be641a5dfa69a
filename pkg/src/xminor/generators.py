"""Instance families: the three sharpness examples (G_t, F_l, H_l) and test fixtures.

The sharpness examples are only described by drawings, so each constructor
re-derives the published numbers (vertex counts, degrees, kappa of the white
set) on the graph it builds and refuses to return a graph that disagrees.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Hashable

from .connectivity import RootedGraph, kappa_x, local_connectivity
from .errors import ConstructionError, InvalidArgument
from .graph import Graph
from .io import Names


@dataclass
class FamilyInstance:
    rooted: RootedGraph
    family: str
    params: list[int]
    facts: dict[str, int]
    names: Names = field(default_factory=Names)

    @property
    def graph(self) -> Graph:
        return self.rooted.graph

    @property
    def roots(self) -> frozenset[int]:
        return self.rooted.roots


class _Builder:
    """Collects labelled vertices and edges, then freezes them into a Graph."""

    def __init__(self) -> None:
        self.ids: dict[Hashable, int] = {}
        self.names = Names()
        self.edges: set[tuple[int, int]] = set()

    def v(self, key: Hashable, name: str | None = None) -> int:
        if key not in self.ids:
            vid = len(self.ids)
            self.ids[key] = vid
            self.names.add(vid, name or "_".join(str(p) for p in (key if isinstance(key, tuple) else (key,))))
        return self.ids[key]

    def e(self, a: Hashable, b: Hashable) -> None:
        u, w = self.v(a), self.v(b)
        if u == w:
            raise ConstructionError(f"loop at {a!r}")
        self.edges.add((min(u, w), max(u, w)))

    def path(self, keys: list[Hashable]) -> None:
        for a, b in zip(keys, keys[1:]):
            self.e(a, b)

    def graph(self) -> Graph:
        return Graph.from_edges(sorted(self.edges), vertices=self.ids.values())


def _measure(g: Graph, whites: frozenset[int]) -> dict[str, int]:
    blacks = [v for v in g.vertices if v not in whites]
    white_deg = {g.degree(w) for w in whites}
    return {
        "white_count": len(whites),
        "black_count": len(blacks),
        "white_degree": white_deg.pop() if len(white_deg) == 1 else -1,
        "black_max_degree": max((g.degree(b) for b in blacks), default=0),
        "black_min_degree": min((g.degree(b) for b in blacks), default=0),
        "kappa": kappa_x(RootedGraph(g, whites)),
    }


def _validate(family: str, measured: dict[str, int], expected: dict[str, int]) -> None:
    for key, want in expected.items():
        if key == "black_max_degree":
            ok = measured[key] <= want
        else:
            ok = measured[key] == want
        if not ok:
            raise ConstructionError(f"{family}: {key} is {measured[key]}, expected {want}")


def gen_gt(t: int) -> FamilyInstance:
    """The t-fold rotational graph with t white roots of degree 6 and 4t black vertices of degree 4."""
    if t < 7:
        raise InvalidArgument("gen_gt needs t >= 7")
    b = _Builder()
    for i in range(t):
        for part in "mabcr":
            b.v((part, i), f"{part}{i}")
    for i in range(t):
        p = (i - 1) % t
        b.e(("m", i), ("m", p))
        b.e(("m", p), ("a", i))
        b.e(("m", i), ("b", i))
        b.e(("a", i), ("b", i))
        b.e(("b", i), ("c", i))
        b.e(("a", i), ("c", p))
        for part in "abc":
            b.e((part, i), ("r", i))
        b.e(("c", p), ("r", i))
        b.e(("r", i), ("r", p))
    g = b.graph()
    whites = frozenset(b.ids[("r", i)] for i in range(t))
    measured = _measure(g, whites)
    expected = {"white_count": t, "black_count": 4 * t, "white_degree": 6,
                "black_max_degree": 4, "black_min_degree": 4, "kappa": 6}
    _validate("G_t", measured, expected)
    return FamilyInstance(RootedGraph(g, whites), "GT", [t], measured, b.names)


def gen_fl(l: int, whites: int) -> FamilyInstance:
    """Ladder strip of l rows whose bottom-row groups of l columns hang off the white roots.

    Interior columns are doubled (an ``a``/``b`` pair per row, joined by a
    diagonal ``b(y) - a(y+1)``) except in the last row, which keeps every
    black vertex at degree at most 3.
    """
    if l < 4:
        raise InvalidArgument("gen_fl needs l >= 4")
    if whites < l + 1:
        raise InvalidArgument("gen_fl needs at least l + 1 white vertices")
    cols = l * whites
    last = cols - 1
    b = _Builder()

    def top(x: int) -> tuple:
        return ("v", x, 0) if x in (0, last) else ("v", x, 0, "a")

    for y in range(l):
        row: list[tuple] = [("v", 0, y)]
        for x in range(1, last):
            row += [("v", x, y)] if y == l - 1 else [("v", x, y, "a"), ("v", x, y, "b")]
        row.append(("v", last, y))
        b.path(row)
    for x in (0, last):
        b.path([("v", x, y) for y in range(l)])
    for x in range(1, last):
        for y in range(l - 2):
            b.e(("v", x, y, "b"), ("v", x, y + 1, "a"))
        b.e(("v", x, l - 2, "b"), ("v", x, l - 1))
    white_ids = []
    for j in range(whites):
        w = b.v(("w", j), f"w{j}")
        white_ids.append(w)
        for x in range(j * l, (j + 1) * l):
            b.e(("w", j), top(x))
    g = b.graph()
    roots = frozenset(white_ids)
    measured = _measure(g, roots)
    _validate("F_l", measured, {"white_count": whites, "white_degree": l, "black_max_degree": 3, "kappa": l})
    return FamilyInstance(RootedGraph(g, roots), "FL", [l, whites], measured, b.names)


def gen_hl(l: int) -> FamilyInstance:
    """An l x l(l+1) grid with l+1 white roots, each joined to l consecutive top-row vertices.

    The published facts are asserted for l >= 6; smaller l (test scale) only
    has its measured facts recorded, plus kappa = l checked by flow.
    """
    if l < 2:
        raise InvalidArgument("gen_hl needs l >= 2")
    cols = l * (l + 1)
    b = _Builder()
    for y in range(l):
        b.path([("v", x, y) for x in range(cols)])
    for x in range(cols):
        b.path([("v", x, y) for y in range(l)])
    white_ids = []
    for j in range(l + 1):
        white_ids.append(b.v(("w", j), f"w{j}"))
        for x in range(j * l, (j + 1) * l):
            b.e(("w", j), ("v", x, 0))
    g = b.graph()
    roots = frozenset(white_ids)
    measured = _measure(g, roots)
    expected = {"white_count": l + 1, "black_count": l * l * (l + 1), "white_degree": l, "kappa": l}
    _validate("H_l", measured, expected)
    return FamilyInstance(RootedGraph(g, roots), "HL", [l], measured, b.names)


# ------------------------------------------------------------ random planar
def gen_random_planar(n: int, seed: int, flips: int | None = None) -> Graph:
    """Random planar triangulation on ``n`` vertices, deterministic in ``seed``.

    Vertices are stacked into uniformly chosen faces; a round of random edge
    flips follows so that the result is not always a stacked (3-connected but
    never 4-connected) triangulation.
    """
    if n < 4:
        raise InvalidArgument("gen_random_planar needs n >= 4")
    rng = random.Random(seed)
    faces: list[tuple[int, int, int]] = [(0, 1, 2), (0, 2, 1)]
    for v in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        faces += [(a, b, v), (b, c, v), (c, a, v)]
    flips = 2 * n if flips is None else flips
    for _ in range(flips):
        _random_flip(faces, rng)
    edges = {(min(p, q), max(p, q)) for f in faces for p, q in ((f[0], f[1]), (f[1], f[2]), (f[2], f[0]))}
    return Graph.from_edges(sorted(edges), vertices=range(n))


def _random_flip(faces: list[tuple[int, int, int]], rng: random.Random) -> bool:
    i = rng.randrange(len(faces))
    f = faces[i]
    k = rng.randrange(3)
    a, b, c = f[k], f[(k + 1) % 3], f[(k + 2) % 3]
    j = next(idx for idx, h in enumerate(faces) if idx != i and _has_directed(h, b, a))
    h = faces[j]
    d = next(x for x in h if x not in (a, b))
    if c == d:
        return False
    edges = {(min(p, q), max(p, q)) for g in faces for p, q in ((g[0], g[1]), (g[1], g[2]), (g[2], g[0]))}
    if (min(c, d), max(c, d)) in edges:
        return False
    faces[i] = (c, a, d)
    faces[j] = (d, b, c)
    return True


def _has_directed(face: tuple[int, int, int], p: int, q: int) -> bool:
    return any(face[k] == p and face[(k + 1) % 3] == q for k in range(3))


def sample_roots(g: Graph, k: int, size: int, seed: int) -> frozenset[int]:
    """Greedy root sampling: keep a vertex if it has k disjoint paths to every chosen root.

    The result has kappa_x >= min(k, |X| - 1); it may be smaller than ``size``.
    """
    rng = random.Random(seed)
    order = [v for v in g.vertices if g.degree(v) >= k]
    rng.shuffle(order)
    chosen: list[int] = []
    for v in order:
        if len(chosen) == size:
            break
        if all(g.has_edge(v, x) or local_connectivity(g, v, x, cap=k) >= k for x in chosen):
            chosen.append(v)
    return frozenset(chosen)


# ------------------------------------------------- small plane fixtures
@dataclass
class PlaneFixture:
    """A small 2-connected plane graph with its exterior cycle (vertex order)."""

    name: str
    graph: Graph
    exterior: list[int]

    @property
    def exterior_edges(self) -> list[tuple[int, int]]:
        cyc = self.exterior
        return [(min(a, b), max(a, b)) for a, b in zip(cyc, cyc[1:] + cyc[:1])]


def wheel(n: int) -> PlaneFixture:
    """W_n: an n-cycle 0..n-1 (the exterior) plus hub n."""
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return PlaneFixture(f"W{n}", Graph.from_edges(edges), list(range(n)))


def prism(n: int) -> PlaneFixture:
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return PlaneFixture(f"prism{n}", Graph.from_edges(edges), list(range(n)))


def antiprism(n: int) -> PlaneFixture:
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)] + [(i, n + (i + 1) % n) for i in range(n)]
    return PlaneFixture(f"antiprism{n}", Graph.from_edges(edges), list(range(n)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges([(i, j) for i in range(n) for j in range(i + 1, n)], vertices=range(n))


def path_graph(n: int) -> Graph:
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], vertices=range(n))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges([(i, a + j) for i in range(a) for j in range(b)], vertices=range(a + b))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(edges, vertices=range(n))
