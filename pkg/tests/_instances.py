"""Deterministic instance supplies shared by the test modules."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from xminor.connectivity import RootedGraph, is_x_separator, kappa_x
from xminor.generators import gen_random_planar, random_graph, sample_roots
from xminor.graph import Graph, components, contract_edge, induced_subgraph


def planar_rooted(count: int, need: int, n_range: tuple[int, int], size_range: tuple[int, int],
                  seed: int, want_root_edge: bool = False) -> list[RootedGraph]:
    """``count`` random planar triangulations with a sampled root set of kappa_x >= need."""
    rng = random.Random(seed)
    out: list[RootedGraph] = []
    attempt = 0
    while len(out) < count:
        attempt += 1
        if attempt > 200 * count:
            raise RuntimeError("could not sample enough instances")
        n = rng.randint(*n_range)
        g = gen_random_planar(n, rng.randrange(10**9))
        size = rng.randint(*size_range)
        roots = sample_roots(g, need, size, rng.randrange(10**9))
        if len(roots) < max(need + 1, 2):
            continue
        rg = RootedGraph(g, roots)
        if kappa_x(rg, cap=need) < need:
            continue
        if want_root_edge and not any(g.has_edge(a, b) for a, b in combinations(sorted(roots), 2)):
            continue
        out.append(rg)
    return out


def random_rooted(rng: random.Random, n_lo: int, n_hi: int, min_roots: int = 1) -> RootedGraph:
    n = rng.randint(max(n_lo, min_roots), n_hi)
    g = random_graph(n, rng.uniform(0.2, 0.8), rng)
    roots = frozenset(rng.sample(range(n), rng.randint(min_roots, n)))
    return RootedGraph(g, roots)


def legal_edges(rg: RootedGraph) -> Iterator[tuple[int, int]]:
    for u, v in rg.graph.edges:
        if v not in rg.roots:
            yield u, v
        if u not in rg.roots:
            yield v, u


def separators_containing(rg: RootedGraph, size: int, must: frozenset[int]) -> list[frozenset[int]]:
    """All X-separators of exactly ``size`` vertices that contain ``must`` (by enumeration)."""
    rest = sorted(rg.graph.vertex_set - must)
    found = []
    for extra in combinations(rest, size - len(must)):
        s = must | frozenset(extra)
        if is_x_separator(rg, s):
            found.append(s)
    return found


def connected_random_graph(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        g = random_graph(n, p, rng)
        if len(components(g)) == 1:
            return g


def largest_component(g: Graph) -> Graph:
    return induced_subgraph(g, max(components(g), key=len))


def random_certificate(rng: random.Random, n_lo: int = 5, n_hi: int = 12, contractions: int | None = None):
    """A random connected rooted graph and a certificate for a random sequence of X-legal contractions."""
    from xminor.minors import Certificate

    n = rng.randint(n_lo, n_hi)
    g = connected_random_graph(rng, n, rng.uniform(0.25, 0.6))
    roots = frozenset(rng.sample(range(n), rng.randint(1, max(1, n // 2))))
    m = g
    bags = {v: {v} for v in g.vertices}
    steps = rng.randint(0, n - len(roots)) if contractions is None else contractions
    for _ in range(steps):
        legal = [(u, v) for u, v in m.edges if v not in roots] + [(v, u) for u, v in m.edges if u not in roots]
        if not legal:
            break
        u, v = rng.choice(legal)
        m = contract_edge(m, u, v)
        bags[u] |= bags.pop(v)
    return Certificate(m, {v: frozenset(b) for v, b in bags.items()}, g, roots)
