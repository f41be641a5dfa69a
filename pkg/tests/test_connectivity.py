import random
from itertools import chain, combinations

import pytest

from xminor.connectivity import (
    Fragment,
    RootedGraph,
    Separator,
    clique_completion_reduce,
    cross_separator,
    is_k_connected,
    is_x_separator,
    kappa_x,
    local_connectivity,
    min_separator,
    min_vertex_cut,
    min_x_separator,
    vertex_connectivity,
    x_fragments,
)
from xminor.errors import InvalidArgument
from xminor.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    gen_fl,
    gen_gt,
    path_graph,
    random_graph,
)
from xminor.graph import Graph, components, delete_vertices
from xminor.oracles import kappa_x_brute

from _instances import random_rooted


@pytest.fixture(scope="module")
def gt7():
    return gen_gt(7)


@pytest.fixture(scope="module")
def fl45():
    return gen_fl(4, 5)


def rooted(g, roots):
    return RootedGraph(g, frozenset(roots))


# ------------------------------------------------------------ local flows
def test_local_connectivity_examples(gt7):
    assert local_connectivity(path_graph(3), 0, 2) == 1
    assert local_connectivity(cycle_graph(4), 0, 2) == 2
    r = gt7.names.id
    assert local_connectivity(gt7.graph, r("r0"), r("r2")) == 6
    assert local_connectivity(gt7.graph, r("r0"), r("r3")) == 6


@pytest.mark.parametrize("x,y", [(0, 1), (0, 0)])
def test_local_connectivity_rejects_adjacent_or_equal(x, y):
    with pytest.raises(InvalidArgument):
        local_connectivity(path_graph(3), x, y)


def test_local_connectivity_cap():
    assert local_connectivity(complete_bipartite(2, 5), 0, 1, cap=3) == 3


def test_min_vertex_cut_is_nearest_source():
    # 0 - {1,2} - 3 - 4 : both {1,2} and {3} cut 0 from 4; {3} is minimum
    g = Graph.from_edges([(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)])
    assert min_vertex_cut(g, 0, 4) == {3}
    assert min_vertex_cut(cycle_graph(4), 0, 2) == {1, 3}


# ------------------------------------------------------------------ kappa
def test_kappa_examples(gt7, fl45):
    assert kappa_x(rooted(complete_graph(5), range(5))) == 4
    assert kappa_x(gt7.rooted) == 6
    assert kappa_x(fl45.rooted) == 4
    two_triangles = Graph.from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert kappa_x(rooted(two_triangles, {0, 3})) == 0


def test_single_root_has_kappa_zero_and_no_separator():
    rg = rooted(cycle_graph(5), {2})
    assert kappa_x(rg) == 0
    assert min_x_separator(rg) is None


def test_empty_root_set_rejected():
    with pytest.raises(InvalidArgument):
        RootedGraph(cycle_graph(3), frozenset())
    with pytest.raises(InvalidArgument):
        RootedGraph(cycle_graph(3), frozenset({9}))


def test_kappa_cap_is_exact_below_cap():
    rng = random.Random(4)
    for _ in range(200):
        rg = random_rooted(rng, 2, 9, min_roots=2)
        full = kappa_x(rg)
        for cap in range(0, 5):
            assert kappa_x(rg, cap=cap) == min(full, cap)


def _all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges([p for i, p in enumerate(pairs) if mask >> i & 1], vertices=range(n))


def test_kappa_matches_enumeration_on_all_small_graphs():
    for n in range(1, 5):
        for g in _all_graphs(n):
            for size in range(1, n + 1):
                for roots in combinations(range(n), size):
                    rg = rooted(g, roots)
                    assert kappa_x(rg) == kappa_x_brute(rg)
    for g in _all_graphs(5):
        rg = rooted(g, range(5))
        assert kappa_x(rg) == kappa_x_brute(rg)


def test_kappa_matches_enumeration_on_random_graphs():
    rng = random.Random(8)
    for _ in range(500):
        rg = random_rooted(rng, 2, 8, min_roots=2)
        assert kappa_x(rg) == kappa_x_brute(rg)


def _min_pair_cut_brute(g, x, y):
    others = sorted(g.vertex_set - {x, y})
    for size in range(len(others) + 1):
        for s in combinations(others, size):
            rest = delete_vertices(g, s)
            if not any(x in c and y in c for c in components(rest)):
                return size
    raise AssertionError


def test_menger_duality_by_enumeration():
    rng = random.Random(3)
    checked = 0
    while checked < 200:
        g = random_graph(rng.randint(3, 8), rng.uniform(0.2, 0.7), rng)
        x, y = rng.sample(g.vertices, 2)
        if g.has_edge(x, y):
            continue
        assert local_connectivity(g, x, y) == _min_pair_cut_brute(g, x, y)
        checked += 1


# ------------------------------------------------------------ separators
def test_min_x_separator_examples(fl45):
    assert min_x_separator(rooted(complete_graph(5), range(5))) is None
    sep = min_x_separator(rooted(path_graph(3), {0, 2}))
    assert sep.vertices == {1} and sep.witnesses == (0, 2)
    sep = min_x_separator(fl45.rooted)
    assert len(sep) == 4
    assert is_x_separator(fl45.rooted, sep.vertices)


def test_min_x_separator_none_iff_roots_complete():
    rng = random.Random(5)
    for _ in range(300):
        rg = random_rooted(rng, 2, 9, min_roots=2)
        sep = min_x_separator(rg)
        assert (sep is None) == rg.graph.is_complete_on(rg.roots)
        if sep is not None:
            assert is_x_separator(rg, sep.vertices)
            a, b = sep.witnesses
            assert a in rg.roots and b in rg.roots
            assert not any(a in c and b in c for c in components(delete_vertices(rg.graph, sep.vertices)))
            k = kappa_x(rg)
            assert len(sep) >= k
            if k < len(rg.roots) - 1:
                assert len(sep) == k


def test_roots_may_sit_in_a_separator():
    # star: center 0 is a root and the only separator
    rg = rooted(complete_bipartite(1, 3), {0, 1, 2})
    sep = min_x_separator(rg)
    assert sep.vertices == {0}


def test_x_fragments_examples(fl45):
    frs = x_fragments(rooted(path_graph(3), {0, 2}), Separator(frozenset({1})))
    assert [(f.vertices, f.rooted) for f in frs] == [({0}, True), ({2}, True)]
    star = complete_bipartite(1, 3)
    frs = x_fragments(rooted(star, {1, 2}), Separator(frozenset({0})))
    assert [(f.vertices, f.rooted) for f in frs] == [({1}, True), ({2}, True), ({3}, False)]
    sep = min_x_separator(fl45.rooted)
    assert sum(f.rooted for f in x_fragments(fl45.rooted, sep)) >= 2


def test_x_fragments_rejects_non_separator():
    with pytest.raises(InvalidArgument):
        x_fragments(rooted(cycle_graph(5), {0, 2}), Separator(frozenset({1})))


# ------------------------------------------------------- clique completion
def test_reduce_pendant_leaf():
    g = Graph.from_edges([(0, 1), (1, 2), (2, 0), (2, 3)])
    rg = rooted(g, {0, 1})
    out = clique_completion_reduce(rg, {2}, {3})
    assert out.graph == Graph.from_edges([(0, 1), (1, 2), (2, 0)])


def test_reduce_blob_behind_two_separator():
    # path a-s-c-t-b with an unrooted blob {p, q} hanging on s and t
    a, s, c, t, b, p, q = range(7)
    g = Graph.from_edges([(a, s), (s, c), (c, t), (t, b), (s, p), (p, q), (q, t)])
    rg = rooted(g, {a, b})
    out = clique_completion_reduce(rg, {s, t}, {p, q})
    assert out.graph.vertex_set == {a, s, c, t, b}
    assert out.graph.has_edge(s, t)
    assert kappa_x(out) >= kappa_x(rg)


def test_reduce_k5_with_pendant_path():
    g = Graph.from_edges(complete_graph(5).edges + [(4, 5), (5, 6)])
    out = clique_completion_reduce(rooted(g, range(5)), {4}, {5, 6})
    assert out.graph == complete_graph(5)


@pytest.mark.parametrize("sep,frag", [
    ({2}, {0}),          # fragment holds a root
    ({2}, {2, 3}),       # fragment meets the separator
    ({2}, set()),        # empty
])
def test_reduce_rejects_bad_fragments(sep, frag):
    g = Graph.from_edges([(0, 1), (1, 2), (2, 0), (2, 3)])
    with pytest.raises(InvalidArgument):
        clique_completion_reduce(rooted(g, {0, 1}), sep, frag)


def test_reduce_rejects_partial_component():
    g = path_graph(5)  # 0-1-2-3-4, S={1}: component {2,3,4}
    with pytest.raises(InvalidArgument):
        clique_completion_reduce(rooted(g, {0}), {1}, {2, 3})


def _random_separator(rng, g):
    for _ in range(50):
        s = frozenset(rng.sample(g.vertices, rng.randint(1, max(1, g.n - 2))))
        comps = components(delete_vertices(g, s))
        if len(comps) >= 2:
            return s, comps
    return None


def test_reduce_never_lowers_kappa():
    rng = random.Random(12)
    done = 0
    while done < 300:
        rg = random_rooted(rng, 4, 10, min_roots=2)
        found = _random_separator(rng, rg.graph)
        if found is None:
            continue
        s, comps = found
        free = [c for c in comps if not c & rg.roots]
        if not free or len(free) == len(comps):
            continue
        f = frozenset(chain.from_iterable(rng.sample(free, rng.randint(1, len(free)))))
        out = clique_completion_reduce(rg, s, f)
        assert kappa_x(out) >= kappa_x(rg)
        done += 1


# ----------------------------------------------------- crossed separators
def test_cross_separator_collapses_to_s():
    g = cycle_graph(6)
    f = Fragment(frozenset({1, 2}), frozenset({0, 3}), g)
    assert cross_separator(f, f) == {0, 3}


def test_cross_separator_on_c8():
    g = cycle_graph(8)
    f = Fragment(frozenset({1, 2, 3}), frozenset({0, 4}), g)
    fp = Fragment(frozenset({3, 4, 5}), frozenset({2, 6}), g)
    t = cross_separator(f, fp)
    assert t == {2, 4}
    # it separates F & F' = {3} from the rest
    assert any(c == {3} for c in components(delete_vertices(g, t)))


def test_cross_separator_rejects_different_hosts():
    f = Fragment(frozenset({1}), frozenset({0}), path_graph(3))
    fp = Fragment(frozenset({1}), frozenset({0}), path_graph(4))
    with pytest.raises(InvalidArgument):
        cross_separator(f, fp)


def test_cross_separator_size_identity():
    rng = random.Random(21)
    done = 0
    while done < 300:
        g = random_graph(rng.randint(5, 10), rng.uniform(0.2, 0.5), rng)
        a, b = _random_separator(rng, g) or (None, None), _random_separator(rng, g) or (None, None)
        if a[0] is None or b[0] is None:
            continue
        (s, comps), (sp, comps_p) = a, b
        f = Fragment(frozenset(chain.from_iterable(comps[: rng.randint(1, len(comps) - 1)])), s, g)
        fp = Fragment(frozenset(chain.from_iterable(comps_p[: rng.randint(1, len(comps_p) - 1)])), sp, g)
        total = len(cross_separator(f, fp)) + len(cross_separator(f.complement(), fp.complement()))
        assert total == len(s) + len(sp)
        if f.vertices & fp.vertices:
            t = cross_separator(f, fp)
            inside = f.vertices & fp.vertices
            rest = delete_vertices(g, t)
            assert all(c <= inside or not c & inside for c in components(rest))
        done += 1


# ------------------------------------------------------ global connectivity
def test_global_connectivity():
    assert vertex_connectivity(complete_graph(5)) == 4
    assert vertex_connectivity(cycle_graph(6)) == 2
    assert min_separator(complete_graph(4)) is None
    k6_minus_matching = complete_graph(6).remove_edges([(0, 1), (2, 3), (4, 5)])
    assert is_k_connected(k6_minus_matching, 4)
    assert not is_k_connected(cycle_graph(5), 3)


def test_is_k_connected_matches_enumeration():
    from xminor.oracles import is_k_connected as brute

    rng = random.Random(6)
    for _ in range(300):
        g = random_graph(rng.randint(1, 8), rng.random(), rng)
        for k in range(0, 5):
            assert is_k_connected(g, k) == brute(g, k)
