from hypothesis import given, settings
from hypothesis import strategies as st

from xminor.connectivity import RootedGraph, kappa_x, min_x_separator
from xminor.graph import Graph, contract_edge
from xminor.io import Names, format_rooted, parse_rooted
from xminor.minors import Certificate, verify_certificate
from xminor.oracles import kappa_x_brute


@st.composite
def rooted_graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    roots = draw(st.sets(st.integers(0, n - 1), min_size=1))
    return RootedGraph(Graph.from_edges(edges, vertices=range(n)), frozenset(roots))


@settings(max_examples=200, deadline=None)
@given(rooted_graphs())
def test_kappa_agrees_with_enumeration(rg):
    assert kappa_x(rg) == kappa_x_brute(rg)


@settings(max_examples=200, deadline=None)
@given(rooted_graphs(), st.data())
def test_contraction_drops_kappa_by_at_most_one(rg, data):
    legal = [(u, v) for u, v in rg.graph.edges if v not in rg.roots]
    legal += [(v, u) for u, v in rg.graph.edges if u not in rg.roots]
    if not legal:
        return
    x, y = data.draw(st.sampled_from(legal))
    assert kappa_x(rg.with_graph(contract_edge(rg.graph, x, y))) >= kappa_x(rg) - 1


@settings(max_examples=200, deadline=None)
@given(rooted_graphs())
def test_separator_size_bounds_kappa(rg):
    sep = min_x_separator(rg)
    if sep is not None:
        assert len(sep) >= kappa_x(rg)


@settings(max_examples=100, deadline=None)
@given(rooted_graphs())
def test_identity_certificate_always_verifies(rg):
    assert verify_certificate(Certificate.identity(rg))


@settings(max_examples=100, deadline=None)
@given(rooted_graphs())
def test_text_format_roundtrip(rg):
    # isolated non-root vertices carry no name in the file, so compare by name
    names = Names.default(rg.graph.vertices)
    g, roots, back = parse_rooted(format_rooted(rg.graph, rg.roots, names))
    assert g.n == rg.graph.n
    assert {back.name(r) for r in roots} == {names.name(r) for r in rg.roots}
    by_name = {frozenset(back.name(v) for v in e) for e in g.edges}
    assert by_name == {frozenset(names.name(v) for v in e) for e in rg.graph.edges}
