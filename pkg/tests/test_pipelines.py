import json

import pytest

from xminor.connectivity import RootedGraph
from xminor.errors import InvalidArgument
from xminor.generators import complete_graph, cycle_graph, gen_fl, gen_random_planar, sample_roots
from xminor.pipelines import SCHEMA, default_root_edge, run_thm1, run_thm3
from xminor.artifacts import read_structure, load_certificate
from xminor.minors import verify_certificate
from xminor.structures import verify_tree

from _instances import planar_rooted


@pytest.fixture(scope="module")
def thm1_instances():
    return planar_rooted(4, 3, (8, 10), (4, 6), seed=101, want_root_edge=True)


@pytest.fixture(scope="module")
def thm3_instances():
    return planar_rooted(3, 4, (9, 11), (5, 6), seed=202)


def test_k4_variant_i_passes():
    rg = RootedGraph(complete_graph(4), frozenset(range(4)))
    report = run_thm1(rg, "i")
    assert report.verdict == "pass"
    assert [s.name for s in report.steps] == [
        "precondition", "root-edge", "topological-minor", "embedding", "oracle", "lift", "verify"]


@pytest.mark.parametrize("variant", ["i", "ii", "iii"])
def test_thm1_on_planar_instances(thm1_instances, variant):
    for rg in thm1_instances:
        report = run_thm1(rg, variant)
        assert report.verdict == "pass", report.failure
        if variant == "i":
            leaves = default_root_edge(rg)
            assert verify_tree(rg.graph, report.result, rg.roots, 3, leaves)


def test_thm1_precondition_failure():
    report = run_thm1(RootedGraph(cycle_graph(6), frozenset(range(6))), "i")
    assert report.verdict == "fail"
    assert report.failure.name == "precondition" and report.failure.outcome == "precondition"
    assert len(report.steps) == 1


def test_thm1_iii_reports_a_present_k3t_minor():
    rg = RootedGraph(complete_graph(7), frozenset(range(7)))
    report = run_thm1(rg, "iii", t=4)
    assert report.failure.name == "minor-free" and report.failure.outcome == "fail"


def test_unknown_variant():
    rg = RootedGraph(complete_graph(4), frozenset(range(4)))
    with pytest.raises(InvalidArgument):
        run_thm1(rg, "iv")
    with pytest.raises(InvalidArgument):
        run_thm3(rg, "iv")


def test_thm3_path_with_forced_edge(thm3_instances):
    for rg in thm3_instances:
        edge = default_root_edge(rg)
        xs = [x for x in sorted(rg.roots) if edge is None or x not in edge][:2]
        report = run_thm3(rg, "i", ends=tuple(xs), forced=edge)
        assert report.verdict == "pass", report.failure
        p = report.result
        assert {p[0], p[-1]} == set(xs)


def test_thm3_cycle_avoiding_two_vertices(thm3_instances):
    for rg in thm3_instances:
        non_root = next(v for v in rg.graph.vertices if v not in rg.roots)
        avoid = (min(rg.roots), non_root)
        report = run_thm3(rg, "ii", avoid=avoid)
        assert report.verdict == "pass", report.failure
        assert not set(avoid) & set(report.result)


def test_thm3_lifted_tree(thm3_instances):
    for rg in thm3_instances:
        report = run_thm3(rg, "iii", bound=3)
        assert report.verdict == "pass", report.failure
        assert report.result.max_degree() <= 4


def test_thm3_on_fl_family():
    report = run_thm3(gen_fl(4, 5).rooted, "iii", bound=3)
    assert report.verdict == "pass"


def test_thm3_resource_limit():
    g = gen_random_planar(20, 3)
    roots = sample_roots(g, 4, 5, 0)
    rg = RootedGraph(g, roots)
    report = run_thm3(rg, "i")
    if report.failure.name == "precondition":
        pytest.skip("sampled roots too weakly connected")
    assert report.failure.outcome == "resource-limit"


def test_report_json_and_artifacts(tmp_path, thm3_instances):
    rg = thm3_instances[0]
    report = run_thm3(rg, "iii", out_dir=tmp_path)
    doc = report.to_json(timing=False)
    assert doc["schema"] == SCHEMA and doc["verdict"] == "pass"
    assert set(doc["input"]) == {"n", "m", "roots", "kappa"}
    assert all(set(s) == {"name", "outcome", "detail"} for s in doc["steps"])
    assert "seconds" in report.to_json()["steps"][0]
    # the same input gives the same report
    again = run_thm3(rg, "iii", out_dir=tmp_path).to_json(timing=False)
    assert json.dumps(again, sort_keys=True) == json.dumps(doc, sort_keys=True)
    names = sorted(p.split("/")[-1] for p in doc["artifacts"])
    assert names == ["certificate.json", "tree.txt"]


def test_written_artifacts_reverify(tmp_path, thm3_instances):
    from xminor.io import Names

    rg = thm3_instances[0]
    names = Names.default(rg.graph.vertices)
    run_thm3(rg, "iii", names, out_dir=tmp_path)
    cert = load_certificate((tmp_path / "certificate.json").read_text(), rg.graph, rg.roots, names)
    assert verify_certificate(cert)
    st = read_structure((tmp_path / "tree.txt").read_text(), names)
    assert verify_tree(rg.graph, st.graph, rg.roots, st.bound)
