"""End-to-end runs of the spanning-structure chains on concrete inputs.

Each pipeline is a fixed list of steps (precondition, minor extraction,
oracle search, lifting, verification). A step either passes or records why it
did not; the report's verdict is ``pass`` only when every step passed.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from . import artifacts
from .connectivity import RootedGraph, kappa_x
from .errors import InvalidArgument, PreconditionError, ResourceLimit
from .generators import complete_bipartite
from .graph import Edge, Graph, norm_edge
from .io import Names
from .lifting import lift_subdivision, lift_tree
from .minors import four_connected_x_minor, topological_x_minor, verify_certificate, verify_embedding
from .oracles import (
    exists_x_spanning_cycle,
    exists_x_spanning_path,
    exists_x_spanning_tree,
    has_minor_brute,
    two_connected_spanning_subgraph,
)
from .structures import verify_subgraph, verify_tree, verify_x_cycle, verify_x_path

SCHEMA = "xminor.report/1"

PASS, FAIL, PRECONDITION, RESOURCE = "pass", "fail", "precondition", "resource-limit"


@dataclass
class Step:
    name: str
    outcome: str
    detail: str = ""
    seconds: float = 0.0


@dataclass
class PipelineReport:
    pipeline: str
    variant: str
    summary: dict[str, Any]
    steps: list[Step] = field(default_factory=list)
    artifacts: list[str] = field(default_factory=list)
    result: Any = None

    @property
    def verdict(self) -> str:
        return PASS if self.steps and all(s.outcome == PASS for s in self.steps) else FAIL

    @property
    def failure(self) -> Step | None:
        return next((s for s in self.steps if s.outcome != PASS), None)

    def to_json(self, timing: bool = True) -> dict[str, Any]:
        steps = []
        for s in self.steps:
            d: dict[str, Any] = {"name": s.name, "outcome": s.outcome, "detail": s.detail}
            if timing:
                d["seconds"] = round(s.seconds, 6)
            steps.append(d)
        return {
            "schema": SCHEMA,
            "pipeline": self.pipeline,
            "variant": self.variant,
            "input": self.summary,
            "steps": steps,
            "verdict": self.verdict,
            "artifacts": self.artifacts,
        }


class _Halt(Exception):
    pass


class _Runner:
    def __init__(self, report: PipelineReport):
        self.report = report

    def step(self, name: str, fn: Callable[[], Any]) -> Any:
        """Run one step; a falsy result or an error ends the pipeline."""
        t0 = time.perf_counter()
        outcome, detail, value = PASS, "", None
        try:
            value = fn()
            if isinstance(value, tuple) and len(value) == 2 and isinstance(value[1], str):
                value, detail = value
            if value is None or value is False:
                outcome = FAIL
        except PreconditionError as exc:
            outcome, detail = PRECONDITION, str(exc)
        except ResourceLimit as exc:
            outcome, detail = RESOURCE, str(exc)
        except InvalidArgument as exc:
            outcome, detail = PRECONDITION, str(exc)
        self.report.steps.append(Step(name, outcome, detail, time.perf_counter() - t0))
        if outcome != PASS:
            raise _Halt
        return value


def _summary(rg: RootedGraph, need: int) -> dict[str, Any]:
    return {"n": rg.graph.n, "m": rg.graph.m, "roots": len(rg.roots), "kappa": kappa_x(rg, cap=need)}


def _check_kappa(rg: RootedGraph, need: int) -> Callable[[], Any]:
    def run() -> Any:
        k = kappa_x(rg, cap=need)
        if k < need:
            raise PreconditionError(f"kappa_x is {k}, needs at least {need}")
        return True, f"kappa_x >= {need}"
    return run


def _verdict(v) -> tuple[Any, str]:
    return (True, "ok") if v else (False, v.reason or "failed")


def _write(out_dir: Path | None, report: PipelineReport, name: str, text: str) -> None:
    if out_dir is None:
        return
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / name
    path.write_text(text)
    report.artifacts.append(str(path))


def default_root_edge(rg: RootedGraph) -> Edge | None:
    """The least edge of G[X], if any."""
    roots = rg.roots
    return next((e for e in rg.graph.edges if e[0] in roots and e[1] in roots), None)


# ------------------------------------------------------------------ thm1
def run_thm1(rg: RootedGraph, variant: str, names: Names | None = None, *,
                 leaves: Edge | None = None, t: int = 4, out_dir: Path | None = None) -> PipelineReport:
    """3-connected topological X-minor, oracle structure in it, subdivision back to G.

    Variant ``i`` looks for a 3-tree (with the two ends of a root edge as
    leaves), ``ii`` for a 2-connected subgraph of max degree 6 and ``iii`` for
    a (t-1)-tree on inputs without a K_{3,t} minor.
    """
    if variant not in ("i", "ii", "iii"):
        raise InvalidArgument(f"unknown variant {variant!r}")
    names = names or Names.default(rg.graph.vertices)
    g, roots = rg.graph, rg.roots
    report = PipelineReport("thm1", variant, _summary(rg, 3))
    run = _Runner(report)
    try:
        run.step("precondition", _check_kappa(rg, 3))
        if variant == "i":
            leaves = leaves or default_root_edge(rg)
            if leaves is not None:
                leaves = norm_edge(*leaves)
                run.step("root-edge", lambda: (g.has_edge(*leaves) and set(leaves) <= roots,
                                                f"leaves {names.name(leaves[0])} {names.name(leaves[1])}"))
        if variant == "iii":
            run.step("minor-free", lambda: (not has_minor_brute(g, complete_bipartite(3, t)), f"no K_3,{t} minor"))
        minor, emb = run.step("topological-minor", lambda: topological_x_minor(rg, 3))
        run.step("embedding", lambda: _verdict(verify_embedding(emb, g, roots)))
        mr = RootedGraph(minor, roots)
        if variant == "ii":
            h = run.step("oracle", lambda: two_connected_spanning_subgraph(mr, 6))
            lifted = run.step("lift", lambda: lift_subdivision(emb, h))
            run.step("verify", lambda: _verdict(verify_subgraph(g, lifted, roots, 6)))
            _write(out_dir, report, "subgraph.txt", artifacts.format_subgraph(lifted, 6, names))
        else:
            bound = 3 if variant == "i" else t - 1
            want_leaves = list(leaves) if variant == "i" and leaves else []
            tree = run.step("oracle", lambda: exists_x_spanning_tree(mr, bound, want_leaves))
            lifted = run.step("lift", lambda: lift_subdivision(emb, tree.tree))
            run.step("verify", lambda: _verdict(verify_tree(g, lifted, roots, bound, want_leaves)))
            _write(out_dir, report, "tree.txt", artifacts.format_tree(lifted, bound, names, want_leaves))
        report.result = lifted
    except _Halt:
        pass
    return report


# ------------------------------------------------------------------ thm3
def run_thm3(rg: RootedGraph, variant: str, names: Names | None = None, *,
                 ends: tuple[int, int] | None = None, forced: Edge | None = None,
                 avoid: tuple[int, ...] = (), bound: int = 3, out_dir: Path | None = None) -> PipelineReport:
    """Spanning path / cycle by oracle on G (variants i, ii); lifted tree from a 4-connected X-minor (iii)."""
    if variant not in ("i", "ii", "iii"):
        raise InvalidArgument(f"unknown variant {variant!r}")
    names = names or Names.default(rg.graph.vertices)
    g, roots = rg.graph, rg.roots
    report = PipelineReport("thm3", variant, _summary(rg, 4))
    run = _Runner(report)
    try:
        run.step("precondition", _check_kappa(rg, 4))
        if variant == "i":
            x1, x2 = ends or tuple(sorted(roots)[:2])
            forced_list = [norm_edge(*forced)] if forced else []
            p = run.step("oracle", lambda: exists_x_spanning_path(rg, x1, x2, forced_list))
            run.step("verify", lambda: _verdict(verify_x_path(g, p, roots, x1, x2, forced_list)))
            _write(out_dir, report, "path.txt", artifacts.format_path(p, names))
            report.result = p
        elif variant == "ii":
            cyc = run.step("oracle", lambda: exists_x_spanning_cycle(rg, avoid))
            run.step("verify", lambda: _verdict(verify_x_cycle(g, cyc, roots, avoid)))
            _write(out_dir, report, "cycle.txt", artifacts.format_cycle(cyc, names, list(avoid)))
            report.result = cyc
        else:
            cert, trace = run.step("minor", lambda: four_connected_x_minor(rg))
            run.step("certificate", lambda: _verdict(verify_certificate(cert)))
            m = cert.minor
            tree = run.step("oracle", lambda: exists_x_spanning_tree(RootedGraph(m, m.vertex_set), bound))
            lifted = run.step("lift", lambda: lift_tree(cert, tree.tree, bound))
            run.step("verify", lambda: _verdict(verify_tree(g, lifted.tree, roots, bound + 1)))
            _write(out_dir, report, "certificate.json",
                   _json(artifacts.certificate_json(cert, names, trace)))
            _write(out_dir, report, "tree.txt", artifacts.format_tree(lifted.tree, bound + 1, names))
            report.result = lifted.tree
    except _Halt:
        pass
    return report


def _json(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
