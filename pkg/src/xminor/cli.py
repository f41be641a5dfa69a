"""Command-line interface.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error (also
an unmet precondition), 3 a brute-force guard was exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from . import artifacts
from .connectivity import RootedGraph, kappa_x, min_x_separator
from .errors import ConstructionError, InvalidArgument, PreconditionError, ResourceLimit
from .generators import (
    complete_bipartite,
    complete_graph,
    gen_fl,
    gen_gt,
    gen_hl,
    gen_random_planar,
    sample_roots,
)
from .graph import Graph, norm_edge
from .io import Names, ParseError, format_rooted, read_rooted
from .lifting import lift_cycle, lift_path, lift_tree
from .minors import Certificate, Verdict, connected_x_minor, embedding_certificate, topological_x_minor, verify_certificate
from .oracles import (
    exists_x_spanning_cycle,
    exists_x_spanning_path,
    exists_x_spanning_tree,
    find_tutte_path_brute,
    has_minor_brute,
    is_tutte_path,
)
from .pipelines import PASS, PRECONDITION, RESOURCE, run_thm1, run_thm3
from .structures import (
    verify_generalized,
    verify_path,
    verify_subgraph,
    verify_tree,
    verify_x_cycle,
    verify_x_path,
)

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3

log = logging.getLogger("xminor")


class _Failure(Exception):
    """A verification failure: print the reason and exit with status 1."""


# ----------------------------------------------------------------- helpers
def _load(path: str) -> tuple[Graph, frozenset[int], Names]:
    try:
        return read_rooted(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _rooted(g: Graph, roots: frozenset[int]) -> RootedGraph:
    if not roots:
        raise InvalidArgument("the graph file names no roots")
    return RootedGraph(g, roots)


def _edge(names: Names, text: str | None) -> tuple[int, int] | None:
    if text is None:
        return None
    toks = text.replace(",", " ").split()
    if len(toks) != 2:
        raise InvalidArgument(f"an edge is two vertex names, got {text!r}")
    u, v = names.ids(toks)
    return norm_edge(u, v)


def _emit(text: str, out: str | None = None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _pattern(spec: str) -> Graph:
    s = spec.upper().replace("_", "").replace("{", "").replace("}", "")
    if s.startswith("K") and "," in s:
        a, b = s[1:].split(",")
        return complete_bipartite(int(a), int(b))
    if s == "K33":
        return complete_bipartite(3, 3)
    if s.startswith("K") and s[1:].isdigit():
        return complete_graph(int(s[1:]))
    path = Path(spec)
    if path.exists():
        g, _, _ = read_rooted(path)
        return g
    raise InvalidArgument(f"unknown pattern {spec!r}; use Kn, Ka,b or a graph file")


# -------------------------------------------------------------- commands
def cmd_generate(args: argparse.Namespace) -> int:
    if args.family == "gt":
        inst = gen_gt(args.t)
        text = format_rooted(inst.graph, inst.roots, inst.names)
    elif args.family == "fl":
        inst = gen_fl(args.l, args.whites if args.whites is not None else args.l + 1)
        text = format_rooted(inst.graph, inst.roots, inst.names)
    elif args.family == "hl":
        inst = gen_hl(args.l)
        text = format_rooted(inst.graph, inst.roots, inst.names)
    else:
        g = gen_random_planar(args.n, args.seed)
        roots: frozenset[int] = frozenset()
        if args.roots:
            roots = _best_roots(g, args.roots, args.seed)
        text = format_rooted(g, roots)
    _emit(text, args.output)
    return EXIT_OK


def _best_roots(g: Graph, size: int, seed: int) -> frozenset[int]:
    """The greedy sample of ``size`` roots with the highest kappa target reachable."""
    for target in range(min(size - 1, 5), 0, -1):
        for attempt in range(8):
            roots = sample_roots(g, target, size, seed + attempt)
            if len(roots) == size:
                return roots
    return sample_roots(g, 1, size, seed)


def cmd_kappa(args: argparse.Namespace) -> int:
    g, roots, _ = _load(args.file)
    k = kappa_x(_rooted(g, roots))
    _emit(_dump({"kappa": k}) if args.json else f"{k}\n")
    return EXIT_OK


def cmd_separator(args: argparse.Namespace) -> int:
    g, roots, names = _load(args.file)
    sep = min_x_separator(_rooted(g, roots))
    if args.json:
        doc = None if sep is None else {
            "separator": [names.name(v) for v in sorted(sep.vertices)],
            "witnesses": [names.name(v) for v in sep.witnesses],
        }
        _emit(_dump({"separator": doc}))
    elif sep is None:
        _emit("none\n")
    else:
        a, b = sep.witnesses
        _emit(f"S: {' '.join(names.name(v) for v in sorted(sep.vertices))}\n"
                    f"witness: {names.name(a)} {names.name(b)}\n")
    return EXIT_OK


def cmd_minor(args: argparse.Namespace) -> int:
    g, roots, names = _load(args.file)
    rg = _rooted(g, roots)
    if args.topological:
        if args.k > 3:
            raise InvalidArgument("--topological needs k <= 3")
        minor, emb = topological_x_minor(rg, args.k)
        cert = embedding_certificate(emb, g, roots)
        doc = artifacts.certificate_json(cert, names, None, emb)
    else:
        cert, trace = connected_x_minor(rg, args.k)
        doc = artifacts.certificate_json(cert, names, trace)
    _emit(_dump(doc), args.output)
    return EXIT_OK


def _certificate(args: argparse.Namespace) -> tuple[Certificate, Names]:
    g, roots, names = _load(args.graph)
    try:
        text = Path(args.cert).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {args.cert}: {exc.strerror}") from None
    cert = artifacts.load_certificate(text, g, roots, names)
    ok = verify_certificate(cert)
    if not ok:
        raise _Failure(f"certificate: {ok.reason}")
    return cert, names


def _structure(path: str, names: Names) -> artifacts.Structure:
    try:
        return artifacts.read_structure(Path(path).read_text(), names)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def cmd_lift_tree(args: argparse.Namespace) -> int:
    cert, names = _certificate(args)
    m = cert.minor
    if args.tree:
        tree = _structure(args.tree, names).graph
        if tree is None:
            raise ParseError("the --tree file must hold a TREE section")
    else:
        found = exists_x_spanning_tree(RootedGraph(m, m.vertex_set), args.bound)
        if found is None:
            raise _Failure(f"the minor has no spanning {args.bound}-tree")
        tree = found.tree
    out = lift_tree(cert, tree, args.bound)
    _emit(artifacts.format_tree(out.tree, out.bound, names), args.output)
    return EXIT_OK


def _minor_sequence(args: argparse.Namespace, cert: Certificate, names: Names, closed: bool) -> list[int]:
    if args.structure:
        st = _structure(args.structure, names)
        if not st.sequence:
            raise ParseError("the structure file must hold a PATH or CYCLE section")
        return st.sequence
    m = RootedGraph(cert.minor, cert.roots)
    if closed:
        seq = exists_x_spanning_cycle(m)
    else:
        xs = sorted(cert.roots)
        if len(xs) < 2:
            raise InvalidArgument("need two roots for a path")
        seq = exists_x_spanning_path(m, xs[0], xs[-1])
    if seq is None:
        raise _Failure("the minor has no X-spanning " + ("cycle" if closed else "path"))
    return seq


def cmd_lift_path(args: argparse.Namespace) -> int:
    cert, names = _certificate(args)
    gs = lift_path(cert, _minor_sequence(args, cert, names, closed=False))
    _emit(artifacts.format_generalized(gs, names), args.output)
    return EXIT_OK


def cmd_lift_cycle(args: argparse.Namespace) -> int:
    cert, names = _certificate(args)
    gs = lift_cycle(cert, _minor_sequence(args, cert, names, closed=True))
    _emit(artifacts.format_generalized(gs, names), args.output)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    g, roots, names = _load(args.file)
    kind = args.kind
    result: str | None
    if kind == "minor":
        if not args.pattern:
            raise InvalidArgument("oracle minor needs --pattern")
        found = has_minor_brute(g, _pattern(args.pattern))
        _emit(_dump({"minor": found}) if args.json else f"{'yes' if found else 'no'}\n")
        return EXIT_OK
    if kind == "tutte":
        if args.from_ is None or args.to is None or args.force is None:
            raise InvalidArgument("oracle tutte needs --from, --to and --force (the edge to contain)")
        y, z = names.id(args.from_), names.id(args.to)
        e = _edge(names, args.force)
        anchor = None
        if args.anchor:
            cyc = names.ids(args.anchor.replace(",", " ").split())
            anchor = Graph.from_edges([(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1])])
        p = find_tutte_path_brute(g, y, z, e, anchor)
        result = None if p is None else artifacts.format_tutte(p, names, anchor)
    else:
        rg = _rooted(g, roots)
        if kind == "tree":
            leaves = names.ids(args.leaves) if args.leaves else None
            t = exists_x_spanning_tree(rg, args.maxdeg, leaves)
            result = None if t is None else artifacts.format_tree(t.tree, args.maxdeg, names, leaves or [])
        elif kind == "path":
            xs = sorted(roots)
            x1 = names.id(args.from_) if args.from_ else xs[0]
            x2 = names.id(args.to) if args.to else xs[-1]
            forced = [_edge(names, args.force)] if args.force else []
            p = exists_x_spanning_path(rg, x1, x2, forced)
            result = None if p is None else artifacts.format_path(p, names)
        else:
            avoid = names.ids(args.avoid or [])
            c = exists_x_spanning_cycle(rg, avoid)
            result = None if c is None else artifacts.format_cycle(c, names, avoid)
    if result is None:
        _emit("none\n")
        return EXIT_VERIFY
    _emit(result, args.output)
    return EXIT_OK


def cmd_pipeline(args: argparse.Namespace) -> int:
    g, roots, names = _load(args.file)
    rg = _rooted(g, roots)
    out_dir = Path(args.out) if args.out else None
    if args.pipeline == "thm1":
        report = run_thm1(rg, args.variant, names, leaves=_edge(names, args.leaves_edge),
                              t=args.t, out_dir=out_dir)
    else:
        ends = None
        if args.from_ or args.to:
            if not (args.from_ and args.to):
                raise InvalidArgument("--from and --to go together")
            ends = (names.id(args.from_), names.id(args.to))
        report = run_thm3(rg, args.variant, names, ends=ends, forced=_edge(names, args.force),
                              avoid=tuple(names.ids(args.avoid or [])), bound=args.bound, out_dir=out_dir)
    doc = report.to_json(timing=not args.no_timing)
    text = _dump(doc)
    if args.report:
        Path(args.report).write_text(text)
    else:
        sys.stdout.write(text)
    if report.verdict == PASS:
        return EXIT_OK
    failed = report.failure
    if failed is not None and failed.outcome == RESOURCE:
        return EXIT_LIMIT
    if failed is not None and failed.outcome == PRECONDITION:
        return EXIT_USAGE
    return EXIT_VERIFY


def cmd_verify(args: argparse.Namespace) -> int:
    g, roots, names = _load(args.graph)
    try:
        text = Path(args.structure).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {args.structure}: {exc.strerror}") from None
    kind = args.kind
    if kind == "auto":
        kind = "certificate" if text.lstrip().startswith("{") else None
    if kind == "certificate":
        verdict = verify_certificate(artifacts.load_certificate(text, g, roots, names))
    else:
        st = artifacts.read_structure(text, names)
        if kind is not None and kind != st.kind:
            raise ParseError(f"expected a {kind} structure, file holds a {st.kind}")
        verdict = _verify_structure(g, roots, st)
    if not verdict:
        raise _Failure(verdict.reason or "verification failed")
    _emit("ok\n")
    return EXIT_OK


def _verify_structure(g: Graph, roots: frozenset[int], st: artifacts.Structure):
    if st.kind == "tree":
        return verify_tree(g, st.graph, roots, st.bound, st.leaves)
    if st.kind == "subgraph":
        return verify_subgraph(g, st.graph, roots, st.bound)
    if st.kind == "path":
        return verify_x_path(g, st.sequence, roots)
    if st.kind == "cycle":
        return verify_x_cycle(g, st.sequence, roots, st.avoid)
    if st.kind == "generalized":
        return verify_generalized(g, st.generalized, roots)
    ok = verify_path(g, st.sequence)
    if not ok:
        return ok
    if len(st.sequence) < 2:
        return Verdict(False, "a Tutte path needs two vertices")
    if not is_tutte_path(g, st.sequence, st.anchor):
        return Verdict(False, "bridge attachments")
    return Verdict(True)


# ----------------------------------------------------------------- parser
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for random generators")
    common.add_argument("--deterministic", action="store_true",
                        help="sequential, reproducible search order (the default; kept for scripts)")
    common.add_argument("--no-timing", action="store_true", help="omit timing fields from reports")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="xminor", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", parents=[common], help="write an instance in the graph format")
    gen.add_argument("family", choices=["gt", "fl", "hl", "planar"])
    gen.add_argument("--t", type=int, default=7)
    gen.add_argument("--l", type=int, default=4)
    gen.add_argument("--whites", type=int)
    gen.add_argument("--n", type=int, default=12)
    gen.add_argument("--roots", type=int, help="sample this many roots with greedy local connectivity")
    gen.add_argument("-o", "--output")
    gen.set_defaults(func=cmd_generate)

    for name, fn, helptext in (("kappa", cmd_kappa, "local connectivity of the root set"),
                               ("separator", cmd_separator, "a minimum X-separator and its witness pair")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("file")
        sp.set_defaults(func=fn)

    mn = sub.add_parser("minor", parents=[common], help="extract a k-connected X-minor with certificate")
    mn.add_argument("file")
    mn.add_argument("--k", type=int, choices=[1, 2, 3, 4], default=4)
    mn.add_argument("--topological", action="store_true")
    mn.add_argument("-o", "--output")
    mn.set_defaults(func=cmd_minor)

    lt = sub.add_parser("lift-tree", parents=[common], help="lift a spanning t-tree of the minor")
    lt.add_argument("graph")
    lt.add_argument("cert")
    lt.add_argument("--bound", type=int, required=True)
    lt.add_argument("--tree", help="TREE file over minor vertices (default: oracle search)")
    lt.add_argument("-o", "--output")
    lt.set_defaults(func=cmd_lift_tree)

    for name, fn in (("lift-path", cmd_lift_path), ("lift-cycle", cmd_lift_cycle)):
        sp = sub.add_parser(name, parents=[common], help=f"lift an X-spanning {name[5:]} of the minor")
        sp.add_argument("graph")
        sp.add_argument("cert")
        sp.add_argument("--structure", help="PATH or CYCLE file over minor vertices (default: oracle search)")
        sp.add_argument("-o", "--output")
        sp.set_defaults(func=fn)

    orc = sub.add_parser("oracle", parents=[common], help="brute-force searches on small graphs")
    orc.add_argument("kind", choices=["tree", "path", "cycle", "minor", "tutte"])
    orc.add_argument("file")
    orc.add_argument("--maxdeg", type=int, default=3)
    orc.add_argument("--leaves", nargs="*")
    orc.add_argument("--from", dest="from_")
    orc.add_argument("--to")
    orc.add_argument("--force", help="an edge 'u v' that must be used")
    orc.add_argument("--avoid", nargs="*")
    orc.add_argument("--pattern")
    orc.add_argument("--anchor", help="exterior cycle as a vertex sequence 'a b c ...'")
    orc.add_argument("-o", "--output")
    orc.set_defaults(func=cmd_oracle)

    pl = sub.add_parser("pipeline", parents=[common], help="run a spanning-structure pipeline and write a JSON report")
    pl.add_argument("pipeline", choices=["thm1", "thm3"])
    pl.add_argument("file")
    pl.add_argument("--variant", choices=["i", "ii", "iii"], required=True)
    pl.add_argument("--t", type=int, default=4, help="thm1 iii: excluded K_3,t")
    pl.add_argument("--bound", type=int, default=3, help="thm3 iii: degree bound of the tree in the minor")
    pl.add_argument("--leaves", dest="leaves_edge", help="thm1 i: root edge 'x1 x2' whose ends must be leaves")
    pl.add_argument("--from", dest="from_")
    pl.add_argument("--to")
    pl.add_argument("--force")
    pl.add_argument("--avoid", nargs="*")
    pl.add_argument("--out", help="directory for artifact files")
    pl.add_argument("--report", help="write the report here instead of stdout")
    pl.set_defaults(func=cmd_pipeline)

    vf = sub.add_parser("verify", parents=[common], help="re-check a certificate or structure file")
    vf.add_argument("graph")
    vf.add_argument("structure")
    vf.add_argument("--kind", default="auto",
                    choices=["auto", "certificate", "generalized", "tree", "path", "cycle", "subgraph", "tutte"])
    vf.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except _Failure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InvalidArgument, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
