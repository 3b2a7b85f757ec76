"""Command-line surface.

Subcommands: construct, report, analyze, aut, iso, classify, scheme,
verify-paper.  Exit codes: 0 success / assertions hold, 1 assertion or suite
failure, 2 usage error, 3 invalid input.  Reports are cached in a
content-addressed directory keyed by the graph's canonical-form digest;
SYMGRAPH_CACHE overrides the location.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path

from . import __version__, analysis, autgrp, families as fam, schemes, suites, symmetry
from .graphs import (
    Graph,
    digraph_to_json,
    distance_partition,
    global_stats,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INVALID = 3


def _cache_dir() -> Path:
    env = os.environ.get("SYMGRAPH_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "symgraph"


def _load_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text()
        return graph_from_json(text)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot read graph from {path}: {exc}") from exc


def _write(path: str, text: str) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text(text)


# --- construct ----------------------------------------------------------------

def _cmd_construct(args) -> int:
    name = args.family
    try:
        if name == "scheme-d":
            ext = schemes.im_extension(fam.paley_digraph(args.q))
            if not ext.all_hold:
                raise ValueError("extension identities failed")
            bs, report = schemes.five_class(ext.cs)
            if not report.valid:
                raise ValueError(f"scheme invalid: {report.failure}")
            outdir = Path(args.out)
            outdir.mkdir(parents=True, exist_ok=True)
            (outdir / "scheme.json").write_text(schemes.scheme_to_json(bs))
            g = schemes.relation_graph(bs, 1)
            (outdir / "relation1.json").write_text(graph_to_json(g))
            print(f"wrote {outdir}/scheme.json and {outdir}/relation1.json")
            return EXIT_OK
        if name == "paley-digraph":
            d = fam.paley_digraph(args.q)
            _write(args.out, digraph_to_json(d))
            print(f"wrote {args.out}")
            return EXIT_OK
        g = _construct_graph(args)
        _write(args.out, graph_to_json(g))
        print(f"wrote {args.out}")
        return EXIT_OK
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def _construct_graph(args) -> Graph:
    name = args.family
    if name == "paley":
        return fam.paley(args.q)
    if name == "peisert":
        return fam.peisert(args.q)
    if name == "hamming":
        return fam.hamming(args.d, args.n)
    if name == "johnson":
        return fam.johnson(args.m, args.k)
    if name == "icosahedron":
        return fam.icosahedron()
    if name == "biplane":
        return fam.biplane_delta41()
    if name in fam._STANDARD:
        params = [p for p in (args.n, args.m, args.k, args.d, args.b) if p is not None]
        return fam.standard(name, params)
    if name in ("taylor-extension", "bipartite-double", "complement", "cone", "k2-product"):
        if not args.of:
            raise ValueError(f"{name} needs --of <graph.json>")
        base = _load_graph(args.of)
        if name == "taylor-extension":
            return fam.taylor_extension(base)
        if name == "bipartite-double":
            from .graphs import bipartite_double

            return bipartite_double(base)
        if name == "complement":
            from .graphs import complement

            return complement(base)
        if name == "cone":
            from .graphs import cone

            return cone(base)
        return fam.cartesian_product(fam.complete(2), base)
    raise ValueError(f"unknown family {name!r}")


# --- reporting ------------------------------------------------------------------

def _full_report(g: Graph) -> dict:
    digest = hashlib.sha256(autgrp.canonical_form(g)).hexdigest()
    cache_file = _cache_dir() / f"{digest}.json"
    if cache_file.exists():
        cached = json.loads(cache_file.read_text())
        cached["cached"] = True
        return cached
    report = _compute_report(g, digest)
    cache_file.parent.mkdir(parents=True, exist_ok=True)
    cache_file.write_text(json.dumps(report, sort_keys=True, indent=2) + "\n")
    report["cached"] = False
    return report


def _compute_report(g: Graph, digest: str) -> dict:
    stats = global_stats(g)
    reg = analysis.regularity_profile(g) if stats.connected and g.n else None
    spec = analysis.spectrum_summary(g)
    prof = (
        symmetry.transitivity_profile(g, s_max=2)
        if stats.connected and g.n
        else None
    )
    report = {
        "digest": digest,
        "version": __version__,
        "timestamp": int(time.time()),
        "order": g.n,
        "name": g.name,
        "connected": stats.connected,
        "bipartite": stats.bipartite,
        "diameter": stats.diameter,
        "girth": stats.girth,
        "valency": stats.regular_valency,
        "regularity": None,
        "transitivity": None,
        "spectrum": {
            "distinct_count": spec.distinct_count,
            "approx_values": [repr(v) for v in spec.values],
            "multiplicities": list(spec.multiplicities),
        },
    }
    if reg is not None:
        report["regularity"] = {
            "amply_regular": list(reg.amply_regular) if reg.amply_regular else None,
            "strongly_regular": list(reg.strongly_regular) if reg.strongly_regular else None,
            "intersection_array": (
                [list(reg.distance_regular[0]), list(reg.distance_regular[1])]
                if reg.distance_regular
                else None
            ),
        }
    if prof is not None:
        report["transitivity"] = {
            "vertex_transitive": prof.vertex_transitive,
            "2_distance_transitive": prof.s_distance_transitive.get(2, False),
            "2_arc_transitive": prof.s_arc_transitive.get(2, False),
            "2_geodesic_transitive": prof.two_geodesic_transitive,
            "distance_transitive": prof.distance_transitive,
            "locally_primitive": prof.locally_primitive,
            "aut_order": prof.aut_order,
        }
    return report


_ASSERT_KEYS = {
    "order": ("order",),
    "connected": ("connected",),
    "bipartite": ("bipartite",),
    "diameter": ("diameter",),
    "girth": ("girth",),
    "valency": ("valency",),
    "distinct_eigenvalues": ("spectrum", "distinct_count"),
    "vertex_transitive": ("transitivity", "vertex_transitive"),
    "2_distance_transitive": ("transitivity", "2_distance_transitive"),
    "2_arc_transitive": ("transitivity", "2_arc_transitive"),
    "2_geodesic_transitive": ("transitivity", "2_geodesic_transitive"),
    "distance_transitive": ("transitivity", "distance_transitive"),
    "locally_primitive": ("transitivity", "locally_primitive"),
    "aut_order": ("transitivity", "aut_order"),
}


def _parse_value(text: str):
    if text in ("true", "True"):
        return True
    if text in ("false", "False"):
        return False
    try:
        return int(text)
    except ValueError:
        return text


def _cmd_report(args) -> int:
    try:
        g = _load_graph(args.graph)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report = _full_report(g)
    print(json.dumps(report, sort_keys=True, indent=2))
    for assertion in args.assertions or []:
        if "=" not in assertion:
            print(f"error: bad assertion {assertion!r}", file=sys.stderr)
            return EXIT_USAGE
        key, _, raw = assertion.partition("=")
        if key not in _ASSERT_KEYS:
            print(f"error: unknown assertion key {key!r}", file=sys.stderr)
            return EXIT_USAGE
        node = report
        for part in _ASSERT_KEYS[key]:
            node = node[part] if node is not None else None
        expected = _parse_value(raw)
        if node != expected:
            print(f"assertion failed: {key} = {node!r}, expected {expected!r}", file=sys.stderr)
            return EXIT_FAIL
    return EXIT_OK


def _cmd_analyze(args) -> int:
    try:
        g = _load_graph(args.graph)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.action == "report":
        reg = analysis.regularity_profile(g)
        spec = analysis.spectrum_summary(g)
        wr = analysis.walk_regular_level(g)
        out = {
            "order": reg.order,
            "valency": reg.regular_valency,
            "amply_regular": list(reg.amply_regular) if reg.amply_regular else None,
            "strongly_regular": list(reg.strongly_regular) if reg.strongly_regular else None,
            "intersection_array": (
                [list(reg.distance_regular[0]), list(reg.distance_regular[1])]
                if reg.distance_regular
                else None
            ),
            "diameter": reg.diameter,
            "girth": reg.girth,
            "walk_regular_level": wr,
            "distinct_eigenvalues": spec.distinct_count,
            "approx_values": [repr(v) for v in spec.values],
        }
        print(json.dumps(out, sort_keys=True, indent=2))
        return EXIT_OK
    diag = analysis.distribution_diagram(g, args.root)
    if args.format == "dot":
        print(analysis.diagram_to_dot(diag), end="")
    else:
        print(
            json.dumps(
                {
                    "sizes": list(diag.sizes),
                    "q": [[x for x in row] for row in diag.q],
                    "equitable": diag.equitable,
                },
                indent=2,
            )
        )
    return EXIT_OK


def _cmd_aut(args) -> int:
    try:
        g = _load_graph(args.graph)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    gens = autgrp.automorphism_generators(g)
    form = autgrp.canonical_form(g)
    from .perms import bsgs_build

    order = bsgs_build(gens, n=g.n).order if gens else 1
    print(
        json.dumps(
            {
                "order": order,
                "generators": [list(p.img) for p in gens],
                "canonical_hex": form.hex(),
            },
            indent=2,
        )
    )
    return EXIT_OK


def _cmd_iso(args) -> int:
    try:
        g = _load_graph(args.graph1)
        h = _load_graph(args.graph2)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    ok, witness = autgrp.are_isomorphic(g, h)
    print(
        json.dumps(
            {"isomorphic": ok, "witness": list(witness.img) if witness else None},
            indent=2,
        )
    )
    return EXIT_OK


def _cmd_classify(args) -> int:
    try:
        g = _load_graph(args.graph)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        prof = symmetry.transitivity_profile(g, s_max=args.s_max)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(
        json.dumps(
            {
                "vertex_transitive": prof.vertex_transitive,
                "s_distance_transitive": {str(k): v for k, v in prof.s_distance_transitive.items()},
                "s_arc_transitive": {str(k): v for k, v in prof.s_arc_transitive.items()},
                "2_geodesic_transitive": prof.two_geodesic_transitive,
                "distance_transitive": prof.distance_transitive,
                "locally_primitive": prof.locally_primitive,
                "aut_order": prof.aut_order,
                "diameter": prof.diameter,
            },
            sort_keys=True,
            indent=2,
        )
    )
    return EXIT_OK


def _cmd_scheme(args) -> int:
    try:
        mats = schemes.scheme_from_json(Path(args.scheme).read_text())
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: cannot read scheme from {args.scheme}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.action == "verify":
        report = schemes.verify_scheme(mats)
        print(
            json.dumps(
                {
                    "valid": report.valid,
                    "classes": report.classes,
                    "symmetric": report.symmetric,
                    "commutative": report.commutative,
                    "failure": report.failure,
                },
                indent=2,
            )
        )
        return EXIT_OK if report.valid else EXIT_FAIL
    diag = schemes.scheme_diagram(mats, args.relation)
    print(analysis.diagram_to_dot(diag), end="")
    return EXIT_OK


def _cmd_verify_paper(args) -> int:
    try:
        rows = suites.run_suite(args.suite)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for row in rows:
        print(json.dumps(row.as_dict(), sort_keys=True))
    failed = [r for r in rows if not r.ok]
    print(
        f"# {len(rows) - len(failed)}/{len(rows)} rows passed",
        file=sys.stderr,
    )
    return EXIT_OK if not failed else EXIT_FAIL


def _cmd_export_dot(args) -> int:
    try:
        g = _load_graph(args.graph)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(graph_to_dot(g), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symgraph", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a named family and write graph JSON")
    c.add_argument(
        "family",
        choices=sorted(
            list(fam._STANDARD)
            + [
                "paley",
                "peisert",
                "paley-digraph",
                "hamming",
                "johnson",
                "icosahedron",
                "biplane",
                "taylor-extension",
                "bipartite-double",
                "complement",
                "cone",
                "k2-product",
                "scheme-d",
            ]
        ),
    )
    c.add_argument("--q", type=int, help="field order")
    c.add_argument("--n", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--d", type=int)
    c.add_argument("--b", type=int)
    c.add_argument("--of", help="input graph JSON for transforms")
    c.add_argument("-o", "--out", required=True)
    c.set_defaults(fn=_cmd_construct)

    r = sub.add_parser("report", help="merged regularity/transitivity/spectrum report")
    r.add_argument("graph")
    r.add_argument("--assert", dest="assertions", action="append", metavar="KEY=VALUE")
    r.set_defaults(fn=_cmd_report)

    a = sub.add_parser("analyze", help="regularity report or distribution diagram")
    a.add_argument("action", choices=["report", "diagram"])
    a.add_argument("graph")
    a.add_argument("--root", type=int, default=0, help="base vertex for the diagram")
    a.add_argument("--format", choices=["dot", "json"], default="dot")
    a.set_defaults(fn=_cmd_analyze)

    u = sub.add_parser("aut", help="automorphism group generators and canonical form")
    u.add_argument("graph")
    u.set_defaults(fn=_cmd_aut)

    i = sub.add_parser("iso", help="isomorphism test with witness")
    i.add_argument("graph1")
    i.add_argument("graph2")
    i.set_defaults(fn=_cmd_iso)

    k = sub.add_parser("classify", help="transitivity profile")
    k.add_argument("graph")
    k.add_argument("--s-max", type=int, default=2)
    k.set_defaults(fn=_cmd_classify)

    s = sub.add_parser("scheme", help="verify a scheme or render its diagram")
    s.add_argument("action", choices=["verify", "diagram"])
    s.add_argument("scheme")
    s.add_argument("--relation", type=int, default=1)
    s.set_defaults(fn=_cmd_scheme)

    v = sub.add_parser("verify-paper", help="run a verification suite")
    v.add_argument(
        "--suite",
        required=True,
        choices=["armain", "prime-valency", "small-valency", "schemes", "all"],
    )
    v.set_defaults(fn=_cmd_verify_paper)

    e = sub.add_parser("dot", help="export a graph as DOT")
    e.add_argument("graph")
    e.set_defaults(fn=_cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
