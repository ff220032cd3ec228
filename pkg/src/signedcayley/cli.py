"""Command-line front end.

Verbs: group, build, gamma, audit, enumerate-cubic, export.  Exit codes are
0 on success (or every audited claim Confirmed), 1 when any claim is Refuted
or Partial, and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .audit import (CUBIC_12_GROUPS, AuditError, ClaimId, all_confirmed,
                    enumerate_cubic_cayley_classes, full_report, name_cubic, report_json)
from .cayley import (CayleySpec, ConnectionSetError, build_cayley, connection_set_from_names,
                     parse_cayley_spec, parse_group_spec)
from .domination import NAIVE_LIMIT, gamma_exact, gamma_naive
from .graphs import (Graph, GraphError, parse_graph_spec, read_graph, regular_degree, to_dot,
                     to_text)
from .groups import GroupError, element_order, load_group, save_group

EXIT_OK, EXIT_VERDICT, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("graph source (choose one)")
    src.add_argument("--graph", metavar="KIND:N",
                     help="cycle, complete, path, empty, cube, mobius or prism")
    src.add_argument("--graph-file", metavar="PATH", help="text edge list, or DOT if *.dot")
    src.add_argument("--cayley", metavar="GROUP:PARAMS:GENS", help='e.g. "dihedral:8:s,rs,r2"')
    src.add_argument("--group", metavar="SPEC", help='e.g. "cyclic:8", "Q8", "direct_product:2x6"')
    src.add_argument("--group-file", metavar="PATH", help="group JSON written by `group --out`")
    src.add_argument("--gens", metavar="NAMES", help="connection set, comma separated names or indices")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signedcayley", description="Signed domination on Cayley graphs of small groups.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("group", help="describe a group, optionally save its table as JSON")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--group", metavar="SPEC")
    g.add_argument("--group-file", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="PATH", help="write the multiplication table as JSON")

    p = sub.add_parser("build", help="build a graph and write it as an edge list or DOT")
    _add_graph_source(p)
    p.add_argument("--out", metavar="PATH", help="output file (*.dot selects DOT); default stdout")
    p.add_argument("--json", action="store_true", help="print a summary as JSON")

    p = sub.add_parser("gamma", help="compute the signed domination number")
    _add_graph_source(p)
    p.add_argument("--method", choices=("bnb", "exact", "naive"), default="bnb",
                   help="bnb/exact: branch and bound; naive: exhaustive (n <= %d)" % NAIVE_LIMIT)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("audit", help="re-check the claims over the group catalog")
    p.add_argument("--claim", action="append", metavar="ID",
                   help="claim id or 'all' (repeatable); default all")
    p.add_argument("--max-order", type=int, default=12)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include wall-clock runtime in the report")
    p.add_argument("--out", metavar="PATH", help="write the JSON report here")
    p.add_argument("--json", action="store_true", help="print the JSON report to stdout")

    p = sub.add_parser("enumerate-cubic", help="isomorphism classes of cubic connected Cayley graphs")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--groups", metavar="TAGS",
                   help="comma separated catalog tags, or 'restricted' for D12,Z12,Z2xZ6")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("export", help="export a graph with an optimal labeling")
    _add_graph_source(p)
    p.add_argument("--format", choices=("dot", "text", "json"), default="dot")
    p.add_argument("--out", metavar="PATH", help="default stdout")
    return parser


# Resolution helpers -------------------------------------------------------------

def _load_group(args):
    if getattr(args, "group_file", None):
        return load_group(args.group_file)
    return parse_group_spec(args.group)


def _resolve_graph(args) -> tuple[Graph, Optional[CayleySpec]]:
    chosen = [name for name in ("graph", "graph_file", "cayley", "group", "group_file")
              if getattr(args, name)]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --graph, --graph-file, --cayley, --group, --group-file")
    if args.gens and chosen[0] not in ("group", "group_file"):
        raise UsageError("--gens only applies to --group or --group-file")
    if args.graph:
        return parse_graph_spec(args.graph), None
    if args.graph_file:
        return read_graph(args.graph_file), None
    if args.cayley:
        spec = parse_cayley_spec(args.cayley)
    else:
        G = _load_group(args)
        if not args.gens:
            raise UsageError("--gens is required with a group")
        spec = CayleySpec(G, connection_set_from_names(G, args.gens))
    return build_cayley(spec), spec


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _solve(g: Graph, method: str):
    if method == "naive":
        return gamma_naive(g)
    return gamma_exact(g)


# Verbs --------------------------------------------------------------------------

def cmd_group(args) -> int:
    G = _load_group(args)
    if args.out:
        save_group(G, args.out)
    orders = sorted(element_order(G, a) for a in range(G.order))
    center, abelian = len(G.center()), G.is_abelian
    info = {"name": G.catalog_name, "order": G.order, "abelian": abelian, "center_size": center,
            "involutions": len(G.involutions()), "element_orders": orders,
            "elements": list(G.names)}
    if args.json:
        print(json.dumps(info))
    else:
        print(f"{G.catalog_name or 'group'}: order {G.order}, "
              f"{'abelian' if abelian else 'non-abelian'}, center {center}, "
              f"{info['involutions']} involutions")
        print("elements: " + " ".join(G.names))
    return EXIT_OK


def cmd_build(args) -> int:
    g, spec = _resolve_graph(args)
    body = to_dot(g) if args.out and args.out.endswith(".dot") else to_text(g)
    if args.out:
        Path(args.out).write_text(body)
    if args.json:
        print(json.dumps({"n": g.n, "edges": g.num_edges, "regular_degree": regular_degree(g),
                          "connected": g.is_connected()}))
    elif not args.out:
        sys.stdout.write(body)
    return EXIT_OK


def cmd_gamma(args) -> int:
    g, spec = _resolve_graph(args)
    res = _solve(g, args.method)
    if args.json:
        doc = res.to_dict()
        doc["negative_labels"] = [g.labels[v] for v in res.negatives] if g.labels else res.negatives
        print(json.dumps(doc))
    else:
        print(res.gamma)
    return EXIT_OK


def cmd_audit(args) -> int:
    claims = args.claim or ["all"]
    if "all" in claims:
        ids = None
    else:
        try:
            ids = [ClaimId(c) for c in claims]
        except ValueError:
            bad = [c for c in claims if c not in ClaimId._value2member_map_]
            raise UsageError(f"unknown claim {bad[0]!r}; known: "
                             + ", ".join(c.value for c in ClaimId)) from None
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    doc = full_report(args.max_order, ids, jobs=args.jobs, timing=args.timing)
    text = report_json(doc)
    if args.out:
        Path(args.out).write_text(text)
    if args.json:
        sys.stdout.write(text)
    else:
        for c in doc["claims"]:
            print(f"{c['id']:<28} {c['status']:<9} instances={c['instances']} "
                  f"witnesses={len(c['witnesses'])} counterexamples={len(c['counterexamples'])}")
    return EXIT_OK if all_confirmed(doc) else EXIT_VERDICT


def cmd_enumerate_cubic(args) -> int:
    if args.groups == "restricted":
        flt = list(CUBIC_12_GROUPS)
    elif args.groups:
        flt = [t.strip() for t in args.groups.split(",") if t.strip()]
    else:
        flt = None
    classes = enumerate_cubic_cayley_classes(args.order, flt)
    rows = []
    for k, (rep, reals) in enumerate(classes, 1):
        res = gamma_exact(rep)
        rows.append({"class": k, "name": name_cubic(rep), "gamma": res.gamma,
                     "realizations": [{"group": G.catalog_name,
                                       "connection_set": [G.name(s) for s in sorted(S)]}
                                      for G, S in reals]})
    if args.json:
        print(json.dumps({"order": args.order, "groups": flt, "count": len(rows), "classes": rows}))
    else:
        print(f"order {args.order}: {len(rows)} class(es)")
        for r in rows:
            tags = sorted({x["group"] for x in r["realizations"]})
            print(f"  class {r['class']}: {r['name']}, gamma {r['gamma']}, "
                  f"{len(r['realizations'])} realization(s) in {','.join(tags)}")
    return EXIT_OK


def cmd_export(args) -> int:
    g, spec = _resolve_graph(args)
    res = gamma_exact(g)
    neg = set(res.negatives)
    if args.format == "text":
        body = to_text(g)
    elif args.format == "json":
        labels = list(g.labels) if g.labels else [str(v) for v in range(g.n)]
        body = json.dumps({"n": g.n, "labels": labels, "edges": [list(e) for e in g.edges()],
                           "gamma": res.gamma, "labeling": list(res.labeling.values)}) + "\n"
    else:
        dot = to_dot(g)
        # negatives drawn filled so the optimal labeling is visible
        lines = dot.rstrip().splitlines()
        style = [f"  {v} [style=filled, fillcolor=gray];" for v in sorted(neg)]
        body = "\n".join(lines[:-1] + [f"  // gamma = {res.gamma}"] + style + lines[-1:]) + "\n"
    _emit(body, args.out)
    return EXIT_OK


_VERBS = {"group": cmd_group, "build": cmd_build, "gamma": cmd_gamma, "audit": cmd_audit,
          "enumerate-cubic": cmd_enumerate_cubic, "export": cmd_export}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _VERBS[args.verb](args)
    except (UsageError, GroupError, ConnectionSetError, GraphError, AuditError, ValueError,
            OSError, json.JSONDecodeError) as exc:
        print(f"signedcayley {args.verb}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
