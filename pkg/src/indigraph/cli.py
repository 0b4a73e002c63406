"""Command-line surface and serialization.

Subcommands: `graph` (build and export a graph), `analyze` (print an exact
analysis), `verify` (run the check registry over a catalog), `catalog list`,
and `import` (validate a Cayley-table file).  Exit codes: 0 success, 1 at
least one verification check failed, 2 usage or input error, 3 budget
exhausted while building the requested object.

All outputs are deterministic byte-for-byte given identical inputs and
budgets, except the elapsed_ms fields of JSON verification reports.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .analysis import analyze_graph
from .catalog import (
    DEFAULT_MAX_ORDER,
    catalog_entry,
    default_catalog,
    import_cayley,
    load_catalog_file,
)
from .errors import BudgetExceeded, IndigraphError, PreconditionViolated
from .graphs import build_graph, build_swap_graph
from .groups import class_partition, structure_flags
from .recipes import resolve_group
from .verify import CHECK_IDS, run_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

# ---------------------------------------------------------------- graph export

# Fill colors for class-based node coloring, reused cyclically.
_PALETTE = (
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
    "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a", "#ffff99", "#b15928",
)


def _dot_quote(text):
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(graph, classes=None):
    """Undirected DOT text: nodes in vertex order labeled by element labels,
    optionally filled by conjugacy-class membership, edges sorted."""
    lines = ["graph independence {"]
    class_of = {}
    if classes is not None:
        for ci, cls in enumerate(classes):
            for v in cls:
                class_of[v] = ci
    for v in graph.vertices:
        attrs = [f"label={_dot_quote(graph.vertex_label(v))}"]
        if v in class_of:
            color = _PALETTE[class_of[v] % len(_PALETTE)]
            attrs.append(f'style=filled, fillcolor="{color}"')
        lines.append(f"  {_dot_quote(str(v))} [{', '.join(attrs)}];")
    for a, b in sorted(graph.edges()):
        lines.append(f"  {_dot_quote(str(a))} -- {_dot_quote(str(b))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_graph_json(graph):
    """JSON text for a graph; `import_graph_json` restores the identical
    adjacency relation.  Edges are index pairs into the vertices array."""
    verts = list(graph.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    payload = {
        "schema": "indigraph-graph/1",
        "group": graph.group.origin,
        "order": graph.group.order,
        "kind": graph.kind,
        "u": graph.u,
        "induced": graph.induced,
        "vertices": [list(v) if isinstance(v, tuple) else v for v in verts],
        "labels": [graph.vertex_label(v) for v in verts],
        "edges": sorted(
            [pos[a], pos[b]] if pos[a] < pos[b] else [pos[b], pos[a]]
            for a, b in graph.edges()
        ),
    }
    return json.dumps(payload, indent=2) + "\n"


@dataclass(frozen=True)
class ImportedGraph:
    """Adjacency-only graph restored from JSON export (no group attached)."""

    kind: str
    u: object
    induced: bool
    group_name: str
    order: int
    vertices: tuple
    labels: tuple
    adj: dict

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_edges(self):
        return sum(len(a) for a in self.adj.values()) // 2

    def has_edge(self, a, b):
        return b in self.adj.get(a, ())

    def neighbors(self, v):
        return tuple(sorted(self.adj[v]))

    def degree(self, v):
        return len(self.adj[v])

    def edges(self):
        for v in self.vertices:
            for w in self.adj[v]:
                if v < w:
                    yield (v, w)

    def vertex_label(self, v):
        return self.labels[self.vertices.index(v)]


def import_graph_json(text):
    data = json.loads(text)
    if data.get("schema") != "indigraph-graph/1":
        raise IndigraphError(f"unsupported graph schema: {data.get('schema')!r}")
    verts = [tuple(v) if isinstance(v, list) else v for v in data["vertices"]]
    adj = {v: set() for v in verts}
    for i, j in data["edges"]:
        a, b = verts[i], verts[j]
        adj[a].add(b)
        adj[b].add(a)
    return ImportedGraph(
        kind=data["kind"],
        u=data["u"],
        induced=data["induced"],
        group_name=data["group"],
        order=data["order"],
        vertices=tuple(verts),
        labels=tuple(data["labels"]),
        adj=adj,
    )


# --------------------------------------------------------------- report export

def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, int):
        return int(value)
    try:
        return int(value)  # numpy integers
    except (TypeError, ValueError):
        return str(value)


def report_to_json(report):
    rows = [
        {
            "group": o.group,
            "check": o.check,
            "status": o.status,
            "witness": _jsonable(o.witness),
            "elapsed_ms": round(o.elapsed_ms, 3),
        }
        for o in report.outcomes
    ]
    return json.dumps(rows, indent=2) + "\n"


def report_to_csv(report):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["group", "check", "status"])
    for o in report.outcomes:
        writer.writerow([o.group, o.check, o.status])
    return buf.getvalue()


# ------------------------------------------------------------------- plumbing

def _entries_for(spec, max_order):
    """Catalog entries for --catalog (None/'default' or a JSON file path)."""
    if spec is None or spec == "default":
        return default_catalog(max_order)
    return tuple(e for e in load_catalog_file(spec) if e.order <= max_order)


def _group_for(args):
    """--group resolution: recipe string or alias first, then catalog name
    (from --catalog when given, else the built-in list)."""
    name = args.group
    if getattr(args, "catalog", None) not in (None, "default"):
        for e in load_catalog_file(args.catalog):
            if e.name == name:
                return e.build()
    try:
        return resolve_group(name)
    except IndigraphError as recipe_err:
        try:
            return catalog_entry(name).build()
        except IndigraphError:
            raise recipe_err


def _build_requested_graph(args):
    group = _group_for(args)
    kwargs = {}
    if args.budget_nodes is not None:
        kwargs["node_budget"] = args.budget_nodes
    if args.kind == "swap":
        if args.induced:
            raise PreconditionViolated("--induced does not apply to --kind swap")
        return build_swap_graph(group, d=args.u, **kwargs)
    if args.kind == "rank" and args.u is None:
        raise PreconditionViolated("--kind rank requires --u")
    return build_graph(
        group, kind=args.kind, u=args.u, induced=args.induced, **kwargs
    )


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _format_from(fmt, out, default, allowed):
    if fmt is None and out is not None:
        suffix = out.rsplit(".", 1)[-1].lower()
        if suffix in allowed:
            fmt = suffix
    if fmt is None:
        fmt = default
    if fmt not in allowed:
        raise PreconditionViolated(
            f"format {fmt!r} not supported here (choose from {sorted(allowed)})"
        )
    return fmt


# ---------------------------------------------------------------- subcommands

def _cmd_graph(args):
    graph = _build_requested_graph(args)
    fmt = _format_from(args.format, args.out, "dot", {"dot", "json"})
    if fmt == "dot":
        classes = (
            class_partition(graph.group) if graph.kind in ("full", "rank") else None
        )
        text = export_dot(graph, classes)
    else:
        text = export_graph_json(graph)
    _emit(text, args.out)
    if args.out is not None:
        print(
            f"wrote {fmt} graph: {graph.n_vertices} vertices, "
            f"{graph.n_edges} edges -> {args.out}"
        )
    return EXIT_OK


def _labels_of(graph, vs):
    return "|".join(graph.vertex_label(v) for v in vs)


def _cmd_analyze(args):
    graph = _build_requested_graph(args)
    report = analyze_graph(graph)
    lines = [
        f"group={graph.group.origin} order={graph.group.order}",
        f"kind={graph.kind} u={graph.u if graph.u is not None else '-'} "
        f"induced={str(graph.induced).lower()}",
        f"vertices={graph.n_vertices} edges={graph.n_edges}",
        f"connected={str(report.component_count <= 1).lower()} "
        f"components={report.component_count}",
        f"planar={str(report.planarity.planar).lower()}",
        f"omega={report.clique_number} clique={_labels_of(graph, report.clique_witness)}",
        f"alpha={report.independence_number} "
        f"independent={_labels_of(graph, report.independence_witness)}",
        f"hamiltonian={report.hamiltonian}",
    ]
    if report.multipartite_parts is not None:
        parts = ",".join(str(p) for p in report.multipartite_parts)
        lines.append("parts={" + parts + "}")
    if report.degrees is not None:
        by_class = " ".join(
            f"{graph.group.labels[rep]}:{deg}"
            for rep, _size, deg in report.degrees.by_class
        )
        lines.append(f"class_degrees={by_class}")
    text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _cmd_verify(args):
    checks = None
    if args.suite not in (None, "all"):
        checks = [c.strip() for c in args.suite.split(",") if c.strip()]
        unknown = [c for c in checks if c not in CHECK_IDS]
        if unknown:
            raise PreconditionViolated(f"unknown check ids: {unknown}")
    entries = _entries_for(args.catalog, args.max_order)
    kwargs = {}
    if args.budget_nodes is not None:
        kwargs["node_budget"] = args.budget_nodes
    report = run_suite(
        entries=entries, checks=checks, max_order=args.max_order, **kwargs
    )
    if args.report is not None:
        fmt = _format_from(args.format, args.report, "json", {"json", "csv"})
        text = report_to_json(report) if fmt == "json" else report_to_csv(report)
        _emit(text, args.report)
    counts = report.by_status()
    summary = " ".join(f"{k}={counts[k]}" for k in sorted(counts))
    print(f"checked {len(report.outcomes)} outcomes: {summary}")
    for o in report.failures():
        print(f"FAIL {o.group} {o.check}")
    return EXIT_CHECK_FAILED if report.failures() else EXIT_OK


def _cmd_catalog_list(args):
    for e in _entries_for(args.catalog, args.max_order):
        source = e.recipe or e.table_path
        print(f"{e.name}\t{e.order}\t{source}")
    return EXIT_OK


def _cmd_import(args):
    group = import_cayley(args.table)
    flags = structure_flags(group)
    print(
        f"imported {group.origin}: order={group.order} "
        f"soluble={str(flags.soluble).lower()} "
        f"nilpotent={str(flags.nilpotent).lower()} "
        f"cyclic={str(flags.cyclic).lower()}"
    )
    return EXIT_OK


# --------------------------------------------------------------------- parser

def _add_graph_args(sub):
    sub.add_argument("--group", required=True, help="recipe, alias, or catalog name")
    sub.add_argument("--catalog", help="'default' or a catalog JSON path")
    sub.add_argument(
        "--kind", choices=("full", "rank", "swap"), default="full"
    )
    sub.add_argument("--u", type=int, default=None)
    sub.add_argument("--induced", action="store_true")
    sub.add_argument("--out", default=None)
    sub.add_argument("--format", choices=("dot", "json", "csv"), default=None)
    sub.add_argument("--budget-nodes", type=int, default=None)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="indigraph",
        description="Independence graphs of finite groups: build, analyze, verify.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    g = subs.add_parser("graph", help="build a graph and export DOT or JSON")
    _add_graph_args(g)
    g.set_defaults(func=_cmd_graph)

    a = subs.add_parser("analyze", help="print an exact graph analysis")
    _add_graph_args(a)
    a.set_defaults(func=_cmd_analyze)

    v = subs.add_parser("verify", help="run verification checks over a catalog")
    v.add_argument("--catalog", default="default")
    v.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    v.add_argument("--suite", default="all", help="'all' or comma-joined check ids")
    v.add_argument("--report", default=None)
    v.add_argument("--format", choices=("json", "csv"), default=None)
    v.add_argument("--budget-nodes", type=int, default=None)
    v.set_defaults(func=_cmd_verify)

    c = subs.add_parser("catalog", help="catalog operations")
    csubs = c.add_subparsers(dest="catalog_command", required=True)
    cl = csubs.add_parser("list", help="list catalog entries")
    cl.add_argument("--catalog", default="default")
    cl.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    cl.set_defaults(func=_cmd_catalog_list)

    imp = subs.add_parser("import", help="validate a Cayley-table file")
    imp.add_argument("table", help="path to a Cayley-table text file")
    imp.set_defaults(func=_cmd_import)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except IndigraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
