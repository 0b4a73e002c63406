"""Shared test plumbing: cached group building and plain-graph adapters."""

from indigraph.recipes import resolve_group

_GROUPS = {}


def build(name):
    """Group for a recipe/alias, cached for the whole test session.  Groups
    are immutable and memoize their own enumerations, so sharing them keeps
    the suite fast; tests that need a cold cache call resolve_group directly."""
    group = _GROUPS.get(name)
    if group is None:
        group = _GROUPS[name] = resolve_group(name)
    return group


def mul_rows(group):
    """The multiplication table as plain lists, for the oracles."""
    return [[int(x) for x in row] for row in group.mul]


def plain(graph):
    """(vertices, adjacency) copies of a graph, for the oracles."""
    return list(graph.vertices), {v: set(graph.adj[v]) for v in graph.vertices}


class StubGraph:
    """Duck-typed stand-in for IndependenceGraph, for analysis tests that
    need arbitrary adjacency (random graphs, tampered graphs)."""

    def __init__(self, vertices, adj, kind="full", group=None, u=None,
                 induced=False):
        self.vertices = tuple(vertices)
        self.adj = {v: set(adj.get(v, ())) for v in self.vertices}
        self.kind = kind
        self.group = group
        self.u = u
        self.induced = induced

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_edges(self):
        return sum(len(s) for s in self.adj.values()) // 2

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
        return str(v)


def complete_graph(n):
    return StubGraph(range(n), {v: set(range(n)) - {v} for v in range(n)})


def cycle_graph(n):
    return StubGraph(
        range(n), {v: {(v - 1) % n, (v + 1) % n} for v in range(n)}
    )


def complete_bipartite(a, b):
    left = range(a)
    right = range(a, a + b)
    adj = {v: set(right) for v in left}
    adj.update({v: set(left) for v in right})
    return StubGraph(range(a + b), adj)


def petersen_graph():
    """The 10-vertex Petersen graph: 3-regular, famously non-Hamiltonian."""
    adj = {v: set() for v in range(10)}
    for i in range(5):
        for a, b in ((i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)):
            adj[a].add(b)
            adj[b].add(a)
    return StubGraph(range(10), adj)
