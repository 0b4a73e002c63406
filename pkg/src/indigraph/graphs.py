"""Independence graphs, rank-u variants, vertex supports, swap graphs.

Two elements are adjacent in the independence graph when some minimal
generating set contains both; the rank-u variant restricts to size-u sets,
and the induced ("pruned") form drops isolated vertices.  The swap graph on
ordered generating d-tuples joins tuples differing in exactly one entry.
All graphs are immutable, deterministically ordered, and tagged with their
provenance (group, kind, u, induced).
"""

from dataclasses import dataclass, field

from .errors import BudgetExceeded, PreconditionViolated
from .gensets import (
    DEFAULT_NODE_BUDGET,
    enumerate_min_gen_sets,
    size_cap_for,
)
from .groups import frattini
from . import _kernels as kernels

DEFAULT_TUPLE_BUDGET = 500_000
DEFAULT_SWAP_NODE_BUDGET = 20_000_000


@dataclass(frozen=True)
class IndependenceGraph:
    """An undirected graph whose vertices are group elements (ints) or
    generating tuples (tuples of ints), with provenance."""

    group: object
    kind: str  # 'full' | 'rank' | 'swap'
    u: object  # rank or tuple length, None for 'full'
    induced: bool
    vertices: tuple
    adj: dict = field(repr=False)

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_edges(self):
        return sum(len(s) for s in self.adj.values()) // 2

    def has_edge(self, x, y):
        return y in self.adj.get(x, ())

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
        if self.kind == "swap":
            return "(" + ",".join(self.group.labels[x] for x in v) + ")"
        return self.group.labels[v]

    def __repr__(self):
        u = f", u={self.u}" if self.u is not None else ""
        return (
            f"IndependenceGraph({self.group.origin}, kind={self.kind}{u}, "
            f"induced={self.induced}, v={self.n_vertices}, e={self.n_edges})"
        )


def _graph_from_sets(group, gen_sets, kind, u, induced):
    adj = {v: set() for v in range(group.order)}
    for s in gen_sets:
        k = len(s)
        for i in range(k):
            si = s[i]
            for j in range(i + 1, k):
                adj[si].add(s[j])
                adj[s[j]].add(si)
    if induced:
        vertices = tuple(v for v in range(group.order) if adj[v])
        adj = {v: adj[v] for v in vertices}
    else:
        vertices = tuple(range(group.order))
    return IndependenceGraph(group, kind, u, induced, vertices, adj)


def build_graph(group, kind="full", u=None, induced=False,
                node_budget=DEFAULT_NODE_BUDGET):
    """The independence graph ('full') or its rank-u variant ('rank').

    induced=True drops isolated vertices.  Vertices are element indices;
    adjacency comes from one shared enumeration of the minimal generating
    sets, so repeated builds on the same group are cheap."""
    enum = enumerate_min_gen_sets(group, node_budget)
    if kind == "full":
        if u is not None:
            raise PreconditionViolated("u only applies to kind='rank'")
        sets = enum.all_sets()
    elif kind == "rank":
        if u is None or u < 0:
            raise PreconditionViolated("kind='rank' needs a rank u >= 0")
        sets = enum.sets_of_size(u)
    else:
        raise PreconditionViolated(f"unknown kind {kind!r}")
    return _graph_from_sets(group, sets, kind, u, induced)


@dataclass(frozen=True)
class VertexSupports:
    """V: vertices of some minimal generating set; by_rank[u]: vertices of
    some size-u one; W: vertices present at every occurring size."""

    V: tuple
    by_rank: dict
    W: tuple


def vertex_supports(group, node_budget=DEFAULT_NODE_BUDGET):
    enum = enumerate_min_gen_sets(group, node_budget)
    by_rank = {}
    for size in enum.sizes:
        seen = set()
        for s in enum.sets_by_size[size]:
            seen.update(s)
        by_rank[size] = tuple(sorted(seen))
    union = set()
    for v in by_rank.values():
        union.update(v)
    inter = None
    for v in by_rank.values():
        inter = set(v) if inter is None else inter & set(v)
    return VertexSupports(
        V=tuple(sorted(union)),
        by_rank=by_rank,
        W=tuple(sorted(inter)) if inter is not None else (),
    )


def edge_test(group, x, y, u=None, node_budget=DEFAULT_NODE_BUDGET):
    """Is {x, y} contained in some minimal generating set (of size u, when
    given)?  Returns (bool, witness-or-None).  Uses the cached enumeration
    when present, otherwise a seeded early-terminating search."""
    if x == y:
        raise PreconditionViolated("edge_test needs two distinct elements")
    if x == 0 or y == 0:
        raise PreconditionViolated("the identity belongs to no minimal generating set")
    if not (0 <= x < group.order and 0 <= y < group.order):
        raise PreconditionViolated("element index out of range")
    enum = group._enum_cache
    if enum is not None:
        sizes = [u] if u is not None else enum.sizes
        for size in sizes:
            for s in enum.sets_by_size.get(size, ()):
                if x in s and y in s:
                    return True, s
        return False, None
    return _seeded_edge_search(group, x, y, u, node_budget)


def _seeded_edge_search(group, x, y, u, node_budget):
    eng = group.engine
    full = eng.full_hid
    masks = eng.masks
    step = eng.step
    join = eng.join
    frat_hid = eng.intern(frattini(group).mask)
    cap = u if u is not None else size_cap_for(group.order)
    if cap < 2:
        return False, None
    chosen = [min(x, y), max(x, y)]
    # reject if the seed pair is already redundant mod Frattini
    if (masks[step(frat_hid, chosen[0])] >> chosen[1]) & 1 or (
        masks[step(frat_hid, chosen[1])] >> chosen[0]
    ) & 1:
        return False, None
    n = group.order
    budget = [node_budget]

    def drops_of(xs):
        k = len(xs)
        pre = [frat_hid]
        for g in xs:
            pre.append(step(pre[-1], g))
        suf = [frat_hid] * (k + 1)
        for i in range(k - 1, -1, -1):
            suf[i] = step(suf[i + 1], xs[i])
        return pre, [join(pre[i], suf[i + 1]) for i in range(k)]

    def rec(xs, last):
        pre, drops = drops_of(xs)
        top = pre[-1]
        if masks[top] == masks[full]:
            if u is None or len(xs) == u:
                return tuple(sorted(xs))
            return None
        if len(xs) >= cap:
            return None
        top_mask = masks[top]
        for z in range(last + 1, n):
            budget[0] -= 1
            if budget[0] < 0:
                raise BudgetExceeded("edge_test search exceeded its node budget")
            if (top_mask >> z) & 1 or z == x or z == y:
                continue
            ok = all(
                not (masks[step(drops[i], z)] >> xs[i]) & 1
                for i in range(len(xs))
            )
            if not ok:
                continue
            found = rec(xs + [z], z)
            if found is not None:
                return found
        return None

    witness = rec(chosen, -1)
    return (witness is not None), witness


def build_swap_graph(group, d=None, node_budget=DEFAULT_SWAP_NODE_BUDGET,
                     tuple_budget=DEFAULT_TUPLE_BUDGET):
    """Swap graph on ordered generating d-tuples, d = least generating-set
    size; tuples are adjacent iff they differ in exactly one coordinate.
    Edge discovery hashes the d projections that drop one coordinate, so each
    bucket is a clique.  Raises BudgetExceeded when the tuple count or the
    search exceeds its budget."""
    enum = enumerate_min_gen_sets(group)
    if d is None:
        d = enum.d
    elif d != enum.d:
        raise PreconditionViolated(
            f"swap graph is defined at d={enum.d}, got d={d}"
        )
    tuples, _nodes, complete = kernels.generating_tuples(
        group.engine.prep, d, frattini(group).mask, node_budget, tuple_budget
    )
    if not complete:
        raise BudgetExceeded(
            f"swap graph of {group.origin}: generating-tuple search exceeded "
            f"budget ({tuple_budget} tuples / {node_budget} nodes)"
        )
    vertices = tuple(tuples)  # kernel emits them in ascending lex order
    adj = {t: set() for t in vertices}
    buckets = {}
    for t in vertices:
        for pos in range(d):
            buckets.setdefault((pos, t[:pos] + t[pos + 1:]), []).append(t)
    for members in buckets.values():
        for i in range(len(members)):
            mi = members[i]
            for j in range(i + 1, len(members)):
                adj[mi].add(members[j])
                adj[members[j]].add(mi)
    return IndependenceGraph(group, "swap", d, False, vertices, adj)
