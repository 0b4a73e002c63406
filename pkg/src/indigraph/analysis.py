"""Exact graph analysis: components, planarity with validated certificates,
clique/independence numbers with witnesses, Hamiltonicity, degree profiles,
and complete-multipartite recognition.

Planarity decisions come from networkx's left-right test, but both kinds of
certificate are re-validated here from first principles: a claimed embedding
must reproduce Euler's face count from its rotation system, and a claimed
obstruction must be a genuine K5/K3,3 subdivision inside the graph.
Clique search is exact branch-and-bound with a greedy-coloring bound on
bitsets; the independence number is the clique number of the complement.
Hamiltonicity uses the constructive rotation argument when the minimum
degree is at least half the vertex count (where a cycle is guaranteed), an
exact subset dynamic program for small graphs, and budgeted exhaustive
backtracking otherwise.
"""

from dataclasses import dataclass

import networkx as nx
import numpy as np

from .errors import BudgetExceeded, ClassDegreeMismatch, PreconditionViolated
from .groups import class_partition

DEFAULT_CLIQUE_BUDGET = 10_000_000
DEFAULT_HAM_BUDGET = 10_000_000


# ----------------------------------------------------------------- components

def components(graph):
    """Connected components as a tuple of sorted vertex tuples, ordered by
    least vertex (union-find)."""
    parent = {v: v for v in graph.vertices}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for v in graph.vertices:
        for w in graph.adj[v]:
            rv, rw = find(v), find(w)
            if rv != rw:
                parent[rw] = rv
    groups = {}
    for v in graph.vertices:
        groups.setdefault(find(v), []).append(v)
    comps = [tuple(sorted(g)) for g in groups.values()]
    return tuple(sorted(comps, key=lambda c: c[0]))


def is_connected(graph):
    return len(components(graph)) <= 1


# ------------------------------------------------------------------ planarity

@dataclass(frozen=True)
class PlanarityCertificate:
    planar: bool
    # planar: rotation system, vertex -> tuple of neighbors in cyclic order
    embedding: object
    # nonplanar: the edge set of a K5/K3,3 subdivision, and which kind
    kuratowski_edges: object
    kuratowski_kind: object


def validate_embedding(graph, rotation):
    """Check a rotation system against the graph and Euler's formula; return
    the traversed face count or raise ValueError.

    Faces are walked with the half-edge successor rule; on a genuine sphere
    embedding the total over components with edges equals sum(2 - v_c + e_c).
    """
    verts = set(graph.vertices)
    if set(rotation) != verts:
        raise ValueError("embedding vertex set differs from graph")
    for v in rotation:
        if sorted(rotation[v]) != sorted(graph.adj[v]):
            raise ValueError(f"rotation at {v!r} does not match adjacency")
    pos = {
        v: {w: i for i, w in enumerate(rotation[v])} for v in rotation
    }
    seen = set()
    faces = 0
    for u in graph.vertices:
        for v in rotation[u]:
            if (u, v) in seen:
                continue
            faces += 1
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                nxt = rotation[b][(pos[b][a] + 1) % len(rotation[b])]
                a, b = b, nxt
            if (a, b) != (u, v):
                raise ValueError("face walk did not close on its first edge")
    expected = 0
    for comp in components(graph):
        e_c = sum(len(graph.adj[v]) for v in comp) // 2
        if e_c:
            expected += 2 - len(comp) + e_c
    if faces != expected:
        raise ValueError(
            f"face count {faces} violates Euler's formula (expected {expected})"
        )
    return faces


def classify_kuratowski(graph, edges):
    """Verify that `edges` forms a K5 or K3,3 subdivision inside `graph`;
    return 'K5' or 'K33', or raise ValueError."""
    edges = {tuple(sorted(e)) for e in edges}
    adj = {}
    for x, y in edges:
        if x == y:
            raise ValueError("self-loop in claimed subdivision")
        if not graph.has_edge(x, y):
            raise ValueError(f"claimed edge {(x, y)!r} is not in the graph")
        adj.setdefault(x, set()).add(y)
        adj.setdefault(y, set()).add(x)
    deg = {v: len(s) for v, s in adj.items()}
    branch = sorted(v for v, d in deg.items() if d >= 3)
    inner = [v for v, d in deg.items() if d == 2]
    if any(d < 2 for d in deg.values()):
        raise ValueError("subdivision has a vertex of degree < 2")
    if len(branch) == 5 and all(deg[v] == 4 for v in branch):
        kind = "K5"
    elif len(branch) == 6 and all(deg[v] == 3 for v in branch):
        kind = "K33"
    else:
        raise ValueError(
            f"branch degrees {sorted(deg[v] for v in branch)} fit neither K5 nor K3,3"
        )
    used_inner = set()
    links = {}
    for b in branch:
        for first in sorted(adj[b]):
            prev, cur = b, first
            while deg[cur] == 2:
                used_inner.add(cur)
                nxt = next(w for w in adj[cur] if w != prev)
                prev, cur = cur, nxt
            if cur == b:
                raise ValueError("path returns to its own branch vertex")
            key = (min(b, cur), max(b, cur))
            links[key] = links.get(key, 0) + 1
    # each branch pair's path is walked once from each end
    if any(count != 2 for count in links.values()):
        raise ValueError("some branch pair is joined by more than one path")
    if used_inner != set(inner):
        raise ValueError("stray degree-2 vertices outside the branch paths")
    pairs = set(links)
    if kind == "K5":
        want = {
            (branch[i], branch[j]) for i in range(5) for j in range(i + 1, 5)
        }
        if pairs != want:
            raise ValueError("branch connections do not form K5")
    else:
        side = {branch[0]} | {
            v for v in branch if (min(v, branch[0]), max(v, branch[0])) not in pairs
        }
        other = [v for v in branch if v not in side]
        if len(side) != 3 or len(other) != 3:
            raise ValueError("branch vertices do not split 3+3")
        want = {(min(a, b), max(a, b)) for a in side for b in other}
        if pairs != want:
            raise ValueError("branch connections do not form K3,3")
    return kind


def _nonplanar_core(edges):
    """Edge-minimal nonplanar subset of `edges`, by chunked greedy deletion.

    Deleting an edge keeps an edge e only when dropping it would make the
    graph planar, so after the chunk-size-1 pass every surviving edge is
    critical; an edge-minimal nonplanar graph is exactly a K5/K3,3
    subdivision.  Much faster than a generic obstruction search on large
    graphs, since each retest is a bare linear-time planarity check."""

    def nonplanar(es):
        h = nx.Graph()
        h.add_edges_from(es)
        return not nx.check_planarity(h, counterexample=False)[0]

    chunk = max(1, len(edges) // 2)
    while chunk >= 1:
        i = 0
        while i < len(edges):
            trial = edges[:i] + edges[i + chunk:]
            if trial and nonplanar(trial):
                edges = trial
            else:
                i += chunk
        chunk //= 2
    return edges


def is_planar(graph):
    """Planarity with a validated certificate either way."""
    g = nx.Graph()
    g.add_nodes_from(graph.vertices)
    g.add_edges_from(graph.edges())
    v, e = g.number_of_nodes(), g.number_of_edges()
    planar, cert = nx.check_planarity(g, counterexample=False)
    if v >= 3 and e > 3 * v - 6 and planar:
        raise RuntimeError("planarity result contradicts the edge-count bound")
    if planar:
        data = cert.get_data()
        rotation = {x: tuple(data.get(x, ())) for x in graph.vertices}
        validate_embedding(graph, rotation)
        return PlanarityCertificate(True, rotation, None, None)
    core = _nonplanar_core(sorted(graph.edges()))
    edges = tuple(sorted(tuple(sorted(ed)) for ed in core))
    kind = classify_kuratowski(graph, edges)
    return PlanarityCertificate(False, None, edges, kind)


# ------------------------------------------------------- clique / independence

def _max_clique_bits(adjb, n, budget):
    """Exact max clique on bitset adjacency; returns (size, member mask)."""
    best_size = 0
    best_mask = 0
    if n == 0:
        return 0, 0

    def expand(pool, rsize, rmask):
        nonlocal best_size, best_mask
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceeded("clique search exceeded its node budget")
        order = []
        colors = []
        rest = pool
        color = 0
        while rest:
            color += 1
            avail = rest
            while avail:
                low = avail & -avail
                x = low.bit_length() - 1
                order.append(x)
                colors.append(color)
                avail &= ~(adjb[x] | low)
                rest ^= low
        live = pool
        for i in range(len(order) - 1, -1, -1):
            if rsize + colors[i] <= best_size:
                return
            x = order[i]
            low = 1 << x
            sub = live & adjb[x]
            if sub:
                expand(sub, rsize + 1, rmask | low)
            elif rsize + 1 > best_size:
                best_size = rsize + 1
                best_mask = rmask | low
            live ^= low

    expand((1 << n) - 1, 0, 0)
    return best_size, best_mask


def _bitsets(graph, complement=False):
    verts = list(graph.vertices)
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    adjb = []
    universe = (1 << n) - 1
    for v in verts:
        m = 0
        for w in graph.adj[v]:
            m |= 1 << index[w]
        if complement:
            m = universe & ~m & ~(1 << index[v])
        adjb.append(m)
    return verts, adjb, n


def clique_number(graph, node_budget=DEFAULT_CLIQUE_BUDGET):
    """(omega, witness clique as a sorted tuple)."""
    verts, adjb, n = _bitsets(graph)
    size, mask = _max_clique_bits(adjb, n, [node_budget])
    witness = tuple(sorted(verts[i] for i in _bits(mask)))
    return size, witness


def independence_number(graph, node_budget=DEFAULT_CLIQUE_BUDGET):
    """(alpha, witness independent set as a sorted tuple)."""
    verts, adjb, n = _bitsets(graph, complement=True)
    size, mask = _max_clique_bits(adjb, n, [node_budget])
    witness = tuple(sorted(verts[i] for i in _bits(mask)))
    return size, witness


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# --------------------------------------------------------------- hamiltonicity

class _SearchBudgetExhausted(Exception):
    pass


def _cycle_ok(graph, cycle):
    if cycle is None or len(cycle) != graph.n_vertices:
        return False
    if set(cycle) != set(graph.vertices):
        return False
    return all(
        graph.has_edge(cycle[i], cycle[(i + 1) % len(cycle)])
        for i in range(len(cycle))
    )


def _rotation_cycle(graph):
    """Constructive cycle for graphs with min degree >= v/2: repeatedly repair
    a non-adjacent consecutive pair by reversing a segment; each repair
    strictly lowers the number of bad pairs, and the degree condition
    guarantees a repair exists."""
    order = list(graph.vertices)
    n = len(order)
    adj = graph.adj
    for _ in range(n * n):
        bad = next(
            (i for i in range(n) if order[(i + 1) % n] not in adj[order[i]]),
            None,
        )
        if bad is None:
            return tuple(order)
        order = order[bad:] + order[:bad]
        j = next(
            (
                j
                for j in range(1, n - 1)
                if order[j] in adj[order[0]]
                and order[(j + 1) % n] in adj[order[1]]
            ),
            None,
        )
        if j is None:
            return None
        order[1:j + 1] = reversed(order[1:j + 1])
    return None


# Largest vertex count handled by the exact dynamic program: the table holds
# 2**n * n booleans, so 20 vertices cost ~21 MB and well under a second.
_EXACT_HAMILTONIAN_LIMIT = 20


def _held_karp_cycle(graph):
    """Exact Hamiltonicity by subset dynamic programming.

    dp[mask, v] records whether some simple path covers exactly the vertex
    subset `mask`, starts at vertex 0, and ends at v.  Masks are processed
    in order of population count, so every entry is final before it is
    extended; a cycle exists iff some full-mask endpoint is adjacent to the
    start."""
    verts = sorted(graph.vertices)
    nv = len(verts)
    pos = {v: k for k, v in enumerate(verts)}
    nbr = [sorted(pos[w] for w in graph.adj[v]) for v in verts]
    dp = np.zeros((1 << nv, nv), dtype=bool)
    dp[1, 0] = True
    all_masks = np.arange(1 << nv, dtype=np.int64)
    popcount = np.zeros(1 << nv, dtype=np.int8)
    for b in range(nv):
        popcount[(all_masks >> b) & 1 == 1] += 1
    layers = [all_masks[popcount == k] for k in range(nv + 1)]
    for k in range(1, nv):
        layer = layers[k]
        for v in range(nv):
            with_v = layer[(layer >> v) & 1 == 1]
            active = with_v[dp[with_v, v]]
            if active.size == 0:
                continue
            for w in nbr[v]:
                targets = active[(active >> w) & 1 == 0]
                if targets.size:
                    dp[targets | (1 << w), w] = True
    full = (1 << nv) - 1
    ends = [v for v in nbr[0] if dp[full, v]]
    if not ends:
        return "no", None
    v, mask, rev = ends[0], full, []
    while True:
        rev.append(v)
        mask ^= 1 << v
        if mask == 0:
            break
        v = next(u for u in nbr[v] if (mask >> u) & 1 and dp[mask, u])
    cycle = tuple(verts[p] for p in reversed(rev))
    if not _cycle_ok(graph, cycle):
        raise RuntimeError("hamiltonian dynamic program produced an invalid cycle")
    return "yes", cycle


def hamiltonian_cycle(graph, node_budget=DEFAULT_HAM_BUDGET):
    """('yes', cycle) | ('no', None) | ('unknown-budget', None).

    'no' is only returned after an exhaustive search (or a sound necessary
    condition fails); every 'yes' cycle is re-verified before returning."""
    n = graph.n_vertices
    if n < 3:
        return "no", None
    if any(len(graph.adj[v]) < 2 for v in graph.vertices):
        return "no", None
    if not is_connected(graph):
        return "no", None
    if min(len(graph.adj[v]) for v in graph.vertices) * 2 >= n:
        cycle = _rotation_cycle(graph)
        if _cycle_ok(graph, cycle):
            return "yes", cycle
    if n <= _EXACT_HAMILTONIAN_LIMIT:
        return _held_karp_cycle(graph)
    # exhaustive backtracking from a minimum-degree start.  cnt[v] tracks the
    # unvisited neighbors of v: once cnt[v] hits 0 every neighbor of v is on
    # the path, so v can only ever be the cycle's final vertex — two such
    # vertices are a contradiction, and one forbids extending anywhere else.
    verts = sorted(graph.vertices, key=lambda v: (len(graph.adj[v]), v))
    start = verts[0]
    adj = {v: sorted(graph.adj[v]) for v in verts}
    onpath = {start}
    path = [start]
    cnt = {v: len(graph.adj[v]) for v in verts}
    zeros = set()
    for u in adj[start]:
        cnt[u] -= 1
        if cnt[u] == 0:
            zeros.add(u)
    budget = [node_budget]

    def rec(v):
        budget[0] -= 1
        if budget[0] < 0:
            raise _SearchBudgetExhausted
        if len(path) == n:
            return graph.has_edge(v, start)
        if len(zeros) > 1:
            return False
        if zeros:
            if len(path) != n - 1:
                return False
            candidates = [z for z in zeros if graph.has_edge(v, z)]
        else:
            candidates = [w for w in adj[v] if w not in onpath]
        for w in candidates:
            onpath.add(w)
            path.append(w)
            zeros.discard(w)
            dec = [u for u in adj[w] if u not in onpath]
            for u in dec:
                cnt[u] -= 1
                if cnt[u] == 0:
                    zeros.add(u)
            if rec(w):
                return True
            for u in dec:
                if cnt[u] == 0:
                    zeros.discard(u)
                cnt[u] += 1
            if cnt[w] == 0:
                zeros.add(w)
            path.pop()
            onpath.remove(w)
        return False

    try:
        if rec(start):
            cycle = tuple(path)
            if not _cycle_ok(graph, cycle):
                raise RuntimeError("hamiltonian search produced an invalid cycle")
            return "yes", cycle
        return "no", None
    except _SearchBudgetExhausted:
        return "unknown-budget", None


# ------------------------------------------------- multipartite / degree data

def recognize_complete_multipartite(graph):
    """Sorted part sizes when the graph is complete multipartite, else None.
    Vertices sharing a neighborhood form a part; every cross-part pair must
    then be an edge."""
    if not graph.vertices:
        return None
    classes = {}
    for v in graph.vertices:
        classes.setdefault(frozenset(graph.adj[v]), []).append(v)
    parts = list(classes.values())
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            for x in parts[i]:
                for y in parts[j]:
                    if not graph.has_edge(x, y):
                        return None
    return tuple(sorted(len(p) for p in parts))


@dataclass(frozen=True)
class DegreeProfile:
    by_vertex: dict
    # ((class representative, class size, common degree), ...) for the classes
    # whose members are vertices; classes are all-in or all-out of the graph.
    by_class: tuple


def degree_profile(graph):
    """Degrees per vertex and per conjugacy class (element graphs only).
    Raises ClassDegreeMismatch if a class is split or has unequal degrees —
    conjugation is a graph automorphism, so either would be a bug."""
    if graph.kind == "swap":
        raise PreconditionViolated("degree classes need element vertices")
    by_vertex = {v: len(graph.adj[v]) for v in graph.vertices}
    vset = set(graph.vertices)
    by_class = []
    for cls in class_partition(graph.group):
        present = [g for g in cls if g in vset]
        if not present:
            continue
        if len(present) != len(cls):
            raise ClassDegreeMismatch(
                f"conjugacy class of {cls[0]} is split by the vertex set",
                witness=(cls[0], tuple(present)),
            )
        degs = {by_vertex[g] for g in present}
        if len(degs) != 1:
            raise ClassDegreeMismatch(
                f"degrees differ on the conjugacy class of {cls[0]}",
                witness=(cls[0], tuple(sorted((g, by_vertex[g]) for g in present))),
            )
        by_class.append((cls[0], len(cls), degs.pop()))
    return DegreeProfile(by_vertex=by_vertex, by_class=tuple(by_class))


# -------------------------------------------------------------------- report

@dataclass(frozen=True)
class GraphReport:
    graph: object
    components: tuple
    planarity: PlanarityCertificate
    clique_number: int
    clique_witness: tuple
    independence_number: int
    independence_witness: tuple
    hamiltonian: str
    hamiltonian_cycle: object
    multipartite_parts: object
    degrees: object

    @property
    def component_count(self):
        return len(self.components)


def analyze_graph(graph, clique_budget=DEFAULT_CLIQUE_BUDGET,
                  ham_budget=DEFAULT_HAM_BUDGET):
    comps = components(graph)
    planarity = is_planar(graph)
    omega, clique_w = clique_number(graph, clique_budget)
    alpha, indep_w = independence_number(graph, clique_budget)
    ham_status, cycle = hamiltonian_cycle(graph, ham_budget)
    parts = recognize_complete_multipartite(graph)
    degrees = (
        degree_profile(graph) if graph.kind in ("full", "rank") else None
    )
    return GraphReport(
        graph=graph,
        components=comps,
        planarity=planarity,
        clique_number=omega,
        clique_witness=clique_w,
        independence_number=alpha,
        independence_witness=indep_w,
        hamiltonian=ham_status,
        hamiltonian_cycle=cycle,
        multipartite_parts=parts,
        degrees=degrees,
    )
