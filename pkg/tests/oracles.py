"""Independent naive oracles used to cross-check the package's results.

Everything here is written from scratch against plain data structures
(list-of-lists multiplication tables, dict-of-sets adjacency) and imports
nothing from the package, so a bug in the package's kernels or algorithms
cannot leak into the expected values.  The algorithms are deliberately the
dumbest exhaustive ones that terminate at desk scale: subset filtering for
minimal generating sets, permutation / plain-backtracking search for
Hamiltonian cycles, candidate-set branching for cliques, and an explicit
K5 / K3,3 subdivision search for planarity.
"""

import itertools


class OracleLimit(Exception):
    """An oracle walked more nodes than its hard limit allows.  Tests treat
    this as a loud failure, never as a silent pass."""


# -------------------------------------------------------------------- groups

def closure(mul, elems):
    """The subgroup generated by `elems` (identity assumed at index 0),
    grown by breadth-first right-multiplication.  In a finite group every
    inverse is a positive power, so generator words reach everything."""
    seen = {0}
    frontier = [0]
    gens = list(elems)
    while frontier:
        nxt = []
        for x in frontier:
            row = mul[x]
            for g in gens:
                y = row[g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def generates(mul, elems):
    return len(closure(mul, elems)) == len(mul)


def minimal_generating_sets(mul):
    """Every minimal generating set, as {size: sorted list of sorted tuples},
    by filtering all subsets of the non-identity elements.  A strict subgroup
    chain at least doubles at each step, so no irredundant generating set is
    larger than floor(log2 n); the identity is redundant in any nontrivial
    generating set, so subsets containing 0 are skipped."""
    n = len(mul)
    if n == 1:
        return {0: [()]}
    cap = n.bit_length() - 1  # floor(log2 n)
    out = {}
    for k in range(1, cap + 1):
        found = []
        for xs in itertools.combinations(range(1, n), k):
            if not generates(mul, xs):
                continue
            if any(generates(mul, xs[:i] + xs[i + 1:]) for i in range(k)):
                continue
            found.append(tuple(xs))
        if found:
            out[k] = found
    return out


def independence_adjacency(mul, min_sets=None):
    """{element: set of neighbors}: two elements are adjacent when some
    minimal generating set contains both."""
    n = len(mul)
    if min_sets is None:
        min_sets = minimal_generating_sets(mul)
    adj = {v: set() for v in range(n)}
    for sets_of_size in min_sets.values():
        for xs in sets_of_size:
            for a, b in itertools.combinations(xs, 2):
                adj[a].add(b)
                adj[b].add(a)
    return adj


# -------------------------------------------------------------------- graphs

def components(vertices, adj):
    """Connected components by breadth-first search, as a tuple of sorted
    vertex tuples ordered by least member."""
    seen = set()
    comps = []
    for v in sorted(vertices):
        if v in seen:
            continue
        comp = {v}
        seen.add(v)
        queue = [v]
        while queue:
            x = queue.pop(0)
            for w in adj[x]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def hamiltonian_perm(vertices, adj, max_vertices=9):
    """Hamiltonicity by literal permutation search: fix the least vertex
    first, try every ordering of the rest."""
    verts = sorted(vertices)
    n = len(verts)
    if n > max_vertices:
        raise ValueError(f"permutation oracle is limited to {max_vertices} vertices")
    if n < 3:
        return False
    first = verts[0]
    for perm in itertools.permutations(verts[1:]):
        cyc = (first,) + perm
        if all(cyc[(i + 1) % n] in adj[cyc[i]] for i in range(n)):
            return True
    return False


def hamiltonian_dfs(vertices, adj, node_limit=20_000_000):
    """Exhaustive Hamiltonicity by backtracking in fixed ascending order —
    the same permutation search, abandoning a prefix at its first missing
    edge.  No degree heuristics, no propagation."""
    verts = sorted(vertices)
    n = len(verts)
    if n < 3:
        return False
    start = verts[0]
    used = {start}
    path = [start]
    nodes = [0]

    def rec(v):
        nodes[0] += 1
        if nodes[0] > node_limit:
            raise OracleLimit("hamiltonian oracle exceeded its node limit")
        if len(path) == n:
            return start in adj[v]
        for w in sorted(adj[v]):
            if w in used:
                continue
            used.add(w)
            path.append(w)
            if rec(w):
                return True
            path.pop()
            used.remove(w)
        return False

    return rec(start)


def planar(vertices, adj, max_vertices=16, node_limit=5_000_000):
    """Planarity by exhaustive K5 / K3,3 subdivision search (Kuratowski:
    a graph is planar iff it contains neither).  Branch-vertex candidates
    are filtered by the degree the subdivision forces (4 for K5, 3 for
    K3,3); connecting paths are packed one pair at a time, each internally
    disjoint from the others and from unused branch vertices."""
    verts = sorted(vertices)
    if len(verts) > max_vertices:
        raise ValueError(f"subdivision oracle is limited to {max_vertices} vertices")
    nodes = [0]

    def tick():
        nodes[0] += 1
        if nodes[0] > node_limit:
            raise OracleLimit("subdivision oracle exceeded its node limit")

    def simple_paths(a, b, banned):
        """Yield the internal-vertex tuples of simple a-b paths avoiding
        `banned` internally."""

        def go(v, internal, on_path):
            tick()
            if b in adj[v]:
                yield tuple(internal)
            for w in sorted(adj[v]):
                if w != a and w != b and w not in banned and w not in on_path:
                    internal.append(w)
                    on_path.add(w)
                    yield from go(w, internal, on_path)
                    on_path.remove(w)
                    internal.pop()

        yield from go(a, [], set())

    def pack(pairs, branch, used):
        if not pairs:
            return True
        a, b = pairs[0]
        banned = (branch - {a, b}) | used
        for internal in simple_paths(a, b, banned):
            if pack(pairs[1:], branch, used | set(internal)):
                return True
        return False

    deg = {v: len(adj[v]) for v in verts}
    # Trying high-degree branch vertices first (and direct edges before
    # longer routes) finds subdivisions inside dense cores quickly; the
    # search still exhausts every candidate before declaring planarity.
    order = sorted(verts, key=lambda v: (-deg[v], v))

    def routed_first(pairs):
        return sorted(pairs, key=lambda p: p[1] not in adj[p[0]])

    for branch in itertools.combinations([v for v in order if deg[v] >= 4], 5):
        if pack(routed_first(itertools.combinations(branch, 2)), set(branch), frozenset()):
            return False
    cands = [v for v in order if deg[v] >= 3]
    for six in itertools.combinations(cands, 6):
        for two in itertools.combinations(six[1:], 2):
            side_a = (six[0],) + two
            side_b = tuple(v for v in six if v not in side_a)
            pairs = [(a, b) for a in side_a for b in side_b]
            if pack(routed_first(pairs), set(six), frozenset()):
                return False
    return True


def max_clique(vertices, adj):
    """Exact maximum clique by plain branching on shrinking candidate sets
    (Bron-Kerbosch skeleton without pivoting); returns (size, witness)."""
    verts = sorted(vertices)
    idx = {v: i for i, v in enumerate(verts)}
    nbr = [frozenset(idx[w] for w in adj[v]) for v in verts]
    best = []

    def go(cur, cands):
        nonlocal best
        if len(cur) > len(best):
            best = cur[:]
        if len(cur) + len(cands) <= len(best):
            return
        for i, c in enumerate(cands):
            go(cur + [c], [d for d in cands[i + 1:] if d in nbr[c]])

    go([], list(range(len(verts))))
    return len(best), tuple(sorted(verts[i] for i in best))


def max_independent_set(vertices, adj):
    """Exact maximum independent set: maximum clique of the complement."""
    comp = {
        v: {w for w in vertices if w != v and w not in adj[v]} for v in vertices
    }
    return max_clique(vertices, comp)
