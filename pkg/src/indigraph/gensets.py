"""Minimal generating sets: enumeration, rank bounds, replacement witnesses.

The enumeration walks irredundant-mod-Frattini partial sets in ascending
index order (see _kernels for the per-node mechanics) and is cached per
group, since the independence graph, its rank-u variants, and the vertex
supports all reuse it.  A set is a minimal generating set iff it generates
together with the Frattini subgroup and stays irredundant modulo it, so the
walk's leaves are exactly the minimal generating sets.
"""

import math
from dataclasses import dataclass

from . import _kernels as kernels
from .errors import BudgetExceeded, PreconditionViolated
from .groups import frattini

DEFAULT_NODE_BUDGET = 10**8


def size_cap_for(order):
    """Hard cap on minimal-generating-set size: ceil(log2 n) + 1.  Strict
    subgroup chains at least double the order at each step, so no
    irredundant set can reach this size; validated post hoc."""
    return max(1, math.ceil(math.log2(order))) + 1 if order > 1 else 1


@dataclass(frozen=True)
class MinGenEnumeration:
    """Complete enumeration of the minimal generating sets of one group."""

    group: object
    sets_by_size: dict
    nodes_used: int
    complete: bool
    size_cap: int

    @property
    def sizes(self):
        return sorted(self.sets_by_size)

    @property
    def d(self):
        """Least size of a generating set."""
        return self.sizes[0]

    @property
    def m(self):
        """Largest size of a minimal generating set."""
        return self.sizes[-1]

    def sets_of_size(self, u):
        return self.sets_by_size.get(u, ())

    def all_sets(self):
        for u in self.sizes:
            yield from self.sets_by_size[u]

    def total(self):
        return sum(len(v) for v in self.sets_by_size.values())


def enumerate_min_gen_sets(group, node_budget=DEFAULT_NODE_BUDGET):
    """All minimal generating sets, grouped by size, each a sorted tuple in
    ascending lexicographic order.  Raises BudgetExceeded (with the partial
    enumeration attached, flagged incomplete) when the node budget runs out.
    Results for the default budget are cached on the group."""
    cached = group._enum_cache
    if cached is not None:
        return cached
    cap = size_cap_for(group.order)
    frat_mask = frattini(group).mask
    raw, nodes, complete = kernels.enumerate_minimal_sets(
        group.engine.prep, frat_mask, cap, node_budget
    )
    sets_by_size = {u: tuple(raw[u]) for u in sorted(raw)}
    enum = MinGenEnumeration(group, sets_by_size, nodes, complete, cap)
    if not complete:
        raise BudgetExceeded(
            f"enumeration exceeded {node_budget} nodes for {group.origin}",
            partial=enum,
        )
    if group.order > 1 and sets_by_size and max(sets_by_size) >= cap:
        raise AssertionError(
            "size cap reached by an enumerated set; cap validation failed"
        )
    group._enum_cache = enum
    return enum


def is_generating(group, elems):
    return group.engine.generates(sorted(set(elems)))


def is_minimal_generating(group, elems):
    elems = sorted(set(elems))
    eng = group.engine
    if not eng.generates(elems):
        return False
    return all(
        not eng.generates(elems[:i] + elems[i + 1:]) for i in range(len(elems))
    )


def rank_bounds(group, node_budget=DEFAULT_NODE_BUDGET):
    """(d, m): the least and largest sizes over minimal generating sets."""
    enum = enumerate_min_gen_sets(group, node_budget)
    return enum.d, enum.m


def relative_rank(group, seed, node_budget=DEFAULT_NODE_BUDGET):
    """d_X(G): least r such that X together with r more elements generates.
    Iterative deepening over r with ascending-index extension."""
    eng = group.engine
    seed = sorted(set(seed))
    base = eng.closure_hid(seed)
    full = eng.full_hid
    n = group.order
    masks = eng.masks
    step = eng.step
    nodes = [0]

    def dfs(hid, last, depth_left):
        if hid == full:
            return depth_left >= 0
        if depth_left == 0:
            return False
        mask = masks[hid]
        for y in range(last + 1, n):
            nodes[0] += 1
            if nodes[0] > node_budget:
                raise BudgetExceeded(
                    f"relative rank search exceeded {node_budget} nodes"
                )
            if (mask >> y) & 1:
                continue
            if dfs(step(hid, y), y, depth_left - 1):
                return True
        return False

    cap = size_cap_for(group.order)
    for r in range(cap + 1):
        if dfs(base, -1, r):
            return r
    raise AssertionError("relative rank exceeded the size cap")


@dataclass(frozen=True)
class ReplacementWitness:
    """A minimal generating set of size k that turns into one of size k+1 by
    splitting one member into two factors."""

    base: tuple
    index: int
    factors: tuple
    result: tuple


def replacement_witness(group, k, node_budget=DEFAULT_NODE_BUDGET):
    """First witness, in canonical order, that some size-k minimal generating
    set {g_1..g_k} admits g_i = x1*x2 with (set - g_i + x1 + x2) a minimal
    generating set of size k+1.  Returns None if no witness exists (which
    would refute the replacement property).  Pre: d(G) <= k < m(G)."""
    enum = enumerate_min_gen_sets(group, node_budget)
    if not enum.d <= k < enum.m:
        raise PreconditionViolated(
            f"need d <= k < m, got k={k} with d={enum.d}, m={enum.m}"
        )
    bigger = {frozenset(s) for s in enum.sets_of_size(k + 1)}
    mul, inv = group.mul, group.inv
    n = group.order
    for base in enum.sets_of_size(k):
        base_set = set(base)
        for i, g in enumerate(base):
            rest = base_set - {g}
            for x1 in range(n):
                x2 = int(mul[int(inv[x1]), g])
                if x1 == x2 or x1 in rest or x2 in rest:
                    continue
                candidate = frozenset(rest | {x1, x2})
                if candidate in bigger:
                    return ReplacementWitness(
                        base=base,
                        index=i,
                        factors=(x1, x2),
                        result=tuple(sorted(candidate)),
                    )
    return None
