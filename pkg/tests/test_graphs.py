"""Independence graphs, rank variants, vertex supports, edge tests, swaps."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
import oracles
from indigraph.errors import BudgetExceeded, PreconditionViolated
from indigraph.gensets import enumerate_min_gen_sets
from indigraph.graphs import (
    build_graph,
    build_swap_graph,
    edge_test,
    vertex_supports,
)
from indigraph.recipes import resolve_group

SMALL = [
    "cyclic(1)",
    "cyclic(6)",
    "cyclic(12)",
    "v4",
    "sym3",
    "q8",
    "dihedral(4)",
    "direct(cyclic(2),cyclic(4))",
    "elementary_abelian(2,3)",
    "a4",
    "direct(cyclic(2),cyclic(6))",
    "cyclic(15)",
    "elementary_abelian(2,4)",
]


# ------------------------------------------------------- oracle equivalence

@pytest.mark.parametrize("name", SMALL)
def test_full_graph_adjacency_matches_oracle(name):
    group = helpers.build(name)
    graph = build_graph(group)
    want = oracles.independence_adjacency(helpers.mul_rows(group))
    assert graph.vertices == tuple(range(group.order))
    assert {v: set(graph.adj[v]) for v in graph.vertices} == want


@pytest.mark.parametrize("name", ["sym3", "q8", "a4", "dihedral(4)", "cyclic(12)"])
def test_rank_graph_adjacency_matches_oracle(name):
    group = helpers.build(name)
    mul = helpers.mul_rows(group)
    sizes = enumerate_min_gen_sets(group).sizes
    for u in sizes + [max(sizes) + 1]:
        got = build_graph(group, kind="rank", u=u)
        min_sets = {u: oracles.minimal_generating_sets(mul).get(u, [])}
        want = oracles.independence_adjacency(mul, min_sets=min_sets)
        assert {v: set(got.adj[v]) for v in got.vertices} == want


@pytest.mark.parametrize("name", SMALL)
def test_induced_form_drops_exactly_the_isolated_vertices(name):
    group = helpers.build(name)
    full = build_graph(group)
    induced = build_graph(group, induced=True)
    kept = tuple(v for v in full.vertices if full.degree(v) > 0)
    assert induced.vertices == kept
    assert all(induced.degree(v) == full.degree(v) for v in induced.vertices)
    assert induced.n_edges == full.n_edges


# ----------------------------------------------------------------- goldens

def test_sym4_full_graph_shape(s4):
    graph = build_graph(s4)
    assert graph.n_vertices == 24
    assert graph.n_edges == 213
    assert graph.degree(0) == 0  # identity is isolated


def test_sym4_rank2_induced_has_twenty_vertices(s4):
    v2 = build_graph(s4, kind="rank", u=2, induced=True)
    assert v2.n_vertices == 20
    missing = set(range(24)) - set(v2.vertices)
    assert missing == {0} | {
        s4.index_of(x) for x in ("(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)")
    }


def test_sym4_double_transposition_in_v_but_not_v2(s4):
    g = s4.index_of("(1,2)(3,4)")
    supports = vertex_supports(s4)
    assert g in supports.V
    assert g not in supports.by_rank[2]
    assert g in supports.by_rank[3]


def test_sym4_w_set_is_transpositions_and_three_cycles(s4):
    supports = vertex_supports(s4)
    assert len(supports.W) == 14
    by_label = {s4.labels[v] for v in supports.W}
    transpositions = {l for l in s4.labels if l.count(",") == 1}
    three_cycles = {l for l in s4.labels if l.count(",") == 2 and ")(" not in l}
    assert by_label == transpositions | three_cycles
    assert set(supports.V) == set(range(1, 24))
    assert set(supports.W) == set(supports.by_rank[2]) & set(supports.by_rank[3])


def test_c5_c4_induced_graph_golden(c5c4):
    delta = build_graph(c5c4, induced=True)
    assert delta.n_vertices == 19
    assert delta.degree(c5c4.index_of("b^2")) == 8


def test_dihedral6_rank3_degree_golden(d6):
    gamma3 = build_graph(d6, kind="rank", u=3)
    a2 = d6.index_of("a^2")
    assert gamma3.degree(a2) == 7
    neighbor_labels = {d6.labels[v] for v in gamma3.neighbors(a2)}
    assert neighbor_labels == {"a^3", "b", "ab", "a^2b", "a^3b", "a^4b", "a^5b"}


def test_trivial_and_prime_cyclic_graphs_have_no_edges():
    for name in ("cyclic(1)", "cyclic(7)"):
        graph = build_graph(helpers.build(name))
        assert graph.n_edges == 0
        assert build_graph(helpers.build(name), induced=True).n_vertices == 0


# ------------------------------------------------------------ preconditions

def test_build_graph_argument_validation(q8):
    with pytest.raises(PreconditionViolated):
        build_graph(q8, kind="full", u=2)
    with pytest.raises(PreconditionViolated):
        build_graph(q8, kind="rank")
    with pytest.raises(PreconditionViolated):
        build_graph(q8, kind="rank", u=-1)
    with pytest.raises(PreconditionViolated):
        build_graph(q8, kind="independence")


# -------------------------------------------------------------- edge tests

def test_edge_test_returns_a_containing_witness(s4):
    x, y = s4.index_of("(1,2)"), s4.index_of("(1,2,3,4)")
    ok, witness = edge_test(s4, x, y)
    assert ok
    assert x in witness and y in witness
    graph = build_graph(s4)
    assert graph.has_edge(x, y)


def test_edge_test_rank_constrained_witness_has_that_size(s4):
    t, c3 = s4.index_of("(1,2)"), s4.index_of("(2,3,4)")
    ok2, w2 = edge_test(s4, t, c3, u=2)
    assert ok2 and w2 == tuple(sorted((t, c3)))
    # (1,2) with (1,2,3) spans only the point stabilizer of 4, so the pair
    # lies in size-3 minimal sets but in no size-2 one.
    x, y = t, s4.index_of("(1,2,3)")
    ok2b, _ = edge_test(s4, x, y, u=2)
    ok3, w3 = edge_test(s4, x, y, u=3)
    assert not ok2b
    assert ok3 and len(w3) == 3 and x in w3 and y in w3
    from indigraph.gensets import is_minimal_generating

    assert is_minimal_generating(s4, w2) and is_minimal_generating(s4, w3)


def test_four_cycles_never_lie_in_size_three_sets(s4):
    c = s4.index_of("(1,2,3,4)")
    for y in range(1, 24):
        if y == c:
            continue
        ok, _ = edge_test(s4, c, y, u=3)
        assert not ok


def test_edge_test_rejects_equal_identity_and_out_of_range(s4):
    with pytest.raises(PreconditionViolated):
        edge_test(s4, 3, 3)
    with pytest.raises(PreconditionViolated):
        edge_test(s4, 0, 3)
    with pytest.raises(PreconditionViolated):
        edge_test(s4, 3, 0)
    with pytest.raises(PreconditionViolated):
        edge_test(s4, 3, 24)


def test_cold_cache_edge_search_agrees_with_enumeration():
    cached = helpers.build("dihedral(6)")
    graph = build_graph(cached)
    fresh = resolve_group("dihedral(6)")
    assert fresh._enum_cache is None
    for x in range(1, 12):
        for y in range(x + 1, 12):
            ok, witness = edge_test(fresh, x, y)
            assert ok == graph.has_edge(x, y)
            if ok:
                assert x in witness and y in witness
                from indigraph.gensets import is_minimal_generating

                assert is_minimal_generating(cached, witness)
    assert fresh._enum_cache is None  # the seeded search never enumerates


def test_cold_cache_edge_search_respects_rank(s4):
    fresh = resolve_group("symmetric(4)")
    c = fresh.index_of("(1,2,3,4)")
    t = fresh.index_of("(1,2)")
    ok, witness = edge_test(fresh, c, t, u=2)
    assert ok and len(witness) == 2
    ok3, _ = edge_test(fresh, c, t, u=3)
    assert not ok3


def test_cold_cache_edge_search_budget():
    fresh = resolve_group("elementary_abelian(2,4)")
    with pytest.raises(BudgetExceeded):
        edge_test(fresh, 1, 2, node_budget=3)


# -------------------------------------------------------------- swap graphs

def test_swap_graph_of_klein_four(v4):
    sigma = build_swap_graph(v4)
    assert sigma.u == 2
    assert sigma.n_vertices == 6
    assert sigma.n_edges == 6
    verts, adj = helpers.plain(sigma)
    assert len(oracles.components(verts, adj)) == 1


def test_swap_graph_of_cyclic5_is_complete():
    sigma = build_swap_graph(helpers.build("cyclic(5)"))
    assert sigma.u == 1
    assert sigma.n_vertices == 4
    assert sigma.n_edges == 6  # K4


def test_swap_graph_shapes():
    q8 = helpers.build("q8")
    sigma = build_swap_graph(q8)
    assert (sigma.n_vertices, sigma.n_edges) == (24, 72)
    s3 = helpers.build("sym3")
    sigma3 = build_swap_graph(s3)
    assert (sigma3.n_vertices, sigma3.n_edges) == (18, 48)


def test_swap_graph_sym4_against_brute_force_tuples(s4):
    sigma = build_swap_graph(s4)
    mul = helpers.mul_rows(s4)
    want = sorted(
        t
        for t in itertools.product(range(24), repeat=2)
        if oracles.generates(mul, t)
    )
    assert list(sigma.vertices) == want
    assert sigma.n_vertices == 216
    assert sigma.n_edges == 2352


@pytest.mark.parametrize("name", ["v4", "sym3", "q8", "cyclic(12)"])
def test_swap_adjacency_is_single_coordinate_difference(name):
    group = helpers.build(name)
    sigma = build_swap_graph(group)
    for s, t in itertools.combinations(sigma.vertices, 2):
        differ = sum(1 for a, b in zip(s, t) if a != b)
        assert sigma.has_edge(s, t) == (differ == 1)


def test_swap_graph_of_trivial_group():
    sigma = build_swap_graph(helpers.build("cyclic(1)"))
    assert sigma.vertices == ((),)
    assert sigma.n_edges == 0


def test_swap_graph_rejects_wrong_rank(q8):
    with pytest.raises(PreconditionViolated):
        build_swap_graph(q8, d=3)
    with pytest.raises(PreconditionViolated):
        build_swap_graph(q8, d=1)


def test_swap_graph_tuple_budget():
    group = helpers.build("elementary_abelian(2,5)")
    with pytest.raises(BudgetExceeded):
        build_swap_graph(group, tuple_budget=10_000)


def test_swap_vertex_labels(v4):
    sigma = build_swap_graph(v4)
    first = sigma.vertices[0]
    assert sigma.vertex_label(first) == "(" + ",".join(
        v4.labels[x] for x in first
    ) + ")"


# ------------------------------------------------------- structural invariants

@pytest.mark.parametrize("name", SMALL)
def test_graph_invariants(name):
    group = helpers.build(name)
    enum = enumerate_min_gen_sets(group)
    full = build_graph(group)
    supports = vertex_supports(group)
    union, inter = set(), None
    for u in enum.sizes:
        rank = build_graph(group, kind="rank", u=u)
        for v in rank.vertices:
            assert v not in rank.adj[v]  # no self-loops
            for w in rank.adj[v]:
                assert v in rank.adj[w]  # symmetric
                assert full.has_edge(v, w)  # rank edges embed in the union
        vu = set(supports.by_rank[u])
        if u >= 2:
            assert vu == {v for v in rank.vertices if rank.degree(v) > 0}
        else:
            # empty/singleton sets contribute support but no edges
            assert rank.n_edges == 0
            assert vu == {s[0] for s in enum.sets_of_size(u) if s}
        union |= vu
        inter = vu if inter is None else inter & vu
    assert set(supports.V) == union
    assert set(supports.W) == (inter or set())
    assert set(supports.W) <= set(supports.V)
    induced = build_graph(group, induced=True)
    assert all(induced.degree(v) >= 1 for v in induced.vertices)
    # an element of a singleton generating set generates the whole group, so
    # it joins no other minimal set and stays isolated in the full graph
    singletons = {s[0] for s in enum.sets_of_size(1)}
    assert set(induced.vertices) == union - singletons


@settings(max_examples=20)
@given(data=st.data())
def test_rank_edges_are_certified_by_a_set_of_that_size(data):
    name = data.draw(st.sampled_from(["sym3", "q8", "a4", "dihedral(4)"]))
    group = helpers.build(name)
    enum = enumerate_min_gen_sets(group)
    u = data.draw(st.sampled_from(enum.sizes))
    rank = build_graph(group, kind="rank", u=u)
    edges = sorted(rank.edges())
    if not edges:
        return
    x, y = data.draw(st.sampled_from(edges))
    ok, witness = edge_test(group, x, y, u=u)
    assert ok and len(witness) == u and x in witness and y in witness
