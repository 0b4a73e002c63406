"""Named group constructions, the recipe grammar, and compact aliases."""

import math

import pytest

import helpers
from indigraph import (
    OrderTooLarge,
    UnknownRecipe,
    element_order,
    make_named_group,
    resolve_group,
    structure_flags,
)
from indigraph.recipes import canonical_recipe, parse_recipe, recipe_order


def exponent(group):
    return math.lcm(*(element_order(group, g) for g in range(group.order)))


# ---------------------------------------------------------------- construction

def test_cyclic_groups():
    for n in (1, 2, 7, 12):
        g = helpers.build(f"cyclic({n})")
        assert g.order == n
        assert structure_flags(g).cyclic
        assert exponent(g) == n


def test_dihedral_groups():
    for n in (3, 4, 6, 10):
        g = helpers.build(f"dihedral({n})")
        assert g.order == 2 * n
        assert not structure_flags(g).abelian
        involutions = sum(1 for x in range(g.order) if element_order(g, x) == 2)
        # n reflections, plus the half-turn a^(n/2) when n is even
        assert involutions == (n + 1 if n % 2 == 0 else n)


def test_quaternion8_has_unique_involution():
    q8 = helpers.build("quaternion8")
    assert q8.order == 8
    involutions = [g for g in range(8) if element_order(q8, g) == 2]
    assert len(involutions) == 1
    assert not structure_flags(q8).abelian


def test_symmetric_and_alternating_orders():
    assert helpers.build("symmetric(3)").order == 6
    assert helpers.build("symmetric(4)").order == 24
    assert helpers.build("alternating(4)").order == 12
    assert helpers.build("alternating(5)").order == 60
    assert helpers.build("alternating(3)").order == 3


def test_alternating_contains_only_even_permutations():
    a4 = helpers.build("alternating(4)")
    # a single 2-cycle label like "(1,2)" would be an odd permutation
    for label in a4.labels:
        assert not (label.count("(") == 1 and label.count(",") == 1), label


def test_permutation_labels(s4):
    assert s4.labels[0] == "id"
    assert "(1,2,3,4)" in s4.labels
    assert "(1,2)(3,4)" in s4.labels


def test_elementary_abelian():
    g = helpers.build("elementary_abelian(3,2)")
    assert g.order == 9
    assert all(element_order(g, x) == 3 for x in range(1, 9))
    flags = structure_flags(g)
    assert flags.abelian and not flags.cyclic


def test_direct_product_order_and_exponent():
    g = helpers.build("direct(cyclic(2),cyclic(4))")
    assert g.order == 8
    assert structure_flags(g).abelian
    assert exponent(g) == 4


def test_direct_product_of_nonabelian():
    g = helpers.build("direct(symmetric(3),symmetric(3))")
    assert g.order == 36
    assert not structure_flags(g).abelian


def test_semidirect_c3_c4_is_dicyclic():
    g = helpers.build("semidirect_c3_c4")
    assert g.order == 12
    assert not structure_flags(g).abelian
    involutions = [x for x in range(12) if element_order(g, x) == 2]
    assert len(involutions) == 1
    assert g.labels[involutions[0]] == "b^2"


def test_semidirect_c5_c4_is_frobenius():
    g = helpers.build("semidirect_c5_c4")
    assert g.order == 20
    assert not structure_flags(g).abelian
    involutions = [x for x in range(20) if element_order(g, x) == 2]
    assert len(involutions) == 5
    # the action is faithful: b and a do not commute
    a, b = g.index_of("a"), g.index_of("b")
    assert g.op(a, b) != g.op(b, a)


# -------------------------------------------------------------------- grammar

def test_parse_is_case_and_space_insensitive():
    node = parse_recipe("  DIRECT( Cyclic( 2 ) , cyclic(4) )  ")
    assert canonical_recipe(node) == "direct(cyclic(2),cyclic(4))"


def test_recipe_order_matches_built_order():
    for recipe in (
        "cyclic(9)",
        "dihedral(7)",
        "quaternion8",
        "symmetric(4)",
        "alternating(5)",
        "elementary_abelian(2,4)",
        "direct(dihedral(4),cyclic(3))",
        "semidirect_c5_c4",
    ):
        assert recipe_order(parse_recipe(recipe)) == helpers.build(recipe).order


@pytest.mark.parametrize(
    "bad",
    [
        "nonsense(3)",
        "cyclic",
        "cyclic()",
        "cyclic(2,3)",
        "cyclic(x)",
        "cyclic(0)",
        "dihedral(0)",
        "symmetric(7)",
        "alternating(0)",
        "elementary_abelian(4,2)",  # 4 is not prime
        "elementary_abelian(2,0)",
        "direct(cyclic(2))",
        "direct(2,3)",
        "quaternion8(2)",
        "cyclic(2))",
        "direct(cyclic(2),cyclic(2)",
        "42",
        "cyclic(2) cyclic(3)",
        "",
    ],
)
def test_bad_recipes_raise(bad):
    with pytest.raises(UnknownRecipe):
        make_named_group(bad)


def test_order_cap_enforced():
    with pytest.raises(OrderTooLarge):
        make_named_group("cyclic(2048)")
    with pytest.raises(OrderTooLarge):
        make_named_group("cyclic(100)", order_cap=50)
    assert make_named_group("cyclic(100)", order_cap=100).order == 100


# --------------------------------------------------------------------- aliases

@pytest.mark.parametrize(
    "alias,recipe",
    [
        ("c15", "cyclic(15)"),
        ("cyclic15", "cyclic(15)"),
        ("d6", "dihedral(6)"),
        ("dih4", "dihedral(4)"),
        ("s4", "symmetric(4)"),
        ("sym3", "symmetric(3)"),
        ("a5", "alternating(5)"),
        ("alt4", "alternating(4)"),
        ("q8", "quaternion8"),
        ("v4", "elementary_abelian(2,2)"),
    ],
)
def test_aliases_resolve(alias, recipe):
    got = resolve_group(alias)
    want = helpers.build(recipe)
    assert got.order == want.order
    assert got.mul.tolist() == want.mul.tolist()


def test_resolve_group_accepts_full_recipes():
    assert resolve_group("direct(cyclic(2),cyclic(3))").order == 6


def test_resolve_group_unknown_name():
    with pytest.raises(UnknownRecipe):
        resolve_group("mystery_group_9")
