"""Named group constructions and the recipe mini-grammar.

Recipes:
    cyclic(n)                 order n
    dihedral(n)               order 2n
    quaternion8               order 8
    symmetric(k), k <= 6      order k!
    alternating(k), k <= 6    order k!/2
    elementary_abelian(p, k)  order p^k, p prime
    direct(r1, r2)            direct product of two recipes
    semidirect_c3_c4          order 12, <a,b | a^3, b^4, b a b^-1 = a^-1>
    semidirect_c5_c4          order 20, <a,b | a^5, b^4, b^-1 a b = a^2>

Presented groups are realized by explicit index arithmetic on normal forms
a^i b^j, permutation groups by explicit permutation composition; the
resulting tables go through full ingestion validation.  Compact aliases
(sym4, cyclic15, d6, q8, v4, ...) are accepted by resolve_group for CLI use.
"""

import itertools
import re

from .errors import OrderTooLarge, UnknownRecipe
from .groups import group_from_cayley_table

DEFAULT_ORDER_CAP = 1024

_FACT = [1, 1, 2, 6, 24, 120, 720]


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*([a-z_][a-z_0-9]*|\d+|[(),])")


def _tokenize(s):
    out = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise UnknownRecipe(f"cannot tokenize recipe at: {s[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


def _parse(tokens, i):
    if i >= len(tokens):
        raise UnknownRecipe("unexpected end of recipe")
    tok = tokens[i]
    if tok.isdigit():
        return int(tok), i + 1
    if not re.fullmatch(r"[a-z_][a-z_0-9]*", tok):
        raise UnknownRecipe(f"unexpected token {tok!r}")
    name = tok
    i += 1
    args = []
    if i < len(tokens) and tokens[i] == "(":
        i += 1
        if i < len(tokens) and tokens[i] == ")":
            raise UnknownRecipe(f"empty argument list for {name!r}")
        while True:
            arg, i = _parse(tokens, i)
            args.append(arg)
            if i >= len(tokens):
                raise UnknownRecipe("unclosed parenthesis in recipe")
            if tokens[i] == ",":
                i += 1
                continue
            if tokens[i] == ")":
                i += 1
                break
            raise UnknownRecipe(f"expected ',' or ')', got {tokens[i]!r}")
    return (name, args), i


def parse_recipe(s):
    tokens = _tokenize(s.strip().lower())
    node, i = _parse(tokens, 0)
    if i != len(tokens):
        raise UnknownRecipe(f"trailing input in recipe: {tokens[i:]}")
    if isinstance(node, int):
        raise UnknownRecipe("recipe cannot be a bare integer")
    return node


def canonical_recipe(node):
    name, args = node
    if not args:
        return name
    parts = [str(a) if isinstance(a, int) else canonical_recipe(a) for a in args]
    return f"{name}({','.join(parts)})"


def recipe_order(node):
    """Group order of a recipe, computed without building the table."""
    name, args = node
    if name == "cyclic":
        _expect_ints(node, 1)
        if args[0] < 1:
            raise UnknownRecipe("cyclic(n) needs n >= 1")
        return args[0]
    if name == "dihedral":
        _expect_ints(node, 1)
        if args[0] < 1:
            raise UnknownRecipe("dihedral(n) needs n >= 1")
        return 2 * args[0]
    if name == "quaternion8":
        _expect_ints(node, 0)
        return 8
    if name in ("symmetric", "alternating"):
        _expect_ints(node, 1)
        k = args[0]
        if not 1 <= k <= 6:
            raise UnknownRecipe(f"{name}(k) supports 1 <= k <= 6, got {k}")
        return _FACT[k] if name == "symmetric" else max(1, _FACT[k] // 2)
    if name == "elementary_abelian":
        _expect_ints(node, 2)
        p, k = args
        if not _is_prime(p):
            raise UnknownRecipe(f"elementary_abelian(p, k) needs prime p, got {p}")
        if k < 1:
            raise UnknownRecipe("elementary_abelian(p, k) needs k >= 1")
        return p**k
    if name == "direct":
        if len(args) != 2 or any(isinstance(a, int) for a in args):
            raise UnknownRecipe("direct takes exactly two recipe arguments")
        return recipe_order(args[0]) * recipe_order(args[1])
    if name == "semidirect_c3_c4":
        _expect_ints(node, 0)
        return 12
    if name == "semidirect_c5_c4":
        _expect_ints(node, 0)
        return 20
    raise UnknownRecipe(f"unknown recipe {name!r}")


def _expect_ints(node, count):
    name, args = node
    if len(args) != count or any(not isinstance(a, int) for a in args):
        raise UnknownRecipe(
            f"{name} takes exactly {count} integer argument(s), got {args!r}"
        )


# ---------------------------------------------------------------- tables

def _pow_label(sym, i):
    if i == 0:
        return ""
    if i == 1:
        return sym
    return f"{sym}^{i}"


def _word_label(i, j, asym="a", bsym="b"):
    w = _pow_label(asym, i) + _pow_label(bsym, j)
    return w or "e"


def _cyclic_table(n):
    mul = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = [_word_label(i, 0) for i in range(n)]
    return mul, labels


def _dihedral_table(n):
    order = 2 * n

    def idx(i, j):
        return i + n * j

    mul = [[0] * order for _ in range(order)]
    for i1, j1, i2, j2 in itertools.product(range(n), range(2), range(n), range(2)):
        i = (i1 + (i2 if j1 == 0 else -i2)) % n
        mul[idx(i1, j1)][idx(i2, j2)] = idx(i, j1 ^ j2)
    labels = [_word_label(i, j) for j in range(2) for i in range(n)]
    return mul, labels


def _quaternion8_table():
    def idx(i, j):
        return i + 4 * j

    mul = [[0] * 8 for _ in range(8)]
    for i1, j1, i2, j2 in itertools.product(range(4), range(2), range(4), range(2)):
        i = (i1 + (i2 if j1 == 0 else -i2) + 2 * (j1 & j2)) % 4
        mul[idx(i1, j1)][idx(i2, j2)] = idx(i, j1 ^ j2)
    labels = [_word_label(i, j) for j in range(2) for i in range(4)]
    return mul, labels


def _perm_parity(p):
    inv = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                inv += 1
    return inv % 2


def perm_cycle_label(p):
    """Cycle notation on points 1..k: '(1,2,3)(4,5)', fixed points omitted,
    identity rendered as 'id'."""
    k = len(p)
    seen = [False] * k
    cycles = []
    for s in range(k):
        if seen[s] or p[s] == s + 1:
            seen[s] = True
            continue
        cyc = []
        x = s
        while not seen[x]:
            seen[x] = True
            cyc.append(x + 1)
            x = p[x] - 1
        cycles.append(cyc)
    if not cycles:
        return "id"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def _perm_group_table(k, even_only):
    perms = [
        p for p in itertools.permutations(range(1, k + 1))
        if not even_only or _perm_parity(p) == 0
    ]
    index = {p: i for i, p in enumerate(perms)}
    mul = [
        [index[tuple(p[q[x] - 1] for x in range(k))] for q in perms]
        for p in perms
    ]
    labels = [perm_cycle_label(p) for p in perms]
    return mul, labels


def _elementary_abelian_table(p, k):
    vecs = list(itertools.product(range(p), repeat=k))
    index = {v: i for i, v in enumerate(vecs)}
    mul = [
        [index[tuple((a + b) % p for a, b in zip(u, v))] for v in vecs]
        for u in vecs
    ]
    labels = ["(" + ",".join(map(str, v)) + ")" for v in vecs]
    return mul, labels


def _direct_table(g1, g2):
    n1, n2 = g1.order, g2.order
    m1, m2 = g1.mul, g2.mul
    mul = [[0] * (n1 * n2) for _ in range(n1 * n2)]
    for a1 in range(n1):
        for a2 in range(n2):
            row = mul[a1 * n2 + a2]
            r1 = m1[a1]
            r2 = m2[a2]
            for b1 in range(n1):
                base = int(r1[b1]) * n2
                for b2 in range(n2):
                    row[b1 * n2 + b2] = base + int(r2[b2])
    labels = [
        f"({l1},{l2})" for l1 in g1.labels for l2 in g2.labels
    ]
    return mul, labels


def _semidirect_table(p, q, act):
    """C_p semidirect C_q: pairs a^i b^j, with b a b^-1 = a^act."""
    order = p * q

    def idx(i, j):
        return i + p * j

    mul = [[0] * order for _ in range(order)]
    for j1 in range(q):
        t = pow(act, j1, p)
        for i1, i2, j2 in itertools.product(range(p), range(p), range(q)):
            mul[idx(i1, j1)][idx(i2, j2)] = idx((i1 + i2 * t) % p, (j1 + j2) % q)
    labels = [_word_label(i, j) for j in range(q) for i in range(p)]
    return mul, labels


def _build(node, order_cap):
    name, args = node
    order = recipe_order(node)
    if order > order_cap:
        raise OrderTooLarge(
            f"recipe {canonical_recipe(node)} has order {order} > cap {order_cap}"
        )
    if name == "cyclic":
        mul, labels = _cyclic_table(args[0])
    elif name == "dihedral":
        mul, labels = _dihedral_table(args[0])
    elif name == "quaternion8":
        mul, labels = _quaternion8_table()
    elif name == "symmetric":
        mul, labels = _perm_group_table(args[0], even_only=False)
    elif name == "alternating":
        mul, labels = _perm_group_table(args[0], even_only=True)
    elif name == "elementary_abelian":
        mul, labels = _elementary_abelian_table(*args)
    elif name == "direct":
        g1 = _build(args[0], order_cap)
        g2 = _build(args[1], order_cap)
        mul, labels = _direct_table(g1, g2)
    elif name == "semidirect_c3_c4":
        mul, labels = _semidirect_table(3, 4, act=2)  # b a b^-1 = a^-1
    elif name == "semidirect_c5_c4":
        mul, labels = _semidirect_table(5, 4, act=3)  # b a b^-1 = a^3
    else:  # pragma: no cover - recipe_order already rejected it
        raise UnknownRecipe(f"unknown recipe {name!r}")
    return group_from_cayley_table(mul, labels, origin=canonical_recipe(node))


def make_named_group(recipe, order_cap=DEFAULT_ORDER_CAP):
    """Build a group from a recipe string."""
    return _build(parse_recipe(recipe), order_cap)


_ALIASES = [
    (re.compile(r"^(?:c|cyclic)(\d+)$"), lambda m: f"cyclic({m.group(1)})"),
    (re.compile(r"^(?:d|dih|dihedral)(\d+)$"), lambda m: f"dihedral({m.group(1)})"),
    (re.compile(r"^(?:s|sym)(\d+)$"), lambda m: f"symmetric({m.group(1)})"),
    (re.compile(r"^(?:a|alt)(\d+)$"), lambda m: f"alternating({m.group(1)})"),
    (re.compile(r"^q8$"), lambda m: "quaternion8"),
    (re.compile(r"^v4$"), lambda m: "elementary_abelian(2,2)"),
]


def resolve_group(name, order_cap=DEFAULT_ORDER_CAP):
    """Build a group from a recipe string or a compact alias like 'sym4'."""
    s = name.strip().lower()
    for pat, sub in _ALIASES:
        m = pat.match(s)
        if m:
            return make_named_group(sub(m), order_cap)
    return make_named_group(s, order_cap)
