"""Pure-Python kernel: subgroup closure and generating-set search.

Subgroups are bitmasks (Python ints, bit i = element i).  The compiled kernel
in _core.pyx implements the same four entry points with identical semantics;
tests assert parity.  Element 0 is always the identity.

Contract shared by both kernels:
- prepare(mul) takes an n x n multiplication table (any nested sequence of
  ints) and returns an opaque handle.
- closure(prep, base_mask, gens) requires base_mask to be a subgroup mask
  (bit 0 set) and returns the mask of <base ∪ gens>.
- enumerate_minimal_sets walks irredundant-mod-seed sets in ascending index
  order; with seed = Frattini mask it yields exactly the minimal generating
  sets, as sorted tuples, grouped by size.
- generating_tuples yields all ordered tuples of the given length whose
  entries together with the seed generate the whole group.
"""

IS_COMPILED = False


class PreparedTable:
    __slots__ = ("n", "rows", "full", "abelian")

    def __init__(self, n, rows, abelian):
        self.n = n
        self.rows = rows
        self.full = (1 << n) - 1
        self.abelian = abelian


def prepare(mul):
    rows = [[int(x) for x in row] for row in mul]
    n = len(rows)
    abelian = all(rows[a][b] == rows[b][a] for a in range(n) for b in range(a))
    return PreparedTable(n, rows, abelian)


def mask_members(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def closure(prep, base_mask, gens):
    rows = prep.rows
    mask = base_mask
    todo = [g for g in gens if not (mask >> g) & 1]
    if not todo:
        return mask
    members = mask_members(mask)
    if prep.abelian:
        for g in todo:
            if (mask >> g) & 1:
                continue
            powers = []
            p = g
            while not (mask >> p) & 1:
                powers.append(p)
                p = rows[p][g]
            base = list(members)
            for q in powers:
                row_q = [rows[m][q] for m in base]
                for x in row_q:
                    if not (mask >> x) & 1:
                        mask |= 1 << x
                        members.append(x)
        return mask
    queue = []
    for g in todo:
        if not (mask >> g) & 1:
            mask |= 1 << g
            members.append(g)
            queue.append(g)
    qi = 0
    while qi < len(queue):
        t = queue[qi]
        qi += 1
        row_t = prep.rows[t]
        for m in members:  # the list grows while we iterate; that is intended
            for x in (row_t[m], rows[m][t]):
                if not (mask >> x) & 1:
                    mask |= 1 << x
                    members.append(x)
                    queue.append(x)
    return mask


class _SubTab:
    """Interned subgroups with memoized one-element extension and join."""

    __slots__ = ("prep", "masks", "ids", "step_memo", "join_memo")

    def __init__(self, prep):
        self.prep = prep
        self.masks = []
        self.ids = {}
        self.step_memo = {}
        self.join_memo = {}

    def intern(self, mask):
        hid = self.ids.get(mask)
        if hid is None:
            hid = len(self.masks)
            self.ids[mask] = hid
            self.masks.append(mask)
        return hid

    def step(self, hid, g):
        key = (hid << 10) | g
        r = self.step_memo.get(key)
        if r is None:
            mask = self.masks[hid]
            if (mask >> g) & 1:
                r = hid
            else:
                r = self.intern(closure(self.prep, mask, (g,)))
            self.step_memo[key] = r
        return r

    def join(self, a, b):
        if a == b:
            return a
        if a > b:
            a, b = b, a
        key = (a << 31) | b
        r = self.join_memo.get(key)
        if r is None:
            ma, mb = self.masks[a], self.masks[b]
            union = ma | mb
            if union == mb:
                r = b
            elif union == ma:
                r = a
            else:
                r = self.intern(closure(self.prep, ma, mask_members(mb)))
            self.join_memo[key] = r
        return r


def enumerate_minimal_sets(prep, seed_mask, size_cap, node_budget):
    """All sets irredundant mod seed whose closure with the seed is the whole
    group, i.e. the minimal generating sets when seed is the Frattini mask.

    Returns (sets_by_size dict, nodes_used, complete).
    """
    n, full = prep.n, prep.full
    if seed_mask == full:
        return {0: [()]}, 0, True
    tab = _SubTab(prep)
    root = tab.intern(seed_mask)
    masks = tab.masks
    step = tab.step
    join = tab.join
    results = {}
    chosen = []
    prefix = [root]
    state = [0, True]  # nodes, complete

    def rec(last):
        k = len(chosen)
        sufs = [root] * (k + 1)
        for i in range(k - 1, -1, -1):
            sufs[i] = step(sufs[i + 1], chosen[i])
        drops = [join(prefix[i], sufs[i + 1]) for i in range(k)]
        top = prefix[k]
        top_mask = masks[top]
        nodes = state[0]
        for y in range(last + 1, n):
            nodes += 1
            if nodes > node_budget:
                state[0] = nodes
                state[1] = False
                return True
            if (top_mask >> y) & 1:
                continue
            ok = True
            for i in range(k):
                dm = masks[step(drops[i], y)]
                if (dm >> chosen[i]) & 1:
                    ok = False
                    break
            if not ok:
                continue
            nh = step(top, y)
            if masks[nh] == full:
                chosen.append(y)
                results.setdefault(k + 1, []).append(tuple(chosen))
                chosen.pop()
            elif k + 1 < size_cap:
                chosen.append(y)
                prefix.append(nh)
                state[0] = nodes
                aborted = rec(y)
                nodes = state[0]
                chosen.pop()
                prefix.pop()
                if aborted:
                    return True
        state[0] = nodes
        return False

    rec(-1)
    return results, state[0], state[1]


def generating_tuples(prep, length, seed_mask, node_budget, tuple_budget):
    """All ordered tuples (x_1..x_length) with <seed ∪ {x_i}> = G.

    Returns (tuples list, nodes_used, complete).
    """
    n, full = prep.n, prep.full
    if length == 0:
        return ([()] if seed_mask == full else []), 0, True
    tab = _SubTab(prep)
    root = tab.intern(seed_mask)
    masks = tab.masks
    step = tab.step
    out = []
    tup = [0] * length
    state = [0, True]

    def rec(depth, hid):
        nodes = state[0]
        last_level = depth + 1 == length
        for y in range(n):
            nodes += 1
            if nodes > node_budget:
                state[0] = nodes
                state[1] = False
                return True
            nh = step(hid, y)
            if last_level:
                if masks[nh] == full:
                    tup[depth] = y
                    out.append(tuple(tup))
                    if len(out) > tuple_budget:
                        state[0] = nodes
                        state[1] = False
                        return True
            else:
                tup[depth] = y
                state[0] = nodes
                if rec(depth + 1, nh):
                    return True
                nodes = state[0]
        state[0] = nodes
        return False

    rec(0, root)
    return out, state[0], state[1]
