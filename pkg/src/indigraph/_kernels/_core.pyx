# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: subgroup closure and generating-set search.

Same four entry points and the same contract as _pure.py (see that module's
docstring); tests assert parity on results, node counts, and completeness
flags.  Masks cross the interface as Python ints; internally the closure runs
on C arrays indexed by element."""

from cpython cimport array

import array

IS_COMPILED = True


cdef class PreparedTable:
    cdef public int n
    cdef public bint abelian
    cdef public object full
    cdef list bits       # Python-int 1 << i per element; C shifts would
    cdef int[::1] tab    # overflow beyond bit 30

    def __init__(self, mul):
        cdef int n = len(mul)
        flat = array.array("i", bytes(4 * n * n))
        cdef int[::1] view = flat
        cdef int a = 0, b
        for row in mul:
            b = 0
            for x in row:
                view[a * n + b] = x
                b += 1
            a += 1
        self.n = n
        self.tab = view
        one = 1
        self.bits = [one << i for i in range(n)]
        self.full = (one << n) - 1
        cdef bint abelian = True
        for a in range(n):
            for b in range(a):
                if view[a * n + b] != view[b * n + a]:
                    abelian = False
                    break
            if not abelian:
                break
        self.abelian = abelian


def prepare(mul):
    return PreparedTable(mul)


cdef bytes _unpack(object mask, int n):
    cdef bytearray out = bytearray(n)
    cdef object m = mask
    cdef object low
    cdef int i
    while m:
        low = m & -m
        i = low.bit_length() - 1
        out[i] = 1
        m ^= low
    return bytes(out)


cdef object _closure_core(PreparedTable prep, unsigned char[::1] seen,
                          int[::1] members, int mn, gens, object base_mask):
    """BFS closure over C arrays.  `seen`/`members` come pre-filled with the
    base subgroup (mn entries); returns the closure as a Python int mask."""
    cdef int n = prep.n
    cdef int[::1] T = prep.tab
    cdef list bits = prep.bits
    cdef array.array qa = array.array("i", bytes(4 * n))
    cdef int[::1] queue = qa
    cdef int qi = 0, qn = 0
    cdef int g, t, x, j, tn
    cdef object mask = base_mask
    for gy in gens:
        g = gy
        if not seen[g]:
            seen[g] = 1
            members[mn] = g
            mn += 1
            queue[qn] = g
            qn += 1
            mask = mask | bits[g]
    while qi < qn:
        t = queue[qi]
        qi += 1
        tn = t * n
        j = 0
        while j < mn:  # members grows while we scan it; that is intended
            x = T[tn + members[j]]
            if not seen[x]:
                seen[x] = 1
                members[mn] = x
                mn += 1
                queue[qn] = x
                qn += 1
                mask = mask | bits[x]
            x = T[members[j] * n + t]
            if not seen[x]:
                seen[x] = 1
                members[mn] = x
                mn += 1
                queue[qn] = x
                qn += 1
                mask = mask | bits[x]
            j += 1
    return mask


def closure(PreparedTable prep, object base_mask, gens):
    cdef int n = prep.n
    cdef bytearray seen_b = bytearray(_unpack(base_mask, n))
    cdef unsigned char[::1] seen = seen_b
    cdef array.array ma = array.array("i", bytes(4 * n))
    cdef int[::1] members = ma
    cdef int mn = 0, i
    for i in range(n):
        if seen[i]:
            members[mn] = i
            mn += 1
    return _closure_core(prep, seen, members, mn, gens, base_mask)


cdef class SubTab:
    """Interned subgroups with memoized one-element extension and join."""

    cdef PreparedTable prep
    cdef list masks      # Python int per id
    cdef list seens      # bytes (0/1 per element) per id
    cdef dict ids
    cdef dict step_memo
    cdef dict join_memo

    def __init__(self, PreparedTable prep):
        self.prep = prep
        self.masks = []
        self.seens = []
        self.ids = {}
        self.step_memo = {}
        self.join_memo = {}

    cdef int intern(self, object mask, bytes seen):
        hid = self.ids.get(mask)
        if hid is not None:
            return hid
        cdef int new_id = len(self.masks)
        self.ids[mask] = new_id
        self.masks.append(mask)
        self.seens.append(seen if seen is not None else _unpack(mask, self.prep.n))
        return new_id

    cdef object close_from(self, int hid, gens):
        """Closure of subgroup `hid` with extra generators, as (mask, seen)."""
        cdef int n = self.prep.n
        cdef bytearray seen_b = bytearray(<bytes>self.seens[hid])
        cdef unsigned char[::1] seen = seen_b
        cdef array.array ma = array.array("i", bytes(4 * n))
        cdef int[::1] members = ma
        cdef int mn = 0, i
        for i in range(n):
            if seen[i]:
                members[mn] = i
                mn += 1
        mask = _closure_core(self.prep, seen, members, mn, gens, self.masks[hid])
        return mask, bytes(seen_b)

    cdef int step(self, int hid, int g):
        key = ((<long long>hid) << 10) | g
        r = self.step_memo.get(key)
        if r is not None:
            return r
        cdef int rid
        if (<bytes>self.seens[hid])[g]:
            rid = hid
        else:
            mask, seen = self.close_from(hid, (g,))
            rid = self.intern(mask, seen)
        self.step_memo[key] = rid
        return rid

    cdef int join(self, int a, int b):
        if a == b:
            return a
        cdef int t
        if a > b:
            t = a
            a = b
            b = t
        key = ((<long long>a) << 31) | b
        r = self.join_memo.get(key)
        if r is not None:
            return r
        cdef int rid, i
        ma = self.masks[a]
        mb = self.masks[b]
        union = ma | mb
        if union == mb:
            rid = b
        elif union == ma:
            rid = a
        else:
            gens = []
            sb = <bytes>self.seens[b]
            for i in range(self.prep.n):
                if sb[i]:
                    gens.append(i)
            mask, seen = self.close_from(a, gens)
            rid = self.intern(mask, seen)
        self.join_memo[key] = rid
        return rid


cdef class _MinimalSetEnum:
    cdef SubTab tab
    cdef PreparedTable prep
    cdef dict results
    cdef list chosen
    cdef list prefix
    cdef long long nodes, budget
    cdef bint complete
    cdef int size_cap

    cdef bint rec(self, int last):
        """Returns True when the node budget aborted the walk."""
        cdef int n = self.prep.n
        cdef int k = len(self.chosen)
        cdef int i, y
        cdef SubTab tab = self.tab
        cdef list sufs = [0] * (k + 1)
        sufs[k] = self.prefix[0]
        for i in range(k - 1, -1, -1):
            sufs[i] = tab.step(<int>sufs[i + 1], <int>self.chosen[i])
        cdef list drops = [0] * k
        for i in range(k):
            drops[i] = tab.join(<int>self.prefix[i], <int>sufs[i + 1])
        cdef int top = self.prefix[k]
        cdef bytes top_seen = <bytes>tab.seens[top]
        full = self.prep.full
        cdef bint ok
        cdef int nh, ci
        for y in range(last + 1, n):
            self.nodes += 1
            if self.nodes > self.budget:
                self.complete = False
                return True
            if top_seen[y]:
                continue
            ok = True
            for i in range(k):
                ci = self.chosen[i]
                if (<bytes>tab.seens[tab.step(<int>drops[i], y)])[ci]:
                    ok = False
                    break
            if not ok:
                continue
            nh = tab.step(top, y)
            if tab.masks[nh] == full:
                self.chosen.append(y)
                self.results.setdefault(k + 1, []).append(tuple(self.chosen))
                self.chosen.pop()
            elif k + 1 < self.size_cap:
                self.chosen.append(y)
                self.prefix.append(nh)
                aborted = self.rec(y)
                self.chosen.pop()
                self.prefix.pop()
                if aborted:
                    return True
        return False


def enumerate_minimal_sets(PreparedTable prep, object seed_mask, int size_cap,
                           long long node_budget):
    """All sets irredundant mod seed whose closure with the seed is the whole
    group; returns (sets_by_size dict, nodes_used, complete)."""
    if seed_mask == prep.full:
        return {0: [()]}, 0, True
    cdef _MinimalSetEnum e = _MinimalSetEnum()
    e.prep = prep
    e.tab = SubTab(prep)
    cdef int root = e.tab.intern(seed_mask, None)
    e.results = {}
    e.chosen = []
    e.prefix = [root]
    e.nodes = 0
    e.budget = node_budget
    e.complete = True
    e.size_cap = size_cap
    e.rec(-1)
    return e.results, int(e.nodes), bool(e.complete)


cdef class _TupleEnum:
    cdef SubTab tab
    cdef PreparedTable prep
    cdef list out
    cdef list tup
    cdef long long nodes, budget
    cdef long long tuple_budget
    cdef bint complete
    cdef int length

    cdef bint rec(self, int depth, int hid):
        cdef int n = self.prep.n
        cdef bint last_level = depth + 1 == self.length
        cdef SubTab tab = self.tab
        full = self.prep.full
        cdef int y, nh
        for y in range(n):
            self.nodes += 1
            if self.nodes > self.budget:
                self.complete = False
                return True
            nh = tab.step(hid, y)
            if last_level:
                if tab.masks[nh] == full:
                    self.tup[depth] = y
                    self.out.append(tuple(self.tup))
                    if len(self.out) > self.tuple_budget:
                        self.complete = False
                        return True
            else:
                self.tup[depth] = y
                if self.rec(depth + 1, nh):
                    return True
        return False


def generating_tuples(PreparedTable prep, int length, object seed_mask,
                      long long node_budget, long long tuple_budget):
    """All ordered tuples (x_1..x_length) with <seed ∪ {x_i}> = G; returns
    (tuples list, nodes_used, complete)."""
    if length == 0:
        return ([()] if seed_mask == prep.full else []), 0, True
    cdef _TupleEnum e = _TupleEnum()
    e.prep = prep
    e.tab = SubTab(prep)
    cdef int root = e.tab.intern(seed_mask, None)
    e.out = []
    e.tup = [0] * length
    e.nodes = 0
    e.budget = node_budget
    e.tuple_budget = tuple_budget
    e.complete = True
    e.length = length
    e.rec(0, root)
    return e.out, int(e.nodes), bool(e.complete)
