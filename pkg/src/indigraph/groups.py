"""Finite groups as dense multiplication tables.

A group of order n is stored as an n x n table of element indices with the
identity normalized to index 0.  Ingestion validates the group axioms
exhaustively (associativity up to order 512) and reports witnesses on
failure.  Structural queries (subgroup lattice, Frattini subgroup, quotients,
solubility/nilpotency flags, conjugacy classes) are computed on demand and
cached on the group object.
"""

from dataclasses import dataclass, field

import numpy as np

from .engine import DEFAULT_SUBGROUP_CAP, SubgroupEngine
from .errors import (
    MalformedTable,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotNormal,
    PreconditionViolated,
)

ASSOC_CHECK_LIMIT = 512


class FiniteGroup:
    """Immutable finite group on elements 0..n-1 with identity 0."""

    __slots__ = (
        "order", "mul", "inv", "labels", "origin",
        "_engine", "_classes", "_flags", "_lattice", "_frattini",
        "_orders", "_enum_cache", "_label_index",
    )

    def __init__(self, order, mul, inv, labels, origin):
        self.order = order
        self.mul = mul
        self.inv = inv
        self.labels = labels
        self.origin = origin
        self._engine = None
        self._classes = None
        self._flags = None
        self._lattice = None
        self._frattini = None
        self._orders = None
        self._enum_cache = None
        self._label_index = None

    def __repr__(self):
        return f"FiniteGroup(order={self.order}, origin={self.origin!r})"

    def op(self, a, b):
        return int(self.mul[a, b])

    def inverse(self, a):
        return int(self.inv[a])

    @property
    def engine(self):
        if self._engine is None:
            self._engine = SubgroupEngine(self.mul)
        return self._engine

    def element_order(self, g):
        if self._orders is None:
            self._orders = [0] * self.order
        cached = self._orders[g]
        if cached:
            return cached
        mul = self.mul
        k = 1
        p = g
        while p != 0:
            p = int(mul[p, g])
            k += 1
        self._orders[g] = k
        return k

    def index_of(self, label):
        if self._label_index is None:
            self._label_index = {lab: i for i, lab in enumerate(self.labels)}
        return self._label_index[label]


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted element tuple, with structure flags."""

    elements: tuple
    mask: int = field(repr=False)
    normal: bool
    maximal: bool

    @property
    def order(self):
        return len(self.elements)


@dataclass(frozen=True)
class StructureFlags:
    abelian: bool
    cyclic: bool
    nilpotent: bool
    soluble: bool


def _find_identity(mul, n):
    idx = np.arange(n)
    for e in range(n):
        if np.array_equal(mul[e], idx) and np.array_equal(mul[:, e], idx):
            return e
    return -1


def group_from_cayley_table(table, labels=None, origin="table"):
    """Validate a multiplication table and build a FiniteGroup.

    The identity is relocated to index 0 if needed (labels follow their
    elements).  Raises MalformedTable / NoIdentity / NoInverse /
    NotAssociative with witnesses.
    """
    mul = np.asarray(table, dtype=np.int64)
    if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
        raise MalformedTable(f"table must be square and non-empty, got shape {mul.shape}")
    n = mul.shape[0]
    if mul.min() < 0 or mul.max() >= n:
        bad = np.argwhere((mul < 0) | (mul >= n))[0]
        a, b = int(bad[0]), int(bad[1])
        raise MalformedTable(
            f"entry at row {a}, column {b} is {int(mul[a, b])}, outside 0..{n - 1}",
            witness=(a, b, int(mul[a, b])),
        )
    if labels is not None:
        labels = [str(x) for x in labels]
        if len(labels) != n:
            raise MalformedTable(
                f"{len(labels)} labels for {n} elements"
            )

    e = _find_identity(mul, n)
    if e < 0:
        raise NoIdentity("no two-sided identity element")
    if e != 0:
        perm = [e] + [i for i in range(n) if i != e]
        pos = [0] * n
        for new, old in enumerate(perm):
            pos[old] = new
        pos_arr = np.asarray(pos)
        mul = pos_arr[mul[np.ix_(perm, perm)]]
        if labels is not None:
            labels = [labels[old] for old in perm]

    inv = np.full(n, -1, dtype=np.int64)
    for g in range(n):
        hs = np.flatnonzero(mul[g] == 0)
        if hs.size == 0:
            raise NoInverse(f"element {g} has no right inverse", witness=(g,))
        h = int(hs[0])
        if mul[h, g] != 0:
            raise NoInverse(
                f"element {g}: right inverse {h} is not a left inverse",
                witness=(g, h),
            )
        inv[g] = h

    if n <= ASSOC_CHECK_LIMIT:
        for a in range(n):
            lhs = mul[mul[a], :]
            rhs = mul[a][mul]
            if not np.array_equal(lhs, rhs):
                b, c = map(int, np.argwhere(lhs != rhs)[0])
                raise NotAssociative(
                    f"(a*b)*c != a*(b*c) for a={a}, b={b}, c={c}",
                    witness=(a, b, c),
                )

    if labels is None:
        labels = [f"g{i}" for i in range(n)]
        labels[0] = "e"

    mul = np.ascontiguousarray(mul, dtype=np.int32)
    inv = inv.astype(np.int32)
    mul.setflags(write=False)
    inv.setflags(write=False)
    return FiniteGroup(n, mul, inv, tuple(labels), origin)


def closure(group, elems):
    """The subgroup generated by the given element indices."""
    eng = group.engine
    hid = eng.closure_hid(sorted(set(elems)))
    return _subgroup_from_hid(group, hid)


def _subgroup_from_hid(group, hid):
    eng = group.engine
    mask = eng.masks[hid]
    return Subgroup(
        elements=eng.elements(hid),
        mask=mask,
        normal=eng.is_normal_mask(mask) is None,
        maximal=eng.is_maximal_hid(hid),
    )


def subgroup_lattice(group, cap=DEFAULT_SUBGROUP_CAP):
    """All subgroups, sorted by (order, elements), with flags."""
    if group._lattice is None:
        eng = group.engine
        group._lattice = tuple(
            _subgroup_from_hid(group, hid) for hid in eng.all_subgroup_hids(cap)
        )
    return group._lattice


def frattini(group):
    """Intersection of the maximal subgroups (whole group when trivial)."""
    if group._frattini is None:
        if group.order == 1:
            group._frattini = Subgroup((0,), 1, True, False)
        else:
            eng = group.engine
            mask = eng.full_mask
            for sub in subgroup_lattice(group):
                if sub.maximal:
                    mask &= sub.mask
            hid = eng.intern(mask)
            group._frattini = _subgroup_from_hid(group, hid)
    return group._frattini


def quotient(group, normal_sub):
    """Quotient by a normal subgroup.

    Accepts a Subgroup or an iterable of element indices (closed or not; the
    closure is taken).  Returns (quotient_group, projection) where
    projection[g] is the index of g's coset; the identity coset is 0 and each
    coset is labelled by its least representative.  Raises NotNormal with a
    conjugation witness.
    """
    eng = group.engine
    if isinstance(normal_sub, Subgroup):
        mask = normal_sub.mask
        elems = normal_sub.elements
    else:
        hid = eng.closure_hid(sorted(set(normal_sub)))
        mask = eng.masks[hid]
        elems = eng.elements(hid)
    witness = eng.is_normal_mask(mask)
    if witness is not None:
        g, h = witness
        conj = group.op(group.op(g, h), group.inverse(g))
        raise NotNormal(
            f"subgroup is not normal: {g} * {h} * {g}^-1 = {conj} escapes it",
            witness=(g, h, conj),
        )
    n = group.order
    mul = group.mul
    proj = [-1] * n
    reps = []
    for g in range(n):
        if proj[g] >= 0:
            continue
        cid = len(reps)
        reps.append(g)
        for x in elems:
            proj[int(mul[g, x])] = cid
    q = len(reps)
    qmul = [[proj[int(mul[reps[i], reps[j]])] for j in range(q)] for i in range(q)]
    qlabels = [f"[{group.labels[r]}]" for r in reps]
    qgroup = group_from_cayley_table(
        qmul, labels=qlabels, origin=f"{group.origin} mod N{len(elems)}"
    )
    return qgroup, tuple(proj)


def _commutator_subgroup_hid(group, a_hid, b_hid):
    """<[a, b] : a in A, b in B> for interned subgroups A, B."""
    eng = group.engine
    mul, inv = group.mul, group.inv
    comms = set()
    for a in eng.elements(a_hid):
        for b in eng.elements(b_hid):
            c = int(mul[int(mul[int(inv[a]), int(inv[b])]), int(mul[a, b])])
            comms.add(c)
    return eng.closure_hid(sorted(comms))


def structure_flags(group):
    """Abelian / cyclic / nilpotent / soluble flags, computed from series."""
    if group._flags is None:
        eng = group.engine
        n = group.order
        mul = group.mul
        abelian = bool(np.array_equal(mul, mul.T))
        cyclic = any(group.element_order(g) == n for g in range(n))

        full = eng.full_hid
        # derived series
        soluble = False
        h = full
        seen = set()
        while h not in seen:
            seen.add(h)
            if eng.masks[h] == 1:
                soluble = True
                break
            h = _commutator_subgroup_hid(group, h, h)
        # lower central series
        nilpotent = False
        h = full
        seen = set()
        while h not in seen:
            seen.add(h)
            if eng.masks[h] == 1:
                nilpotent = True
                break
            h = _commutator_subgroup_hid(group, full, h)
        group._flags = StructureFlags(abelian, cyclic, nilpotent, soluble)
    return group._flags


def class_partition(group):
    """Conjugacy classes as sorted tuples, ordered by least member; the
    identity class {0} comes first."""
    if group._classes is None:
        n = group.order
        mul, inv = group.mul, group.inv
        seen = [False] * n
        classes = []
        for g in range(n):
            if seen[g]:
                continue
            orbit = {g}
            for x in range(n):
                orbit.add(int(mul[int(mul[x, g]), int(inv[x])]))
            orbit = tuple(sorted(orbit))
            for y in orbit:
                seen[y] = True
            classes.append(orbit)
        group._classes = tuple(classes)
    return group._classes


def element_order(group, g):
    if not 0 <= g < group.order:
        raise PreconditionViolated(f"element index {g} out of range")
    return group.element_order(g)
