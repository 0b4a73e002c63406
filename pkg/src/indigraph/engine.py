"""Interned-subgroup engine: closure, one-element steps, joins, lattice walk.

One engine is attached lazily to each FiniteGroup.  Subgroups are bitmasks
interned to small integer ids; (id, element) -> id extension steps and
(id, id) -> id joins are memoized, so repeated lattice / rank computations on
the same group cost dictionary lookups.  Raw closures are delegated to the
active kernel (compiled or pure).
"""

from . import _kernels as kernels
from .errors import BudgetExceeded

DEFAULT_SUBGROUP_CAP = 20_000


class SubgroupEngine:
    __slots__ = (
        "prep", "rows", "inv", "n", "full_mask", "masks", "ids",
        "_step", "_join", "_lattice", "_full_hid",
    )

    def __init__(self, mul_table):
        self.prep = kernels.prepare(mul_table)
        self.n = self.prep.n
        self.rows = [[int(x) for x in row] for row in mul_table]
        self.inv = [row.index(0) for row in self.rows]
        self.full_mask = (1 << self.n) - 1
        self.masks = [1]  # hid 0: the trivial subgroup {identity}
        self.ids = {1: 0}
        self._step = {}
        self._join = {}
        self._lattice = None
        self._full_hid = None

    def intern(self, mask):
        hid = self.ids.get(mask)
        if hid is None:
            hid = len(self.masks)
            self.ids[mask] = hid
            self.masks.append(mask)
        return hid

    @property
    def full_hid(self):
        if self._full_hid is None:
            self._full_hid = self.intern(self.full_mask)
        return self._full_hid

    def elements(self, hid):
        return tuple(kernels.mask_members(self.masks[hid]))

    def step(self, hid, g):
        key = (hid << 10) | g
        r = self._step.get(key)
        if r is None:
            mask = self.masks[hid]
            if (mask >> g) & 1:
                r = hid
            else:
                r = self.intern(kernels.closure(self.prep, mask, (g,)))
            self._step[key] = r
        return r

    def join(self, a, b):
        if a == b:
            return a
        if a > b:
            a, b = b, a
        key = (a << 31) | b
        r = self._join.get(key)
        if r is None:
            ma, mb = self.masks[a], self.masks[b]
            union = ma | mb
            if union == mb:
                r = b
            elif union == ma:
                r = a
            else:
                r = self.intern(
                    kernels.closure(self.prep, ma, kernels.mask_members(mb))
                )
            self._join[key] = r
        return r

    def closure_hid(self, elems):
        hid = 0
        for g in elems:
            hid = self.step(hid, g)
        return hid

    def closure_mask(self, elems):
        return self.masks[self.closure_hid(elems)]

    def generates(self, elems):
        return self.closure_mask(elems) == self.full_mask

    def all_subgroup_hids(self, cap=DEFAULT_SUBGROUP_CAP):
        """Every subgroup, found bottom-up by one-element extensions."""
        if self._lattice is None:
            seen = {0}
            frontier = [0]
            while frontier:
                hid = frontier.pop()
                mask = self.masks[hid]
                for g in range(1, self.n):
                    if (mask >> g) & 1:
                        continue
                    nh = self.step(hid, g)
                    if nh not in seen:
                        if len(seen) >= cap:
                            raise BudgetExceeded(
                                f"subgroup lattice exceeds cap of {cap}"
                            )
                        seen.add(nh)
                        frontier.append(nh)
            self._lattice = sorted(
                seen, key=lambda h: (self.masks[h].bit_count(), self.elements(h))
            )
        return self._lattice

    def is_normal_mask(self, mask):
        """Check closure under conjugation; returns None or witness (g, h)."""
        members = kernels.mask_members(mask)
        rows, inv = self.rows, self.inv
        for g in range(1, self.n):
            gi = inv[g]
            row_g = rows[g]
            for h in members:
                c = rows[row_g[h]][gi]
                if not (mask >> c) & 1:
                    return (g, h)
        return None

    def is_maximal_hid(self, hid):
        mask = self.masks[hid]
        if mask == self.full_mask:
            return False
        full = self.full_hid
        for g in range(1, self.n):
            if (mask >> g) & 1:
                continue
            if self.step(hid, g) != full:
                return False
        return True
