"""Integer tables for a finite carrier, shared by the enumeration kernels.

Element ``i`` is ``carrier[i]`` in canonical order.  Action and addition
tables store the index of the result, ``-1`` when it leaves the carrier
and ``-2`` (addition only) when the shapes differ.
"""

from __future__ import annotations

from functools import lru_cache

from .carrier import elem_add, elem_neg, scalar_act, zero_like
from .errors import ShapeMismatch

OUTSIDE = -1
MISMATCH = -2


class Indexed:
    def __init__(self, carrier):
        self.elems = tuple(carrier)
        self.n = len(self.elems)
        self.index = {e: i for i, e in enumerate(self.elems)}
        self._add = None
        self._act = {}

    def idx(self, x) -> int:
        return self.index.get(x, OUTSIDE)

    def mask_of(self, elements) -> int:
        m = 0
        for e in elements:
            m |= 1 << self.index[e]
        return m

    def members(self, mask: int) -> list:
        return [self.elems[i] for i in range(self.n) if (mask >> i) & 1]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def act_row(self, s) -> list:
        row = self._act.get(s)
        if row is None:
            row = [self.idx(scalar_act(s, v)) for v in self.elems]
            self._act[s] = row
        return row

    def act_table(self, scalars) -> list:
        """Flattened |S| x n table."""
        out = []
        for s in scalars:
            out.extend(self.act_row(s))
        return out

    @property
    def add(self) -> list:
        if self._add is None:
            n = self.n
            table = [OUTSIDE] * (n * n)
            for i, v in enumerate(self.elems):
                for j in range(i, n):
                    try:
                        t = self.idx(elem_add(v, self.elems[j]))
                    except ShapeMismatch:
                        t = MISMATCH
                    table[i * n + j] = table[j * n + i] = t
            self._add = table
        return self._add

    @property
    def neg(self) -> list:
        return [self.idx(elem_neg(v)) for v in self.elems]

    @property
    def zero_of(self) -> list:
        return [self.idx(zero_like(v)) for v in self.elems]

    @property
    def zero_mask(self) -> int:
        m = 0
        for i, v in enumerate(self.elems):
            if v.is_zero():
                m |= 1 << i
        return m


@lru_cache(maxsize=64)
def indexed(carrier: tuple) -> Indexed:
    return Indexed(carrier)
