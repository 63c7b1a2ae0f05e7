"""Spans, generating sets, independence tests and minimal generating sets."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Iterable

from . import kernels
from .algebra import Kind, ScalarSet, StructureDef
from .carrier import Element, canonical, elem_add, scalar_act, zero_like
from .errors import BudgetExceeded, CapExceeded, NotGenerable
from .tables import indexed

SPAN_CAP = 100_000
EXACT_LIMIT = 20
COEFFICIENT_BUDGET = 1_000_000


class Mode(enum.Enum):
    VS = "vs"
    LA = "la"


def mode_for(kind: Kind) -> Mode:
    return Mode.LA if kind.is_la else Mode.VS


def span(T: Iterable[Element], scalars: ScalarSet, mode: Mode = Mode.VS, cap: int = SPAN_CAP) -> list:
    """T together with every s*t; in LA mode also closed under sums of
    same-shaped reachable elements."""
    reached = set(T)
    for t in list(reached):
        for s in scalars:
            reached.add(scalar_act(s, t))
    if mode is Mode.LA:
        frontier = list(reached)
        while frontier:
            fresh = []
            snapshot = list(reached)
            for x in frontier:
                for y in snapshot:
                    if x.shape != y.shape:
                        continue
                    z = elem_add(x, y)
                    if z not in reached:
                        reached.add(z)
                        fresh.append(z)
                        if len(reached) > cap:
                            raise CapExceeded(f"span exceeded {cap} elements")
            frontier = fresh
    return canonical(reached)


@dataclass(frozen=True)
class GeneratingResult:
    holds: bool
    witness: Element | None = None
    tag: str = ""

    def __bool__(self):
        return self.holds


def is_generating(T: Iterable[Element], structure: StructureDef) -> GeneratingResult:
    reached = set(span(T, structure.scalars, mode_for(structure.kind)))
    for x in structure.carrier:
        if x not in reached:
            return GeneratingResult(False, x, "Uncovered")
    extra = canonical(reached - structure.carrier_set)
    if extra:
        return GeneratingResult(False, extra[0], "OutsideCarrier")
    return GeneratingResult(True)


@dataclass(frozen=True)
class IndependenceResult:
    independent: bool
    witness: tuple = ()
    tag: str = ""

    def __bool__(self):
        return self.independent


def _pair_dependency(T, scalars):
    for p1 in T:
        for p2 in T:
            if p1 == p2:
                continue
            for a in scalars:
                if scalar_act(a, p2) == p1:
                    return (p1, a, p2)
    return None


def is_independent(T: Iterable[Element], structure: StructureDef) -> IndependenceResult:
    """Dependency test matching the structure's kind."""
    T = canonical(T)
    S = structure.scalars
    kind = structure.kind
    if kind is Kind.GROUPLA:
        return _group_la_independence(T, S)
    w = _pair_dependency(T, S)
    if w is not None:
        return IndependenceResult(False, w, "ScalarMultiple")
    if kind.is_la:
        # sums over the other elements, each used at most once
        for t in T:
            others = [x for x in T if x != t and x.shape == t.shape]
            if (len(S) + 1) ** len(others) > COEFFICIENT_BUDGET:
                raise BudgetExceeded("too many coefficient choices for the sum test")
            choices = [None] + list(S.members)
            for coeffs in product(choices, repeat=len(others)):
                used = [(c, x) for c, x in zip(coeffs, others) if c is not None]
                if len(used) < 2:
                    continue
                total = scalar_act(used[0][0], used[0][1])
                for c, x in used[1:]:
                    total = elem_add(total, scalar_act(c, x))
                if total == t:
                    return IndependenceResult(False, (t, tuple(used)), "SumOfOthers")
    return IndependenceResult(True)


def _group_la_independence(T, S) -> IndependenceResult:
    zero = next((s for s in S if s.is_zero()), None)
    groups: dict = {}
    for t in T:
        groups.setdefault(t.shape, []).append(t)
    for shape_elems in groups.values():
        if len(S) ** len(shape_elems) > COEFFICIENT_BUDGET:
            raise BudgetExceeded("too many coefficient tuples for the exhaustive search")
        z = zero_like(shape_elems[0])
        for coeffs in product(S.members, repeat=len(shape_elems)):
            if all(c.is_zero() for c in coeffs):
                continue
            total = z
            for c, x in zip(coeffs, shape_elems):
                total = elem_add(total, scalar_act(c, x))
            if total == z:
                return IndependenceResult(False, tuple(zip(coeffs, shape_elems)), "TrivialCombination")
    if zero is None:
        return IndependenceResult(True, (), "NoZeroScalar")
    return IndependenceResult(True)


@dataclass(frozen=True)
class GeneratorReport:
    generating_set: tuple
    cardinality: int
    method: str
    certified_minimal: bool


def _cover_masks(ix, scalars):
    cover, good = [], []
    for v in range(ix.n):
        m = 1 << v
        ok = True
        for s in scalars:
            j = ix.act_row(s)[v]
            if j < 0:
                ok = False
                break
            m |= 1 << j
        cover.append(m)
        good.append(ok)
    return cover, good


def _reach(gens_mask, cover, add, n):
    reach = 0
    m = gens_mask
    while m:
        low = m & -m
        reach |= cover[low.bit_length() - 1]
        m ^= low
    if add is not None:
        reach = kernels.additive_closure(n, reach, add)
    return reach


def minimal_generating_set(structure: StructureDef, method: str = "exact", exact_limit: int = EXACT_LIMIT) -> GeneratorReport:
    """Smallest generating subset (exact) or a pruned greedy one.

    Elements that no other element reaches are forced into every
    generating set, so the exact search only ranges over the rest."""
    method = method.lower()
    if method not in ("exact", "greedy"):
        raise ValueError(f"unknown method {method!r}")
    ix = indexed(structure.carrier)
    n = ix.n
    full = ix.full
    cover, good = _cover_masks(ix, structure.scalars)
    add = None
    if structure.kind.is_la:
        add = ix.add
        if any(t == -1 for t in add):
            raise NotGenerable("carrier is not closed under addition")
    usable = [v for v in range(n) if good[v]]
    usable_mask = 0
    for v in usable:
        usable_mask |= 1 << v
    if _reach(usable_mask, cover, add, n) != full:
        raise NotGenerable("no subset of the carrier spans exactly onto it")
    forced = 0
    for v in usable:
        if not (_reach(usable_mask & ~(1 << v), cover, add, n) >> v) & 1:
            forced |= 1 << v
    candidates = [v for v in usable if not (forced >> v) & 1]

    if method == "exact":
        if len(candidates) > exact_limit:
            raise BudgetExceeded(
                f"{len(candidates)} unforced candidates exceed the exact-search limit {exact_limit}"
            )
        found = kernels.min_generating(n, cover, add, forced, candidates, full)
        if not found:
            raise NotGenerable("no generating subset found")
        best = min(found, key=lambda m: [i for i in range(n) if (m >> i) & 1])
        gens = ix.members(best)
        return GeneratorReport(tuple(gens), len(gens), "Exact", True)

    chosen = forced
    reach = _reach(chosen, cover, add, n)
    while reach != full:
        best_c, best_size = None, -1
        for c in candidates:
            if (chosen >> c) & 1:
                continue
            size = bin(_reach(chosen | 1 << c, cover, add, n)).count("1")
            if size > best_size:
                best_c, best_size = c, size
        chosen |= 1 << best_c
        reach = _reach(chosen, cover, add, n)
    for c in reversed(candidates):
        if (chosen >> c) & 1 and _reach(chosen & ~(1 << c), cover, add, n) == full:
            chosen &= ~(1 << c)
    gens = ix.members(chosen)
    return GeneratorReport(tuple(gens), len(gens), "Greedy", False)


def dimension(structure: StructureDef) -> int:
    return minimal_generating_set(structure, "exact").cardinality
