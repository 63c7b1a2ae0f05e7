"""Brute-force reference implementations used to cross-check the library.

These walk every ordered tuple and every subset directly; they share
only element arithmetic with the code under test."""

from __future__ import annotations

from itertools import combinations, product

from neutra import FuzzyNeutroValue, Kind, NeutroNumber, ScalarSet, StructureDef
from neutra.carrier import elem_add, elem_neg, scalar_act, zero_like
from neutra.errors import ShapeMismatch


def _add(x, y):
    try:
        return elem_add(x, y)
    except ShapeMismatch:
        return None


def oracle_verify(V, S: ScalarSet, kind: Kind) -> bool:
    V = set(V)
    scal = list(S)
    ring = S.ring
    zero = NeutroNumber(ring, 0, 0)
    if any(scalar_act(s, v) not in V for s, v in product(scal, V)):
        return False
    if kind.flavor in ("semigroup", "group"):
        if zero not in S or any(a + b not in S for a, b in product(scal, scal)):
            return False
        if kind.flavor == "group" and any(-a not in S for a in scal):
            return False
        if any(zero_like(v) not in V for v in V):
            return False
    if kind.flavor == "semigroup":
        for a, b, v in product(scal, scal, V):
            if scalar_act(a + b, v) != elem_add(scalar_act(a, v), scalar_act(b, v)):
                return False
    if kind.is_la:
        for u, v in product(V, V):
            w = _add(u, v)
            if w is None or w not in V:
                return False
        if kind is Kind.SEMILA:
            for s, u, v in product(scal, V, V):
                if scalar_act(s, elem_add(u, v)) != elem_add(scalar_act(s, u), scalar_act(s, v)):
                    return False
        if kind is Kind.GROUPLA and any(elem_neg(v) not in V for v in V):
            return False
    return True


def all_proper_subsets(V):
    V = list(V)
    for r in range(1, len(V)):
        for combo in combinations(V, r):
            yield set(combo)


def oracle_substructures(parent: StructureDef, kind: Kind | None = None) -> set:
    kind = kind or parent.kind
    return {
        frozenset(W) for W in all_proper_subsets(parent.carrier) if oracle_verify(W, parent.scalars, kind)
    }


def oracle_span(T, S, la: bool, within=None) -> set | None:
    """Span of T by direct fixed point; with ``within`` given, returns None
    as soon as anything outside it is reached."""
    reached = set(T) | {scalar_act(s, t) for s in S for t in T}
    if within is not None and not reached <= within:
        return None
    frontier = list(reached)
    while la and frontier:
        fresh = []
        for u in frontier:
            for v in list(reached):
                w = _add(u, v)
                if w is not None and w not in reached:
                    if within is not None and w not in within:
                        return None
                    reached.add(w)
                    fresh.append(w)
        frontier = fresh
    return reached


def oracle_min_generating_size(st: StructureDef):
    """Smallest |T| whose span is exactly the carrier, or None."""
    target = st.carrier_set
    elems = list(st.carrier)
    for r in range(1, len(elems) + 1):
        for combo in combinations(elems, r):
            if oracle_span(combo, st.scalars, st.kind.is_la, target) == target:
                return r
    return None


def oracle_is_map(D: StructureDef, C: StructureDef, graph: dict, kind: Kind) -> bool:
    S = list(D.scalars)
    for s, v in product(S, D.carrier):
        sv = scalar_act(s, v)
        if sv not in graph or graph[sv] != scalar_act(s, graph[v]):
            return False
    ind = next((v for v in D.carrier if v.entries == (NeutroNumber(D.ring, 0, 1),) and v.shape.tag == "scalar"), None)
    if ind is not None and graph[ind] != ind and not all(w.is_zero() for w in graph.values()):
        return False
    if kind in (Kind.SETLA, Kind.GROUPLA):
        for x, y in product(D.carrier, D.carrier):
            z = _add(x, y)
            if z is None:
                continue
            if z not in graph:
                return False
            t = _add(graph[x], graph[y])
            if t is None or graph[z] != t:
                return False
    elif kind is Kind.SEMILA:
        for a, v, u in product(S, D.carrier, D.carrier):
            z = _add(scalar_act(a, v), u)
            if z is None:
                continue
            if z not in graph:
                return False
            t = _add(scalar_act(a, graph[v]), graph[u])
            if t is None or graph[z] != t:
                return False
    return True


def oracle_maps(D: StructureDef, C: StructureDef, kind: Kind | None = None) -> set:
    kind = kind or D.kind
    out = set()
    for images in product(C.carrier, repeat=len(D.carrier)):
        graph = dict(zip(D.carrier, images))
        if oracle_is_map(D, C, graph, kind):
            out.add(images)
    return out


def _ge(u, v) -> bool:
    return u.a >= v.a and u.b >= v.b


def _meet(u, v):
    return FuzzyNeutroValue(min(u.a, v.a), min(u.b, v.b))


def oracle_fuzzy_conditions(table: dict, S, kind_name: str) -> dict:
    """Each condition of the named fuzzy kind evaluated by direct loops;
    maps condition name to a boolean."""
    V = list(table)
    ring = S.ring
    ind = next((v for v in V if v.shape.tag == "scalar" and v.entries == (NeutroNumber(ring, 0, 1),)), None)
    conds = {}

    def min_ok():
        for x, y in product(V, V):
            z = _add(x, y)
            if z is not None and not _ge(table[z], _meet(table[x], table[y])):
                return False
        return True

    def mono_ok():
        return all(_ge(table[scalar_act(r, a)], table[a]) for r, a in product(list(S), V))

    def fixes_ok():
        return ind is None or (table[ind].a == 0 and table[ind].b == 1)

    if kind_name == "setla":
        conds = {"min": min_ok(), "fixes_I": fixes_ok()}
    elif kind_name in ("setvs", "semivs"):
        conds = {"monotone": mono_ok()}
    elif kind_name == "semila":
        conds = {"min": min_ok(), "monotone": mono_ok()}
    elif kind_name == "groupvs":
        conds = {"monotone": mono_ok(), "fixes_I": fixes_ok()}
    else:
        conds = {
            "min": min_ok(),
            "negation": all(table[elem_neg(a)] == table[a] for a in V),
            "zero_one": all(table[a].a == 1 and table[a].b == 0 for a in V if a.is_zero()),
        }
        if kind_name == "groupla":
            conds["invariant"] = all(table[scalar_act(r, a)] == table[a] for r, a in product(list(S), V))
        else:
            conds["monotone"] = mono_ok()
    return conds
