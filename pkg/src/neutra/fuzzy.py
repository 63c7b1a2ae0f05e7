"""Fuzzy membership maps V -> N([0,1]) and their verification.

Values are compared componentwise; a failed ``>=`` is tagged
``StrictViolation`` when the two values are comparable and
``Incomparable`` otherwise.
"""

from __future__ import annotations

import enum
from typing import Iterable, Mapping

from .algebra import Kind, StructureDef, VerificationReport, _Collector, verify
from .carrier import Element, Scalar, canonical, elem_add, elem_neg, scalar_act
from .errors import NotSubset, NotTotal, PrerequisiteFailed
from .ring import FUZZY_I, FUZZY_ONE, FuzzyNeutroValue, NeutroNumber, Ordering, fuzzy_leq, fuzzy_min


class FuzzyKind(enum.Enum):
    SETLA = "setla"
    SETVS = "setvs"
    SEMIVS = "semivs"
    SEMILA = "semila"
    GROUPVS = "groupvs"
    GROUPLA = "groupla"
    GROUPLA_CLASSICAL = "groupla-classical"

    @property
    def prerequisite(self) -> Kind:
        if self is FuzzyKind.GROUPLA_CLASSICAL:
            return Kind.GROUPLA
        return Kind(self.value)


class FuzzyMap:
    def __init__(self, structure: StructureDef, table: Mapping[Element, FuzzyNeutroValue]):
        table = dict(table)
        for v in structure.carrier:
            if v not in table:
                raise NotTotal(f"no fuzzy value for {v}")
        for v in table:
            if v not in structure:
                raise NotTotal(f"{v} is not in the carrier")
        self.structure = structure
        self.table = {v: table[v] for v in structure.carrier}

    def __call__(self, v: Element) -> FuzzyNeutroValue:
        return self.table[v]

    def __eq__(self, other):
        return isinstance(other, FuzzyMap) and self.structure == other.structure and self.table == other.table

    def __repr__(self):
        return "FuzzyMap({" + "; ".join(f"{v} -> {x}" for v, x in self.table.items()) + "})"


def _geq(c: _Collector, args, big: FuzzyNeutroValue, small: FuzzyNeutroValue):
    order = fuzzy_leq(small, big)
    if order is Ordering.GT:
        c.fail(args, (big, small), "StrictViolation")
    elif order is Ordering.INCOMPARABLE:
        c.fail(args, (big, small), "Incomparable")


def _min_condition(f: FuzzyMap):
    c = _Collector("fuzzy.min")
    elems = f.structure.carrier
    for i, a in enumerate(elems):
        for b in elems[i:]:
            if a.shape != b.shape:
                continue
            _geq(c, (a, b), f(elem_add(a, b)), fuzzy_min(f(a), f(b)))
    return c.result


def _fixes_I(f: FuzzyMap):
    c = _Collector("fuzzy.fixes_I")
    ind = Scalar(NeutroNumber(f.structure.ring, 0, 1))
    if ind not in f.structure:
        c.result.note = "skipped: I is not in the carrier"
    elif f(ind) != FUZZY_I:
        c.fail((ind,), f(ind))
    return c.result


def _monotone(f: FuzzyMap, equal: bool = False):
    c = _Collector("fuzzy.scalar_invariant" if equal else "fuzzy.scalar_monotone")
    for r in f.structure.scalars:
        for a in f.structure.carrier:
            ra, va = f(scalar_act(r, a)), f(a)
            if equal:
                if ra != va:
                    c.fail((r, a), (ra, va), "NotEqual")
            else:
                _geq(c, (r, a), ra, va)
    return c.result


def _negation(f: FuzzyMap):
    c = _Collector("fuzzy.negation")
    for a in f.structure.carrier:
        if f(elem_neg(a)) != f(a):
            c.fail((a,), (f(elem_neg(a)), f(a)), "NotEqual")
    return c.result


def _zero_one(f: FuzzyMap):
    c = _Collector("fuzzy.zero_one")
    for a in f.structure.carrier:
        if a.is_zero() and f(a) != FUZZY_ONE:
            c.fail((a,), f(a))
    return c.result


def verify_fuzzy(f: FuzzyMap, kind: FuzzyKind) -> VerificationReport:
    kind = FuzzyKind(kind)
    base = verify(f.structure.with_kind(kind.prerequisite))
    if not base.passed:
        raise PrerequisiteFailed(f"carrier is not a {kind.prerequisite.value} structure", base)
    rep = VerificationReport(subject=f"fuzzy {kind.value} |V|={len(f.structure)}")
    if kind is FuzzyKind.SETLA:
        rep.axioms += [_min_condition(f), _fixes_I(f)]
    elif kind in (FuzzyKind.SETVS, FuzzyKind.SEMIVS):
        rep.axioms += [_monotone(f)]
    elif kind is FuzzyKind.SEMILA:
        rep.axioms += [_min_condition(f), _monotone(f)]
    elif kind is FuzzyKind.GROUPVS:
        rep.axioms += [_monotone(f), _fixes_I(f)]
    elif kind is FuzzyKind.GROUPLA:
        rep.axioms += [_min_condition(f), _negation(f), _zero_one(f), _monotone(f, equal=True)]
    else:
        rep.axioms += [_min_condition(f), _negation(f), _zero_one(f), _monotone(f)]
    return rep


def restrict_fuzzy(f: FuzzyMap, W: Iterable[Element], kind: Kind | None = None) -> FuzzyMap:
    W = canonical(W)
    for w in W:
        if w not in f.structure:
            raise NotSubset(f"{w} is not in the carrier")
    sub = StructureDef(W, f.structure.scalars, kind or f.structure.kind)
    return FuzzyMap(sub, {w: f(w) for w in W})


def constant_map(structure: StructureDef, value: FuzzyNeutroValue) -> FuzzyMap:
    return FuzzyMap(structure, {v: value for v in structure.carrier})
