"""Pairs of structures: verification, bigenerators, bisubstructure
flavors and fuzzy bimaps.  A bistructure is an ordered pair; the two
sides may live over different rings."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .algebra import (
    AxiomResult,
    Kind,
    Mixedness,
    ScalarSet,
    StructureDef,
    VerificationReport,
    Witness,
    mixedness,
    verify,
)
from .carrier import canonical
from .errors import NotSubsets, PrerequisiteFailed
from .fuzzy import FuzzyKind, FuzzyMap, restrict_fuzzy, verify_fuzzy
from .span import GeneratorReport, minimal_generating_set

SHARED = "shared"
BISCALARS = "bi"


class BiStructureDef:
    def __init__(self, first: StructureDef, second: StructureDef, scalar_mode: str = BISCALARS):
        if scalar_mode not in (SHARED, BISCALARS):
            raise ValueError(f"unknown scalar mode {scalar_mode!r}")
        if scalar_mode == SHARED and first.scalars != second.scalars:
            raise ValueError("shared-scalar bistructures need one scalar set")
        self.first = first
        self.second = second
        self.scalar_mode = scalar_mode

    @property
    def sides(self):
        return (self.first, self.second)

    def __repr__(self):
        return f"BiStructureDef({self.first!r}, {self.second!r}, {self.scalar_mode})"


def _not_contained(axiom_id, a: frozenset, b: frozenset, label) -> AxiomResult:
    ok = not a <= b
    return AxiomResult(axiom_id, ok, [] if ok else [Witness((label,), None, "Contained")], 0 if ok else 1)


def _neutrosophic(carrier) -> bool:
    return mixedness(carrier) is not Mixedness.NON


def verify_bistructure(b: BiStructureDef) -> VerificationReport:
    rep = VerificationReport(subject=f"bistructure {b.first.kind.value} ++ {b.second.kind.value} ({b.scalar_mode})")
    v1, v2 = b.first.carrier_set, b.second.carrier_set
    rep.axioms.append(_not_contained("bi.first_not_in_second", v1, v2, "V1 <= V2"))
    rep.axioms.append(_not_contained("bi.second_not_in_first", v2, v1, "V2 <= V1"))
    if b.scalar_mode == BISCALARS:
        s1, s2 = b.first.scalars, b.second.scalars
        ok1 = not s1.issubset(s2)
        ok2 = not s2.issubset(s1)
        rep.axioms.append(AxiomResult("bi.scalars_first_not_in_second", ok1, [] if ok1 else [Witness(("S1 <= S2",))]))
        rep.axioms.append(AxiomResult("bi.scalars_second_not_in_first", ok2, [] if ok2 else [Witness(("S2 <= S1",))]))
    rep.extend(verify(b.first), prefix="first.")
    rep.extend(verify(b.second), prefix="second.")
    if _neutrosophic(b.first.carrier) != _neutrosophic(b.second.carrier):
        rep.flags.append("QuasiNeutrosophic")
    if b.first.kind.is_la != b.second.kind.is_la:
        rep.flags.append("PseudoBilinear")
    return rep


@dataclass(frozen=True)
class BiGeneratorReport:
    first: GeneratorReport
    second: GeneratorReport

    @property
    def bidimension(self) -> tuple:
        return (self.first.cardinality, self.second.cardinality)


def bigenerator(b: BiStructureDef, method: str = "exact") -> BiGeneratorReport:
    return BiGeneratorReport(minimal_generating_set(b.first, method), minimal_generating_set(b.second, method))


@dataclass
class BiFlavorReport:
    flavors: list = field(default_factory=list)
    details: dict = field(default_factory=dict)


def _side_report(W, scalars: ScalarSet, kind: Kind) -> VerificationReport:
    return verify(StructureDef(W, scalars, kind))


def _pair_report(name, W1, W2, plan, extra=()) -> VerificationReport:
    rep = VerificationReport(subject=name)
    s1, k1 = plan[0]
    s2, k2 = plan[1]
    rep.axioms.append(_not_contained("bi.first_not_in_second", frozenset(W1), frozenset(W2), "W1 <= W2"))
    rep.axioms.append(_not_contained("bi.second_not_in_first", frozenset(W2), frozenset(W1), "W2 <= W1"))
    rep.extend(_side_report(W1, s1, k1), prefix="first.")
    rep.extend(_side_report(W2, s2, k2), prefix="second.")
    rep.axioms.extend(extra)
    return rep


def _real_nonzero(axiom_id, W) -> AxiomResult:
    ok = mixedness(W) is Mixedness.NON and any(not x.is_zero() for x in W)
    return AxiomResult(axiom_id, ok, [] if ok else [Witness((), None, "NotRealOnly")], 0 if ok else 1)


def classify_bisubstructure(W1: Iterable, W2: Iterable, b: BiStructureDef, scalar_restriction=None) -> BiFlavorReport:
    """Report every bisubstructure flavor the pair (W1, W2) satisfies.

    ``scalar_restriction`` is a pair (T1, T2) of scalar subsets, one per
    side (pass the same set twice for shared scalars)."""
    W1, W2 = canonical(W1), canonical(W2)
    V1, V2 = b.first, b.second
    if not W1 or not W2 or not set(W1) <= V1.carrier_set or not set(W2) <= V2.carrier_set:
        raise NotSubsets("each W_i must be a nonempty subset of its side's carrier")
    if set(W1) == V1.carrier_set and set(W2) == V2.carrier_set:
        raise NotSubsets("the pair must be proper on at least one side")
    out = BiFlavorReport()
    S1, S2, k1, k2 = V1.scalars, V2.scalars, V1.kind, V2.kind

    def record(name, rep):
        out.details[name] = rep
        if rep.passed:
            out.flavors.append(name)

    record("Plain", _pair_report("Plain", W1, W2, [(S1, k1), (S2, k2)]))
    record(
        "Pseudo",
        _pair_report(
            "Pseudo", W1, W2, [(S1, k1), (S2, k2)],
            [_real_nonzero("pseudo.first_real", W1), _real_nonzero("pseudo.second_real", W2)],
        ),
    )
    n1, n2 = _neutrosophic(W1), _neutrosophic(W2)
    quasi = _pair_report("QuasiNeutrosophic", W1, W2, [(S1, k1), (S2, k2)])
    ok = n1 != n2 and any(not x.is_zero() for x in (W1 if not n1 else W2))
    quasi.axioms.append(AxiomResult("quasi.one_side_real", ok, [] if ok else [Witness((), None, "BothSidesSame")]))
    record("QuasiNeutrosophic", quasi)
    if k1.is_la or k2.is_la:
        # one side a linear subalgebra, the other only a vector subspace
        for la_side in (0, 1):
            kinds = [k1.vs, k2.vs]
            kinds[la_side] = (k1, k2)[la_side].la
            rep = _pair_report("QuasiLinear", W1, W2, [(S1, kinds[0]), (S2, kinds[1])])
            other = (W1, W2)[1 - la_side]
            other_s = (S1, S2)[1 - la_side]
            only_vs = not _side_report(other, other_s, kinds[1 - la_side].la).passed
            rep.axioms.append(AxiomResult("quasi.other_side_vs_only", only_vs))
            if rep.passed or la_side == 1:
                record("QuasiLinear", rep)
                break
    if scalar_restriction is not None:
        T1, T2 = scalar_restriction
        if not T1.issubset(S1) or not T2.issubset(S2):
            raise NotSubsets("scalar restriction must sit inside the side scalar sets")
        proper = T1 != S1 or T2 != S2
        tag = AxiomResult("subset.proper_restriction", proper)
        record("SubsetScalars", _pair_report("SubsetScalars", W1, W2, [(T1, k1), (T2, k2)], [tag]))
        if k1.flavor == "group" or k2.flavor == "group":
            record(
                "PseudoSemigroup",
                _pair_report(
                    "PseudoSemigroup", W1, W2,
                    [(T1, k1.with_flavor("semigroup")), (T2, k2.with_flavor("semigroup"))], [tag],
                ),
            )
            record(
                "PseudoSet",
                _pair_report("PseudoSet", W1, W2, [(T1, k1.with_flavor("set")), (T2, k2.with_flavor("set"))], [tag]),
            )
    return out


class BiFuzzyMap:
    def __init__(self, first: FuzzyMap, second: FuzzyMap):
        self.first = first
        self.second = second

    def __eq__(self, other):
        return isinstance(other, BiFuzzyMap) and self.first == other.first and self.second == other.second


def verify_bifuzzy(f: BiFuzzyMap, b: BiStructureDef, kind: FuzzyKind) -> VerificationReport:
    base = verify_bistructure(b)
    if not base.passed:
        raise PrerequisiteFailed("bistructure does not verify", base)
    rep = VerificationReport(subject=f"bifuzzy {FuzzyKind(kind).value}")
    rep.extend(verify_fuzzy(f.first, kind), prefix="first.")
    rep.extend(verify_fuzzy(f.second, kind), prefix="second.")
    return rep


def restrict_bifuzzy(f: BiFuzzyMap, W1: Iterable, W2: Iterable) -> BiFuzzyMap:
    return BiFuzzyMap(restrict_fuzzy(f.first, W1), restrict_fuzzy(f.second, W2))
