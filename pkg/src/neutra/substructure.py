"""Substructure predicates, exhaustive enumeration, simplicity grades and
decomposition checks (direct sum, pseudo direct sum, direct union)."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from . import kernels
from .algebra import (
    AxiomResult,
    Kind,
    Mixedness,
    ScalarSet,
    StructureDef,
    VerificationReport,
    Witness,
    mixedness,
    scalar_profile,
    verify,
)
from .carrier import Element, canonical, elem_add, scalar_act
from .errors import (
    BudgetExceeded,
    ModeUnsupported,
    NotProperSubset,
    PartNotSubstructure,
    SubsetScalarsTooSmall,
)
from .tables import Indexed, indexed

ENUMERATION_LIMIT = 20
SCALAR_SUBSET_LIMIT = 12


@dataclass(frozen=True)
class Flavor:
    name: str
    scalars: ScalarSet | None = None

    def __str__(self):
        return self.name if self.scalars is None else f"{self.name}({self.scalars})"


PLAIN = Flavor("Plain")
PSEUDO = Flavor("Pseudo")


def Plain() -> Flavor:
    return PLAIN


def Pseudo() -> Flavor:
    return PSEUDO


def SubsetScalars(t: ScalarSet) -> Flavor:
    return Flavor("SubsetScalars", t)


def Duo(h: ScalarSet) -> Flavor:
    return Flavor("Duo", h)


def PseudoSemigroup(h: ScalarSet) -> Flavor:
    return Flavor("PseudoSemigroup", h)


def PseudoSet(t: ScalarSet) -> Flavor:
    return Flavor("PseudoSet", t)


def _proper_scalars(parent: StructureDef, t: ScalarSet, what: str):
    if not t.issubset(parent.scalars) or t == parent.scalars:
        raise NotProperSubset(f"{what} {t} is not a proper subset of {parent.scalars}")


def _flavor_plan(parent: StructureDef, flavor: Flavor, kind: Kind) -> list:
    """(scalars, kind) pairs the candidate must verify against."""
    S = parent.scalars
    if flavor.name in ("Plain", "Pseudo"):
        return [(S, kind)]
    t = flavor.scalars
    if flavor.name == "SubsetScalars":
        if len(t) <= 1:
            raise SubsetScalarsTooSmall(f"scalar subset {t} needs more than one member")
        _proper_scalars(parent, t, "scalar subset")
        return [(t, kind)]
    if flavor.name == "Duo":
        _proper_scalars(parent, t, "subgroup")
        return [(S, kind), (t, kind)]
    if flavor.name == "PseudoSemigroup":
        _proper_scalars(parent, t, "sub-semigroup")
        return [(t, kind.with_flavor("semigroup"))]
    if flavor.name == "PseudoSet":
        _proper_scalars(parent, t, "scalar subset")
        return [(t, kind.with_flavor("set"))]
    raise ValueError(f"unknown flavor {flavor.name!r}")


def is_substructure(
    parent: StructureDef,
    candidate: Iterable[Element],
    flavor: Flavor = PLAIN,
    kind: Kind | None = None,
) -> VerificationReport:
    """Check ``candidate`` as a ``flavor`` substructure of ``parent``.

    ``kind`` overrides the kind the candidate is checked as (for example a
    vector subspace inside a linear algebra)."""
    cand = canonical(candidate)
    if not cand or not set(cand) < parent.carrier_set:
        raise NotProperSubset("candidate must be a proper nonempty subset of the carrier")
    kind = kind or parent.kind
    plan = _flavor_plan(parent, flavor, kind)
    rep = VerificationReport(subject=f"{flavor} in {parent.kind.value}")
    if flavor.name == "Duo":
        prof = scalar_profile(flavor.scalars)
        rep.axioms.append(
            AxiomResult(
                "duo.subgroup",
                prof.is_additive_group,
                [] if prof.is_additive_group else [Witness((flavor.scalars,), None, "NotAGroup")],
                0 if prof.is_additive_group else 1,
            )
        )
    for i, (scalars, k) in enumerate(plan):
        sub = verify(StructureDef(cand, scalars, k))
        rep.extend(sub, prefix="duo.over_h." if i == 1 else "")
    if flavor.name == "Pseudo":
        m = mixedness(cand)
        rep.axioms.append(
            AxiomResult(
                "pseudo.real_only",
                m is Mixedness.NON,
                [] if m is Mixedness.NON else [Witness(tuple(x for x in cand if _has_I(x))[:1], None)],
                0 if m is Mixedness.NON else 1,
            )
        )
        nonzero = any(not x.is_zero() for x in cand)
        rep.axioms.append(AxiomResult("pseudo.nonzero", nonzero, [] if nonzero else [Witness((), None, "ZeroOnly")]))
    return rep


def _has_I(x: Element) -> bool:
    return any(e.b != 0 for e in x.entries)


# enumeration --------------------------------------------------------------

class _Infeasible(Exception):
    pass


class _NeedsBruteForce(Exception):
    pass


def _requirements(ix: Indexed, scalars: ScalarSet, kind: Kind):
    """Per-element requirement masks equivalent to ``verify`` on subsets."""
    n = ix.n
    need = [0] * n
    bad = 0
    prof = scalar_profile(scalars)
    if kind.flavor == "semigroup" and not (prof.is_additive_semigroup and prof.contains_zero):
        raise _Infeasible
    if kind.flavor == "group" and not prof.is_additive_group:
        raise _Infeasible
    for s in scalars:
        for v, j in enumerate(ix.act_row(s)):
            if j < 0:
                bad |= 1 << v
            else:
                need[v] |= 1 << j
    if kind.flavor != "set":
        for v, z in enumerate(ix.zero_of):
            if z < 0:
                bad |= 1 << v
            else:
                need[v] |= 1 << z
    if kind.flavor == "semigroup":
        ms = scalars.members
        for v, x in enumerate(ix.elems):
            for a, s1 in enumerate(ms):
                for s2 in ms[a:]:
                    if scalar_act(s1 + s2, x) != elem_add(scalar_act(s1, x), scalar_act(s2, x)):
                        bad |= 1 << v
        if kind.is_la:
            for s in ms:
                for i, x in enumerate(ix.elems):
                    for y in ix.elems[i:]:
                        if x.shape == y.shape and scalar_act(s, elem_add(x, y)) != elem_add(
                            scalar_act(s, x), scalar_act(s, y)
                        ):
                            raise _NeedsBruteForce
    if kind is Kind.GROUPLA:
        for v, j in enumerate(ix.neg):
            if j < 0:
                bad |= 1 << v
            else:
                need[v] |= 1 << j
    return need, bad, (ix.add if kind.is_la else None)


def _sort_key(mask: int):
    return (bin(mask).count("1"), [i for i in range(mask.bit_length()) if (mask >> i) & 1])


def enumerate_substructures(
    parent: StructureDef,
    flavor: Flavor = PLAIN,
    size_cap: int = ENUMERATION_LIMIT,
    kind: Kind | None = None,
) -> list:
    """Every proper nonempty subset passing :func:`is_substructure`, except
    subsets made only of zeros, in canonical order."""
    n = len(parent.carrier)
    if n > min(size_cap, ENUMERATION_LIMIT):
        raise BudgetExceeded(f"|V| = {n} exceeds the enumeration cap {min(size_cap, ENUMERATION_LIMIT)}")
    kind = kind or parent.kind
    plan = _flavor_plan(parent, flavor, kind)
    ix = indexed(parent.carrier)
    if flavor.name == "Duo" and not scalar_profile(flavor.scalars).is_additive_group:
        return []
    try:
        need = [0] * n
        bad = 0
        add = None
        for scalars, k in plan:
            nd, b, a = _requirements(ix, scalars, k)
            need = [x | y for x, y in zip(need, nd)]
            bad |= b
            add = a if a is not None else add
    except _Infeasible:
        return []
    except _NeedsBruteForce:
        return _brute_force(parent, flavor, kind)
    if flavor.name == "Pseudo":
        for i, x in enumerate(ix.elems):
            if _has_I(x):
                bad |= 1 << i
    masks = kernels.closed_subsets(n, need, bad, add, ix.zero_mask)
    masks.sort(key=_sort_key)
    return [ix.members(m) for m in masks]


def _brute_force(parent, flavor, kind) -> list:
    out = []
    elems = parent.carrier
    for r in range(1, len(elems)):
        for combo in combinations(elems, r):
            if all(x.is_zero() for x in combo):
                continue
            if is_substructure(parent, combo, flavor, kind).passed:
                out.append(list(combo))
    return out


# simplicity ---------------------------------------------------------------

@dataclass
class Grade:
    holds: bool
    certificate: str
    counterexample: object = None


@dataclass
class SimplicityReport:
    simple: Grade
    weakly_simple: Grade
    doubly_simple: Grade
    strongly_simple: Grade
    grades: list = field(default_factory=list)


def _scalar_subsets(S: ScalarSet):
    ms = S.members
    for r in range(2, len(ms)):
        for combo in combinations(ms, r):
            yield ScalarSet(combo, S.ring)


def simplicity(parent: StructureDef, size_cap: int = ENUMERATION_LIMIT) -> SimplicityReport:
    n = len(parent.carrier)
    bound = f"exhaustive over {2 ** n - 2} proper subsets"
    plain = enumerate_substructures(parent, PLAIN, size_cap)
    simple = Grade(not plain, bound if not plain else "proper substructure found", plain[0] if plain else None)

    if len(parent.scalars) > SCALAR_SUBSET_LIMIT:
        raise BudgetExceeded(f"|S| = {len(parent.scalars)} exceeds {SCALAR_SUBSET_LIMIT} for scalar-subset search")
    weak = None
    count = 0
    for t in _scalar_subsets(parent.scalars):
        count += 1
        found = enumerate_substructures(parent, SubsetScalars(t), size_cap)
        if found:
            weak = Grade(False, f"substructure over {t}", (t, found[0]))
            break
    if weak is None:
        weak = Grade(True, f"no substructure over any of {count} proper scalar subsets")

    if parent.kind.is_la:
        vs_subs = enumerate_substructures(parent, PLAIN, size_cap, kind=parent.kind.vs)
    else:
        vs_subs = plain
    if not simple.holds:
        doubly = Grade(False, "not simple", simple.counterexample)
    elif vs_subs:
        doubly = Grade(False, "proper vector-space substructure found", vs_subs[0])
    else:
        doubly = Grade(True, bound)

    if simple.holds:
        strong = Grade(True, bound + "; no proper parts exist")
    else:
        strong = Grade(False, "not simple", _find_decomposition(parent, plain) or simple.counterexample)

    names = [
        name
        for name, g in (
            ("Simple", simple),
            ("WeaklySimple", weak),
            ("DoublySimple", doubly),
            ("StronglySimple", strong),
        )
        if g.holds
    ]
    return SimplicityReport(simple, weak, doubly, strong, names)


def _find_decomposition(parent, subs, pair_cap: int = 5000):
    if not parent.kind.is_la:
        return None
    checked = 0
    for i, a in enumerate(subs):
        for b in subs[i + 1:]:
            checked += 1
            if checked > pair_cap:
                return None
            if _direct_sum_report(parent, [a, b]).passed:
                return (a, b)
    return None


# decompositions -----------------------------------------------------------

def _check_parts(parent: StructureDef, parts: Sequence[Iterable[Element]]) -> list:
    out = []
    for i, p in enumerate(parts):
        elems = canonical(p)
        if not elems or not set(elems) <= parent.carrier_set:
            raise PartNotSubstructure(f"part {i} is empty or not inside the carrier")
        if not verify(StructureDef(elems, parent.scalars, parent.kind)).passed:
            raise PartNotSubstructure(f"part {i} is not a {parent.kind.value} substructure")
        out.append(elems)
    return out


def part_sums(parts: Sequence[Sequence[Element]]) -> set:
    """Sums picking at most one element from each part (shape by shape)."""
    sums: set = set()
    for part in parts:
        fresh = set(part)
        for x in sums:
            for w in part:
                if x.shape == w.shape:
                    fresh.add(elem_add(x, w))
        sums |= fresh
    return sums


def _zero_intersections(rep: VerificationReport, axiom_id: str, parts):
    res = AxiomResult(axiom_id, True)
    for i, j in combinations(range(len(parts)), 2):
        for x in canonical(set(parts[i]) & set(parts[j])):
            if not x.is_zero():
                res.passed = False
                res.violations += 1
                res.witnesses.append(Witness((i, j, x), None, "NonzeroIntersection"))
                break
    rep.axioms.append(res)


def _cover(rep: VerificationReport, axiom_id: str, parent, reached):
    res = AxiomResult(axiom_id, True)
    for x in parent.carrier:
        if x not in reached:
            res.passed = False
            res.violations += 1
            if len(res.witnesses) < 16:
                res.witnesses.append(Witness((x,), None, "Unreachable"))
    rep.axioms.append(res)


def _direct_sum_report(parent, parts) -> VerificationReport:
    rep = VerificationReport(subject=f"direct sum of {len(parts)} parts")
    _cover(rep, "directsum.cover", parent, part_sums(parts))
    _zero_intersections(rep, "directsum.intersections", parts)
    return rep


def check_direct_sum(parent: StructureDef, parts) -> VerificationReport:
    if not parent.kind.is_la:
        raise ModeUnsupported("direct sums need a linear-algebra parent")
    return _direct_sum_report(parent, _check_parts(parent, parts))


def check_pseudo_direct_sum(parent: StructureDef, parts) -> VerificationReport:
    if not parent.kind.is_la:
        raise ModeUnsupported("pseudo direct sums need a linear-algebra parent")
    parts = _check_parts(parent, parts)
    rep = VerificationReport(subject=f"pseudo direct sum of {len(parts)} parts")
    _cover(rep, "pseudosum.cover", parent, part_sums(parts))
    distinct = AxiomResult("pseudosum.distinct", True)
    contain = AxiomResult("pseudosum.no_containment", True)
    for i, j in combinations(range(len(parts)), 2):
        a, b = set(parts[i]), set(parts[j])
        if a == b:
            distinct.passed = False
            distinct.violations += 1
            distinct.witnesses.append(Witness((i, j), None, "Duplicate"))
        elif a <= b or b <= a:
            contain.passed = False
            contain.violations += 1
            contain.witnesses.append(Witness((i, j) if a <= b else (j, i), None, "Contained"))
    rep.axioms.extend([distinct, contain])
    return rep


def check_direct_union(parent: StructureDef, parts) -> VerificationReport:
    parts = _check_parts(parent, parts)
    rep = VerificationReport(subject=f"direct union of {len(parts)} parts")
    union = set().union(*map(set, parts))
    _cover(rep, "directunion.cover", parent, union)
    _zero_intersections(rep, "directunion.intersections", parts)
    return rep
