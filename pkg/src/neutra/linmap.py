"""Linear maps between finite structures given as explicit tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from . import kernels
from .algebra import Kind, StructureDef, VerificationReport, _Collector, verify
from .carrier import Element, Scalar, canonical, elem_add, scalar_act
from .errors import (
    BudgetExceeded,
    InverseNotLinear,
    NotInvertible,
    NotProperSubset,
    NotTotal,
    PrerequisiteFailed,
    ScalarSetMismatch,
    SubspaceInvalid,
)
from .ring import NeutroNumber
from .substructure import PLAIN, enumerate_substructures, is_substructure
from .tables import indexed

MAP_BUDGET = 10**6


class MapTable:
    """Total function from the domain carrier to the codomain carrier."""

    def __init__(self, domain: StructureDef, codomain: StructureDef, graph: Mapping[Element, Element]):
        graph = dict(graph)
        missing = [v for v in domain.carrier if v not in graph]
        if missing:
            raise NotTotal(f"no image given for {missing[0]}")
        extra = [v for v in graph if v not in domain]
        if extra:
            raise NotTotal(f"{extra[0]} is not in the domain")
        outside = [w for w in graph.values() if w not in codomain]
        if outside:
            raise NotTotal(f"image {outside[0]} is not in the codomain")
        self.domain = domain
        self.codomain = codomain
        self.graph = {v: graph[v] for v in domain.carrier}

    def __call__(self, v: Element) -> Element:
        return self.graph[v]

    def images(self) -> tuple:
        return tuple(self.graph[v] for v in self.domain.carrier)

    def image(self) -> list:
        return canonical(self.graph.values())

    @property
    def is_operator(self) -> bool:
        return self.domain.carrier_set == self.codomain.carrier_set

    @property
    def is_zero_map(self) -> bool:
        return all(w.is_zero() for w in self.graph.values())

    def __eq__(self, other):
        return (
            isinstance(other, MapTable)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.graph == other.graph
        )

    def __hash__(self):
        return hash(self.images())

    def __repr__(self):
        body = "; ".join(f"{v} -> {w}" for v, w in self.graph.items())
        return f"MapTable({{{body}}})"


def _check_scalars(domain: StructureDef, codomain: StructureDef):
    if domain.scalars != codomain.scalars:
        raise ScalarSetMismatch(f"domain scalars {domain.scalars} differ from codomain scalars {codomain.scalars}")


def verify_map(m: MapTable, kind: Kind | None = None) -> VerificationReport:
    """Check T(s v) = s T(v), T(I) = I when I is in the domain, and the
    additive law for linear-algebra kinds."""
    _check_scalars(m.domain, m.codomain)
    kind = Kind(kind) if kind else m.domain.kind
    D, S, T = m.domain, m.domain.scalars, m.graph
    rep = VerificationReport(subject=f"map {kind.value} |V|={len(D)} -> |W|={len(m.codomain)}")
    if m.is_zero_map:
        rep.flags.append("ZeroMap")

    c = _Collector("map.scalar_commute")
    for s in S:
        for v in D.carrier:
            sv = scalar_act(s, v)
            if sv not in D:
                c.fail((s, v), sv, "OutsideDomain")
                continue
            lhs, rhs = T[sv], scalar_act(s, T[v])
            if lhs != rhs:
                c.fail((s, v), (lhs, rhs))
    rep.axioms.append(c.result)

    ind = Scalar(NeutroNumber(D.ring, 0, 1))
    c = _Collector("map.fixes_I")
    if ind not in D:
        c.result.note = "skipped: I is not in the domain"
    elif m.is_zero_map:
        c.result.note = "skipped: zero map"
    elif T[ind] != ind:
        c.fail((ind,), T[ind])
    rep.axioms.append(c.result)

    if kind in (Kind.SETLA, Kind.GROUPLA):
        c = _Collector("map.additive")
        elems = D.carrier
        for i, x in enumerate(elems):
            for y in elems[i:]:
                if x.shape != y.shape:
                    continue
                z = elem_add(x, y)
                if z not in D:
                    c.fail((x, y), z, "OutsideDomain")
                    continue
                tx, ty = T[x], T[y]
                if tx.shape != ty.shape:
                    c.fail((x, y), None, "ShapeMismatch")
                elif T[z] != elem_add(tx, ty):
                    c.fail((x, y), (T[z], elem_add(tx, ty)))
        rep.axioms.append(c.result)
    elif kind is Kind.SEMILA:
        c = _Collector("map.combined")
        for a in S:
            for v in D.carrier:
                av = scalar_act(a, v)
                for u in D.carrier:
                    if av.shape != u.shape:
                        continue
                    z = elem_add(av, u)
                    if z not in D:
                        c.fail((a, v, u), z, "OutsideDomain")
                        continue
                    tv, tu = scalar_act(a, T[v]), T[u]
                    if tv.shape != tu.shape:
                        c.fail((a, v, u), None, "ShapeMismatch")
                    elif T[z] != elem_add(tv, tu):
                        c.fail((a, v, u), (T[z], elem_add(tv, tu)))
        rep.axioms.append(c.result)
    return rep


def enumerate_maps(domain: StructureDef, codomain: StructureDef, kind: Kind | None = None, cap: int = MAP_BUDGET) -> list:
    """Every total table passing :func:`verify_map`, in lexicographic order
    of the image sequence."""
    _check_scalars(domain, codomain)
    kind = Kind(kind) if kind else domain.kind
    nd, nc = len(domain), len(codomain)
    if nc ** nd > cap:
        raise BudgetExceeded(f"{nc}^{nd} tables exceed the budget {cap}")
    dx, cx = indexed(domain.carrier), indexed(codomain.carrier)
    S = domain.scalars.members
    constraints = [[] for _ in range(nd)]

    def add_rec(rec, *positions):
        constraints[max(positions)].append(rec)

    for si, s in enumerate(S):
        for v, z in enumerate(dx.act_row(s)):
            if z < 0:
                return []
            add_rec((0, z, si, v, -1), z, v)
    cod_add = None
    if kind in (Kind.SETLA, Kind.GROUPLA):
        cod_add = cx.add
        dadd = dx.add
        for x in range(nd):
            for y in range(x, nd):
                z = dadd[x * nd + y]
                if z == -2:
                    continue
                if z < 0:
                    return []
                add_rec((1, z, -1, x, y), z, x, y)
    elif kind is Kind.SEMILA:
        cod_add = cx.add
        dadd = dx.add
        for si, s in enumerate(S):
            row = dx.act_row(s)
            for v in range(nd):
                av = row[v]
                for u in range(nd):
                    z = dadd[av * nd + u]
                    if z == -2:
                        continue
                    if z < 0:
                        return []
                    add_rec((2, z, si, v, u), z, v, u)
    tables = kernels.enumerate_maps(nd, nc, cx.act_table(S), cod_add, constraints, [-1] * nd)
    ind = Scalar(NeutroNumber(domain.ring, 0, 1))
    ipos = dx.index.get(ind)
    out = []
    for images in tables:
        graph = {dx.elems[i]: cx.elems[j] for i, j in enumerate(images)}
        if ipos is not None and graph[ind] != ind and not all(w.is_zero() for w in graph.values()):
            continue
        out.append(MapTable(domain, codomain, graph))
    return out


@dataclass
class PreservationProfile:
    grade: str
    preserved: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    evidence: object = None


def _image_is_subspace(m: MapTable, P) -> tuple:
    image = canonical(m.graph[p] for p in P)
    if all(x.is_zero() for x in image):
        return False, image, "zero-only image"
    rep = verify(StructureDef(image, m.codomain.scalars, m.codomain.kind))
    if not rep.passed:
        bad = rep.failures()[0]
        return False, image, f"{bad.axiom} fails at {bad.witness.args if bad.witness else ()}"
    return True, image, ""


def preservation_profile(m: MapTable) -> PreservationProfile:
    subs = enumerate_substructures(m.domain, PLAIN)
    preserved, failures = [], []
    for P in subs:
        ok, image, why = _image_is_subspace(m, P)
        if ok:
            preserved.append((P, image))
        else:
            failures.append((P, image, why))
    if preserved and not failures:
        grade = "Strong"
    elif preserved:
        grade = "Weak"
    else:
        grade = "None"
    evidence = preserved[0] if preserved else failures
    return PreservationProfile(grade, preserved, failures, evidence)


def invert_map(m: MapTable, kind: Kind | None = None) -> MapTable:
    seen: dict = {}
    for v, w in m.graph.items():
        if w in seen:
            raise NotInvertible(f"{seen[w]} and {v} both map to {w}", (seen[w], v, w))
        seen[w] = v
    for w in m.codomain.carrier:
        if w not in seen:
            raise NotInvertible(f"{w} has no preimage", (w,))
    inverse = MapTable(m.codomain, m.domain, seen)
    rep = verify_map(inverse, kind or m.codomain.kind)
    if not rep.passed:
        raise InverseNotLinear("reversed table fails the map axioms", rep)
    return inverse


def compose(outer: MapTable, inner: MapTable) -> MapTable:
    return MapTable(inner.domain, outer.codomain, {v: outer(inner(v)) for v in inner.domain.carrier})


def is_projection_onto(m: MapTable, W) -> bool:
    """True when every image lies in W; idempotence is not required."""
    if not m.is_operator:
        raise SubspaceInvalid("projections are operators: domain and codomain must agree")
    W = canonical(W)
    try:
        ok = is_substructure(m.domain, W, PLAIN).passed
    except NotProperSubset as exc:
        raise SubspaceInvalid(str(exc)) from exc
    if not ok:
        raise SubspaceInvalid("W is not a substructure of the domain")
    rep = verify_map(m)
    if not rep.passed:
        raise PrerequisiteFailed("map fails verification", rep)
    ws = set(W)
    return all(w in ws for w in m.graph.values())
