"""Scalar-set profiling, closure under I, and axiom verification for the
six structure kinds."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .carrier import Element, Scalar, canonical, elem_add, elem_neg, ring_of, scalar_act, zero_like
from .errors import CapExceeded, RingMismatch, ShapeMismatch
from .ring import BaseRing, NeutroNumber, classify_number, NumberClass

WITNESS_CAP = 64


class Kind(enum.Enum):
    SETVS = "setvs"
    SETLA = "setla"
    SEMIVS = "semivs"
    SEMILA = "semila"
    GROUPVS = "groupvs"
    GROUPLA = "groupla"

    @property
    def is_la(self) -> bool:
        return self in (Kind.SETLA, Kind.SEMILA, Kind.GROUPLA)

    @property
    def flavor(self) -> str:
        return {"set": "set", "sem": "semigroup", "gro": "group"}[self.value[:3]]

    @property
    def vs(self) -> "Kind":
        return {Kind.SETLA: Kind.SETVS, Kind.SEMILA: Kind.SEMIVS, Kind.GROUPLA: Kind.GROUPVS}.get(self, self)

    @property
    def la(self) -> "Kind":
        return {Kind.SETVS: Kind.SETLA, Kind.SEMIVS: Kind.SEMILA, Kind.GROUPVS: Kind.GROUPLA}.get(self, self)

    def with_flavor(self, flavor: str) -> "Kind":
        base = {"set": Kind.SETVS, "semigroup": Kind.SEMIVS, "group": Kind.GROUPVS}[flavor]
        return base.la if self.is_la else base


ALL_KINDS = tuple(Kind)


class ScalarSet:
    """Finite set of scalars over one ring, kept in canonical order."""

    __slots__ = ("ring", "members", "_set")

    def __init__(self, members: Iterable[NeutroNumber], ring: BaseRing | None = None):
        ms = sorted(set(members), key=NeutroNumber.sort_key)
        if ring is None:
            if not ms:
                raise ValueError("empty scalar set needs an explicit ring")
            ring = ms[0].ring
        for m in ms:
            if m.ring is not ring:
                raise RingMismatch(f"scalar {m} is over {m.ring}, expected {ring}")
        self.ring = ring
        self.members = tuple(ms)
        self._set = frozenset(ms)

    def __contains__(self, x):
        return x in self._set

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        return isinstance(other, ScalarSet) and self.ring is other.ring and self._set == other._set

    def __hash__(self):
        return hash(self._set)

    def issubset(self, other: "ScalarSet") -> bool:
        return self.ring is other.ring and self._set <= other._set

    def __str__(self):
        return "{" + ", ".join(str(m) for m in self.members) + "}"

    def __repr__(self):
        return f"ScalarSet({self})"


class StructureDef:
    """A finite carrier, a scalar set and the claimed kind."""

    __slots__ = ("carrier", "scalars", "kind", "_set", "_hash")

    def __init__(self, carrier: Iterable[Element], scalars: ScalarSet, kind: Kind = Kind.SETVS):
        elems = canonical(carrier)
        if not elems:
            raise ValueError("carrier must be nonempty")
        ring = ring_of(elems)
        if ring is not scalars.ring:
            raise RingMismatch(f"carrier over {ring} but scalars over {scalars.ring}")
        self.carrier = tuple(elems)
        self.scalars = scalars
        self.kind = Kind(kind)
        self._set = frozenset(elems)
        self._hash = None

    @property
    def ring(self) -> BaseRing:
        return self.scalars.ring

    def __contains__(self, x):
        return x in self._set

    def __len__(self):
        return len(self.carrier)

    @property
    def carrier_set(self) -> frozenset:
        return self._set

    def with_kind(self, kind: Kind) -> "StructureDef":
        return StructureDef(self.carrier, self.scalars, kind)

    def with_scalars(self, scalars: ScalarSet) -> "StructureDef":
        return StructureDef(self.carrier, scalars, self.kind)

    def __eq__(self, other):
        return (
            isinstance(other, StructureDef)
            and self.kind is other.kind
            and self.scalars == other.scalars
            and self._set == other._set
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.kind, self.scalars, self._set))
        return self._hash

    def __repr__(self):
        return f"StructureDef({self.kind.value}, |V|={len(self.carrier)}, S={self.scalars})"


class Witness(NamedTuple):
    args: tuple
    result: object = None
    tag: str = "Violation"


@dataclass
class AxiomResult:
    axiom: str
    passed: bool
    witnesses: list = field(default_factory=list)
    violations: int = 0
    note: str = ""

    @property
    def witness(self) -> Witness | None:
        return self.witnesses[0] if self.witnesses else None


@dataclass
class VerificationReport:
    subject: str
    axioms: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    flags: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.axioms)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def failures(self) -> list:
        return [a for a in self.axioms if not a.passed]

    def axiom(self, axiom_id: str) -> AxiomResult | None:
        for a in self.axioms:
            if a.axiom == axiom_id:
                return a
        return None

    def extend(self, other: "VerificationReport", prefix: str = ""):
        for a in other.axioms:
            self.axioms.append(
                AxiomResult(prefix + a.axiom, a.passed, list(a.witnesses), a.violations, a.note)
            )
        self.warnings.extend(w for w in other.warnings if w not in self.warnings)
        self.flags.extend(f for f in other.flags if f not in self.flags)


class _Collector:
    """Accumulates violations for one axiom."""

    def __init__(self, axiom_id: str, note: str = ""):
        self.result = AxiomResult(axiom_id, True, note=note)

    def fail(self, args, result=None, tag="Violation"):
        r = self.result
        r.passed = False
        r.violations += 1
        if len(r.witnesses) < WITNESS_CAP:
            r.witnesses.append(Witness(tuple(args), result, tag))


# scalar sets ---------------------------------------------------------------

@dataclass(frozen=True)
class ScalarProfile:
    contains_zero: bool
    contains_one: bool
    contains_I: bool
    closed_under_add: bool
    is_additive_semigroup: bool
    is_additive_group: bool
    is_pure_neutrosophic: bool
    closure_witness: tuple | None = None
    negation_witness: NeutroNumber | None = None


def scalar_profile(s: ScalarSet) -> ScalarProfile:
    ring = s.ring
    zero, one, ind = NeutroNumber(ring, 0, 0), NeutroNumber(ring, 1, 0), NeutroNumber(ring, 0, 1)
    closure_witness = None
    for i, x in enumerate(s.members):
        for y in s.members[i:]:
            if x + y not in s:
                closure_witness = (x, y, x + y)
                break
        if closure_witness:
            break
    closed = closure_witness is None
    negation_witness = next((x for x in s.members if -x not in s), None)
    # associativity is inherited from the ring, so closure is the whole test
    semigroup = closed
    group = semigroup and zero in s and negation_witness is None
    pure = all(m.b != 0 for m in s.members if not m.is_zero())
    return ScalarProfile(
        contains_zero=zero in s,
        contains_one=one in s,
        contains_I=ind in s,
        closed_under_add=closed,
        is_additive_semigroup=semigroup,
        is_additive_group=group,
        is_pure_neutrosophic=pure,
        closure_witness=closure_witness,
        negation_witness=negation_witness,
    )


# closure and magma profile -------------------------------------------------

def _op(name: str):
    if name in ("add", "+"):
        return lambda x, y: x + y
    if name in ("mul", "*", "x"):
        return lambda x, y: x * y
    raise ValueError(f"unknown operation {name!r}")


def neutro_closure(base: Iterable[NeutroNumber], op: str, ring: BaseRing, cap: int = 10_000) -> list:
    """Smallest ``op``-closed set containing ``base`` and I, canonically sorted."""
    f = _op(op)
    members = set(base)
    for m in members:
        if m.ring is not ring:
            raise RingMismatch(f"{m} is over {m.ring}, expected {ring}")
    members.add(NeutroNumber(ring, 0, 1))
    frontier = list(members)
    while frontier:
        fresh = []
        snapshot = list(members)
        for x in frontier:
            for y in snapshot:
                z = f(x, y)
                if z not in members:
                    members.add(z)
                    fresh.append(z)
                    if len(members) > cap:
                        raise CapExceeded(f"closure exceeded {cap} elements")
        frontier = fresh
    return sorted(members, key=NeutroNumber.sort_key)


class MagmaClass(enum.Enum):
    NOT_CLOSED = "NotClosed"
    SEMIGROUP = "Semigroup"
    MONOID = "Monoid"
    GROUP = "Group"


@dataclass(frozen=True)
class MagmaProfile:
    klass: MagmaClass
    witness: tuple = ()
    identity: NeutroNumber | None = None


def magma_profile(elements: Iterable[NeutroNumber], op: str, ring: BaseRing) -> MagmaProfile:
    f = _op(op)
    members = sorted(set(elements), key=NeutroNumber.sort_key)
    present = set(members)
    for x in members:
        if x.ring is not ring:
            raise RingMismatch(f"{x} is over {x.ring}, expected {ring}")
    for i, x in enumerate(members):
        for y in members[i:]:
            z = f(x, y)
            if z not in present:
                return MagmaProfile(MagmaClass.NOT_CLOSED, (x, y, z))
    # both operations are commutative and associative in the ring
    identity = next((e for e in members if all(f(e, x) == x for x in members)), None)
    if identity is None:
        return MagmaProfile(MagmaClass.SEMIGROUP, ())
    for x in members:
        if not any(f(x, y) == identity for y in members):
            return MagmaProfile(MagmaClass.MONOID, (x,), identity)
    return MagmaProfile(MagmaClass.GROUP, (), identity)


# mixedness ----------------------------------------------------------------

class Mixedness(enum.Enum):
    MIXED = "MixedNeutrosophic"
    PURE = "PureNeutrosophic"
    NON = "NonNeutrosophic"


def mixedness(carrier: Iterable[Element]) -> Mixedness:
    neutro = real = False
    for x in carrier:
        for e in x.entries:
            c = classify_number(e)
            if c is NumberClass.PURE:
                neutro = True
            elif c is NumberClass.REAL:
                real = True
    if not neutro:
        return Mixedness.NON
    return Mixedness.MIXED if real else Mixedness.PURE


# verification -------------------------------------------------------------

def _check_scalar_closure(prefix, kind_name, s: ScalarSet, require_group: bool) -> list:
    out = []
    ring = s.ring
    zero = NeutroNumber(ring, 0, 0)
    c = _Collector(f"{prefix}.scalar_{kind_name}")
    for i, x in enumerate(s.members):
        for y in s.members[i:]:
            if x + y not in s:
                c.fail((x, y), x + y)
    if zero not in s:
        c.fail((), zero, "MissingZero")
    if require_group:
        for x in s.members:
            if -x not in s:
                c.fail((x,), -x, "MissingNegative")
    out.append(c.result)
    return out


def _check_action(prefix, V, S) -> AxiomResult:
    c = _Collector(f"{prefix}.closure")
    for s in S.members:
        for v in V.carrier:
            sv = scalar_act(s, v)
            if sv not in V:
                c.fail((s, v), sv)
    return c.result


def _check_zero(prefix, V) -> AxiomResult:
    c = _Collector(f"{prefix}.zero")
    seen = set()
    for v in V.carrier:
        z = zero_like(v)
        if z in seen:
            continue
        seen.add(z)
        if z not in V:
            c.fail((v,), z)
    return c.result


def _check_scalar_distrib(prefix, V, S) -> AxiomResult:
    c = _Collector(f"{prefix}.distrib")
    ms = S.members
    for i, s1 in enumerate(ms):
        for s2 in ms[i:]:
            for v in V.carrier:
                lhs = scalar_act(s1 + s2, v)
                rhs = elem_add(scalar_act(s1, v), scalar_act(s2, v))
                if lhs != rhs:
                    c.fail((s1, s2, v), (lhs, rhs))
    return c.result


def _check_add_closure(axiom_id, V) -> AxiomResult:
    c = _Collector(axiom_id)
    elems = V.carrier
    for i, v in enumerate(elems):
        for w in elems[i:]:
            try:
                t = elem_add(v, w)
            except ShapeMismatch:
                c.fail((v, w), None, "ShapeMismatch")
                continue
            if t not in V:
                c.fail((v, w), t)
    return c.result


def _check_vector_distrib(axiom_id, V, S) -> AxiomResult:
    c = _Collector(axiom_id)
    elems = V.carrier
    for s in S.members:
        for i, v in enumerate(elems):
            for w in elems[i:]:
                if v.shape != w.shape:
                    continue
                lhs = scalar_act(s, elem_add(v, w))
                rhs = elem_add(scalar_act(s, v), scalar_act(s, w))
                if lhs != rhs:
                    c.fail((s, v, w), (lhs, rhs))
    return c.result


def _check_carrier_group(V) -> AxiomResult:
    c = _Collector("groupla.carrier_group")
    sub = _check_add_closure("groupla.carrier_group", V)
    for w in sub.witnesses:
        c.fail(w.args, w.result, w.tag)
    for v in V.carrier:
        z = zero_like(v)
        if z not in V:
            c.fail((v,), z, "MissingZero")
        n = elem_neg(v)
        if n not in V:
            c.fail((v,), n, "MissingNegative")
    return c.result


def verify(structure: StructureDef) -> VerificationReport:
    """Exhaustively check every axiom of ``structure.kind``."""
    V, S, kind = structure, structure.scalars, structure.kind
    rep = VerificationReport(subject=f"{kind.value} |V|={len(V)} |S|={len(S)}")
    if len(S) < 2:
        rep.warnings.append(f"scalar set has {len(S)} member(s); at least 2 expected")
    if kind in (Kind.SETVS, Kind.SETLA):
        rep.axioms.append(_check_action("setvs", V, S))
        if kind is Kind.SETLA:
            rep.axioms.append(_check_add_closure("setla.add_closure", V))
    elif kind in (Kind.SEMIVS, Kind.SEMILA):
        rep.axioms.extend(_check_scalar_closure("semivs", "semigroup", S, False))
        rep.axioms.append(_check_action("semivs", V, S))
        rep.axioms.append(_check_zero("semivs", V))
        rep.axioms.append(_check_scalar_distrib("semivs", V, S))
        if kind is Kind.SEMILA:
            rep.axioms.append(_check_add_closure("semila.add_closure", V))
            rep.axioms.append(_check_vector_distrib("semila.distrib", V, S))
    else:
        rep.axioms.extend(_check_scalar_closure("groupvs", "group", S, True))
        rep.axioms.append(_check_action("groupvs", V, S))
        rep.axioms.append(_check_zero("groupvs", V))
        if kind is Kind.GROUPLA:
            rep.axioms.append(_check_carrier_group(V))
    return rep


def verify_as(carrier: Iterable[Element], scalars: ScalarSet, kind: Kind) -> VerificationReport:
    return verify(StructureDef(carrier, scalars, kind))


def classify(carrier: Sequence[Element], scalars: ScalarSet) -> list:
    """Kinds for which the carrier passes, in declaration order."""
    passed = [k for k in ALL_KINDS if verify(StructureDef(carrier, scalars, k)).passed]
    for k in passed:
        assert k.vs in passed, f"{k.value} passed without {k.vs.value}"
    return passed


def scalar_element(ring: BaseRing, a=0, b=0) -> Scalar:
    return Scalar(NeutroNumber(ring, a, b))
