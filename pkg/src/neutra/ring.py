"""Exact base rings extended by the idempotent indeterminate I, and the
fuzzy value lattice on pairs of rationals in [0, 1].

Numbers are ``a + bI`` with ``I*I = I``.  Everything is exact: integers,
:class:`fractions.Fraction`, or residues modulo ``n``.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Union

from .errors import RingMismatch

Coefficient = Union[int, Fraction]


class BaseRing:
    """One of Z, Q or Z_n.  Instances are interned so ``is`` works too."""

    __slots__ = ("kind", "modulus")
    _cache: dict = {}

    def __new__(cls, kind: str, modulus: int | None = None):
        if kind not in ("Z", "Q", "Zn"):
            raise ValueError(f"unknown ring kind {kind!r}")
        if kind == "Zn":
            if modulus is None or int(modulus) < 2:
                raise ValueError("modular ring needs a modulus >= 2")
            modulus = int(modulus)
        else:
            modulus = None
        key = (kind, modulus)
        ring = cls._cache.get(key)
        if ring is None:
            ring = object.__new__(cls)
            object.__setattr__(ring, "kind", kind)
            object.__setattr__(ring, "modulus", modulus)
            cls._cache[key] = ring
        return ring

    def __setattr__(self, name, value):
        raise AttributeError("BaseRing is immutable")

    def __reduce__(self):
        return (BaseRing, (self.kind, self.modulus))

    @property
    def is_modular(self) -> bool:
        return self.kind == "Zn"

    def canon(self, x) -> Coefficient:
        """Canonical representative of ``x`` in this ring."""
        if self.kind == "Q":
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an element of {self}")
            x = x.numerator
        elif not isinstance(x, int):
            raise TypeError(f"cannot coerce {x!r} into {self}")
        if self.kind == "Zn":
            return x % self.modulus
        return x

    def elements(self):
        """All residues, only for Z_n."""
        if not self.is_modular:
            raise ValueError(f"{self} is infinite")
        return range(self.modulus)

    def __repr__(self):
        return f"BaseRing({self.kind!r}, {self.modulus!r})"

    def __str__(self):
        return f"Zn {self.modulus}" if self.kind == "Zn" else self.kind


Z = BaseRing("Z")
Q = BaseRing("Q")


def Zn(n: int) -> BaseRing:
    return BaseRing("Zn", n)


def _coef_str(c) -> str:
    return str(c)


def format_pair(a, b) -> str:
    """Render ``a + bI`` in the literal syntax accepted by the parser."""
    if b == 0:
        return _coef_str(a)
    if b == 1:
        ipart = "I"
    elif b == -1:
        ipart = "-I"
    else:
        ipart = f"{_coef_str(b)}I"
    if a == 0:
        return ipart
    if ipart.startswith("-"):
        return f"{_coef_str(a)}{ipart}"
    return f"{_coef_str(a)}+{ipart}"


class NeutroNumber:
    """``a + bI`` over a :class:`BaseRing`."""

    __slots__ = ("ring", "a", "b", "_hash")

    def __init__(self, ring: BaseRing, a=0, b=0):
        self.ring = ring
        self.a = ring.canon(a)
        self.b = ring.canon(b)
        self._hash = None

    @classmethod
    def _make(cls, ring, a, b):
        # caller guarantees a, b are already reduced
        obj = object.__new__(cls)
        obj.ring = ring
        obj.a = a
        obj.b = b
        obj._hash = None
        return obj

    def _check(self, other):
        if not isinstance(other, NeutroNumber):
            raise TypeError(f"expected a NeutroNumber, got {type(other).__name__}")
        if other.ring is not self.ring:
            raise RingMismatch(f"cannot combine {self.ring} with {other.ring}")

    def __add__(self, other):
        self._check(other)
        m = self.ring.modulus
        if m:
            return NeutroNumber._make(self.ring, (self.a + other.a) % m, (self.b + other.b) % m)
        return NeutroNumber._make(self.ring, self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        m = self.ring.modulus
        if m:
            return NeutroNumber._make(self.ring, -self.a % m, -self.b % m)
        return NeutroNumber._make(self.ring, -self.a, -self.b)

    def __mul__(self, other):
        self._check(other)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        a = a1 * a2
        b = a1 * b2 + b1 * a2 + b1 * b2
        m = self.ring.modulus
        if m:
            return NeutroNumber._make(self.ring, a % m, b % m)
        return NeutroNumber._make(self.ring, a, b)

    def __eq__(self, other):
        if not isinstance(other, NeutroNumber):
            return NotImplemented
        return self.ring is other.ring and self.a == other.a and self.b == other.b

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.ring.kind, self.ring.modulus, self.a, self.b))
        return h

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def sort_key(self):
        return (self.a, self.b)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"NeutroNumber({self.ring}, {format_pair(self.a, self.b)})"

    def __str__(self):
        return format_pair(self.a, self.b)


def num(ring: BaseRing, a=0, b=0) -> NeutroNumber:
    return NeutroNumber(ring, a, b)


def indeterminate(ring: BaseRing) -> NeutroNumber:
    return NeutroNumber(ring, 0, 1)


def neutro_add(x: NeutroNumber, y: NeutroNumber) -> NeutroNumber:
    return x + y


def neutro_mul(x: NeutroNumber, y: NeutroNumber) -> NeutroNumber:
    return x * y


class NumberClass(enum.Enum):
    PURE = "PureNeutrosophic"
    REAL = "RealOnly"
    ZERO = "Zero"


def classify_number(x: NeutroNumber) -> NumberClass:
    if x.b != 0:
        return NumberClass.PURE
    if x.a == 0:
        return NumberClass.ZERO
    return NumberClass.REAL


class Ordering(enum.Enum):
    LE = "LE"
    GT = "GT"
    INCOMPARABLE = "Incomparable"


class FuzzyNeutroValue:
    """``a + bI`` with both parts exact rationals in [0, 1]."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        a, b = Fraction(a), Fraction(b)
        if not (0 <= a <= 1 and 0 <= b <= 1):
            raise ValueError(f"fuzzy value {format_pair(a, b)} outside [0,1]")
        self.a = a
        self.b = b

    def __eq__(self, other):
        if not isinstance(other, FuzzyNeutroValue):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash(("fuzzy", self.a, self.b))

    def __repr__(self):
        return f"FuzzyNeutroValue({self})"

    def __str__(self):
        return format_pair(self.a, self.b)


FUZZY_TOP = FuzzyNeutroValue(1, 1)
FUZZY_ONE = FuzzyNeutroValue(1, 0)
FUZZY_I = FuzzyNeutroValue(0, 1)


def fuzzy_min(u: FuzzyNeutroValue, v: FuzzyNeutroValue) -> FuzzyNeutroValue:
    return FuzzyNeutroValue(min(u.a, v.a), min(u.b, v.b))


def fuzzy_leq(u: FuzzyNeutroValue, v: FuzzyNeutroValue) -> Ordering:
    if u.a <= v.a and u.b <= v.b:
        return Ordering.LE
    if v.a <= u.a and v.b <= u.b:
        return Ordering.GT
    return Ordering.INCOMPARABLE
