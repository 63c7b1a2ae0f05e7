"""Carrier elements: scalars, tuples, matrices and polynomials whose
entries are :class:`~neutra.ring.NeutroNumber` values over one ring."""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from .errors import NotAPolynomial, RingMismatch, ShapeMismatch
from .ring import BaseRing, NeutroNumber

_TAG_ORDER = {"scalar": 0, "tuple": 1, "matrix": 2, "poly": 3}


class Shape(NamedTuple):
    tag: str
    dims: tuple = ()

    def __str__(self):
        if self.tag == "tuple":
            return f"tuple[{self.dims[0]}]"
        if self.tag == "matrix":
            return f"matrix[{self.dims[0]}x{self.dims[1]}]"
        return self.tag


SCALAR_SHAPE = Shape("scalar")
POLY_SHAPE = Shape("poly")


class Element:
    """Base for the four carrier shapes; immutable and hashable."""

    __slots__ = ("ring", "entries", "_hash")
    tag = ""

    def _init(self, ring: BaseRing, entries: tuple):
        for e in entries:
            if e.ring is not ring:
                raise RingMismatch(f"entry {e} is over {e.ring}, expected {ring}")
        self.ring = ring
        self.entries = entries
        self._hash = None

    @property
    def shape(self) -> Shape:
        raise NotImplementedError

    def _rebuild(self, entries: tuple) -> "Element":
        raise NotImplementedError

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return (
            self.tag == other.tag
            and self.ring is other.ring
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.tag, self.shape.dims, self.entries))
        return h

    def sort_key(self):
        return (_TAG_ORDER[self.tag], self.shape.dims, tuple(e.sort_key() for e in self.entries))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class Scalar(Element):
    __slots__ = ()
    tag = "scalar"

    def __init__(self, value: NeutroNumber):
        self._init(value.ring, (value,))

    @property
    def value(self) -> NeutroNumber:
        return self.entries[0]

    @property
    def shape(self):
        return SCALAR_SHAPE

    def _rebuild(self, entries):
        return Scalar(entries[0])

    def __str__(self):
        return str(self.entries[0])


class Tuple(Element):
    __slots__ = ("_shape",)
    tag = "tuple"

    def __init__(self, entries: Iterable[NeutroNumber], ring: BaseRing | None = None):
        entries = tuple(entries)
        if not entries:
            raise ValueError("tuples need at least one entry")
        self._init(ring or entries[0].ring, entries)
        self._shape = Shape("tuple", (len(entries),))

    @property
    def shape(self):
        return self._shape

    def _rebuild(self, entries):
        return Tuple(entries, self.ring)

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


class Matrix(Element):
    __slots__ = ("_shape",)
    tag = "matrix"

    def __init__(self, rows: Sequence[Sequence[NeutroNumber]], ring: BaseRing | None = None):
        rows = [tuple(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrices need at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeMismatch("matrix rows differ in length")
        flat = tuple(e for r in rows for e in r)
        self._init(ring or flat[0].ring, flat)
        self._shape = Shape("matrix", (len(rows), width))

    @property
    def shape(self):
        return self._shape

    @property
    def rows(self):
        r, c = self._shape.dims
        return [self.entries[i * c:(i + 1) * c] for i in range(r)]

    def _rebuild(self, entries):
        r, c = self._shape.dims
        return Matrix([entries[i * c:(i + 1) * c] for i in range(r)], self.ring)

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.rows) + "]"


class Poly(Element):
    """Coefficients ascending by degree; trailing zeros are dropped."""

    __slots__ = ()
    tag = "poly"

    def __init__(self, coefficients: Iterable[NeutroNumber], ring: BaseRing):
        coeffs = list(coefficients)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self._init(ring, tuple(coeffs))

    @property
    def shape(self):
        return POLY_SHAPE

    def _rebuild(self, entries):
        return Poly(entries, self.ring)

    def __str__(self):
        return "poly(" + ", ".join(str(e) for e in self.entries) + ")"


def shape_of(x: Element) -> Shape:
    return x.shape


def _same_ring(x: Element, y: Element):
    if x.ring is not y.ring:
        raise RingMismatch(f"cannot combine {x.ring} with {y.ring}")


def elem_add(x: Element, y: Element) -> Element:
    _same_ring(x, y)
    if x.shape != y.shape:
        raise ShapeMismatch(f"cannot add {x.shape} and {y.shape}")
    if x.tag == "poly":
        n = max(len(x.entries), len(y.entries))
        zero = NeutroNumber._make(x.ring, x.ring.canon(0), x.ring.canon(0))
        xs = x.entries + (zero,) * (n - len(x.entries))
        ys = y.entries + (zero,) * (n - len(y.entries))
        return Poly([p + q for p, q in zip(xs, ys)], x.ring)
    return x._rebuild(tuple(p + q for p, q in zip(x.entries, y.entries)))


def elem_neg(x: Element) -> Element:
    return x._rebuild(tuple(-e for e in x.entries))


def scalar_act(s: NeutroNumber, x: Element) -> Element:
    if s.ring is not x.ring:
        raise RingMismatch(f"scalar over {s.ring} acting on element over {x.ring}")
    return x._rebuild(tuple(s * e for e in x.entries))


def zero_like(x: Element) -> Element:
    if x.tag == "poly":
        return Poly((), x.ring)
    zero = NeutroNumber(x.ring, 0, 0)
    return x._rebuild((zero,) * len(x.entries))


def degree(p: Element) -> int | None:
    if not isinstance(p, Poly):
        raise NotAPolynomial(f"{p} is not a polynomial")
    return len(p.entries) - 1 if p.entries else None


def canonical(elements: Iterable[Element]) -> list:
    """Deduplicated elements in canonical order."""
    return sorted(set(elements), key=Element.sort_key)


def ring_of(elements: Iterable[Element]) -> BaseRing | None:
    ring = None
    for e in elements:
        if ring is None:
            ring = e.ring
        elif e.ring is not ring:
            raise RingMismatch(f"carrier mixes {ring} and {e.ring}")
    return ring
