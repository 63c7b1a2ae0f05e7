"""Parser for the structure-description language.

A file is a sequence of ``;``-terminated statements; ``#`` starts a
comment and ``#! erratum: text`` records a correction note::

    ring R = Zn 12;
    set V = {0, 2, 4, 6, 6I, 8I, 10I};
    set S = {0, 3};
    structure M = setvs(V over S);
    map T : M -> M { 0 -> 0; 2 -> 2; ... }
    fuzzy eta : M { 0 -> 1; 2 -> 1/2+I; ... }
    bistructure B : semivs = (V1 over S1) ++ (V2 over S2);
    bifuzzy E : B = eta1 ++ eta2;
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Kind, ScalarSet, StructureDef
from .bistructure import BISCALARS, SHARED, BiFuzzyMap, BiStructureDef
from .carrier import Element, Matrix, Poly, Scalar, Tuple, canonical
from .errors import NeutraError, NotTotal, RingMismatch, WorkspaceError
from .fuzzy import FuzzyMap
from .linmap import MapTable
from .ring import Q, Z, BaseRing, FuzzyNeutroValue, NeutroNumber, Zn

KINDS = {k.value: k for k in Kind}
KEYWORDS = {"ring", "set", "structure", "bistructure", "map", "fuzzy", "bifuzzy", "over", "in", "poly", "tuples"}


class ParseError(NeutraError):
    def __init__(self, line: int, column: int, message: str, expected=()):
        self.line = line
        self.column = column
        self.message = message
        self.expected = tuple(sorted(set(expected)))
        super().__init__(str(self))

    def __str__(self):
        text = f"error:{self.line}:{self.column}: {self.message}"
        if self.expected:
            text += " (expected " + ", ".join(self.expected) + ")"
        return text


class UnknownName(WorkspaceError):
    pass


@dataclass
class Token:
    kind: str
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<erratum>\#!\s*erratum:[^\n]*)
  | (?P<comment>\#[^\n]*)
  | (?P<number>\d+(?:/\d+)?I?(?![A-Za-z0-9_]))
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>->|\+\+|[=;{}()\[\],+\-:])
    """,
    re.VERBOSE,
)


def tokenize(source: str):
    tokens, errata = [], []
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(line, col, f"unexpected character {source[pos]!r}")
        kind = m.lastgroup
        text = m.group()
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind == "erratum":
            errata.append(text.split("erratum:", 1)[1].strip())
        elif kind not in ("ws", "comment"):
            if kind == "name" and text == "I":
                kind = "number"
            tokens.append(Token(kind, text, line, col))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens, errata


@dataclass
class Binding:
    kind: str
    value: object
    line: int
    column: int
    ring: BaseRing | None = None
    extra: dict = field(default_factory=dict)


@dataclass
class Workspace:
    bindings: dict = field(default_factory=dict)
    errata: list = field(default_factory=list)

    def _get(self, name, kind):
        b = self.bindings.get(name)
        if b is None or (kind and b.kind != kind):
            raise UnknownName(f"no {kind or 'binding'} named {name!r}")
        return b.value

    def ring(self, name) -> BaseRing:
        return self._get(name, "ring")

    def set(self, name) -> list:
        return self._get(name, "set")

    def scalars(self, name) -> ScalarSet:
        return to_scalar_set(self._get(name, "set"), self.bindings[name].ring)

    def structure(self, name) -> StructureDef:
        return self._get(name, "structure")

    def bistructure(self, name) -> BiStructureDef:
        return self._get(name, "bistructure")

    def map(self, name) -> MapTable:
        return self._get(name, "map")

    def fuzzy(self, name) -> FuzzyMap:
        return self._get(name, "fuzzy")

    def bifuzzy(self, name) -> BiFuzzyMap:
        return self._get(name, "bifuzzy")

    def names(self, kind=None) -> list:
        return [n for n, b in self.bindings.items() if kind is None or b.kind == kind]

    def __len__(self):
        return len(self.bindings)


def to_scalar_set(elements, ring: BaseRing) -> ScalarSet:
    members = []
    for e in elements:
        if not isinstance(e, Scalar):
            raise WorkspaceError(f"scalar sets hold plain numbers, found {e}")
        members.append(e.value)
    return ScalarSet(members, ring)


class _Parser:
    def __init__(self, source: str):
        self.tokens, errata = tokenize(source)
        self.pos = 0
        self.ws = Workspace(errata=errata)
        self.current_ring = Z

    # token helpers
    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message, expected=(), tok=None):
        tok = tok or self.tok
        raise ParseError(tok.line, tok.column, message, expected)

    def at(self, *texts) -> bool:
        return self.tok.text in texts and self.tok.kind in ("op", "name")

    def expect(self, text) -> Token:
        if not self.at(text):
            shown = self.tok.text or "end of input"
            self.error(f"unexpected {shown!r}", [repr(text)])
        t = self.tok
        self.pos += 1
        return t

    def name(self) -> Token:
        t = self.tok
        if t.kind != "name" or t.text in KEYWORDS:
            self.error(f"unexpected {t.text or 'end of input'!r}", ["name"])
        self.pos += 1
        return t

    def integer(self) -> int:
        t = self.tok
        if t.kind != "number" or not t.text.isdigit():
            self.error(f"unexpected {t.text or 'end of input'!r}", ["integer"])
        self.pos += 1
        return int(t.text)

    # numbers
    def number(self):
        """Signed sum of terms; returns (a, b) as Fractions."""
        a = b = Fraction(0)
        sign = 1
        if self.at("+", "-"):
            sign = -1 if self.tok.text == "-" else 1
            self.pos += 1
        while True:
            t = self.tok
            if t.kind != "number":
                self.error(f"unexpected {t.text or 'end of input'!r}", ["number"])
            self.pos += 1
            text = t.text
            imaginary = text.endswith("I")
            coef = Fraction(text[:-1] or 1) if imaginary else Fraction(text)
            if imaginary:
                b += sign * coef
            else:
                a += sign * coef
            if self.at("+", "-") and self.tokens[self.pos + 1].kind == "number":
                sign = -1 if self.tok.text == "-" else 1
                self.pos += 1
                continue
            if self.at("+", "-"):
                self.error(f"dangling {self.tok.text!r}", ["number"])
            return a, b

    def neutro(self, ring: BaseRing) -> NeutroNumber:
        t = self.tok
        a, b = self.number()
        try:
            return NeutroNumber(ring, a, b)
        except ValueError:
            self.error(f"{t.text} is not an element of {ring}", tok=t)

    def element(self, ring: BaseRing) -> Element:
        if self.at("("):
            self.pos += 1
            entries = [self.neutro(ring)]
            while self.at(","):
                self.pos += 1
                entries.append(self.neutro(ring))
            self.expect(")")
            return Tuple(entries, ring)
        if self.at("["):
            start = self.tok
            self.pos += 1
            rows = [self.matrix_row(ring)]
            while self.at(","):
                self.pos += 1
                rows.append(self.matrix_row(ring))
            self.expect("]")
            if len({len(r) for r in rows}) != 1:
                self.error("matrix rows differ in length", tok=start)
            return Matrix(rows, ring)
        if self.at("poly"):
            self.pos += 1
            self.expect("(")
            coeffs = []
            if not self.at(")"):
                coeffs.append(self.neutro(ring))
                while self.at(","):
                    self.pos += 1
                    coeffs.append(self.neutro(ring))
            self.expect(")")
            return Poly(coeffs, ring)
        if self.tok.kind == "number" or self.at("+", "-"):
            return Scalar(self.neutro(ring))
        self.error(f"unexpected {self.tok.text or 'end of input'!r}", ["number", "'('", "'['", "'poly'"])

    def matrix_row(self, ring):
        self.expect("[")
        row = [self.neutro(ring)]
        while self.at(","):
            self.pos += 1
            row.append(self.neutro(ring))
        self.expect("]")
        return row

    def set_literal(self, ring) -> list:
        if self.at("tuples"):
            self.pos += 1
            self.expect("(")
            base = self.set_literal(ring)
            self.expect(",")
            k = self.integer()
            self.expect(")")
            from itertools import product

            vals = [e.value for e in base if isinstance(e, Scalar)]
            return canonical(Tuple(p, ring) for p in product(vals, repeat=k))
        if self.tok.kind == "name" and self.tok.text not in KEYWORDS:
            t = self.name()
            b = self.lookup(t, "set")
            if b.ring is not ring:
                self.error(f"set {t.text} is over {b.ring}, not {ring}", tok=t)
            return list(b.value)
        self.expect("{")
        out = []
        if not self.at("}"):
            out.append(self.element(ring))
            while self.at(","):
                self.pos += 1
                out.append(self.element(ring))
        self.expect("}")
        return canonical(out)

    # statements
    def bind(self, tok: Token, kind, value, ring=None, **extra):
        if tok.text in self.ws.bindings:
            raise WorkspaceError(f"line {tok.line}: name {tok.text!r} is already bound")
        self.ws.bindings[tok.text] = Binding(kind, value, tok.line, tok.column, ring, extra)

    def lookup(self, tok: Token, kind) -> Binding:
        b = self.ws.bindings.get(tok.text)
        if b is None or b.kind != kind:
            raise UnknownName(f"line {tok.line}: no {kind} named {tok.text!r}")
        return b

    def semantic(self, tok: Token, fn, *args):
        try:
            return fn(*args)
        except (RingMismatch, WorkspaceError, NotTotal, ValueError) as exc:
            raise WorkspaceError(f"line {tok.line}: {exc}") from exc

    def parse(self) -> Workspace:
        while self.tok.kind != "eof":
            if self.at(";"):
                self.pos += 1
                continue
            t = self.tok
            handler = {
                "ring": self.ring_stmt,
                "set": self.set_stmt,
                "structure": self.structure_stmt,
                "bistructure": self.bistructure_stmt,
                "map": self.map_stmt,
                "fuzzy": self.fuzzy_stmt,
                "bifuzzy": self.bifuzzy_stmt,
            }.get(t.text if t.kind == "name" else None)
            if handler is None:
                self.error(
                    f"unexpected {t.text!r}",
                    ["'ring'", "'set'", "'structure'", "'bistructure'", "'map'", "'fuzzy'", "'bifuzzy'"],
                )
            self.pos += 1
            handler()
            if self.at(";"):
                self.pos += 1
            elif self.tok.kind != "eof" and self.tokens[self.pos - 1].text != "}":
                self.error(f"unexpected {self.tok.text!r}", ["';'"])
        return self.ws

    def ring_stmt(self):
        n = self.name()
        self.expect("=")
        t = self.tok
        if t.text == "Z":
            self.pos += 1
            ring = Z
        elif t.text == "Q":
            self.pos += 1
            ring = Q
        elif t.text == "Zn":
            self.pos += 1
            m = self.integer()
            if m < 2:
                self.error("modulus must be at least 2", tok=t)
            ring = Zn(m)
        else:
            self.error(f"unexpected {t.text or 'end of input'!r}", ["'Z'", "'Q'", "'Zn'"])
        self.bind(n, "ring", ring)
        self.current_ring = ring

    def set_stmt(self):
        n = self.name()
        ring = self.current_ring
        if self.at("in"):
            self.pos += 1
            ring = self.lookup(self.name(), "ring").value
        self.expect("=")
        elems = self.set_literal(ring)
        self.bind(n, "set", elems, ring)

    def kind(self) -> Kind:
        t = self.tok
        if t.text not in KINDS:
            self.error(f"unexpected {t.text or 'end of input'!r}", [repr(k) for k in KINDS])
        self.pos += 1
        return KINDS[t.text]

    def over(self):
        v = self.name()
        self.expect("over")
        s = self.name()
        return v, s

    def make_structure(self, v: Token, s: Token, kind: Kind) -> StructureDef:
        sb = self.lookup(s, "set")
        existing = self.ws.bindings.get(v.text)
        if existing is not None and existing.kind == "structure":
            st = existing.value
            if st.ring is not sb.ring:
                raise WorkspaceError(f"line {v.line}: {v.text} is over {st.ring} but {s.text} is over {sb.ring}")
            return st.with_scalars(self.semantic(s, to_scalar_set, sb.value, sb.ring))
        vb = self.lookup(v, "set")
        if vb.ring is not sb.ring:
            raise WorkspaceError(f"line {v.line}: {v.text} is over {vb.ring} but {s.text} is over {sb.ring}")
        if not vb.value:
            raise WorkspaceError(f"line {v.line}: carrier {v.text} is empty")
        scalars = self.semantic(s, to_scalar_set, sb.value, sb.ring)
        return self.semantic(v, StructureDef, vb.value, scalars, kind)

    def structure_stmt(self):
        n = self.name()
        self.expect("=")
        kind = self.kind()
        self.expect("(")
        v, s = self.over()
        self.expect(")")
        self.bind(n, "structure", self.make_structure(v, s, kind), None, carrier=v.text, scalars=s.text)

    def bistructure_stmt(self):
        n = self.name()
        kinds = [Kind.SETVS, Kind.SETVS]
        if self.at(":"):
            self.pos += 1
            kinds = [self.kind()] * 2
            if self.at(","):
                self.pos += 1
                kinds[1] = self.kind()
        self.expect("=")
        self.expect("(")
        first = self.name()
        if self.at("++"):
            # shared scalars: (V1 ++ V2) over S
            self.pos += 1
            second = self.name()
            self.expect(")")
            self.expect("over")
            s = self.name()
            sides = [(first, s), (second, s)]
            mode = SHARED
        else:
            self.expect("over")
            s1 = self.name()
            self.expect(")")
            self.expect("++")
            self.expect("(")
            v2, s2 = self.over()
            self.expect(")")
            sides = [(first, s1), (v2, s2)]
            mode = BISCALARS
        structs = [self.make_structure(v, s, k) for (v, s), k in zip(sides, kinds)]
        value = self.semantic(n, BiStructureDef, structs[0], structs[1], mode)
        self.bind(
            n, "bistructure", value, None,
            sides=[(v.text, s.text) for v, s in sides], kinds=[k.value for k in kinds], mode=mode,
        )

    def table(self, ring, value_fn):
        self.expect("{")
        pairs = []
        while not self.at("}"):
            t = self.tok
            key = self.element(ring)
            self.expect("->")
            pairs.append((t, key, value_fn()))
            if not self.at("}"):
                self.expect(";")
        self.expect("}")
        seen = {}
        for t, k, v in pairs:
            if k in seen and seen[k] != v:
                raise WorkspaceError(f"line {t.line}: {k} is given two different values")
            seen[k] = v
        return seen

    def map_stmt(self):
        n = self.name()
        self.expect(":")
        d = self.lookup(self.name(), "structure")
        self.expect("->")
        c_tok = self.name()
        c = self.lookup(c_tok, "structure")
        graph = self.table(d.value.ring, lambda: self.element(c.value.ring))
        value = self.semantic(n, MapTable, d.value, c.value, graph)
        self.bind(n, "map", value, None, domain=self.tokens_name(d), codomain=c_tok.text)

    def tokens_name(self, binding) -> str:
        for name, b in self.ws.bindings.items():
            if b is binding:
                return name
        return "?"

    def fuzzy_value(self) -> FuzzyNeutroValue:
        t = self.tok
        a, b = self.number()
        try:
            return FuzzyNeutroValue(a, b)
        except ValueError as exc:
            self.error(str(exc), tok=t)

    def fuzzy_stmt(self):
        n = self.name()
        self.expect(":")
        s_tok = self.name()
        s = self.lookup(s_tok, "structure")
        table = self.table(s.value.ring, self.fuzzy_value)
        value = self.semantic(n, FuzzyMap, s.value, table)
        self.bind(n, "fuzzy", value, None, structure=s_tok.text)

    def bifuzzy_stmt(self):
        n = self.name()
        self.expect(":")
        b_tok = self.name()
        b = self.lookup(b_tok, "bistructure").value
        self.expect("=")
        f1_tok = self.name()
        self.expect("++")
        f2_tok = self.name()
        f1, f2 = self.lookup(f1_tok, "fuzzy").value, self.lookup(f2_tok, "fuzzy").value
        if f1.structure.carrier_set != b.first.carrier_set or f2.structure.carrier_set != b.second.carrier_set:
            raise WorkspaceError(f"line {n.line}: fuzzy tables do not match the sides of {b_tok.text}")
        self.bind(n, "bifuzzy", BiFuzzyMap(f1, f2), None, bistructure=b_tok.text, sides=[f1_tok.text, f2_tok.text])


def parse_workspace(source: str) -> Workspace:
    return _Parser(source).parse()


def parse_element(text: str, ring: BaseRing) -> Element:
    p = _Parser(text)
    e = p.element(ring)
    if p.tok.kind != "eof":
        p.error(f"unexpected {p.tok.text!r}", ["end of input"])
    return e


def parse_fuzzy_value(text: str) -> FuzzyNeutroValue:
    p = _Parser(text)
    v = p.fuzzy_value()
    if p.tok.kind != "eof":
        p.error(f"unexpected {p.tok.text!r}", ["end of input"])
    return v


# printing ----------------------------------------------------------------

def _set_text(elems) -> str:
    return "{" + ", ".join(str(e) for e in elems) + "}"


def format_workspace(ws: Workspace) -> str:
    """Source text that parses back to an equal workspace."""
    lines = [f"#! erratum: {e}" for e in ws.errata]
    for name, b in ws.bindings.items():
        if b.kind == "ring":
            lines.append(f"ring {name} = {b.value};")
        elif b.kind == "set":
            ring_name = next(
                (n for n, rb in ws.bindings.items() if rb.kind == "ring" and rb.value is b.ring), None
            )
            if ring_name is None:
                if b.ring is not Z:
                    ring_name = f"_ring_{name}"
                    lines.append(f"ring {ring_name} = {b.ring};")
            where = f" in {ring_name}" if ring_name else ""
            lines.append(f"set {name}{where} = {_set_text(b.value)};")
        elif b.kind == "structure":
            lines.append(f"structure {name} = {b.value.kind.value}({b.extra['carrier']} over {b.extra['scalars']});")
        elif b.kind == "bistructure":
            k1, k2 = b.extra["kinds"]
            (v1, s1), (v2, s2) = b.extra["sides"]
            head = f"bistructure {name} : {k1}, {k2} = "
            if b.extra["mode"] == SHARED:
                lines.append(head + f"({v1} ++ {v2}) over {s1};")
            else:
                lines.append(head + f"({v1} over {s1}) ++ ({v2} over {s2});")
        elif b.kind == "map":
            body = " ".join(f"{v} -> {w};" for v, w in b.value.graph.items())
            lines.append(f"map {name} : {b.extra['domain']} -> {b.extra['codomain']} {{ {body} }}")
        elif b.kind == "fuzzy":
            body = " ".join(f"{v} -> {x};" for v, x in b.value.table.items())
            lines.append(f"fuzzy {name} : {b.extra['structure']} {{ {body} }}")
        elif b.kind == "bifuzzy":
            f1, f2 = b.extra["sides"]
            lines.append(f"bifuzzy {name} : {b.extra['bistructure']} = {f1} ++ {f2};")
    return "\n".join(lines) + "\n"
