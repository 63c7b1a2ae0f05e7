"""Command-line front end.

    neutra <command> <file> [args...] [--structure NAME] [--format text|machine] [--cap N]

Exit codes: 0 pass, 1 fail or counterexample, 2 parse or semantic
error, 3 budget exceeded.  ``NEUTRA_CAP`` sets the default budget.
"""

from __future__ import annotations

import json
import os
import re
import sys
from dataclasses import dataclass, field

from .algebra import (
    AxiomResult,
    Kind,
    VerificationReport,
    classify,
    magma_profile,
    neutro_closure,
    verify,
)
from .bistructure import bigenerator, classify_bisubstructure, verify_bistructure
from .dsl import ParseError, Workspace, parse_workspace
from .errors import InverseNotLinear, NeutraError, NotGenerable, NotInvertible, PrerequisiteFailed, WorkspaceError
from .fuzzy import FuzzyKind, verify_fuzzy
from .linmap import MAP_BUDGET, enumerate_maps, invert_map, preservation_profile, verify_map
from .ring import NeutroNumber, Zn
from .span import minimal_generating_set
from .substructure import (
    ENUMERATION_LIMIT,
    PLAIN,
    PSEUDO,
    Duo,
    PseudoSemigroup,
    PseudoSet,
    SubsetScalars,
    check_direct_sum,
    check_direct_union,
    check_pseudo_direct_sum,
    enumerate_substructures,
    simplicity,
)

EXIT_PASS, EXIT_FAIL, EXIT_ERROR, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(NeutraError):
    pass


def literal(x) -> object:
    """DSL spelling of a value; sequences become lists."""
    if isinstance(x, (tuple, list)):
        return [literal(y) for y in x]
    if isinstance(x, (set, frozenset)):
        return "{" + ", ".join(str(y) for y in sorted(x, key=lambda e: e.sort_key())) + "}"
    if x is None or isinstance(x, (bool, int, str)):
        return x
    return str(x)


def set_literal(elems) -> str:
    return "{" + ", ".join(str(e) for e in elems) + "}"


def table_literal(graph) -> str:
    return "{" + "; ".join(f"{v} -> {w}" for v, w in graph.items()) + "}"


@dataclass
class Report:
    command: str
    verdict: str = "pass"
    exit_code: int = EXIT_PASS
    fields: dict = field(default_factory=dict)
    axioms: list = field(default_factory=list)
    errata: list = field(default_factory=list)

    def add_verification(self, rep: VerificationReport, prefix: str = ""):
        for a in rep.axioms:
            self.axioms.append(axiom_entry(a, prefix))
        if rep.warnings:
            self.fields.setdefault("warnings", []).extend(rep.warnings)
        if rep.flags:
            self.fields.setdefault("flags", []).extend(rep.flags)

    def fail(self):
        self.verdict = "fail"
        self.exit_code = EXIT_FAIL

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "verdict": self.verdict,
            "exit_code": self.exit_code,
            "fields": self.fields,
            "axioms": self.axioms,
            "errata": self.errata,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(d["command"], d["verdict"], d["exit_code"], d["fields"], d["axioms"], d["errata"])


def axiom_entry(a: AxiomResult, prefix: str = "") -> dict:
    status = "pass" if a.passed else "fail"
    if a.passed and a.note.startswith("skipped"):
        status = "skip"
    return {
        "id": prefix + a.axiom,
        "status": status,
        "violations": a.violations,
        "note": a.note,
        "witnesses": [
            {"args": literal(w.args), "result": literal(w.result), "tag": w.tag} for w in a.witnesses
        ],
    }


def _witness_text(w: dict) -> str:
    parts = [", ".join(_flat(a) for a in w["args"])]
    if w["result"] is not None:
        parts.append("-> " + _flat(w["result"]))
    parts.append(f"[{w['tag']}]")
    return " ".join(p for p in parts if p)


def _flat(x) -> str:
    if isinstance(x, list):
        return "(" + ", ".join(_flat(y) for y in x) + ")"
    return str(x)


def format_report(r: Report, fmt: str = "text", max_witnesses: int = 3) -> str:
    if fmt == "machine":
        return json.dumps(r.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if fmt != "text":
        raise UsageError(f"unknown format {fmt!r}")
    lines = [f"command: {r.command}", f"verdict: {r.verdict}"]
    for key, value in r.fields.items():
        if isinstance(value, list):
            lines.append(f"{key}:")
            lines.extend(f"  {_flat(v)}" for v in value)
        else:
            lines.append(f"{key}: {value}")
    for a in r.axioms:
        head = f"axiom {a['id']}: {a['status']}"
        if a["violations"]:
            head += f" ({a['violations']} violations)"
        if a["note"]:
            head += f" ({a['note']})"
        lines.append(head)
        lines.extend(f"  witness: {_witness_text(w)}" for w in a["witnesses"][:max_witnesses])
    lines.extend(f"erratum: {e}" for e in r.errata)
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> Report:
    return Report.from_dict(json.loads(text))


# command helpers ----------------------------------------------------------

@dataclass
class Options:
    structure: str | None = None
    fmt: str = "text"
    cap: int | None = None
    flavor: str = "plain"
    method: str = "exact"
    enumerate: bool = False
    verify: str | None = None
    kind: str | None = None
    restrict: tuple | None = None


def _default_cap(opts: Options, fallback: int) -> int:
    if opts.cap is not None:
        return opts.cap
    env = os.environ.get("NEUTRA_CAP")
    return int(env) if env else fallback


def _structure_name(ws: Workspace, args: list, opts: Options) -> str:
    if args:
        return args[0]
    if opts.structure:
        return opts.structure
    names = ws.names("structure")
    if len(names) == 1:
        return names[0]
    raise UsageError("name a structure (positional or --structure)")


def _flavor(ws: Workspace, spec: str):
    name, _, arg = spec.partition(":")
    name = name.lower()
    if name == "plain":
        return PLAIN
    if name == "pseudo":
        return PSEUDO
    makers = {"subset": SubsetScalars, "duo": Duo, "pseudosemigroup": PseudoSemigroup, "pseudoset": PseudoSet}
    if name not in makers or not arg:
        raise UsageError(f"unknown flavor {spec!r}")
    return makers[name](ws.scalars(arg))


_RING_TOKEN = re.compile(r"^Z(\d+)(\*?)$")


def _closure_base(ws: Workspace, token: str):
    if token in ws.bindings:
        ring = ws.bindings[token].ring
        return [e.value for e in ws.set(token)], ring
    m = _RING_TOKEN.match(token)
    if not m:
        raise UsageError(f"{token!r} is neither a set name nor a ring token like Z4 or Z5*")
    ring = Zn(int(m.group(1)))
    base = [NeutroNumber(ring, a, 0) for a in range(ring.modulus)]
    if m.group(2):
        base = [x for x in base if not x.is_zero()]
    return base, ring


def _strip(words, *drop):
    return [w for w in words if w not in drop]


# commands ---------------------------------------------------------------

def cmd_check(ws, args, opts, r):
    name = _structure_name(ws, args, opts)
    st = ws.structure(name)
    rep = verify(st)
    r.fields["subject"] = rep.subject
    r.add_verification(rep)
    if not rep.passed:
        r.fail()


def cmd_classify(ws, args, opts, r):
    if len(args) != 3 or args[1] != "over":
        raise UsageError("usage: classify V over S")
    V, S = ws.set(args[0]), ws.scalars(args[2])
    kinds = classify(V, S)
    r.fields["kinds"] = [k.value for k in kinds]
    if not kinds:
        r.fail()


def cmd_subspaces(ws, args, opts, r):
    st = ws.structure(_structure_name(ws, args, opts))
    flavor = _flavor(ws, opts.flavor)
    kind = Kind(opts.kind) if opts.kind else None
    found = enumerate_substructures(st, flavor, _default_cap(opts, ENUMERATION_LIMIT), kind=kind)
    r.fields["flavor"] = str(flavor)
    r.fields["count"] = len(found)
    r.fields["substructures"] = [set_literal(W) for W in found]


def cmd_genset(ws, args, opts, r):
    st = ws.structure(_structure_name(ws, args, opts))
    try:
        g = minimal_generating_set(st, opts.method)
    except NotGenerable as exc:
        r.fields["reason"] = str(exc)
        r.fail()
        return
    r.fields["carrier_size"] = len(st)
    r.fields["generating_set"] = set_literal(g.generating_set)
    r.fields["dimension"] = g.cardinality
    r.fields["method"] = g.method
    r.fields["certified_minimal"] = g.certified_minimal


def cmd_simplicity(ws, args, opts, r):
    st = ws.structure(_structure_name(ws, args, opts))
    s = simplicity(st, _default_cap(opts, ENUMERATION_LIMIT))
    for name, g in (
        ("simple", s.simple),
        ("weakly_simple", s.weakly_simple),
        ("doubly_simple", s.doubly_simple),
        ("strongly_simple", s.strongly_simple),
    ):
        r.fields[name] = g.holds
        r.fields[name + "_certificate"] = g.certificate
        if g.counterexample is not None:
            r.fields[name + "_counterexample"] = literal(g.counterexample)
    r.fields["grades"] = list(s.grades)
    if not s.simple.holds:
        r.fail()


def cmd_maps(ws, args, opts, r):
    words = _strip(args, "->", "to")
    if len(words) != 2:
        raise UsageError("usage: maps M -> N [--enumerate | --verify T]")
    D, C = ws.structure(words[0]), ws.structure(words[1])
    kind = Kind(opts.kind) if opts.kind else None
    if opts.verify:
        m = ws.map(opts.verify)
        if m.domain != D or m.codomain != C:
            raise WorkspaceError(f"map {opts.verify} is not declared {words[0]} -> {words[1]}")
        rep = verify_map(m, kind)
        r.add_verification(rep)
        if not rep.passed:
            r.fail()
        return
    maps = enumerate_maps(D, C, kind, _default_cap(opts, MAP_BUDGET))
    r.fields["count"] = len(maps)
    r.fields["maps"] = [table_literal(m.graph) for m in maps]


def cmd_preserve(ws, args, opts, r):
    if len(args) != 1:
        raise UsageError("usage: preserve T")
    p = preservation_profile(ws.map(args[0]))
    r.fields["grade"] = p.grade
    r.fields["preserved"] = [f"{set_literal(P)} -> {set_literal(img)}" for P, img in p.preserved]
    r.fields["not_preserved"] = [f"{set_literal(P)} -> {set_literal(img)}: {why}" for P, img, why in p.failures]
    if p.grade == "None":
        r.fail()


def cmd_invert(ws, args, opts, r):
    if len(args) != 1:
        raise UsageError("usage: invert T")
    try:
        inv = invert_map(ws.map(args[0]), Kind(opts.kind) if opts.kind else None)
    except NotInvertible as exc:
        r.fields["reason"] = str(exc)
        r.fields["witness"] = literal(exc.witness)
        r.fail()
        return
    except InverseNotLinear as exc:
        r.fields["reason"] = str(exc)
        r.add_verification(exc.report)
        r.fail()
        return
    r.fields["inverse"] = table_literal(inv.graph)


def cmd_fuzzy(ws, args, opts, r):
    words = _strip(args, "as")
    if len(words) != 2:
        raise UsageError("usage: fuzzy check eta as <kind>")
    f = ws.fuzzy(words[0])
    try:
        rep = verify_fuzzy(f, FuzzyKind(words[1]))
    except ValueError:
        raise UsageError(f"unknown fuzzy kind {words[1]!r}") from None
    except PrerequisiteFailed as exc:
        r.fields["reason"] = str(exc)
        r.add_verification(exc.report, "prerequisite.")
        r.fail()
        return
    r.fields["subject"] = rep.subject
    r.add_verification(rep)
    if not rep.passed:
        r.fail()


def cmd_bi_check(ws, args, opts, r):
    b = ws.bistructure(args[0] if args else opts.structure)
    rep = verify_bistructure(b)
    r.fields["subject"] = rep.subject
    r.add_verification(rep)
    if not rep.passed:
        r.fail()


def cmd_bi_genset(ws, args, opts, r):
    b = ws.bistructure(args[0] if args else opts.structure)
    try:
        g = bigenerator(b, opts.method)
    except NotGenerable as exc:
        r.fields["reason"] = str(exc)
        r.fail()
        return
    r.fields["first_generating_set"] = set_literal(g.first.generating_set)
    r.fields["second_generating_set"] = set_literal(g.second.generating_set)
    r.fields["method"] = g.first.method
    r.fields["bidimension"] = "({}, {})".format(*g.bidimension)


def cmd_bi_classify(ws, args, opts, r):
    if len(args) != 4 or args[2] != "in":
        raise UsageError("usage: bi classify W1 W2 in B [--restrict T1 T2]")
    b = ws.bistructure(args[3])
    restriction = None
    if opts.restrict:
        restriction = (ws.scalars(opts.restrict[0]), ws.scalars(opts.restrict[1]))
    rep = classify_bisubstructure(ws.set(args[0]), ws.set(args[1]), b, restriction)
    r.fields["flavors"] = list(rep.flavors)
    for name, detail in rep.details.items():
        for a in detail.failures():
            r.axioms.append(axiom_entry(a, name + "."))
    if not rep.flavors:
        r.fail()


def cmd_closure(ws, args, opts, r):
    if len(args) != 3 or args[1] != "under" or args[2] not in ("add", "mul"):
        raise UsageError("usage: closure G under add|mul")
    base, ring = _closure_base(ws, args[0])
    elems = neutro_closure(base, args[2], ring, _default_cap(opts, 10_000))
    prof = magma_profile(elems, args[2], ring)
    r.fields["ring"] = str(ring)
    r.fields["order"] = len(elems)
    r.fields["elements"] = "{" + ", ".join(str(e) for e in elems) + "}"
    r.fields["profile"] = prof.klass.value
    if prof.witness:
        r.fields["profile_witness"] = literal(prof.witness)
    if prof.identity is not None:
        r.fields["identity"] = str(prof.identity)


def _decomposition(check):
    def run(ws, args, opts, r):
        words = _strip(args, "=", "+")
        if len(words) < 2:
            raise UsageError("usage: <decomposition> M = W1 + W2 ...")
        rep = check(ws.structure(words[0]), [ws.set(w) for w in words[1:]])
        r.fields["subject"] = rep.subject
        r.add_verification(rep)
        if not rep.passed:
            r.fail()

    return run


COMMANDS = {
    "check": cmd_check,
    "classify": cmd_classify,
    "subspaces": cmd_subspaces,
    "genset": cmd_genset,
    "simplicity": cmd_simplicity,
    "maps": cmd_maps,
    "preserve": cmd_preserve,
    "invert": cmd_invert,
    "fuzzy check": cmd_fuzzy,
    "bi check": cmd_bi_check,
    "bi genset": cmd_bi_genset,
    "bi classify": cmd_bi_classify,
    "closure": cmd_closure,
    "directsum": _decomposition(check_direct_sum),
    "directunion": _decomposition(check_direct_union),
    "pseudosum": _decomposition(check_pseudo_direct_sum),
}


def run_command(command: str, args: list, ws: Workspace, opts: Options | None = None) -> Report:
    opts = opts or Options()
    r = Report(" ".join([command] + list(args)), errata=list(ws.errata))
    handler = COMMANDS.get(command)
    if handler is None:
        raise UsageError(f"unknown command {command!r}")
    handler(ws, list(args), opts, r)
    return r


def _error_report(command: str, exc: Exception, errata=()) -> Report:
    code = getattr(exc, "exit_code", EXIT_ERROR)
    r = Report(command, "budget" if code == EXIT_BUDGET else "error", code, errata=list(errata))
    r.fields["error"] = type(exc).__name__
    r.fields["message"] = str(exc)
    return r


_VALUE_OPTS = {"--structure": "structure", "--format": "fmt", "--cap": "cap", "--flavor": "flavor",
               "--verify": "verify", "--kind": "kind"}


def split_argv(argv: list):
    """Returns (command, file, positional args, Options)."""
    opts = Options()
    words = []
    i = 0
    while i < len(argv):
        a = argv[i]
        key, eq, inline = a.partition("=")
        if key in _VALUE_OPTS:
            if eq:
                value = inline
            else:
                if i + 1 >= len(argv):
                    raise UsageError(f"{a} needs a value")
                i += 1
                value = argv[i]
            setattr(opts, _VALUE_OPTS[key], int(value) if key == "--cap" else value)
        elif a == "--restrict":
            if i + 2 >= len(argv):
                raise UsageError("--restrict needs two scalar set names")
            opts.restrict = (argv[i + 1], argv[i + 2])
            i += 2
        elif a in ("--exact", "--greedy"):
            opts.method = a[2:]
        elif a == "--enumerate":
            opts.enumerate = True
        elif a.startswith("--"):
            raise UsageError(f"unknown option {a}")
        else:
            words.append(a)
        i += 1
    if opts.fmt not in ("text", "machine"):
        raise UsageError(f"unknown format {opts.fmt!r}")
    if not words:
        raise UsageError("missing command")
    command = words.pop(0)
    if command in ("fuzzy", "bi"):
        if not words:
            raise UsageError(f"{command} needs a subcommand")
        command += " " + words.pop(0)
    if not words:
        raise UsageError("missing workspace file")
    return command, words[0], words[1:], opts


HELP = """usage: neutra <command> <file.neu> [args...] [options]

commands:
  check M                         verify a structure against its kind
  classify V over S               every kind the carrier satisfies over S
  subspaces M [--flavor F]        proper substructures (F: plain, pseudo, subset:T,
                                  duo:H, pseudosemigroup:H, pseudoset:T)
  simplicity M                    simple / weakly / doubly / strongly simple
  genset M [--exact|--greedy]     minimal generating set and dimension
  maps M '->' N [--enumerate | --verify T]
  preserve T                      preservation grade of a map
  invert T                        inverse table, checked as a map
  fuzzy check eta as KIND         KIND: setvs, setla, semivs, semila, groupvs,
                                  groupla, groupla-classical
  bi check B | bi genset B | bi classify W1 W2 in B [--restrict T1 T2]
  closure G under add|mul         G is a set name or a ring token like Z4, Z5*
  directsum M = W1 + W2 ...       also directunion and pseudosum

options:
  --structure NAME   structure to act on when not given positionally
  --format FMT       text (default) or machine (json)
  --cap N            enumeration budget (default from NEUTRA_CAP)

exit codes: 0 pass, 1 fail, 2 parse or usage error, 3 budget exceeded
"""


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv:
        sys.stderr.write(HELP)
        return EXIT_ERROR
    if argv[0] in ("-h", "--help", "help"):
        sys.stdout.write(HELP)
        return EXIT_PASS
    try:
        command, path, args, opts = split_argv(argv)
    except ValueError as exc:
        sys.stderr.write(f"neutra: {exc}\n")
        return EXIT_ERROR
    except NeutraError as exc:
        sys.stderr.write(f"neutra: {exc}\n")
        return EXIT_ERROR
    errata = []
    try:
        with open(path, encoding="utf-8") as fh:
            source = fh.read()
        ws = parse_workspace(source)
        errata = ws.errata
        report = run_command(command, args, ws, opts)
    except ParseError as exc:
        report = _error_report(command, exc)
        sys.stderr.write(f"{path}:{exc}\n")
    except NeutraError as exc:
        report = _error_report(" ".join([command] + args), exc, errata)
    except OSError as exc:
        report = _error_report(command, exc)
        report.exit_code = EXIT_ERROR
    sys.stdout.write(format_report(report, opts.fmt))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
