import pytest

from conftest import FIXTURES, load
from neutra import Kind, NeutroNumber, Q, Scalar, Tuple, Z, Zn
from neutra.dsl import ParseError, UnknownName, format_workspace, parse_element, parse_fuzzy_value, parse_workspace

ALL_FIXTURES = sorted(p for p in FIXTURES.rglob("*.neu") if p.name != "malformed.neu")


def test_four_bindings():
    ws = parse_workspace("ring R = Zn 12; set V = {0, 2, 4, 6, 6I, 8I, 10I}; set S = {0, 3}; structure M = setvs(V over S)")
    assert len(ws) == 4
    assert ws.names() == ["R", "V", "S", "M"]
    M = ws.structure("M")
    assert M.kind is Kind.SETVS and len(M.carrier) == 7
    assert ws.ring("R") == Zn(12)


def test_dangling_plus_position():
    with pytest.raises(ParseError) as info:
        parse_workspace("set V = {2+}")
    err = info.value
    assert (err.line, err.column) == (1, 11)
    assert "dangling '+'" in str(err)
    assert str(err).startswith("error:1:11:")


def test_malformed_fixture_position():
    with pytest.raises(ParseError) as info:
        load("malformed.neu")
    assert (info.value.line, info.value.column) == (2, 11)


def test_error_lists_expected_tokens():
    with pytest.raises(ParseError) as info:
        parse_workspace("structure M = setvs(V S)")
    assert info.value.expected
    assert "over" in " ".join(info.value.expected)


def test_empty_and_comment_only():
    assert len(parse_workspace("")) == 0
    assert len(parse_workspace("# nothing here\n\n")) == 0


def test_erratum_annotations_collected():
    ws = load("semigroup_generators_z20.neu")
    assert ws.errata and "18" in ws.errata[0]


def test_unknown_name():
    with pytest.raises(UnknownName):
        parse_workspace("set S = {0, 1}; structure M = setvs(V over S)")
    ws = parse_workspace("set S = {0, 1};")
    with pytest.raises(UnknownName):
        ws.structure("S")


def test_element_literals():
    R = Zn(5)
    assert parse_element("3+2I", R) == Scalar(NeutroNumber(R, 3, 2))
    assert parse_element("I", R) == Scalar(NeutroNumber(R, 0, 1))
    assert parse_element("-1", R) == Scalar(NeutroNumber(R, 4))
    assert parse_element("(1, I)", R) == Tuple([NeutroNumber(R, 1), NeutroNumber(R, 0, 1)], R)
    assert parse_element("1/2+I", Q) == Scalar(NeutroNumber(Q, "1/2", 1))
    assert parse_element("5I-20", Z) == Scalar(NeutroNumber(Z, -20, 5))
    with pytest.raises(ParseError):
        parse_element("(1, I", R)


def test_fuzzy_values():
    v = parse_fuzzy_value("1/4+I")
    assert (v.a, v.b) == (0.25, 1)
    with pytest.raises((ParseError, ValueError)):
        parse_fuzzy_value("2+I")


@pytest.mark.parametrize("path", ALL_FIXTURES, ids=lambda p: str(p.relative_to(FIXTURES)))
def test_every_fixture_parses(path):
    ws = parse_workspace(path.read_text())
    assert len(ws) > 0


def _same(a, b):
    assert a.names() == b.names()
    assert a.errata == b.errata
    for name in a.names():
        x, y = a.bindings[name], b.bindings[name]
        assert x.kind == y.kind
        if x.kind == "bistructure":
            assert x.value.sides == y.value.sides and x.value.scalar_mode == y.value.scalar_mode
        elif x.kind == "bifuzzy":
            assert x.value == y.value
        elif x.kind == "set":
            assert list(x.value) == list(y.value)
        else:
            assert x.value == y.value


@pytest.mark.parametrize("path", ALL_FIXTURES, ids=lambda p: str(p.relative_to(FIXTURES)))
def test_workspace_round_trip(path):
    ws = parse_workspace(path.read_text())
    text = format_workspace(ws)
    again = parse_workspace(text)
    _same(ws, again)
    assert format_workspace(again) == text
