import pytest
from hypothesis import HealthCheck, given, settings

from conftest import FIXTURES, load
from neutra import (
    Kind,
    MapTable,
    NeutroNumber,
    Scalar,
    ScalarSet,
    StructureDef,
    Zn,
    enumerate_maps,
    invert_map,
    is_projection_onto,
    preservation_profile,
    verify_map,
)
from neutra.errors import (
    BudgetExceeded,
    InverseNotLinear,
    NotInvertible,
    NotTotal,
    ScalarSetMismatch,
    SubspaceInvalid,
)
from neutra.linmap import compose
from oracles import oracle_maps
from strategies import structures

OPERATOR_FIXTURES = sorted((FIXTURES / "operators").glob("*.neu"))


def n(R, a=0, b=0):
    return NeutroNumber(R, a, b)


def multiples(p, S=(0, 1)):
    R = Zn(p)
    V = [Scalar(n(R, 0, k)) for k in range(p)]
    return StructureDef(V, ScalarSet([n(R, s) for s in S], R), Kind.SETVS)


def identity(M):
    return MapTable(M, M, {v: v for v in M.carrier})


# verification -----------------------------------------------------------------

def test_explicit_mixed_table():
    ws = load("map_mixed.neu")
    rep = verify_map(ws.map("T"))
    assert rep.passed
    assert "not in the domain" in rep.axiom("map.fixes_I").note


def test_matrix_diagonal_map():
    ws = load("matrix_to_pairs.neu")
    T = ws.map("T")
    assert len(T.domain) == 81 and len(T.codomain) == 9
    assert verify_map(T).passed


def test_zero_sent_to_nonzero_fails():
    M = multiples(3)
    zero, one_i, two_i = M.carrier
    T = MapTable(M, M, {zero: one_i, one_i: one_i, two_i: two_i})
    rep = verify_map(T)
    assert not rep.passed
    bad = rep.axiom("map.scalar_commute")
    assert any(w.args[0].is_zero() for w in bad.witnesses)


def test_zero_map_flagged():
    M = multiples(3)
    T = MapTable(M, M, {v: M.carrier[0] for v in M.carrier})
    rep = verify_map(T)
    assert rep.passed and "ZeroMap" in rep.flags


def test_table_must_be_total():
    M = multiples(3)
    with pytest.raises(NotTotal):
        MapTable(M, M, {M.carrier[0]: M.carrier[0]})


def test_scalars_must_agree():
    A, B = multiples(3), multiples(3, (0, 2))
    with pytest.raises(ScalarSetMismatch):
        verify_map(MapTable(A, B, {v: v for v in A.carrier}))


# enumeration -----------------------------------------------------------------

def test_two_element_space_has_one_map():
    M = multiples(2)
    maps = enumerate_maps(M, M)
    # the zero map is exempt from T(I) = I, so it is listed besides the identity
    assert [m for m in maps if not m.is_zero_map] == [identity(M)]
    assert len(maps) == 2 and maps[0].is_zero_map


def test_three_element_space_has_three_maps():
    M = multiples(3)
    maps = enumerate_maps(M, M)
    assert len(maps) == 4
    nonzero = [m for m in maps if not m.is_zero_map]
    assert len(nonzero) == 3
    zero, one_i, _ = M.carrier
    assert all(m(zero) == zero and m(one_i) == one_i for m in nonzero)
    assert [m.images() for m in maps] == sorted(
        (m.images() for m in maps), key=lambda t: [M.carrier.index(x) for x in t]
    )


def test_enumeration_budget():
    M = multiples(7)
    with pytest.raises(BudgetExceeded):
        enumerate_maps(M, M, cap=1000)


@settings(max_examples=200, deadline=None, derandomize=True, suppress_health_check=list(HealthCheck))
@given(structures(max_n=5, max_size=4))
def test_enumeration_matches_oracle(M):
    got = {m.images() for m in enumerate_maps(M, M)}
    assert got == oracle_maps(M, M)


@pytest.mark.parametrize("path", OPERATOR_FIXTURES, ids=lambda p: p.stem)
def test_operator_fixture_matches_oracle(path):
    M = load(f"operators/{path.name}").structure("M")
    got = enumerate_maps(M, M)
    assert len(got) >= 2
    if len(M.carrier) <= 5:
        assert {m.images() for m in got} == oracle_maps(M, M)
    for m in got:
        assert verify_map(m).passed


# preservation ------------------------------------------------------------------

def test_zero_completed_operator_preserves_nothing():
    ws = load("operator_grades.neu")
    prof = preservation_profile(ws.map("T"))
    assert prof.grade == "None" and not prof.preserved and prof.failures


def test_completed_operator_is_strong():
    ws = load("operator_grades.neu")
    prof = preservation_profile(ws.map("T1"))
    assert prof.grade in ("Weak", "Strong")
    assert prof.grade == "Strong"
    listed = {frozenset(ws.set(f"P{i}")) for i in range(1, 7)}
    assert listed <= {frozenset(p) for p, _ in prof.preserved}


def test_identity_is_strong():
    ws = load("operator_grades.neu")
    assert preservation_profile(identity(ws.structure("M"))).grade == "Strong"


# inversion ---------------------------------------------------------------------

def test_invert_identity_and_swap():
    M = multiples(3)
    assert invert_map(identity(M)) == identity(M)
    zero, one_i, two_i = M.carrier
    swap = MapTable(M, M, {zero: zero, one_i: two_i, two_i: one_i})
    # the swap moves I, so it is not a map here; over a carrier without I it is
    assert not verify_map(swap).passed
    R = Zn(3)
    N = StructureDef([Scalar(n(R)), Scalar(n(R, 0, 2)), Scalar(n(R, 1))], M.scalars, Kind.SETVS)
    a, b, c = N.carrier
    swap = MapTable(N, N, {a: a, b: c, c: b})
    inv = invert_map(swap)
    assert inv == swap and verify_map(inv).passed


def test_zero_map_not_invertible():
    M = multiples(3)
    with pytest.raises(NotInvertible):
        invert_map(MapTable(M, M, {v: M.carrier[0] for v in M.carrier}))


def test_operator_grade_inverse():
    ws = load("operator_grades.neu")
    with pytest.raises(NotInvertible):
        invert_map(ws.map("T1"))


@pytest.mark.parametrize("path", OPERATOR_FIXTURES, ids=lambda p: p.stem)
def test_inverse_of_invertible_operator_is_linear(path):
    M = load(f"operators/{path.name}").structure("M")
    invertible = 0
    for m in enumerate_maps(M, M):
        if len(set(m.images())) != len(M.carrier):
            with pytest.raises(NotInvertible):
                invert_map(m)
            continue
        invertible += 1
        try:
            inv = invert_map(m)
        except InverseNotLinear as exc:  # pragma: no cover - would falsify the claim
            pytest.fail(f"reversed table fails: {exc}")
        assert verify_map(inv).passed
        assert invert_map(inv) == m
    assert invertible >= 1


def test_enough_operator_fixtures():
    assert len(OPERATOR_FIXTURES) >= 20


SMALL_OPERATOR_SPACES = [
    p for p in OPERATOR_FIXTURES if len(load(f"operators/{p.name}").structure("M").carrier) <= 4
]


@pytest.mark.parametrize("path", SMALL_OPERATOR_SPACES, ids=lambda p: p.stem)
def test_composition_closure(path):
    M = load(f"operators/{path.name}").structure("M")
    maps = enumerate_maps(M, M)
    for f in maps:
        for g in maps:
            assert verify_map(compose(f, g)).passed


# projections ---------------------------------------------------------------------

def test_scaled_axis_projection():
    ws = load("projection_z3.neu")
    T, W = ws.map("T"), ws.set("W")
    assert verify_map(T).passed
    assert is_projection_onto(T, W)
    # T is not idempotent and that is not required
    assert compose(T, T) != T


def test_identity_not_projection_onto_proper_part():
    ws = load("projection_z3.neu")
    assert not is_projection_onto(identity(ws.structure("M")), ws.set("W"))


def test_zero_map_projects_anywhere():
    ws = load("projection_z3.neu")
    M = ws.structure("M")
    zero = next(v for v in M.carrier if v.is_zero())
    Z = MapTable(M, M, {v: zero for v in M.carrier})
    assert is_projection_onto(Z, ws.set("W"))


def test_projection_target_must_be_subspace():
    ws = load("projection_z3.neu")
    odd = [v for v in ws.set("W") if not v.is_zero()][:1]
    with pytest.raises(SubspaceInvalid):
        is_projection_onto(ws.map("T"), odd)
