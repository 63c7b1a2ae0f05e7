"""Acceptance criteria 1-9.  Each test prints one ``criterion N: PASS`` or
``criterion N: FAIL`` line and then re-raises any failure, so the summary is
visible even under pytest's output capture."""

import subprocess
import sys

import test_algebra
import test_bistructure
import test_fuzzy
import test_linmap
import test_span
import test_substructure
from conftest import FIXTURES, ROOT, load
from neutra import FuzzyKind, bigenerator, minimal_generating_set, verify, verify_fuzzy
from neutra.cli import EXIT_ERROR, EXIT_FAIL, EXIT_PASS, main


def report(capsys, number, label, check):
    try:
        check()
    except BaseException:
        with capsys.disabled():
            print(f"\ncriterion {number}: FAIL ({label})")
        raise
    with capsys.disabled():
        print(f"\ncriterion {number}: PASS ({label})")


def params(items):
    # unwrap pytest.param objects built for parametrization
    return [getattr(p, "values", p) for p in items]


def cli_json(*argv):
    out = subprocess.run(
        [sys.executable, "-m", "neutra", *map(str, argv), "--format", "machine"],
        capture_output=True,
        cwd=ROOT,
    )
    return out.returncode, out.stdout


def test_criterion_1_closure_orders(capsys):
    import json

    def check():
        code, out = cli_json("closure", FIXTURES / "closures.neu", "Z4", "under", "add")
        assert code == EXIT_PASS and json.loads(out)["fields"]["order"] == 16
        code, out = cli_json("closure", FIXTURES / "closures.neu", "Z2", "under", "add")
        f = json.loads(out)["fields"]
        assert code == EXIT_PASS and f["order"] == 4 and f["elements"] == "{0, I, 1, 1+I}"

    report(capsys, 1, "closure orders", check)


def test_criterion_2_monoid_not_group(capsys):
    import json

    def check():
        code, out = cli_json("closure", FIXTURES / "closures.neu", "Z5*", "under", "mul")
        f = json.loads(out)["fields"]
        assert code == EXIT_PASS and f["order"] == 8
        assert f["profile"] == "Monoid" and f["profile_witness"] == ["I"]
        test_algebra.test_magma_profiles()

    report(capsys, 2, "monoid, not group", check)


def test_criterion_3_mixed_space(capsys):
    def check():
        ws = load("mixed_not_la.neu")
        assert verify(ws.structure("M")).passed
        assert not verify(ws.structure("L")).passed
        test_algebra.test_mixed_space_is_not_linear_algebra()

    report(capsys, 3, "set vector space that is not a linear algebra", check)


def test_criterion_4_generator_cardinalities(capsys):
    def check():
        M = load("generators_pm.neu").structure("M")
        rep = minimal_generating_set(M)
        assert len(M.carrier) == 12 and rep.cardinality == 6 and rep.method == "Exact"
        for fixture, expect in [
            ("bi_matrices_tuples.neu", (8, 6)),
            ("bi_semigroup_shared.neu", (6, 2)),
            ("bi_bisemigroup.neu", (3, 2)),
        ]:
            got = bigenerator(load(fixture).bistructure("B"))
            assert got.bidimension == expect
            assert got.first.method == got.second.method == "Exact"

    report(capsys, 4, "generator cardinalities and bidimensions", check)


def test_criterion_5_theorem_properties(capsys):
    def check():
        test_algebra.test_linear_algebra_implies_vector_space()
        test_bistructure.test_bilinear_implies_bivector()
        test_substructure.test_two_scalars_always_weakly_simple()
        for p in (2, 3, 5):
            test_substructure.test_two_scalars_weakly_simple_exhaustive(p)
            test_substructure.test_prime_multiples_random_duo_pairs(p)
            for dim in (1, 2):
                test_substructure.test_prime_multiples_have_no_proper_subgroups(p, dim)

    report(capsys, 5, "theorem property suites", check)


def test_criterion_6_oracle_equivalences(capsys):
    def check():
        for (st,) in params(test_span._small_fixture_structures()):
            test_span.test_exact_matches_oracle_on_fixtures(st)
        test_span.test_exact_matches_oracle()
        test_linmap.test_enumeration_matches_oracle()
        for fixture, name in test_substructure.FIXTURE_PARENTS:
            test_substructure.test_enumeration_matches_oracle_on_fixtures(fixture, name)
        test_substructure.test_enumeration_matches_oracle()

    report(capsys, 6, "oracle equivalences", check)


def test_criterion_7_inverse_linearity(capsys):
    def check():
        assert len(test_linmap.OPERATOR_FIXTURES) >= 20
        for path in test_linmap.OPERATOR_FIXTURES:
            test_linmap.test_inverse_of_invertible_operator_is_linear(path)

    report(capsys, 7, "inverse of an invertible map is a map", check)


def test_criterion_8_fuzzy_soundness(capsys):
    def check():
        maps = params(test_fuzzy.fuzzy_fixture_maps())
        assert maps
        for fixture, name in maps:
            for kind in FuzzyKind:
                test_fuzzy.test_fixture_verdicts_match_reevaluation(fixture, name, kind)
        assert verify_fuzzy(load("fuzzy_constant_i.neu").fuzzy("eta"), FuzzyKind.SETLA).passed
        test_fuzzy.test_reciprocal_map_fails_monotone()

    report(capsys, 8, "fuzzy checker soundness", check)


def test_criterion_9_cli_contract(capsys):
    from neutra.dsl import parse_workspace

    def check():
        for path in FIXTURES.rglob("*.neu"):
            if path.name != "malformed.neu":
                parse_workspace(path.read_text())
        for argv in [("check", FIXTURES / "mixed_not_la.neu", "L"), ("genset", FIXTURES / "generators_pm.neu", "M")]:
            first, second = cli_json(*argv), cli_json(*argv)
            assert first[1] and first == second
        assert main(["check", str(FIXTURES / "setvs_z12.neu"), "M"]) == EXIT_PASS
        assert main(["check", str(FIXTURES / "mixed_not_la.neu"), "L"]) == EXIT_FAIL
        assert main(["check", str(FIXTURES / "malformed.neu"), "M"]) == EXIT_ERROR

    report(capsys, 9, "CLI contract", check)
