"""The verification suites and their oracle."""

import json

import pytest

import coxtwist as ct
from coxtwist import verify
from conftest import a_system, dihedral

import permutation_models as pm


def test_default_run_is_green():
    run = ct.run_suite()
    assert run.ok
    assert run.total_failed == 0
    assert run.seed == verify.DEFAULT_SEED
    labels = {r.system for r in run.reports}
    assert labels == {
        "A1xA1 swap", "A2 swap", "A3 swap", "B2 identity",
        "I2(2) swap", "I2(3) swap", "I2(4) swap", "I2(5) swap",
        "I2(6) swap", "I2(7) swap", "I2(8) swap", "A2xA2 swap", "F4 swap",
    }
    assert len(run.reports) == len(labels) * len(verify.SUITE_NAMES)
    for label in labels:
        suites = [r.suite for r in run.reports if r.system == label]
        assert suites == list(verify.SUITE_NAMES)


def test_oracle_matches_permutation_model():
    # the transitive-closure oracle must itself agree with the external
    # sorted-prefix criterion before it is allowed to judge bruhat_leq
    for n in (3, 4):
        sys = a_system(n)
        for u in sys:
            pu = pm.perm_of_word(n, u.word)
            for w in sys:
                assert verify.oracle_bruhat(sys, u, w) == pm.bruhat_leq(
                    pu, pm.perm_of_word(n, w.word)
                )


def test_oracle_agreement_counts():
    report = verify.check_oracle_agreement(a_system(4), "A3")
    assert report.suite == "bruhat-oracle-agreement"
    assert report.system == "A3"
    assert report.checked == 24 * 24
    assert report.ok and report.passed == report.checked


def test_oracle_agreement_samples_large_groups(f4):
    report = verify.check_oracle_agreement(f4, "F4")
    assert report.checked == verify.SAMPLE_PAIRS
    assert report.ok


def test_oracle_needs_complete_group():
    sys = dihedral(2, cap=3)
    with pytest.raises(ct.CapExceeded):
        verify.oracle_bruhat(sys, sys.identity, sys.identity)


def test_oracle_mask_cache_is_reused(f4):
    first = verify._below_masks(f4)
    assert verify._below_masks(f4) is first


def test_corrupt_fixture_is_detected():
    config = {
        "corrupt": "bruhat-oracle",
        "cases": [
            {"name": "A2 swap", "type": "A2", "theta": [[1, 2]],
             "suites": ["bruhat-oracle-agreement"]}
        ],
    }
    run = ct.run_suite(config)
    assert not run.ok
    assert run.total_failed > 0
    report = run.reports[0]
    assert report.suite == "bruhat-oracle-agreement"
    assert report.failures
    text = run.to_text()
    assert "counterexamples" in text


def test_seed_determinism():
    config = {
        "seed": 99,
        "cases": [{"name": "F4 swap", "type": "F4", "theta": [[1, 4], [2, 3]],
                   "cap": 2000, "suites": ["bruhat-oracle-agreement"]}],
    }
    first = ct.run_suite(config).to_records()
    second = ct.run_suite(config).to_records()
    assert first == second
    assert first["seed"] == 99


def test_suites_filter_and_unknown_suite():
    config = {
        "cases": [{"name": "A2 swap", "type": "A2", "theta": [[1, 2]],
                   "suites": ["generator-parity"]}],
    }
    run = ct.run_suite(config)
    assert [r.suite for r in run.reports] == ["generator-parity"]
    assert run.ok
    with pytest.raises(ValueError):
        ct.run_suite({"cases": [{"type": "A2", "suites": ["no-such-suite"]}]})


def test_suite_errors_become_failure_records():
    config = {
        "cases": [{"name": "infinite dihedral", "type": "I2(inf)", "cap": 60,
                   "theta": [[1, 2]], "suites": ["coset-partition"]}],
    }
    run = ct.run_suite(config)
    assert not run.ok
    report = run.reports[0]
    assert report.checked == 0
    assert report.failures[0][0].startswith("error:")


def test_report_arithmetic():
    report = verify.VerificationReport("demo", "case", 5, (("w",),))
    assert report.passed == 4
    assert not report.ok
    run = verify.VerificationRun((report,), seed=1)
    assert run.total_checked == 5
    assert run.total_failed == 1
    assert not run.ok


def test_records_and_text_round_trip():
    config = {
        "cases": [{"name": "A2 swap", "type": "A2", "theta": [[1, 2]],
                   "suites": ["generator-parity", "coset-partition"]}],
    }
    run = ct.run_suite(config)
    records = run.to_records()
    assert json.dumps(records)  # JSON serializable
    assert records["seed"] == verify.DEFAULT_SEED
    assert [r["suite"] for r in records["suites"]] == [
        "generator-parity", "coset-partition",
    ]
    for r in records["suites"]:
        assert r["checked"] == r["passed"]
        assert r["failures"] == []
    text = run.to_text()
    lines = text.splitlines()
    assert lines[0] == f"seed: {verify.DEFAULT_SEED}"
    assert lines[1].split() == ["suite", "system", "checked", "passed", "failed"]
    assert lines[-1].startswith("total:")


def test_individual_checks_on_a3():
    case = ct.GroupDescription.from_dict({"type": "A3", "theta": [[1, 3]]}).build()
    sys, sub = case.system, case.subgroup
    assert verify.check_fixed_subgroup_equality(sub, "A3").ok
    assert verify.check_generator_parity(sub, "A3").ok
    assert verify.check_prop_additivity(sub, "A3").ok
    assert verify.check_coset_partition(sub, "A3").ok
    assert verify.check_bruhat_minimal_equality(sub, "A3").ok
    assert verify.check_minimal_chains(sub, "A3").ok
    assert verify.check_step_dichotomy(sub, "A3").ok
    assert verify.check_dominated_search(sub, "A3").ok
    assert verify.check_lemma_long_gen(sys, sub, "A3").ok
    assert verify.check_lemma_corr(sys, sub, "A3").ok
    assert verify.check_lemma_commuting_reflections(sys, "A3").ok
