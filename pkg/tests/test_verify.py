import pytest

from etaforms.bqf import Form
from etaforms.qseries import EtaQuotientSpec, QSeries, eta_quotient, theta_form
from etaforms.verify import (
    SUITES,
    VerificationReport,
    compare,
    composition_prediction,
    conductor_candidates,
    gordon_hughes_candidate,
    multiplicativity_failure,
    residue_values,
    run_suite,
    suite_tasks,
    table1_combination,
    theorem_grid,
    verify_gordon_hughes,
    verify_hecke_tables,
    verify_thm1,
    verify_thm1_residues,
    verify_thm2,
    verify_thm3,
    verify_thm4,
)


def test_report_lines():
    ok = VerificationReport("thm1", (1, 2), 400)
    assert ok.passed and ok.line() == "thm1 1,2 400 PASS"
    bad = VerificationReport("x", (3,), 10, (7, "1", "2"), "note")
    assert bad.verdict == "FAIL" and bad.line() == "x 3 10 FAIL@7 note"


def test_compare_finds_first_difference():
    a = QSeries.from_ints([1, 2, 3, 4])
    b = QSeries.from_ints([1, 2, 5, 4])
    r = compare("c", (), a, b)
    assert r.first_discrepancy == (2, "3", "5")
    assert compare("c", (), a, b, order=1).passed
    with pytest.raises(ValueError):
        compare("c", (), a, b, order=9)


def test_theorem_examples():
    assert verify_thm1(1, 2).passed
    assert verify_thm1(12, 7).passed
    assert verify_thm2(8, 5).passed
    assert verify_thm3(1, 64, 600).passed
    assert verify_thm4(1, 18).passed


def test_theorem_constraints():
    with pytest.raises(ValueError):
        verify_thm1(24, 1)
    with pytest.raises(ValueError):
        verify_thm2(8, 1)
    with pytest.raises(ValueError):
        verify_thm3(0, 1)
    with pytest.raises(ValueError):
        verify_thm4(1, 0)
    with pytest.raises(ValueError):
        theorem_grid("thm5")


def test_theorem_detects_a_perturbation():
    # m = 1, s = 2 of the first family; replacing the second form breaks it
    lhs = (theta_form(Form(6, 1, 2), 200) - theta_form(Form(6, 5, 3), 200)) / 2
    rhs = eta_quotient(EtaQuotientSpec.combine(2, [(1, 1), (47, 1)]), 200)
    assert compare("t", (), lhs, rhs).passed
    wrong = (theta_form(Form(6, 1, 2), 200) - theta_form(Form(1, 1, 12), 200)) / 2
    assert not compare("t", (), wrong, rhs).passed


def test_grid_sizes():
    assert [len(theorem_grid(t)) for t in ("thm1", "thm2", "thm3", "thm4")] == [144, 97, 100, 64]


def test_residue_values_and_surrogate():
    assert residue_values(Form(1, 0, 1), 4) == frozenset({0, 1, 2})
    for m in range(1, 4):
        for s in range(1, 4):
            assert verify_thm1_residues(m, s).passed


def test_hecke_rules():
    # split prime: F.P and F.P^-1 (merged when equal), ramified: F.P, inert: nothing
    assert composition_prediction(-47, 2, Form(1, 1, 12)) == ((2, Form(2, 1, 6)),)
    assert set(composition_prediction(-47, 2, Form(2, 1, 6))) == {(1, Form(3, 1, 4)), (1, Form(1, 1, 12))}
    assert composition_prediction(-47, 47, Form(2, 1, 6)) == ((1, Form(2, 1, 6)),)
    assert composition_prediction(-47, 5, Form(2, 1, 6)) == ()
    assert composition_prediction(-1024, 2, Form(5, 4, 52)) is None
    cands = conductor_candidates(-1024, 2)
    assert cands and all(k >= 1 for _, k in cands)


def test_hecke_tables_small():
    reports = verify_hecke_tables(-47, prime_bound=20, order=600)
    assert reports and all(r.passed for r in reports)
    reports = verify_hecke_tables(-1024, prime_bound=10, order=800)
    assert reports and all(r.passed for r in reports)


def test_gordon_hughes():
    with pytest.raises(ValueError):
        verify_gordon_hughes(1000)
    s = gordon_hughes_candidate(120)
    assert s[1] == 1
    reports = verify_gordon_hughes(2000)
    assert [r.passed for r in reports] == [True] * 4


def test_multiplicativity():
    assert multiplicativity_failure(QSeries.from_ints([0, 2, 1]), 2) == (1, "2", "1")
    s = table1_combination(-47, "C5a", (Form(2, 1, 6),), 800)
    assert multiplicativity_failure(s, 800) is None
    # a plain theta series is not multiplicative
    b = theta_form(Form(1, 1, 12), 200) / 2
    assert multiplicativity_failure(b, 200) is not None
    with pytest.raises(ValueError):
        multiplicativity_failure(s, 900)
    with pytest.raises(ValueError):
        table1_combination(-47, "C9", (Form(2, 1, 6),), 100)


def test_suite_tasks_and_determinism():
    with pytest.raises(ValueError):
        suite_tasks("nope")
    assert len(suite_tasks("thm4")) == 64
    serial = run_suite("thm4", 120)
    parallel = run_suite("thm4", 120, jobs=2)
    assert serial == parallel and all(r.passed for r in serial)
    assert "identities" in SUITES
