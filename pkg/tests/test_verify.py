import json

import pytest

from autfr_homology.freegroup import parse_letters
from autfr_homology.grassmann import Context
from autfr_homology.verify import (
    check_faithful,
    check_ia,
    check_paths,
    check_rank_invariance,
    same_rank_contexts,
    verify_theorems,
)


def test_all_suites_pass_small():
    report = verify_theorems(Context((3, 5), 2), trials=10, seed=1)
    assert report.passed
    assert [c.name for c in report.checks] == ["paths", "ia", "faithful", "rank-invariance"]
    assert all(line.startswith("PASS") for line in report.lines())


def test_zero_trials_is_trivially_passing():
    report = verify_theorems(Context((3,), 2), trials=0, suites=["paths"])
    assert report.passed and report.checks[0].cases == 0


def test_report_is_deterministic_per_seed():
    ctx = Context((3,), 3)
    a = json.dumps(verify_theorems(ctx, trials=5, seed=9).to_json())
    b = json.dumps(verify_theorems(ctx, trials=5, seed=9).to_json())
    assert a == b


def test_k12_word_acts_trivially():
    ctx = Context((3, 5), 2)
    result = check_ia(ctx)
    assert result.passed and result.cases == 2


def test_faithful_is_consistent_on_ia_words():
    # IA words give the identity, which is exactly what is_IA predicts
    ctx = Context((3,), 2)
    assert check_faithful(ctx, [parse_letters("R(1,2)")]).passed
    assert check_faithful(ctx, [parse_letters("L(2,1) Ri(2,1)")]).passed


def test_rank_invariance_rejects_mismatched_contexts():
    with pytest.raises(ValueError):
        check_rank_invariance([Context((3, 5), 2), Context((3,), 2)], [])


def test_same_rank_contexts():
    others = same_rank_contexts(Context((3, 5, 7), 2))
    assert [o.degrees for o in others] == [(3, 3, 3), (3, 7, 11)]


def test_paths_reports_counterexample(monkeypatch):
    import autfr_homology.verify as v
    real = v.full_matrix

    def skewed(source, ctx):
        m = real(source, ctx)
        if isinstance(source, tuple) and source:
            return real((), ctx)
        return m

    monkeypatch.setattr(v, "full_matrix", skewed)
    res = check_paths(Context((3,), 2), [parse_letters("R(1,2)")])
    assert not res.passed
    assert res.counterexample["word"] == "R(1,2)"
    assert res.counterexample["monomial"] == "t1_1"
    assert "FAIL" in res.line()


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify_theorems(Context((3,), 2), suites=["nope"])
