import json
import math

import pytest

import pohst


def test_eval_f():
    assert pohst.eval_f([-1.0, 0.0, -1.0]) == 4.0
    assert pohst.eval_f([0.5, -0.5]) == pytest.approx(0.9375)
    with pytest.raises(ValueError):
        pohst.eval_f([1.5])


def test_noncanonical_set():
    assert pohst.noncanonical_set([-1, 1]) == [(2, 2, 1), (1, 2, -1)]
    assert pohst.noncanonical_set([-1, -1, -1]) == []


def test_certificate_round_trip():
    cert = pohst.build_partition([-1, 1])
    assert cert["n"] == 2
    assert [b["kind"] for b in cert["blocks"]] == ["doubleton"]
    assert pohst.check_certificate(json.dumps(cert)) == (True, "")

    cert["blocks"].pop()
    accepted, reason = pohst.check_certificate(json.dumps(cert))
    assert not accepted
    assert "incomplete cover" in reason

    with pytest.raises(pohst.CertificateFormatError):
        pohst.check_certificate("{")


def test_bad_pattern():
    with pytest.raises(ValueError):
        pohst.certify([1, 0])


def test_sweep():
    report = pohst.sweep(8, jobs=2)
    assert report["patterns_checked"] == 256
    assert report["passed"]
    assert report["failures"] == []


def test_maximize_and_maximizers():
    result = pohst.maximize(3)
    assert result["best_value"] == pytest.approx(4.0)
    assert result["bound"] == pohst.theorem_bound(3) == 4.0
    assert pohst.enumerate_maximizers(3) == [[-1.0, 0.0, -1.0]]
    assert len(pohst.enumerate_maximizers(4)) == 3


def test_sample_domination_is_deterministic():
    a = pohst.sample_domination(4, samples=500, seed=1, blockwise=True)
    b = pohst.sample_domination(4, samples=500, seed=1, blockwise=True)
    assert a == b
    assert a["accepted"]


def test_bounds():
    r = pohst.compare_bounds(2, 1.0)
    assert r["remak_bound"] == pytest.approx(2 * math.log(2) + 2, abs=1e-12)
    assert r["improvement"] == 0.0
    assert pohst.compare_bounds(3, 1.0)["improvement"] == pytest.approx(3 * math.log(3) - math.log(4), abs=1e-12)
    assert pohst.hermite_constant(8) == (2.0, "exact-table")
    with pytest.raises(ValueError):
        pohst.compare_bounds(1, 1.0)
