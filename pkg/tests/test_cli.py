import io
import json
from fractions import Fraction

import pytest

from krzyz import bounds, caratheodory
from krzyz.cli import run
from krzyz.errors import UnsupportedPayloadForCsv
from krzyz.report import Report, emit, jsonable


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    return code, json.loads(out) if out else None, err


def test_coeffs_normalized_golden():
    code, rep, _ = call_json("coeffs", "--t", "1/2", "--n", "5", "--normalized", "--format", "json")
    assert code == 0
    assert rep["payload"]["coefficients"] == ["1", "1/2", "1/6", "-1/24", "-19/120"]
    assert rep["inputs"] == {"t": "1/2", "n": 5, "normalized": True}
    assert rep["mode"] == "exact"


def test_coeffs_unnormalized_keeps_prefactor_symbolic():
    code, rep, _ = call_json("coeffs", "--t", "1", "--n", "3")
    assert code == 0
    p = rep["payload"]
    assert p["prefactor"] == "exp(-t)"
    assert p["coefficients"] == ["1", "-2", "0", "2/3"]
    assert isinstance(p["rows"][1]["value"], float)


def test_minors_golden():
    code, rep, _ = call_json("minors", "--t", "1/2", "--n", "5")
    assert code == 0
    p = rep["payload"]
    assert p["minors"] == ["2", "3", "4", "4", "0"]
    assert p["classification"] == "positive-then-zero"
    assert p["index"] == 4


def test_minors_payload_matches_engine():
    _, rep, _ = call_json("minors", "--t", "1/3", "--n", "9")
    engine = caratheodory.segment_minors(Fraction(1, 3), 9)
    assert rep["payload"]["minors"] == jsonable(list(engine.minors))


def test_classify():
    assert call_json("classify", "--t", "1/2", "--n", "5")[1]["payload"]["extendable"] is True
    _, rep, _ = call_json("classify", "--t", "1/2", "--n", "7")
    assert rep["payload"]["extendable"] is False


def test_bound_check_small_sweep():
    code, rep, _ = call_json("bound-check", "--t", "1", "--samples", "12", "--degree", "3", "--seed", "5")
    assert code == 0
    p = rep["payload"]
    assert p["failures"] == 0 and p["N"] == 3
    assert [r["seed"] for r in p["rows"][::3]] == list(range(5, 17))


def test_bound_check_defaults_documented():
    from krzyz.cli import _parser
    a = _parser().parse_args(["bound-check", "--t", "1/2"])
    assert (a.samples, a.degree, a.seed, a.mode, a.format) == (1000, 4, 0, "exact", "json")


def test_bound_check_float_mode():
    code, rep, _ = call_json("bound-check", "--t", "1/2", "--samples", "4", "--mode", "float")
    assert code == 0 and rep["mode"] == "float"
    assert all(isinstance(r["normalized_sq_modulus"], float) for r in rep["payload"]["rows"])


def test_bound_check_empty_csv_is_header_only():
    code, out, _ = call("bound-check", "--t", "1/2", "--samples", "0", "--format", "csv")
    assert code == 0
    assert out == "seed,degree,n,normalized_sq_modulus,margin,pass\n"


def test_failed_verdict_exits_one(monkeypatch):
    bad = bounds.verify_bound(1, bounds.TruncatedSeries([0, 2], order=3), descriptor={"seed": 0, "degree": 1})
    monkeypatch.setattr(bounds, "bound_sweep", lambda *a, **k: [bad])
    code, rep, _ = call_json("bound-check", "--t", "1", "--samples", "1")
    assert code == 1 and rep["payload"]["failures"] >= 1


def test_stage_mismatch_exits_one(monkeypatch):
    real = bounds.reproduce_worked_example
    monkeypatch.setattr(bounds, "reproduce_worked_example", lambda: real(tol=0.0))
    code, rep, _ = call_json("example-krzyz7")
    assert code == 1 and rep["payload"]["failed_stage"] == "g"


@pytest.mark.parametrize("phi", ["0", "pi", "pi/2", "-pi/2"])
def test_extremal(phi):
    code, rep, _ = call_json("extremal", "--t", "1/2", "--n", "3", "--phi", phi)
    assert code == 0 and rep["payload"]["sharp"] is True
    assert [r["normalized_sq_modulus"] for r in rep["payload"]["rows"]] == ["0", "0", "1", "0", "0"]


def test_extremal_not_sharp_exits_one(monkeypatch):
    real = bounds.extremal_equality

    def broken(*a, **k):
        res = real(*a, **k)
        return bounds.BoundCheckResult(res.t, res.mode, res.rows, res.horizon, res.omega_descriptor, False)

    monkeypatch.setattr(bounds, "extremal_equality", broken)
    assert call("extremal", "--t", "1", "--n", "1")[0] == 1


def test_probe_is_labeled():
    code, rep, _ = call_json("probe", "--t", "1/2", "--omega-seed", "3", "--from", "6", "--to", "8")
    assert code == 0
    p = rep["payload"]
    assert p["label"] == "conjectural" and "not a proof" in p["note"]
    assert [r["n"] for r in p["rows"]] == [6, 7, 8]
    assert all("pass" not in r for r in p["rows"])


def test_example_all_stages_pass():
    code, rep, _ = call_json("example-krzyz7")
    assert code == 0
    assert rep["payload"]["passed"] is True
    assert [s["stage"] for s in rep["payload"]["stages"]] == list("abcdefg")


@pytest.mark.parametrize("argv", [
    ["coeffs", "--t", "0.5", "--n", "3"],
    ["coeffs", "--t", "1e-1", "--n", "3"],
])
def test_decimal_t_rejected(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert "--t" in err and "p/q" in err


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["coeffs", "--n", "3"],
    ["extremal", "--t", "1", "--n", "2", "--phi", "1.2"],
    ["coeffs", "--t", "-1", "--n", "3"],
    ["coeffs", "--t", "1/2", "--n", "0"],
    ["minors", "--t", "1/2", "--n", "1"],
    ["extremal", "--t", "1", "--n", "4"],
    ["probe", "--t", "1/2", "--omega-seed", "0", "--from", "3", "--to", "7"],
    ["example-krzyz7", "--format", "csv"],
])
def test_usage_and_domain_errors_exit_two(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == "" and err


@pytest.mark.parametrize("argv", [
    ["coeffs", "--t", "1/2", "--n", "5", "--normalized"],
    ["minors", "--t", "1/3", "--n", "6"],
    ["bound-check", "--t", "1/2", "--samples", "5"],
    ["extremal", "--t", "1/2", "--n", "2", "--phi", "pi/2"],
    ["example-krzyz7"],
])
@pytest.mark.parametrize("fmt", ["json", "table"])
def test_repeat_runs_identical(argv, fmt):
    first = call(*argv, "--format", fmt)
    assert first[0] == 0
    assert call(*argv, "--format", fmt) == first


def test_emit_contract():
    r = Report("demo", {"t": Fraction(1, 3)},
               {"x": 0.1, "big": 1e300, "whole": 2.0, "columns": ["a"], "rows": [{"a": Fraction(-1, 24)}]})
    data = emit(r)
    assert data == emit(r)
    assert json.loads(data) == r.to_dict()
    assert b"0.10000000000000001" in data and b"2.0" in data
    assert emit(r, "csv") == b"a\n-1/24\n"
    with pytest.raises(UnsupportedPayloadForCsv):
        emit(Report("x", {}, {"stages": [{"a": 1}]}), "csv")


def test_json_round_trip_for_every_subcommand():
    for argv in (["coeffs", "--t", "3/2", "--n", "4"], ["classify", "--t", "2", "--n", "2"],
                 ["probe", "--t", "1", "--omega-seed", "1", "--from", "4", "--to", "5"]):
        code, out, _ = call(*argv)
        assert code == 0
        assert json.dumps(json.loads(out))  # single valid object
        assert out.count("\n") == 1


def test_float_tolerance_env_override(monkeypatch):
    from krzyz.scalar import float_tolerance
    monkeypatch.setenv("KRZYZ_FLOAT_TOL", "1e-6")
    assert float_tolerance() == 1e-6
