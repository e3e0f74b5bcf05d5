import json

import pytest

from oscalgebra.cli import RunConfig, build_verify_report, main, resolve_generator_names
from oscalgebra.report import INFORMATIONAL, VerificationReport


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- verify -------------------------------------------------------------------


def test_verify_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--dim", "16")
    assert code == 0
    assert "summary:" in out
    assert " 0 failed" in out
    assert "casimir eigenvalue: 3/16" in out


def test_verify_json_envelope(capsys):
    code, out, _ = run_cli(capsys, "verify", "--dim", "16", "--format", "json")
    assert code == 0
    envelope = json.loads(out)
    assert envelope["version"] == 1
    assert envelope["config"]["dim"] == 16
    assert envelope["casimir"] == "3/16"
    names = [c["name"] for c in envelope["checks"]]
    assert "[K+,K-] = -2·K3" in names
    assert "{Q,Q†} = 2·K3" in names
    symbolic = [c for c in envelope["checks"] if c["name"] == "{Q,Q†} = 2·K3"]
    assert symbolic[0]["residual"] == "0 (exact)"


def test_verify_json_round_trip(capsys):
    _, out, _ = run_cli(capsys, "verify", "--dim", "16", "--format", "json")
    envelope = json.loads(out)
    report = VerificationReport.from_dict(envelope)
    assert report.as_dict() == {
        "checks": envelope["checks"],
        "casimir": envelope["casimir"],
    }
    config = RunConfig(**envelope["config"])
    assert config.dim == 16


def test_verify_json_deterministic(capsys):
    _, first, _ = run_cli(capsys, "verify", "--dim", "16", "--format", "json")
    _, second, _ = run_cli(capsys, "verify", "--dim", "16", "--format", "json")
    assert first == second


def test_verify_rejects_empty_window(capsys):
    code, _, err = run_cli(capsys, "verify", "--dim", "6")
    assert code == 2
    assert "window" in err


def test_verify_exit_code_on_failure(capsys, monkeypatch):
    # exit status must be nonzero iff a non-informational check fails
    import oscalgebra.cli as cli
    from oscalgebra.report import Check, FAIL, MODE_NUMERIC

    broken = VerificationReport(
        checks=[Check("forced failure", MODE_NUMERIC, FAIL, residual=1.0)]
    )
    monkeypatch.setattr(cli, "build_verify_report", lambda config: broken)
    code, out, _ = run_cli(capsys, "verify")
    assert code == 1
    assert "1 failed" in out


def test_verify_report_has_erratum_entries():
    report = build_verify_report(RunConfig(dim=16))
    info = [c for c in report.checks if c.status == INFORMATIONAL]
    assert len(info) == 2
    amplitude = next(c for c in info if "amplitude" in c.name)
    assert "1/2·√2" in amplitude.detail and "√2" in amplitude.detail
    norms = next(c for c in info if "norm" in c.name)
    assert "3/2" in norms.detail and "35/16" in norms.detail
    assert report.passed


# -- closure -------------------------------------------------------------------


def test_closure_minimal_graded(capsys):
    code, out, _ = run_cli(capsys, "closure", "--set", "minimal", "--mode", "graded")
    assert code == 0
    assert "dimension: 5" in out
    assert "K-" in out and "K+" in out


def test_closure_minimal_commutator_only_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "closure",
        "--set",
        "minimal",
        "--mode",
        "commutator-only",
        "--format",
        "json",
    )
    assert code == 0
    payload = json.loads(out)["closure"]
    assert payload["dimension"] == 4
    assert "1" in payload["added"]
    assert [b["name"] for b in payload["basis"]] == ["K3", "Q", "Q†", "1"]


def test_closure_so21_adds_nothing(capsys):
    code, out, _ = run_cli(capsys, "closure", "--set", "so21", "--format", "json")
    assert code == 0
    payload = json.loads(out)["closure"]
    assert payload["dimension"] == 3
    assert payload["added"] == []


def test_closure_inline_seed(capsys):
    code, out, _ = run_cli(capsys, "closure", "--set", "Q,Qdag", "--format", "json")
    assert code == 0
    assert json.loads(out)["closure"]["dimension"] == 5


def test_closure_overflow_exit_code(capsys):
    code, _, err = run_cli(capsys, "closure", "--set", "Q,Qdag", "--max-dim", "3")
    assert code == 1
    assert "max_dim" in err


def test_closure_unknown_name(capsys):
    code, _, err = run_cli(capsys, "closure", "--set", "nope")
    assert code == 2
    assert "unknown generator" in err


# -- orbit ---------------------------------------------------------------------


def test_orbit_so21_two_blocks(capsys):
    code, out, _ = run_cli(capsys, "orbit", "--set", "so21", "--seed", "0", "--dim", "16")
    assert code == 0
    assert "2 orbits" in out
    assert "even indices" in out and "odd indices" in out


def test_orbit_osp_single_block(capsys):
    code, out, _ = run_cli(
        capsys, "orbit", "--set", "osp", "--seed", "7", "--dim", "16", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)["orbits"]
    assert len(payload["partition"]) == 1
    assert payload["reachable"] == list(range(payload["window"]))


def test_orbit_diagonal_set_singleton(capsys):
    code, out, _ = run_cli(
        capsys, "orbit", "--set", "K3", "--seed", "2", "--dim", "16", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["orbits"]["reachable"] == [2]


def test_orbit_seed_out_of_window(capsys):
    code, _, err = run_cli(capsys, "orbit", "--set", "so21", "--seed", "99", "--dim", "16")
    assert code == 2
    assert "window" in err


# -- structure ------------------------------------------------------------------


def test_structure_table_text(capsys):
    code, out, _ = run_cli(capsys, "structure")
    assert code == 0
    assert "{Q†,Q†} = 2·K+" in out
    assert "[K3,Q] = -1/2·Q" in out
    assert "[K+,K-] = -2·K3" in out


def test_structure_json(capsys):
    code, out, _ = run_cli(capsys, "structure", "--format", "json")
    assert code == 0
    payload = json.loads(out)["structure"]
    assert payload["basis"] == ["K+", "K-", "K3", "Q", "Q†"]
    entry = payload["tensor"]["Q†"]["Q†"]
    assert entry["kind"] == "anticommutator"
    assert entry["coefficients"] == {"K+": "2"}
    assert payload["tensor"]["K+"]["K-"]["coefficients"] == {"K3": "-2"}


# -- spectrum -------------------------------------------------------------------


def test_spectrum_csv(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "--dim", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,E,k3,parity,norm_plus,norm_minus"
    assert lines[1] == "0,0.5,1/4,+,1/2,0"
    assert lines[2] == "1,1.5,3/4,-,3/2,0"
    assert lines[3] == "2,2.5,5/4,+,3,1/2"


def test_spectrum_scaled_json(capsys):
    code, out, _ = run_cli(
        capsys, "spectrum", "--dim", "2", "--hbar-omega", "2", "--format", "json"
    )
    assert code == 0
    rows = json.loads(out)["spectrum"]
    assert rows[0]["E"] == 1.0
    assert rows[1]["k3"] == "3/4"


def test_spectrum_rejects_bad_hbar_omega(capsys):
    code, _, _ = run_cli(capsys, "spectrum", "--hbar-omega", "-1")
    assert code == 2


# -- name resolution ----------------------------------------------------------------


def test_resolve_predefined_sets():
    assert resolve_generator_names("so21") == ["K+", "K-", "K3"]
    assert resolve_generator_names("heisenberg") == ["Q", "Q†", "1"]


def test_resolve_aliases():
    assert resolve_generator_names("Kp,k_minus,K3") == ["K+", "K-", "K3"]
    assert resolve_generator_names("q,Qdagger,I") == ["Q", "Q†", "1"]


def test_resolve_unknown():
    with pytest.raises(ValueError):
        resolve_generator_names("K4")
