"""Command-line behavior: exit codes, report files, determinism."""

import csv
import json

import pytest

from tamekit.cli import DEFAULT_CONFIG, SuiteConfig, UsageError, main


def test_chartab_stdout_json(capsys):
    assert main(["chartab", "--group", "S3"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["group"] == "S3"
    assert report["certification"]["pass"]


def test_chartab_csv(capsys):
    assert main(["chartab", "--group", "C5", "--format", "csv"]) == 0
    rows = list(csv.reader(capsys.readouterr().out.splitlines()))
    assert rows[0][:2] == ["chi", "degree"]
    assert len(rows) == 6  # header + five characters


def test_pairing_element_forms(capsys):
    for elt in ["(1 2 3)", "4"]:
        assert main(["pairing", "--group", "S3", "--s", elt]) == 0
        json.loads(capsys.readouterr().out)


def test_pairing_csv(capsys):
    assert main(["pairing", "--group", "C3", "--s", "1", "--format",
                 "csv"]) == 0
    rows = list(csv.reader(capsys.readouterr().out.splitlines()))
    assert rows[0] == ["chi", "degree", "value"]
    assert len(rows) == 4


def test_usage_errors_exit_two(capsys):
    cases = [
        ["pairing", "--group", "NOPE", "--s", "0"],
        ["pairing", "--group", "S3", "--s", "17"],
        ["pairing", "--group", "S3", "--s", "(1 2)", "--star"],
        ["crux", "--p", "11", "--e", "4"],
        ["crux", "--p", "12", "--e", "3"],
        ["gauss", "--p", "9"],
        ["gauss", "--p", "7", "--order", "4"],
    ]
    for argv in cases:
        assert main(argv) == 2, argv
        capsys.readouterr()


def test_unknown_command_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_crux_and_gauss_pass(capsys):
    assert main(["crux", "--p", "7", "--e", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["pass"]
    assert main(["gauss", "--p", "5"]) == 0
    assert json.loads(capsys.readouterr().out)["pass"]


def test_localmodel_verify(capsys):
    assert main(["localmodel", "verify", "--group", "S3", "--s", "(1 2 3)",
                 "--n", "1"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["factorization"]["pass"] and report["kummer"]["pass"]


def test_ledger_demo(capsys):
    assert main(["ledger", "demo"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["round_trip"] and report["pass"]
    assert report["factors"] == 3


def test_out_directory(tmp_path, capsys):
    out = tmp_path / "reports"
    assert main(["chartab", "--group", "C3", "--out", str(out)]) == 0
    capsys.readouterr()
    written = json.loads((out / "chartab-C3.json").read_text())
    assert written["certification"]["pass"]


def test_suite_config_validation():
    SuiteConfig({})  # defaults are valid
    with pytest.raises(UsageError):
        SuiteConfig({"bogus": 1})
    with pytest.raises(UsageError):
        SuiteConfig({"primes": [9]})
    with pytest.raises(UsageError):
        SuiteConfig({"e_values": [4]})
    with pytest.raises(UsageError):
        SuiteConfig({"crux": [[11, 4]]})
    with pytest.raises(UsageError):
        SuiteConfig({"crux": [[11, 3]]})  # 3 does not divide 10
    with pytest.raises(UsageError):
        SuiteConfig({"format": "yaml"})
    assert SuiteConfig({}).groups == DEFAULT_CONFIG["groups"]


def test_suite_runs_are_byte_identical(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({
        "groups": ["C3", "S3"], "primes": [5], "e_values": [3],
        "crux": [[7, 3]]}))
    outs = []
    for sub in ("one", "two"):
        out = tmp_path / sub
        assert main(["suite", "--config", str(config),
                     "--out", str(out)]) == 0
        capsys.readouterr()
        outs.append({f.name: f.read_bytes()
                     for f in sorted(out.iterdir())})
    assert outs[0] == outs[1]
    summary = json.loads(outs[0]["summary.json"].decode())
    assert summary["pass"]
    assert {c["check"] for c in summary["checks"]} == {
        "identities-C3", "chartab-C3", "factorization-C3",
        "identities-S3", "chartab-S3", "factorization-S3",
        "kummer-e3", "gauss-p5", "ledger-demo", "crux-p7-e3"}


def test_suite_csv_summary(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({
        "groups": ["C3"], "primes": [3], "e_values": [1], "crux": []}))
    out = tmp_path / "r"
    assert main(["suite", "--config", str(config), "--format", "csv",
                 "--out", str(out)]) == 0
    capsys.readouterr()
    rows = list(csv.reader((out / "summary.csv").read_text().splitlines()))
    assert rows[0] == ["check", "pass"]
    assert all(row[1] == "true" for row in rows[1:])


def test_suite_bad_config_exits_two(tmp_path, capsys):
    missing = tmp_path / "nope.json"
    assert main(["suite", "--config", str(missing),
                 "--out", str(tmp_path / "r")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["suite", "--config", str(bad),
                 "--out", str(tmp_path / "r")]) == 2
    capsys.readouterr()
