"""Scan pipeline determinism, counterexample artifacts, and the CLI."""
import io
import json
from fractions import Fraction

import pytest

import gtough.scan
from gtough import (
    ClauseVerdict,
    ScanConfig,
    StrictScanError,
    analyze_graph,
    enumerate_connected,
    half_tough_family,
    make_cycle,
    revalidate_counterexample,
    scan_lines,
    write_graph6,
)
from gtough.cli import main
from gtough.scan import _jsonable


def _lines(graphs):
    return [(i + 1, write_graph6(g)) for i, g in enumerate(graphs)]


def _failing_ms(g):
    return ClauseVerdict(
        "ms", applicable=True, holds=False, witness={"forced": True}
    )


def test_scan_config_validation():
    config = ScanConfig(t="3/2", filters=("claw-free",), checks=("ms", "cert"))
    assert config.t == Fraction(3, 2)
    with pytest.raises(ValueError):
        ScanConfig(t=0)
    with pytest.raises(ValueError):
        ScanConfig(t=1, filters=("clawfree",))
    with pytest.raises(ValueError):
        ScanConfig(t=1, checks=("ms", "nope"))
    with pytest.raises(TypeError):
        ScanConfig(t=0.5)
    with pytest.raises(AttributeError):
        config.t = Fraction(1)


def test_jsonable_normalizes():
    got = _jsonable({"t": Fraction(1, 3), "cut": (0, 2), "deep": [(1, 2)]})
    assert got == {"t": "1/3", "cut": [0, 2], "deep": [[1, 2]]}


def test_analyze_graph_record():
    config = ScanConfig(t=1)
    record, counters = analyze_graph(make_cycle(4), "Cl", config)
    assert counters == []
    assert record.violations == []
    assert (record.n, record.m, record.kappa, record.delta) == (4, 4, 2, 2)
    assert record.tau == "1/1"
    assert record.claw_free and record.minimally_t_tough
    assert record.bound == 2 and record.bound_ok
    assert tuple(record.checks) == config.checks

    assert record.checks["ms"] == {
        "applicable": 1, "held": 1, "failed": 0, "not_evaluable": 0, "vacuous": 0,
    }
    assert record.checks["cert"]["held"] == 4
    assert record.checks["endpoints"]["held"] == 4
    assert record.checks["clauses"]["vacuous"] == 24
    assert record.checks["bound"]["held"] == 1
    assert record.checks["mader"]["held"] == 1
    assert record.checks["construction"]["vacuous"] == 1

    filtered = analyze_graph(make_cycle(5), "Dhc", ScanConfig(t=1, filters=("minimal",)))
    assert filtered[0] is not None
    gone = analyze_graph(make_cycle(5), "Dhc", ScanConfig(t=2, filters=("minimal",)))
    assert gone == (None, [])


def test_bound_check_gated_to_proved_thresholds():
    # minimally 5/4-tough graphs are unproved territory: bound stays vacuous
    config = ScanConfig(t=Fraction(5, 4), checks=("bound",))
    record, _ = analyze_graph(make_cycle(4), "Cl", config)
    assert record.checks["bound"]["vacuous"] == 1

    record, _ = analyze_graph(make_cycle(4), "Cl", ScanConfig(t=1, checks=("bound",)))
    assert record.checks["bound"]["held"] == 1


def test_scan_reports_are_deterministic_across_workers():
    corpus = _lines(g for g in enumerate_connected(5))
    config = ScanConfig(t=1)
    solo = scan_lines(corpus, config, source="unit", workers=1, verbose=True)
    duo = scan_lines(corpus, config, source="unit", workers=2, verbose=True)
    assert solo.to_json() == duo.to_json()
    assert solo.totals["lines"] == 21
    assert solo.totals["qualifying"] == 21
    assert solo.outcome == "all checks passed"
    assert solo.exit_code == 0
    assert len(solo.records) == 21
    assert all(rec["elapsed_ms"] == 0 for rec in solo.records)


def test_scan_verbose_toggle_and_totals():
    corpus = _lines([make_cycle(4), make_cycle(5)])
    report = scan_lines(corpus, ScanConfig(t=1), source="unit")
    assert report.totals == {
        "lines": 2, "malformed": 0, "scanned": 2, "qualifying": 2, "violations": 0,
    }
    assert report.records == []  # non-verbose keeps only failing records
    assert report.check_totals["ms"]["held"] == 2


def test_scan_malformed_lines():
    corpus = [(1, "Cl"), (2, "C l"), (3, "?"), (4, "Bg")]
    report = scan_lines(corpus, ScanConfig(t=1), source="unit")
    assert report.totals["malformed"] == 2
    assert report.totals["scanned"] == 2
    assert report.malformed[0]["line"] == 2
    assert "graph6" in report.malformed[0]["error"]
    assert report.malformed[1] == {"line": 3, "text": "?", "error": "empty graph"}

    with pytest.raises(StrictScanError):
        scan_lines(corpus, ScanConfig(t=1), source="unit", strict=True)


def test_scan_no_qualifying_graphs():
    corpus = _lines([make_cycle(4), make_cycle(5)])
    report = scan_lines(
        corpus, ScanConfig(t=2, filters=("minimal",)), source="unit"
    )
    assert report.totals["qualifying"] == 0
    assert report.outcome == "no qualifying graphs"
    assert report.exit_code == 0


def test_counterexample_artifact_and_revalidation(monkeypatch):
    corpus = _lines([make_cycle(4)])
    config = ScanConfig(t=1, checks=("ms",))
    with monkeypatch.context() as patch:
        patch.setattr(gtough.scan, "check_matthews_sumner", _failing_ms)
        report = scan_lines(corpus, config, source="unit")
        assert report.outcome == "counterexamples found"
        assert report.exit_code == 2
        assert report.totals["violations"] == 1
        assert report.records[0]["violations"] == ["ms"]

        entry = report.counterexamples[0]
        assert entry["graph6"] == "Cl"
        assert entry["check"] == "ms"
        assert entry["t"] == "1/1"
        assert entry["exhaustive"] is False
        assert entry["evidence"]["witness"] == {"forced": True}

        # with the fault still injected the artifact reproduces
        assert revalidate_counterexample(entry) is True

    # after the fault is removed it no longer does
    assert revalidate_counterexample(entry) is False

    doctored = dict(entry, evidence={"witness": {"forced": False}})
    with monkeypatch.context() as patch:
        patch.setattr(gtough.scan, "check_matthews_sumner", _failing_ms)
        assert revalidate_counterexample(doctored) is False


def test_cli_analyze(capsys):
    code = main(["analyze", "Cl", "--t", "1"])
    out = capsys.readouterr().out
    assert code == 0
    assert "graph6: Cl" in out
    assert "n=4 m=4 kappa=2 tau=1/1 delta=2" in out
    payload = json.loads(out[out.index("{"):])
    assert payload["record"]["tau"] == "1/1"
    assert payload["counterexamples"] == []


def test_cli_analyze_check_subset(capsys):
    code = main(["analyze", "IheA@GUAo", "--t", "4/3", "--check", "ms"])
    out = capsys.readouterr().out
    assert code == 0
    payload = json.loads(out[out.index("{"):])
    assert list(payload["record"]["checks"]) == ["ms"]
    assert payload["record"]["checks"]["ms"]["vacuous"] == 1  # Petersen has claws


def test_cli_analyze_input_errors(capsys):
    assert main(["analyze", "--t", "1"]) == 1
    assert main(["analyze", "Cl", "--file", "x", "--t", "1"]) == 1
    assert main(["analyze", "C l", "--t", "1"]) == 1
    assert main(["analyze", "Cl", "--t", "0"]) == 1
    err = capsys.readouterr().err
    assert err.count("error:") == 4


def test_cli_analyze_from_file(tmp_path, capsys):
    src = tmp_path / "one.g6"
    src.write_text(">>graph6<<\nCl\n")
    assert main(["analyze", "--file", str(src), "--t", "1"]) == 0
    assert "graph6: Cl" in capsys.readouterr().out


def test_cli_scan_roundtrip(tmp_path, capsys):
    corpus = tmp_path / "corpus.g6"
    corpus.write_text(
        "".join(write_graph6(g) + "\n" for g in enumerate_connected(4))
    )
    report_a = tmp_path / "a.json"
    report_b = tmp_path / "b.json"

    code = main(["scan", str(corpus), "--t", "1", "--report", str(report_a)])
    out = capsys.readouterr().out
    assert code == 0
    assert "scanned 6 lines" in out
    assert "outcome: all checks passed" in out

    code = main([
        "scan", str(corpus), "--t", "1", "--workers", "3",
        "--report", str(report_b),
    ])
    capsys.readouterr()
    assert code == 0
    assert report_a.read_bytes() == report_b.read_bytes()

    data = json.loads(report_a.read_text())
    assert data["schema"] == 1
    assert data["t"] == "1/1"
    assert data["totals"]["qualifying"] == 6


def test_cli_scan_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("Cl\nBg\n"))
    code = main(["scan", "-", "--t", "1/2", "--check", "ms"])
    out = capsys.readouterr().out
    assert code == 0
    assert "scanned 2 lines" in out


def test_cli_scan_strict_and_lax(tmp_path, capsys):
    corpus = tmp_path / "bad.g6"
    corpus.write_text("Cl\nC l\n")
    assert main(["scan", str(corpus), "--t", "1", "--strict"]) == 1
    captured = capsys.readouterr()
    assert "error: line 2" in captured.err

    assert main(["scan", str(corpus), "--t", "1"]) == 0
    assert "1 malformed" in capsys.readouterr().out


def test_cli_scan_counterexample_exit_code(monkeypatch, tmp_path, capsys):
    corpus = tmp_path / "c.g6"
    corpus.write_text("Cl\n")
    monkeypatch.setattr(gtough.scan, "check_matthews_sumner", _failing_ms)
    code = main(["scan", str(corpus), "--t", "1", "--check", "ms"])
    out = capsys.readouterr().out
    assert code == 2
    assert "outcome: counterexamples found" in out


def test_cli_generate(capsys):
    assert main(["generate", "connected", "--n", "5"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 21

    assert main(["generate", "trees", "--n", "7", "--min-n", "1"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 25

    assert main(["generate", "half-tough", "--max-n", "6"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == len(half_tough_family(6))

    assert main(["generate", "graphs"]) == 1  # --n required
    assert main(["generate", "trees", "--n", "3", "--min-n", "5"]) == 1
    assert capsys.readouterr().err.count("error:") == 2


def test_cli_selftest_passes(capsys):
    assert main(["selftest"]) == 0
    out = capsys.readouterr().out
    assert "selftest: all suites passed" in out
    assert "ok fixtures" in out and "ok oracle parity" in out


def test_cli_selftest_missing_fixture(monkeypatch, capsys):
    monkeypatch.setattr("gtough.selftest.FIXTURE_G6", "absent.g6")
    assert main(["selftest"]) == 1
    out = capsys.readouterr().out
    assert "selftest fixture missing: absent.g6" in out


def test_cli_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert capsys.readouterr().out.startswith("gtough ")


def test_cli_bench_smoke(capsys):
    assert main(["bench", "--sizes", "8", "--trials", "1"]) == 0
    out = capsys.readouterr().out
    assert "min_ratio_cut benchmark" in out
    assert main(["bench", "--sizes", "", "--trials", "1"]) == 1
