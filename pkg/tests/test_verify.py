import json

import pytest

from src.evaluation.verify import (
    SUITES,
    VerifyOptions,
    _check,
    run_verification,
)
from src.monitoring.metrics import CheckCollector
from src.utils.errors import InvalidCard, JugglingError


@pytest.mark.parametrize("suite", ["census", "golden", "traces", "conjecture"])
def test_cheap_suites_pass(suite):
    report = run_verification(suite)
    assert report.ok, [c for c in report.checks if not c.passed]
    assert report.total == report.passed > 0


def test_oracle_suite_small():
    opts = VerifyOptions(oracle_max_balls=2, oracle_max_period=3, threads=2)
    report = run_verification("oracle", opts)
    assert report.ok
    names = {c.name for c in report.checks}
    assert names == {"closed_walks", "siteswaps", "patterns", "q_crossings"}


def test_charpoly_suite_small():
    report = run_verification("charpoly", VerifyOptions(charpoly_max_balls=5))
    assert report.ok


@pytest.mark.slow
def test_everything():
    assert run_verification("all").ok


def test_unknown_suite():
    assert "tables" in SUITES
    with pytest.raises(JugglingError):
        run_verification("everything")


def test_timings_only_on_request():
    plain = run_verification("golden")
    timed = run_verification("golden", timings=True)
    assert all(c.duration_ms is None for c in plain.checks)
    assert all(c.duration_ms is not None for c in timed.checks)


def test_report_json_uses_pass_key():
    report = run_verification("golden")
    data = report.model_dump(by_alias=True)
    assert "pass" in data["checks"][0]
    assert data["checks"][0]["parameters"] == {"b": 0}


def test_failed_and_raising_checks_are_recorded():
    collector = CheckCollector()
    _check(collector, "wrong", {"b": 1}, 3, lambda: 2)

    def boom():
        raise InvalidCard("bad card")

    _check(collector, "raises", {"b": 2}, 1, boom)
    _check(collector, "right", {}, 1, lambda: 1)
    assert [r.passed for r in collector.history] == [False, False, True]
    assert collector.history[1].error == "InvalidCard: bad card"
    summary = collector.summary()
    assert summary["failed"] == 2
    assert summary["count"] == 3


@pytest.mark.parametrize("compute", [lambda: 1 // 0, lambda: ()[1], lambda: len(None)])
def test_any_exception_in_a_check_is_recorded(compute):
    collector = CheckCollector()
    _check(collector, "broken", {}, 1, compute)
    _check(collector, "after", {}, 1, lambda: 1)
    assert [r.passed for r in collector.history] == [False, True]
    assert collector.history[0].actual.startswith("error: ")


def test_checks_file_holds_every_measurement(tmp_path):
    path = tmp_path / "out" / "checks.json"
    report = run_verification("golden", checks_file=str(path))
    rows = json.loads(path.read_text(encoding="utf-8"))
    assert len(rows) == report.total
    assert {"name", "duration_ms", "memory_delta_mb"} <= set(rows[0])
    assert all(r["duration_ms"] >= 0 for r in rows)
