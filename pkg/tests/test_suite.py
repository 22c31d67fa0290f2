import json

import pytest

from totalgroup.suite import (ConfigError, SuiteConfig, custom_check, known_total_group_number,
                              run_suite, write_report)
from totalgroup.graph import cycle, path, star


def test_config_defaults_and_errors():
    cfg = SuiteConfig()
    assert len(cfg.claims) == 11
    assert SuiteConfig(graphs=["cycle:3"], groups=["Z3"]).claims == []
    with pytest.raises(ConfigError):
        SuiteConfig(trials=0)
    with pytest.raises(ConfigError):
        SuiteConfig(budget_nodes=-1)
    with pytest.raises(ConfigError):
        SuiteConfig(claims=["C99"])
    with pytest.raises(ConfigError):
        SuiteConfig.from_json({"colour": 3})


def test_config_roundtrip():
    cfg = SuiteConfig(claims=["C5"], seed=3, trials=7)
    assert SuiteConfig.from_json(cfg.to_json()) == cfg


def test_zero_budget_marks_every_claim():
    report = run_suite(SuiteConfig(budget_seconds=0))
    assert [r.status for r in report.results] == ["budget-exceeded"] * 11
    assert not report.ok
    assert all(r.statement for r in report.results)


def test_report_is_reproducible(tmp_path):
    cfg = SuiteConfig(claims=["C5", "C9", "C11"], trials=20)
    texts = []
    for run in ("a", "b"):
        write_report(run_suite(cfg), str(tmp_path / run))
        texts.append((tmp_path / run / "report.json").read_text())
    assert texts[0] == texts[1]
    data = json.loads(texts[0])
    assert data["schema"] == 1
    assert [c["claim"] for c in data["claims"]] == ["C5", "C9", "C11"]
    assert (tmp_path / "a" / "timings.json").exists()
    assert "C9" in (tmp_path / "a" / "report.md").read_text()


def test_known_values():
    assert known_total_group_number("cycle:4", cycle(4)) == 4
    assert known_total_group_number("path:5", path(5)) == 3
    assert known_total_group_number("star:4", star(4)) == 5


def test_custom_checks():
    cfg = SuiteConfig(claims=[])
    assert custom_check("X1", "cycle:3", "Z3", cfg).status == "fails (expected)"
    assert custom_check("X2", "cycle:3", "Z4", cfg).status == "holds"
    assert custom_check("X3", "path:4", "Z3", cfg).status == "holds"
    report = run_suite(SuiteConfig(graphs=["cycle:4"], groups=["Z3", "Z4"]))
    assert [r.claim for r in report.results] == ["X1", "X2"]
    assert report.ok
