import math
from pathlib import Path

import pytest

import ctxrbi

ROOT = Path(__file__).resolve().parents[2]
DATA = ROOT / "data"


def test_table_cell_and_tail():
    model = ctxrbi.WeModel(DATA / "we_sample_rows.csv")
    assert len(model) == 2
    assert model.lookup(1, "bottom", 0, "000", 0) == 0.547
    assert model.lookup(1, "bottom", 0, "100", -5) == 0.153
    assert 0.914 < model.lookup(1, "bottom", 0, "000", 9) < 1.0
    values = model.curve(1, "bottom", 0, "000", [x / 2 for x in range(-20, 21)])
    assert values == sorted(values)


def test_unknown_state_raises_with_kind():
    model = ctxrbi.WeModel(DATA / "we_sample_rows.csv")
    with pytest.raises(ctxrbi.CtxRbiError) as info:
        model.lookup(5, "top", 1, "000", 0)
    assert info.value.kind == "UnknownState"


def test_metric_values():
    assert ctxrbi.alpha(0.0) == 1.0
    assert math.isclose(ctxrbi.alpha(0.2), 1.379948962255225, abs_tol=1e-12)
    assert math.isclose(ctxrbi.beta(0.2, 0.25), 0.3134393702161988, abs_tol=1e-12)
    event = ctxrbi.score_event(0.051, 0.014, 1)
    assert event["beta"] == 1.0
    assert event["crbi"] == event["arbi"] < 1.0
    assert math.isclose(ctxrbi.pchip([-1, 0, 1], [0.2, 0.5, 0.8], [0.5])[0], 0.65, abs_tol=1e-12)


def test_compute_fixture(tmp_path):
    result = ctxrbi.compute(DATA / "we_synthetic.csv", DATA / "season20_events.csv", min_rbi=5,
                            output_dir=tmp_path, formats=["json"])
    assert result["summary"]["event_count"] == 20
    top = result["ledgers"][0]
    assert top["batter_id"] == "B01" and top["rbi"] == 10
    assert math.isclose(top["arbi"], 14.541355873999901, abs_tol=1e-9)
    assert (tmp_path / "summary.json").exists()
    for ledger in result["ledgers"]:
        assert 0 < ledger["arbi_per_rbi"] <= 2
        assert 0 < ledger["crbi_per_rbi"] <= 2
