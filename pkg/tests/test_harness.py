"""Randomized verification harness: sampling, evaluation, suite reports."""

import csv
import json

import pytest

from ineq import (
    InputFormatError,
    THEOREM_IDS,
    emit_report,
    evaluate_file,
    evaluate_instance,
    run_suite,
    sample_admissible,
)
from ineq.harness import CSV_COLUMNS, REAL_ONLY_IDS, normalize_theorem_id


def test_theorem_catalog():
    assert len(THEOREM_IDS) == 25
    assert len(set(THEOREM_IDS)) == 25
    assert REAL_ONLY_IDS <= set(THEOREM_IDS)
    assert normalize_theorem_id(" Thm2.1 ") == "thm2.1"
    with pytest.raises(InputFormatError, match="unknown theorem id"):
        normalize_theorem_id("thm9.9")


def test_sampling_is_deterministic():
    a = sample_admissible("thm2.2", "complex", 3, seed=5, index=9)
    b = sample_admissible("thm2.2", "complex", 3, seed=5, index=9)
    assert a == b
    c = sample_admissible("thm2.2", "complex", 3, seed=5, index=10)
    assert a != c


def test_every_theorem_samples_admissibly_in_both_fields():
    for tid in THEOREM_IDS:
        fields = ["real"] if tid in REAL_ONLY_IDS else ["real", "complex"]
        for field in fields:
            inst = sample_admissible(tid, field, 3, seed=1, index=2)
            result = evaluate_instance(inst)
            assert result.admissible, (tid, field)
            assert result.passed(), (tid, field)


def test_real_only_ids_force_real_field():
    inst = sample_admissible("prop7.11", "complex", 3, seed=0)
    assert inst["field"] == "real"


def test_small_suite_has_no_violations():
    rep = run_suite(trials=8, dims=(1, 2, 3), fields=("real", "complex"), seed=3)
    assert rep.violations == 0
    assert rep.aggregate["count"] == 25 * 8
    assert all(stats["count"] == 8 for stats in rep.per_theorem.values())
    assert rep.metadata["mode"] == "verify"
    assert rep.metadata["adversarial"] is False


def test_adversarial_mode_finds_counterexamples():
    rep = run_suite(
        theorems=["thm2.1", "thm2.2", "thm4.1", "thm5.1"],
        trials=40,
        seed=0,
        adversarial=True,
    )
    assert rep.violations == 0
    for tid in ("thm2.1", "thm2.2", "thm4.1", "thm5.1"):
        assert rep.per_theorem[tid]["counterexamples"] > 0, tid
    assert rep.counterexamples == sum(
        s["counterexamples"] for s in rep.per_theorem.values()
    )


def test_complex_only_run_skips_real_only_theorems():
    rep = run_suite(theorems=["prop7.11"], trials=4, dims=(2,), fields=("complex",))
    assert rep.per_theorem["prop7.11"]["count"] == 0


def test_record_structure_and_prefix_determinism():
    kwargs = dict(theorems=["thm2.2"], dims=(2, 3), fields=("real",), seed=11)
    long = run_suite(trials=6, keep_records=True, **kwargs)
    short = run_suite(trials=3, keep_records=True, **kwargs)
    assert long.records[:3] == short.records
    rec = short.records[0]
    assert set(rec) == {
        "index", "theorem", "field", "dim", "admissible", "margin",
        "gap", "bound", "slack", "passed", "comparisons",
    }
    for entry in rec["comparisons"]:
        assert len(entry) == 5 and isinstance(entry[4], bool)
    assert "records" in long.as_dict()
    assert "records" not in run_suite(trials=2, **kwargs).as_dict()


def test_run_suite_validates_arguments():
    with pytest.raises(InputFormatError):
        run_suite(trials=0)
    with pytest.raises(InputFormatError):
        run_suite(trials=1, seed=-1)
    with pytest.raises(InputFormatError):
        run_suite(trials=1, dims=(0,))
    with pytest.raises(InputFormatError):
        run_suite(trials=1, fields=())


def test_evaluate_instance_rejects_malformed_input():
    with pytest.raises(InputFormatError):
        evaluate_instance([1, 2])
    with pytest.raises(InputFormatError):
        evaluate_instance({})
    with pytest.raises(InputFormatError):
        evaluate_instance({"theorem": "thm9.9", "field": "real"})
    with pytest.raises(InputFormatError):
        evaluate_instance({"theorem": "thm2.1", "field": "real"})
    with pytest.raises(InputFormatError):
        evaluate_instance(
            {"theorem": "thm2.1", "field": "real", "x": [1, 0], "a": [1, 0]}
        )  # no radius


def test_evaluate_file_matches_in_memory_results(tmp_path):
    instances = [
        sample_admissible(tid, field, 3, seed=4, index=i)
        for i, (tid, field) in enumerate(
            [("thm2.1", "real"), ("thm2.2", "complex"), ("thm5.1", "real"), ("prop7.1", "real")]
        )
    ]
    path = tmp_path / "instances.json"
    path.write_text(json.dumps({"instances": instances}), encoding="utf-8")
    rep = evaluate_file(str(path))
    assert rep.metadata["mode"] == "eval"
    assert rep.aggregate["count"] == 4
    assert rep.violations == 0
    assert len(rep.records) == 4
    for inst, rec in zip(instances, rep.records):
        direct = evaluate_instance(inst)
        assert rec["gap"] == direct.gap
        assert rec["bound"] == direct.bound
        assert rec["theorem"] == direct.theorem


def test_evaluate_file_error_reporting(tmp_path):
    with pytest.raises(InputFormatError):
        evaluate_file(str(tmp_path / "missing.json"))
    bad_top = tmp_path / "top.json"
    bad_top.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(InputFormatError, match="instances"):
        evaluate_file(str(bad_top))
    bad_inst = tmp_path / "inst.json"
    bad_inst.write_text(json.dumps({"instances": [{"theorem": "thm2.1"}]}), encoding="utf-8")
    with pytest.raises(InputFormatError, match="instance 0"):
        evaluate_file(str(bad_inst))


def test_emit_report_json_and_csv(tmp_path):
    rep = run_suite(
        theorems=["thm2.1"], trials=4, dims=(2,), fields=("real",), keep_records=True
    )
    jpath = tmp_path / "rep.json"
    emit_report(rep, str(jpath), "json")
    text = jpath.read_text(encoding="utf-8")
    assert text.endswith("\n")
    doc = json.loads(text)
    assert doc["aggregate"]["count"] == 4

    cpath = tmp_path / "rep.csv"
    emit_report(rep, str(cpath), "csv")
    with open(cpath, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == 5
    assert rows[1][4] in ("true", "false")

    bare = run_suite(theorems=["thm2.1"], trials=2, dims=(2,), fields=("real",))
    with pytest.raises(InputFormatError):
        emit_report(bare, str(cpath), "csv")
    with pytest.raises(InputFormatError):
        emit_report(rep, str(cpath), "xml")
