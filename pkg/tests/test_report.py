import json

import pytest

from twistklein.group import IDENTITY
from twistklein.report import SCHEMA, build_report, curve_record, read_csv, to_csv, to_json


@pytest.fixture(scope="module")
def report():
    return build_report(jobs=1)


def test_report_shape(report):
    assert report["schema"] == SCHEMA == 1
    assert len(report["curves"]) == 168
    assert all(report["checks"].values())


def test_json_round_trip(report):
    text = to_json(report)
    assert json.loads(text) == report
    assert to_json(json.loads(text)) == text


def test_csv_round_trip(report):
    rows = read_csv(to_csv(report["curves"]))
    for rec, row in zip(report["curves"], rows):
        want = {k: v for k, v in rec.items() if k != "L_factored"}
        assert row == want


def test_class_summaries(report):
    s = {c["id"]: c for c in report["classes"]}
    assert s["3"]["size"] == 56 and s["3"]["N"][0] == 3 and s["3"]["L_factored"] == "z+ * z3"
    assert s["1"]["automorphism_group"] == "PSL(3,2)"
    assert s["2"]["L_factored"] == "z+ * (z-)^2"
    assert s["4"]["L_factored"] == "z+ * z2"
    assert [s[i]["class_number"] for i in ("1", "7a", "7b", "3", "4", "2")] == [8, 71, 1, 14, 4, 32]


def test_identity_record():
    rec = curve_record(IDENTITY)
    assert rec["N"] == [0, 14, 24] and rec["automorphisms"] == 168
    assert rec["name"] == "alpha" and rec["bitangent_degrees"] == [1] * 7
