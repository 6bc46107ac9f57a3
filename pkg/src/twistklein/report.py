"""Per-curve records and the classification report behind ``enumerate``."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor

from .algebra.poly import to_text
from .geometry import bitangents, count_points, frobenius_matrix_R, normalize_additive
from .group import Mat3F2, centralizer, class_of, conjugacy_classes, enumerate_group, group_structure_id
from .twist import Curve, name_of, rational_automorphisms, recover_P, twist_curve
from .zeta import class_number, expected_l, factored_string, l_from_counts

SCHEMA = 1

CSV_COLUMNS = (
    "P", "class", "order", "trace", "name", "N1", "N2", "N3",
    "L", "class_number", "bitangent_degrees", "automorphisms", "R", "equation",
)


def curve_record(curve: Curve | Mat3F2, *, with_bitangents: bool = True) -> dict:
    """Everything the report says about one twist, as plain JSON types."""
    if isinstance(curve, Mat3F2):
        curve = twist_curve(curve)
    P = curve.P if curve.P is not None else recover_P(curve)
    cls = class_of(P)
    counts = tuple(count_points(curve, k) for k in (1, 2, 3))
    L = l_from_counts(*counts)
    rec = {
        "P": str(P),
        "name": curve.name or name_of(curve),
        "class": {"id": cls.id, "order": cls.order, "trace": cls.trace},
        "equation": to_text(curve.equation),
        "N": list(counts),
        "L": L.to_list(),
        "L_factored": factored_string(L),
        "class_number": class_number(L),
        "automorphisms": len(rational_automorphisms(curve)),
    }
    if with_bitangents:
        bs = normalize_additive(bitangents(curve))
        rec["bitangent_degrees"] = sorted(bs.field_degrees)
        rec["R"] = str(frobenius_matrix_R(bs))
    return rec


def _record_for_bits(bits: int) -> dict:
    return curve_record(Mat3F2(bits))


def all_records(jobs: int = 1) -> list[dict]:
    bits = [P.bits for P in enumerate_group()]
    if jobs <= 1:
        recs = [_record_for_bits(b) for b in bits]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            recs = list(pool.map(_record_for_bits, bits, chunksize=8))
    return sorted(recs, key=lambda r: int(r["P"], 2))


def class_summaries(records: list[dict]) -> list[dict]:
    out = []
    for cls in conjugacy_classes():
        mine = [r for r in records if r["class"]["id"] == cls.id]

        def uniform(key):
            vals = {json.dumps(r.get(key)) for r in mine}
            return json.loads(vals.pop()) if len(vals) == 1 else None

        rep = cls.representative
        out.append({
            "id": cls.id,
            "order": cls.order,
            "trace": cls.trace,
            "size": len(mine),
            "representative": str(rep),
            "N": uniform("N"),
            "L": uniform("L"),
            "L_factored": uniform("L_factored"),
            "class_number": uniform("class_number"),
            "bitangent_degrees": uniform("bitangent_degrees"),
            "automorphisms": uniform("automorphisms"),
            "automorphism_group": group_structure_id(centralizer(rep)),
        })
    return out


def consistency_checks(records: list[dict]) -> dict:
    by_class = {c.id: c for c in conjugacy_classes()}
    return {
        "record_count": len(records) == 168,
        "distinct_equations": len({r["equation"] for r in records}) == len(records),
        "R_is_P_transpose": all(
            r.get("R") == str(Mat3F2.from_string(r["P"]).T) for r in records),
        "automorphisms_are_centralizer": all(
            r["automorphisms"] == len(centralizer(Mat3F2.from_string(r["P"]))) for r in records),
        "L_matches_class": all(
            r["L"] == expected_l(by_class[r["class"]["id"]]).to_list() for r in records),
        "seven_bitangents": all(len(r.get("bitangent_degrees", ())) == 7 for r in records),
    }


def build_report(jobs: int = 1) -> dict:
    records = all_records(jobs)
    return {
        "schema": SCHEMA,
        "curves": records,
        "classes": class_summaries(records),
        "checks": consistency_checks(records),
    }


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _cell(rec: dict, col: str) -> str:
    if col == "class":
        return rec["class"]["id"]
    if col in ("order", "trace"):
        return str(rec["class"][col])
    if col in ("N1", "N2", "N3"):
        return str(rec["N"][int(col[1]) - 1])
    if col in ("L", "bitangent_degrees"):
        return " ".join(str(x) for x in rec.get(col, ()))
    v = rec.get(col)
    return "" if v is None else str(v)


def to_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for rec in records:
        w.writerow([_cell(rec, c) for c in CSV_COLUMNS])
    return buf.getvalue()


def read_csv(text: str) -> list[dict]:
    """Inverse of :func:`to_csv` (drops the factored L string)."""
    rows = list(csv.DictReader(io.StringIO(text)))
    out = []
    for row in rows:
        rec = {
            "P": row["P"],
            "name": row["name"] or None,
            "class": {"id": row["class"], "order": int(row["order"]), "trace": int(row["trace"])},
            "equation": row["equation"],
            "N": [int(row["N1"]), int(row["N2"]), int(row["N3"])],
            "L": [int(x) for x in row["L"].split()],
            "class_number": int(row["class_number"]),
            "automorphisms": int(row["automorphisms"]),
        }
        if row["bitangent_degrees"]:
            rec["bitangent_degrees"] = [int(x) for x in row["bitangent_degrees"].split()]
        if row["R"]:
            rec["R"] = row["R"]
        out.append(rec)
    return out
