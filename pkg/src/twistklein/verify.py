"""The end-to-end verification suite behind ``verify-paper``.

Each check returns a :class:`CheckResult`; FINDING results document a
resolved discrepancy in the reference data and do not count as failures.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .geometry import (
    PARAMETRIZATIONS, additive_defines_fano, bitangents, count_points, divisor_form_check,
    expected_tangent_divisor, frobenius_matrix_R, is_additively_closed, matches_parametrization,
    normalize_additive, rational_points, tangent_intersection_divisor,
)
from .group import IDENTITY, CYCLIC_SHIFT, Mat3F2, centralizer, class_of, conjugacy_classes, enumerate_group, group_structure_id
from .identities import dickson_invariants, elliptic_identity, elliptic_identity_variant_probe, reduce_and_compare, verify_invariance
from .twist import (
    PRINTED_P, are_equivalent, equivalences, named, rational_automorphisms, recover_P,
    sum_identity_check, twist_curve,
)
from .zeta import Z7_MINUS, Z7_PLUS, class_number, expected_l, l_from_counts, printed_l_for, zeta_product

PASS, FAIL, FINDING = "PASS", "FAIL", "FINDING"


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def line(self) -> str:
        return f"{self.status:7} {self.name}" + (f"  {self.detail}" if self.detail else "")


def _check(name, ok, detail=""):
    return CheckResult(name, PASS if ok else FAIL, detail)


CLASS_TABLE = [(1, 1, 1), (7, 0, 24), (7, 1, 24), (3, 0, 56), (4, 1, 42), (2, 1, 21)]
N1_BY_CLASS = {"1": 0, "7a": 7, "7b": 0, "3": 3, "4": 2, "2": 4}
CATALOG_AUT = {
    "alpha": (168, "PSL(3,2)"), "X_N7": (7, "Z/7Z"), "X_h1": (7, "Z/7Z"),
    "K": (3, "Z/3Z"), "X_N2": (4, "Z/4Z"), "X_N4": (8, "D4"),
}


def check_group():
    G = enumerate_group()
    got = [(c.order, c.trace, c.size) for c in conjugacy_classes()]
    return [_check("group.classes", len(G) == 168 and got == CLASS_TABLE, f"{len(G)} elements, {got}")]


def check_construction():
    curves = [twist_curve(P) for P in enumerate_group()]
    distinct = len({c.equation for c in curves}) == 168
    return [
        _check("construction.distinct", distinct, "168 exact quotients"),
        _check("construction.identity_is_alpha", twist_curve(IDENTITY).equation == named("alpha").equation),
        _check("construction.shift_is_K", twist_curve(CYCLIC_SHIFT).equation == named("K").equation),
    ]


def check_counts():
    bad = []
    for c in conjugacy_classes():
        vals = {count_points(twist_curve(P), 1) for P in c.members}
        if vals != {N1_BY_CLASS[c.id]}:
            bad.append((c.id, sorted(vals)))
    return [_check("counts.N1_per_class", not bad, str(bad) if bad else "0 7 0 3 2 4")]


def check_zeta():
    out = []
    products = {2: [1, 0, 3, 0, 4], 3: [1, 0, 0, 5, 0, 0, 8], 4: [1, 0, 0, 0, -1, 0, 0, 0, 16],
                7: [1] + [0] * 6 + [13] + [0] * 6 + [128]}
    ok = all(zeta_product(m).to_list() == v for m, v in products.items())
    out.append(_check("zeta.products", ok, "m = 2, 3, 4, 7"))
    out.append(_check("zeta.z7_coefficients",
                      Z7_PLUS.to_list() == [1, 4, 9, 15, 18, 16, 8]
                      and Z7_MINUS.to_list() == [1, -3, 2, 1, 4, -12, 8]))
    mismatched, printed_bad = [], []
    for c in conjugacy_classes():
        for P in c.members:
            L = l_from_counts(*twist_curve(P).counts())
            if L != expected_l(c):
                mismatched.append(str(P))
        L = l_from_counts(*twist_curve(c.representative).counts())
        if L != printed_l_for(c.order, c.trace):
            printed_bad.append(f"class {c.id}: counts give {L}, table lists {printed_l_for(c.order, c.trace)}")
    out.append(_check("zeta.counts_match_class", not mismatched, f"{len(mismatched)} mismatches"))
    out.append(_check("zeta.tabulated_L", not printed_bad, "; ".join(printed_bad)))
    h = {c.id: class_number(expected_l(c)) for c in conjugacy_classes()}
    out.append(_check("zeta.class_numbers", h["7b"] == 1 and h["7a"] == 71, f"7a: {h['7a']}, 7b: {h['7b']}"))
    return out


def check_bitangents():
    bad_R, not_closed = [], []
    for P in enumerate_group():
        bs = normalize_additive(bitangents(twist_curve(P)))
        if not is_additively_closed(bs.reps):
            not_closed.append(str(P))
        if frobenius_matrix_R(bs) != P.T:
            bad_R.append(str(P))
    out = [
        _check("bitangents.closed", not not_closed, f"{len(not_closed)} not closed"),
        _check("bitangents.R_is_P_transpose", not bad_R, f"{len(bad_R)} mismatches over 168"),
    ]
    par = {name: matches_parametrization(named(name), *entry[0], entry[1]) for name, entry in PARAMETRIZATIONS.items()}
    out.append(_check("bitangents.parametrizations", all(par.values()), str(par)))
    fails = [(c4, c2, c1) for c4 in (0, 1) for c2 in (0, 1) for c1 in (0, 1)
             if (c4, c2, c1) != (0, 0, 0) and not additive_defines_fano(c4, c2, c1)]
    out.append(_check("bitangents.fano_additive", fails == [(1, 1, 0)], f"non-Fano: {fails}"))
    return out


def check_automorphisms():
    bad = [str(P) for P in enumerate_group()
           if set(rational_automorphisms(twist_curve(P))) != set(centralizer(P))]
    out = [_check("automorphisms.centralizer", not bad, f"{len(bad)} mismatches")]
    got = {}
    for name in CATALOG_AUT:
        auts = rational_automorphisms(named(name))
        got[name] = (len(auts), group_structure_id(auts))
    out.append(_check("automorphisms.catalog", got == CATALOG_AUT, str(got)))
    return out


def check_equivalences():
    shear = Mat3F2.from_string("100010101")  # Z -> Z + X
    return [
        _check("equivalence.A_XN7", are_equivalent(named("A"), named("X_N7")) is not None),
        _check("equivalence.gamma_Xh1", are_equivalent(named("gamma10"), named("X_h1")) is not None),
        _check("equivalence.Kprime_XN4", shear in equivalences(named("Kprime"), named("X_N4"))),
        _check("equivalence.XN7_sum", sum_identity_check()),
    ]


def check_tangents(samples: int = 100, seed: int = 2024):
    rng = random.Random(seed)
    checked, bad = 0, []
    for c in conjugacy_classes():
        P = c.representative
        f = twist_curve(P)
        pts = list(rational_points(f, 1))
        pool = []
        for k in (2, 3, 4, 5, 6, 7, 8):
            pool.extend(rational_points(f, k))
        pts += rng.sample(pool, samples)
        for p in pts:
            checked += 1
            if tangent_intersection_divisor(f, p) != expected_tangent_divisor(P, p) or not divisor_form_check(f, P, p):
                bad.append((c.id, str(p)))
    return [_check("tangent.divisor", not bad, f"{checked} points, {len(bad)} failures")]


def check_invariants():
    d = dickson_invariants()
    inv = [verify_invariance(x) for x in (d.I4, d.I6, d.I7)]
    return [
        _check("invariants.I4_alpha", d.I4 == named("alpha").equation),
        _check("invariants.degrees", [x.degree() for x in (d.I4, d.I6, d.I7)] == [4, 6, 7]),
        _check("invariants.invariance", all(inv), str(inv)),
    ]


def check_identities():
    out = [_check(f"identities.reduce_{n}", reduce_and_compare(n)) for n in ("O4", "A4", "Kprime")]
    for r in elliptic_identity():
        out.append(_check(f"identities.elliptic_{r.name}", r.holds, r.diff))
    return out


def check_oracles():
    alpha = named("alpha")
    n1 = {str(P): count_points(twist_curve(P), 1) for P in enumerate_group()}
    top = max(n1.values())
    where = {class_of(Mat3F2.from_string(p)).id for p, v in n1.items() if v == top}
    sevens_a = sum(1 for p, v in n1.items() if v == top)
    return [
        _check("oracle.alpha_F4_points", count_points(alpha, 2) == 14),
        _check("oracle.max_points", top == 7 and where == {"7a"} and sevens_a == 24, f"max {top} on {where}"),
    ]


def findings():
    out = []
    actual = recover_P(named("Kprime"))
    printed = PRINTED_P["Kprime"]
    out.append(CheckResult(
        "finding.Kprime_matrix", FINDING,
        f"listed {printed} equals the X_N4 entry; the mod-2 model is twist_curve({actual}), "
        f"order {actual.order()}, conjugate to X_N4's matrix",
    ))
    probe = elliptic_identity_variant_probe()
    out.append(CheckResult(
        "finding.second_elliptic_identity", FINDING,
        f"degrees {probe.lhs_degree} vs {probe.rhs_degree}; "
        f"s1^3 * W(s2^2/s1, y, z) = s2^2 * K * Kbar is {probe.cofactor_is_s2_squared}",
    ))
    return out


SUITE = [
    ("1", check_group), ("2", check_construction), ("3", check_counts), ("4", check_zeta),
    ("5", check_bitangents), ("6", check_automorphisms), ("7", check_equivalences),
    ("8", check_tangents), ("9", check_invariants), ("10", check_identities), ("11", check_oracles),
]


def run_suite(stream=None) -> list[CheckResult]:
    results = []
    for _, fn in SUITE + [("findings", findings)]:
        t = time.perf_counter()
        batch = fn()
        dt = time.perf_counter() - t
        for r in batch:
            results.append(r)
            if stream is not None:
                print(r.line(), file=stream)
        if stream is not None:
            print(f"        ({fn.__name__}: {dt:.1f}s)", file=stream)
    return results
