"""Command-line front end.

    twistklein enumerate [--format json|csv] [--out FILE] [--jobs N]
    twistklein curve (--p BITS | --name NAME)
    twistklein zeta (--p BITS | --name NAME)
    twistklein bitangents (--p BITS | --name NAME)
    twistklein identities
    twistklein verify-paper

Exit status: 0 on success, 1 when a verification fails, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import sys

from .group import Mat3F2, SingularMatrixError, class_of
from .twist import ALIASES, NotATwistError, named, recover_P, twist_curve

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _resolve(args):
    """Curve for --p or --name."""
    if args.p is not None:
        try:
            P = Mat3F2.from_string(args.p)
        except ValueError as e:
            raise UsageError(str(e)) from None
        if not P.is_invertible():
            raise UsageError(f"matrix {args.p} is singular")
        return twist_curve(P)
    try:
        return named(args.name)
    except KeyError as e:
        raise UsageError(e.args[0]) from None


def _write(text: str, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_enumerate(args) -> int:
    from .report import build_report, to_csv, to_json
    report = build_report(jobs=args.jobs)
    text = to_json(report) if args.format == "json" else to_csv(report["curves"])
    _write(text, args.out)
    return EXIT_OK if all(report["checks"].values()) else EXIT_FAIL


def cmd_curve(args) -> int:
    from .report import curve_record, to_json
    _write(to_json({"schema": 1, "curve": curve_record(_resolve(args))}), None)
    return EXIT_OK


def cmd_zeta(args) -> int:
    from .zeta import class_number, expected_l, factored_string, l_from_counts
    curve = _resolve(args)
    P = curve.P or recover_P(curve)
    cls = class_of(P)
    counts = curve.counts()
    L = l_from_counts(*counts)
    print(f"P        {P}  (class {cls.id}, order {cls.order}, trace {cls.trace})")
    print(f"N1..N3   {' '.join(map(str, counts))}")
    print(f"L(t)     {L}")
    print(f"factors  {factored_string(L)}")
    print(f"h        {class_number(L)}")
    ok = L == expected_l(cls)
    print(f"class L  {'agrees' if ok else 'DISAGREES'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bitangents(args) -> int:
    from .geometry import bitangents, frobenius_matrix_R, normalize_additive
    curve = _resolve(args)
    bs = normalize_additive(bitangents(curve))
    print(f"common field GF(2^{bs.degree}), Frobenius permutation {list(bs.frobenius_perm)}")
    for line, k, rep in zip(bs.lines, bs.field_degrees, bs.reps):
        print(f"  degree {k}  {line}  normalised {[f'{x:#x}' for x in rep]}")
    R = frobenius_matrix_R(bs)
    P = curve.P or recover_P(curve)
    print(f"R = {R}   P^t = {P.T}")
    return EXIT_OK if R == P.T else EXIT_FAIL


def cmd_identities(args) -> int:
    from .identities import (dickson_invariants, elliptic_identity, elliptic_identity_variant_probe,
                             reduce_and_compare, verify_invariance)
    from .algebra import to_text
    ok = True
    d = dickson_invariants()
    for name, f in (("I4", d.I4), ("I6", d.I6), ("I7", d.I7)):
        inv = verify_invariance(f)
        ok &= inv
        print(f"{'PASS' if inv else 'FAIL'} {name} invariant  {to_text(f)}")
    alpha_ok = d.I4 == named("alpha").equation
    ok &= alpha_ok
    print(f"{'PASS' if alpha_ok else 'FAIL'} I4 = alpha")
    for model in ("O4", "A4", "Kprime"):
        r = reduce_and_compare(model)
        ok &= r
        print(f"{'PASS' if r else 'FAIL'} {model} mod 2")
    for r in elliptic_identity():
        ok &= r.holds
        print(f"{'PASS' if r.holds else 'FAIL'} {r.name}")
        if not r.holds:
            print(f"     difference: {r.diff}")
    probe = elliptic_identity_variant_probe()
    print(f"FINDING x = s2^2/s1: degrees {probe.lhs_degree} vs {probe.rhs_degree}, "
          f"cleared by s1^{probe.cleared_power}, cofactor of K*Kbar = {probe.cofactor_of_K_Kbar}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    from .verify import run_suite
    results = run_suite(sys.stdout)
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)} of {len(results)} checks ok, {len(failed)} failed")
    return EXIT_OK if not failed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="twistklein", description="Quartic twists of the Klein curve over F_2.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="report on all 168 twists")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_enumerate)

    for name, func, helptext in (
        ("curve", cmd_curve, "record for one twist"),
        ("zeta", cmd_zeta, "L-polynomial of one twist"),
        ("bitangents", cmd_bitangents, "bitangents and Frobenius matrix of one twist"),
    ):
        p = sub.add_parser(name, help=helptext)
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--p", metavar="BITS", help="9 binary digits, row-major")
        g.add_argument("--name", choices=sorted(ALIASES), metavar="NAME",
                       help="catalog name: " + ", ".join(sorted(set(ALIASES.values()))))
        p.set_defaults(func=func)

    sub.add_parser("identities", help="invariants and integer identities").set_defaults(func=cmd_identities)
    sub.add_parser("verify-paper", help="run the full verification suite").set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (SingularMatrixError, NotATwistError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
