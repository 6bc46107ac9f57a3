"""
Invariants and integer identities
=================================

The product of T + v over all eight F_2-linear forms v is additive in T.
Its coefficients are the Dickson invariants, and the quartic one is the
twist for the identity matrix. Integer models lift some twists to
characteristic zero.
"""

from twistklein.algebra import to_text
from twistklein.identities import (
    dickson_invariants, elliptic_identity, elliptic_identity_variant_probe, reduce_and_compare,
    verify_invariance,
)

d = dickson_invariants()
for name in ("I4", "I6", "I7"):
    f = getattr(d, name)
    print(f"{name} (degree {f.degree()}, invariant: {verify_invariance(f)})")
    print("   ", to_text(f))

for model in ("O4", "A4", "Kprime"):
    print(f"{model} reduces to its twist mod 2: {reduce_and_compare(model)}")

# The Klein quartic maps to an elliptic curve via the quotient by the 3-cycle.
for r in elliptic_identity():
    print(f"{r.name}: {'holds' if r.holds else 'fails'}")

# Substituting x = s2^2 / s1 instead gives a different relation.
p = elliptic_identity_variant_probe()
print(f"\nwith x = s2^2/s1: degree {p.lhs_degree} against {p.rhs_degree}")
print("s1^3 W(x, y, z) / (K Kbar) =", p.cofactor_of_K_Kbar)
for pt, s in p.samples.items():
    print(f"  at {pt}: W = {s['lhs']}, K*Kbar = {s['rhs']}")
