"""
Bitangents and the Fano plane
=============================

A smooth quartic in characteristic 2 has exactly seven bitangents. Scaled
correctly, their coefficient vectors together with zero form a
3-dimensional F_2-vector space, and Frobenius acts on that space by the
transpose of P.
"""

from twistklein.geometry import bitangents, fano_lines, frobenius_matrix_R, normalize_additive
from twistklein.group import enumerate_group
from twistklein.twist import named, twist_curve

bs = normalize_additive(bitangents(named("K")))
print(f"bitangents of K live over GF(2^{bs.degree})")
for line, k in zip(bs.lines, bs.field_degrees):
    print(f"  defined over GF(2^{k}): {line}")

# Three bitangents are collinear in the Fano sense when their vectors sum to zero.
for triple in fano_lines(bs.reps):
    print("  Fano line", sorted(triple))

# The matrix of Frobenius on the bitangent space, across all 168 curves.
agree = sum(frobenius_matrix_R(twist_curve(P)) == P.T for P in enumerate_group())
print(f"\nR = P^t on {agree} of 168 curves")
