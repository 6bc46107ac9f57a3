"""
Building the 168 twists
=======================

Every invertible 3x3 matrix P over F_2 gives a plane quartic over F_2 that
becomes the Klein quartic over a finite extension. The equation is an exact
quotient of two 3x3 determinants in X, Y, Z.
"""

from collections import Counter

import numpy as np

from twistklein.algebra import to_text
from twistklein.group import CYCLIC_SHIFT, IDENTITY, conjugacy_classes, enumerate_group
from twistklein.twist import twist_curve, twist_numerator_denominator

# The cyclic shift of coordinates recovers the Klein quartic itself.
num, den = twist_numerator_denominator(CYCLIC_SHIFT)
print("numerator degree", num.degree(), " denominator degree", den.degree())
print("K     :", to_text(twist_curve(CYCLIC_SHIFT).equation))

# The identity matrix gives a curve with no rational points at all.
print("alpha :", to_text(twist_curve(IDENTITY).equation))

# All 168 matrices, and the 15 possible quartic monomials as a 0/1 table.
G = enumerate_group()
curves = [twist_curve(P) for P in G]
masks = np.array([c.mask for c in curves])
bits = (masks[:, None] >> np.arange(15)) & 1
print("\n%d matrices, %d distinct equations" % (len(G), len(np.unique(masks))))
print("terms per equation:", dict(sorted(Counter(bits.sum(axis=1).tolist()).items())))

# Conjugate matrices give isomorphic curves, so the conjugacy classes
# (six of them) index the isomorphism types.
for c in conjugacy_classes():
    print(f"class {c.id:>2}: order {c.order}, trace {c.trace}, {c.size:3d} matrices")
