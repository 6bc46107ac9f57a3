"""
Point counts and L-polynomials
==============================

Counting points over F_2, F_4, F_8 determines the L-polynomial of a genus 3
curve. Each class's L-polynomial divides a product over roots of unity
whose order is that of P.
"""

import numpy as np

from twistklein.geometry import count_points
from twistklein.group import conjugacy_classes
from twistklein.twist import twist_curve
from twistklein.zeta import class_number, factored_string, l_from_counts, zeta_product

for m in (1, 2, 3, 4, 7):
    print(f"product for m = {m}: {zeta_product(m)}")

print()
print(f"{'class':>5} {'N1':>3} {'N2':>3} {'N3':>3}  {'h':>3}  L")
for c in conjugacy_classes():
    f = twist_curve(c.representative)
    counts = [count_points(f, k) for k in (1, 2, 3)]
    L = l_from_counts(*counts)
    print(f"{c.id:>5} {counts[0]:3d} {counts[1]:3d} {counts[2]:3d}  {class_number(L):3d}  {factored_string(L)}")

# The reciprocal roots of L all have absolute value sqrt(2).
L = l_from_counts(*(count_points(twist_curve(conjugacy_classes()[1].representative), k) for k in (1, 2, 3)))
roots = np.roots(L.to_list()[::-1])
print("\n|1/root| for class 7a:", np.round(1 / np.abs(roots), 6))
