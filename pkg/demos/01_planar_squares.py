"""Planar lattice squares: closed formula, brute-force counts, and the interior-count table.

Run: python demos/01_planar_squares.py
"""

from latticecubes import aps2_terms, corner_count_direct, count_square, ehrhart_square_2d, validate_twin
from latticecubes.oracle import OPEN

# A square in Z^2 with side vector (a, b) has E(t) = (a^2+b^2) t^2 + 2 gcd(a,b) t + 1.
pair = validate_twin((5, 2), (-2, 5))
poly = ehrhart_square_2d(5, 2).poly
print(f"square on (5,2): E(t) = {poly}")
for t in range(1, 4):
    closed, inside = count_square(pair, t), count_square(pair, t, OPEN)
    print(f"  t={t}: counted {closed} closed / {inside} open, formula {poly(t)} / {poly.interior(t)}")

# Points strictly inside the tilted square with corner (44, 9): one direct loop gives 2016.
print("interior of the (44, 9) square:", corner_count_direct(44, 9, 1))

# Which interior counts occur at all in the plane?
table = aps2_terms(120)
print("interior counts up to 120:", table.terms)
print("20 occurs?", 20 in table, " 2016 occurs?", 2016 in aps2_terms(2016))
