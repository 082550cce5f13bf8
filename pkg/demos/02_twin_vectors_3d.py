"""Squares in Z^3: twin vectors, the parametrization, and which side lengths occur.

Run: python demos/02_twin_vectors_3d.py
"""

from latticecubes import ehrhart_square_3d, fit_ehrhart, is_sum_two_squares, param_square_3d, quadruple_table, validate_twin
from latticecubes.cubes import cube_from_twins_3d, ehrhart_cube_3d

# A pair of orthogonal, equal-length integer vectors spans a lattice square.
for u, v in [((3, -3, 0), (1, 1, 4)), ((6, 3, -2), (-2, 6, 3))]:
    pair = validate_twin(u, v)
    print(f"{u}, {v}: formula {ehrhart_square_3d(pair).poly}, counted fit {fit_ehrhart(pair, 2)}")

# Four integers give a twin pair; (1, 1, 1, 0) lands on a square of side 3.
pair = param_square_3d(1, 1, 1, 0)
print("param (1,1,1,0):", pair.u, pair.v, "squared side", pair.norm)

# Squared side lengths that occur are exactly the sums of two squares.
print("squared sides <= 30:", [n for n in range(1, 31) if is_sum_two_squares(n)])

# When the side is itself an integer, the cross product completes a cube.
frame = cube_from_twins_3d(validate_twin((2, -1, 2), (-1, 2, 2)))
print("cube rows", frame.rows, "E(t) =", ehrhart_cube_3d(frame).poly, "counted", fit_ehrhart(frame, 3))

# Primitive Pythagorean quadruples with odd hypotenuse.
for ell, reps in quadruple_table(13).rows.items():
    print(f"  {ell:>2}: {reps}")
