"""Squares in Z^4 from pairs of Lipschitz quaternions, and the planes they span.

Run: python demos/03_quaternion_squares_4d.py
"""

from latticecubes import (
    Quaternion,
    ehrhart_square_generic,
    fit_ehrhart,
    minimal_square_in_plane,
    plane_data_from_pair,
    plane_from_representations,
    quadruple_from_quaternion,
    quaternion_from_quadruple,
    sublattice_basis,
)
from latticecubes.quaternions import is_minimal_pair, square_from_quaternion_pair

# Every primitive quadruple with odd hypotenuse comes from a quaternion of that norm.
q, record = quaternion_from_quadruple(7, 4, 4, 9)
print(f"quaternion {q} of norm {q.norm()} maps back to {quadruple_from_quaternion(q, record.eps)}")

# Two quaternions give a square u = q1 j conj(q2), v = q1 k conj(q2).
q1, q2 = Quaternion(1, 3, 1, 2), Quaternion(1, 2, 0, 2)
pair = square_from_quaternion_pair(q1, q2)
print(f"square {pair.u}, {pair.v}; minimal pair: {is_minimal_pair(q1, q2)}")
print("  formula", ehrhart_square_generic(pair).poly, " counted", fit_ehrhart(pair, 2))

# A plane through the origin is pinned down by two representations of k^2.
plane = plane_from_representations(45, (33, 30, 6), (35, 20, 20))
basis = sublattice_basis(plane)
square = minimal_square_in_plane(plane)
print(f"plane k={plane.k}: covolume {basis.fundamental_volume}, smallest square {square.u}, {square.v}")
print("  its polynomial", ehrhart_square_generic(square).poly, "(no interior points at t=1)")

# Example with a shared odd factor among the minors: the covolume is read off the Gram matrix.
data = plane_data_from_pair((-4, 8, 5, 4), (10, 2, 4, 1))
print(f"plane of (-4,8,5,4),(10,2,4,1): k={data.k}, w1={data.w1}, w2={data.w2}, gcd hypothesis {data.gcd_hypothesis}")
