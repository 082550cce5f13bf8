"""Which interior counts occur for lattice squares in Z^3 and Z^4, with witnesses.

Run: python demos/05_almost_perfect_squares.py
"""

from latticecubes import aps_witness_even, aps_witness_odd, aps_witnessed, count_square, search_k_square
from latticecubes.oracle import OPEN

# Every odd k: u = (k, k, 0, 0) with v built from k^2 = a^2 + b^2 + c^2, a odd.
for k in (1, 3, 7, 11):
    pair, result = aps_witness_odd(k)
    print(f"k={k}: {pair.u}, {pair.v} -> {result.poly}, counted inside {count_square(pair, 1, OPEN)}")

# Primes p >= 11: a square with E(t) = p t^2 + 2t + 1, so p - 1 points inside.
for p in (11, 13):
    pair, result = aps_witness_even(p)
    print(f"p={p}: {pair.u}, {pair.v} -> {result.poly}, counted inside {count_square(pair, 1, OPEN)}")

# Small enumerations in Z^3 and Z^4 (these list what was seen, not what is missing).
for dim in (3, 4):
    table = aps_witnessed(dim, 4, 40)
    print(f"Z^{dim} interior counts seen up to 40:", table.terms)

# Search for a square with E(t) = 15 t^2 + 2t + 1.
found = search_k_square(15)
print("k=15 search:", found.to_dict())
