"""Hypercubes in Z^4: the closed formula against brute-force counting on the example corpus.

Run: python demos/04_hypercubes.py   (about 20 seconds)
"""

from latticecubes import CORPUS, Quaternion, ehrhart_hypercube, fit_ehrhart, hypercube_from_quaternions

print(f"{'name':<9} {'D':<14} {'formula':<34} counted agrees")
for entry in CORPUS:
    frame = entry.frame()
    formula = ehrhart_hypercube(frame).poly
    counted = fit_ehrhart(frame, 4)
    flag = "" if counted == entry.printed_poly else f"  (printed: {entry.printed_poly})"
    print(f"{entry.name:<9} {str(frame.D):<14} {str(formula):<34} {formula == counted}{flag}")

# Quaternion pairs fill a frame with rows q1 e conj(q2), e in {1, i, j, k}.
q = Quaternion(1, 1, 1, 0)
frame = hypercube_from_quaternions(q, q)
print("rows from (1+i+j) and itself:", frame.rows)
print("  E(t) =", ehrhart_hypercube(frame).poly if frame.irreducible else "reducible frame", "counted", fit_ehrhart(frame, 4))
