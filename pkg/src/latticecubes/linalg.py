"""Exact integer linear algebra: Hermite normal form, saturated kernels, Gram volumes.

Vectors are tuples of Python ints and matrices are sequences of such rows;
nothing here ever touches floating point.
"""

from fractions import Fraction
from math import isqrt

from .arith import dot, gcd_many
from .errors import GramNotSquareError

__all__ = [
    "hermite_normal_form",
    "integer_kernel",
    "saturate",
    "same_lattice",
    "determinant",
    "gram_matrix",
    "gram_determinant",
    "gram_volume",
    "maximal_minors_gcd",
    "solve_in_basis",
    "lll_reduce",
    "lagrange_reduce",
]


def hermite_normal_form(rows, transform=False):
    """Row-style Hermite normal form with positive pivots.

    Zero rows are dropped.  With ``transform=True`` also returns the
    unimodular ``U`` (list of rows) with ``U * rows == H`` padded with the
    relations that produced zero rows; those trailing rows of ``U`` span the
    left kernel of ``rows``.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    pivot_row = 0
    pivots = []
    for col in range(ncols):
        if pivot_row >= nrows:
            break
        # gcd-eliminate this column below pivot_row
        while True:
            nonzero = [i for i in range(pivot_row, nrows) if m[i][col] != 0]
            if not nonzero:
                break
            best = min(nonzero, key=lambda i: abs(m[i][col]))
            m[pivot_row], m[best] = m[best], m[pivot_row]
            u[pivot_row], u[best] = u[best], u[pivot_row]
            done = True
            p = m[pivot_row][col]
            for i in range(pivot_row + 1, nrows):
                if m[i][col]:
                    q = m[i][col] // p
                    m[i] = [a - q * b for a, b in zip(m[i], m[pivot_row])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[pivot_row])]
                    if m[i][col]:
                        done = False
            if done:
                break
        if m[pivot_row][col] == 0:
            continue
        if m[pivot_row][col] < 0:
            m[pivot_row] = [-a for a in m[pivot_row]]
            u[pivot_row] = [-a for a in u[pivot_row]]
        p = m[pivot_row][col]
        for i in range(pivot_row):
            q = m[i][col] // p
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[pivot_row])]
                u[i] = [a - q * b for a, b in zip(u[i], u[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    h = [tuple(r) for r in m[:pivot_row]]
    if transform:
        return h, [tuple(r) for r in u], pivot_row
    return h


def integer_kernel(rows, ncols=None):
    """Basis of ``{x in Z^n : rows * x = 0}``, in Hermite normal form.

    The returned lattice is saturated: every integer vector of the rational
    kernel is an integer combination of the basis.  ``ncols`` is needed only
    when ``rows`` is empty.
    """
    rows = [tuple(r) for r in rows]
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    if not rows:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    transposed = [tuple(r[j] for r in rows) for j in range(ncols)]
    _, u, rank = hermite_normal_form(transposed, transform=True)
    kernel = u[rank:]
    if not kernel:
        return []
    return hermite_normal_form(kernel)


def saturate(vectors, dim=None):
    """Basis (HNF) of ``Z^n`` intersected with the rational span of ``vectors``."""
    vectors = [tuple(v) for v in vectors]
    if dim is None:
        dim = len(vectors[0])
    complement = integer_kernel(vectors, dim) if vectors else [
        tuple(int(i == j) for j in range(dim)) for i in range(dim)
    ]
    return integer_kernel(complement, dim)


def same_lattice(basis1, basis2):
    """True iff two integer bases span the same lattice."""
    return hermite_normal_form(basis1) == hermite_normal_form(basis2)


def determinant(matrix):
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    m = [list(r) for r in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def gram_matrix(vectors):
    return [tuple(dot(a, b) for b in vectors) for a in vectors]


def gram_determinant(vectors):
    return determinant(gram_matrix(vectors))


def gram_volume(vectors):
    """Exact covolume of the lattice spanned by independent ``vectors``.

    Raises :class:`GramNotSquareError` when the Gram determinant is not a
    perfect square, since every lattice in scope has integral covolume.
    """
    det = gram_determinant(vectors)
    if det <= 0:
        raise ValueError("vectors are linearly dependent")
    root = isqrt(det)
    if root * root != det:
        raise GramNotSquareError(det)
    return root


def _minors(rows, size):
    from itertools import combinations

    n = len(rows[0])
    for cols in combinations(range(n), size):
        yield determinant([[r[c] for c in cols] for r in rows])


def maximal_minors_gcd(rows):
    """gcd of all ``r x r`` minors of an ``r x n`` integer matrix.

    The lattice spanned by the rows has index equal to this gcd in its
    saturation, so a basis is saturated iff the value is 1.
    """
    rows = [tuple(r) for r in rows]
    return gcd_many(list(_minors(rows, len(rows))))


def solve_in_basis(basis, vector):
    """Coordinates of ``vector`` in ``basis`` (exact Fractions), or None if outside the span."""
    basis = [tuple(b) for b in basis]
    r = len(basis)
    g = [[Fraction(x) for x in row] for row in gram_matrix(basis)]
    rhs = [Fraction(dot(b, vector)) for b in basis]
    # Gauss-Jordan on the Gram system
    for c in range(r):
        piv = next(i for i in range(c, r) if g[i][c] != 0)
        g[c], g[piv] = g[piv], g[c]
        rhs[c], rhs[piv] = rhs[piv], rhs[c]
        inv = 1 / g[c][c]
        g[c] = [x * inv for x in g[c]]
        rhs[c] *= inv
        for i in range(r):
            if i != c and g[i][c] != 0:
                f = g[i][c]
                g[i] = [a - f * b for a, b in zip(g[i], g[c])]
                rhs[i] -= f * rhs[c]
    coords = rhs
    recon = [sum(c * b[j] for c, b in zip(coords, basis)) for j in range(len(vector))]
    if any(x != y for x, y in zip(recon, vector)):
        return None
    return coords


def lagrange_reduce(b1, b2):
    """Lagrange-Gauss reduction of a rank-2 integer basis."""
    b1, b2 = tuple(b1), tuple(b2)
    if dot(b1, b1) > dot(b2, b2):
        b1, b2 = b2, b1
    while True:
        n1 = dot(b1, b1)
        mu = Fraction(dot(b1, b2), n1)
        q = round(mu)
        if q:
            b2 = tuple(y - q * x for x, y in zip(b1, b2))
        if dot(b2, b2) >= n1:
            return b1, b2
        b1, b2 = b2, b1


def lll_reduce(basis, delta=Fraction(3, 4)):
    """Textbook LLL with exact rational Gram-Schmidt (small ranks only)."""
    b = [list(v) for v in basis]
    n = len(b)
    if n <= 1:
        return [tuple(v) for v in b]

    def gso():
        bstar = []
        mu = [[Fraction(0)] * n for _ in range(n)]
        norms = []
        for i in range(n):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                mu[i][j] = sum(Fraction(x) * y for x, y in zip(b[i], bstar[j])) / norms[j]
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
            bstar.append(v)
            norms.append(sum(x * x for x in v))
        return mu, norms

    k = 1
    mu, norms = gso()
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                mu, norms = gso()
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            mu, norms = gso()
            k = max(k - 1, 1)
    return [tuple(v) for v in b]
