"""Brute-force lattice-point counting for dilated squares, cubes and hypercubes.

Nothing here evaluates a closed-form Ehrhart formula.  A shape spanned by
mutually orthogonal rows ``r_1..r_m`` of squared norm ``N`` in ``Z^n`` is

    t*P = { x : 0 <= x . r_i <= t*N  for every i }  intersected with span(r_i).

Integer points of the span form a saturated lattice with basis ``g_1..g_m``;
points are counted in those coordinates, looping over all but the last
coordinate and solving the last one's range exactly.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .arith import dot
from .errors import InvariantViolation, OracleMismatch, ValidationError
from .linalg import integer_kernel, lll_reduce, maximal_minors_gcd, solve_in_basis
from .polynomial import fit_polynomial

log = logging.getLogger(__name__)

__all__ = [
    "CLOSED",
    "OPEN",
    "Parallelotope",
    "count_square",
    "count_frame",
    "count_shape",
    "corner_count_direct",
    "fit_ehrhart",
    "crosscheck_points",
]

CLOSED = "closed"
OPEN = "open"

# point-by-point crosscheck runs automatically when the box is at most this big
AUTO_CROSSCHECK_LIMIT = 20_000


def _ceil_div(a, b):
    return -((-a) // b)


@dataclass(frozen=True)
class Parallelotope:
    """Orthogonal equal-norm rows together with a certified saturated basis of their span."""

    rows: tuple
    norm: int
    basis: tuple
    pairing: tuple  # pairing[i][j] = basis[j] . rows[i]
    coords: tuple  # coords[i][j] = j-th coordinate of rows[i] in the basis

    @classmethod
    def from_rows(cls, rows):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        n = len(rows[0])
        norm = dot(rows[0], rows[0])
        if norm == 0:
            raise ValidationError("rows must be nonzero")
        for i, r in enumerate(rows):
            if dot(r, r) != norm:
                raise ValidationError(f"row {i} has a different squared norm")
            for s in rows[i + 1:]:
                if dot(r, s):
                    raise ValidationError("rows must be mutually orthogonal")
        complement = integer_kernel(rows, n)
        basis = integer_kernel(complement, n)
        basis = tuple(tuple(b) for b in lll_reduce(basis))
        if len(basis) != len(rows):
            raise InvariantViolation("span has unexpected rank")
        if maximal_minors_gcd(basis) != 1:
            raise InvariantViolation(f"basis {basis} is not saturated")
        coords = []
        for r in rows:
            c = solve_in_basis(basis, r)
            if c is None or any(x.denominator != 1 for x in c):
                raise InvariantViolation(f"row {r} is not an integer combination of {basis}")
            coords.append(tuple(int(x) for x in c))
        pairing = tuple(tuple(dot(b, r) for b in basis) for r in rows)
        return cls(rows, norm, basis, pairing, tuple(coords))

    @property
    def rank(self):
        return len(self.rows)

    def box(self, t):
        """Exact coordinate box containing the t-th dilate."""
        m = self.rank
        lo = [t * sum(min(0, self.coords[i][j]) for i in range(m)) for j in range(m)]
        hi = [t * sum(max(0, self.coords[i][j]) for i in range(m)) for j in range(m)]
        return lo, hi

    def box_size(self, t):
        lo, hi = self.box(t)
        size = 1
        for a, b in zip(lo, hi):
            size *= b - a + 1
        return size

    def count(self, t, region=CLOSED):
        if t < 0:
            raise ValidationError("t must be nonnegative")
        top = t * self.norm
        lo_val, hi_val = (0, top) if region == CLOSED else (1, top - 1)
        if hi_val < lo_val:
            return 0
        m = self.rank
        lo, hi = self.box(t)
        last = [self.pairing[i][m - 1] for i in range(m)]

        def last_range(base):
            a, b = lo[m - 1], hi[m - 1]
            for i in range(m):
                s, c = base[i], last[i]
                if c > 0:
                    a = max(a, _ceil_div(lo_val - s, c))
                    b = min(b, (hi_val - s) // c)
                elif c < 0:
                    a = max(a, _ceil_div(s - hi_val, -c))
                    b = min(b, (s - lo_val) // -c)
                elif not lo_val <= s <= hi_val:
                    return 0
            return max(0, b - a + 1)

        def walk(j, base):
            if j == m - 1:
                return last_range(base)
            total = 0
            col = [self.pairing[i][j] for i in range(m)]
            for c in range(lo[j], hi[j] + 1):
                total += walk(j + 1, [s + c * k for s, k in zip(base, col)])
            return total

        return walk(0, [0] * m)

    def points(self, t):
        """Every integer coordinate vector of the box, with its ambient point."""
        lo, hi = self.box(t)
        for c in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
            yield c, tuple(sum(ci * g[k] for ci, g in zip(c, self.basis)) for k in range(len(self.basis[0])))


def crosscheck_points(shape, t, region=CLOSED):
    """Count by testing every box point two ways; raises if the tests ever disagree.

    Test one inverts the coordinate change ``c = sum s_i coords_i`` exactly and
    checks ``0 <= s_i <= t``; test two rebuilds ``x`` and uses the projection
    identity ``N x = sum (x . r_i) r_i`` together with the dot-product bounds.
    """
    par = _parallelotope(shape)
    m = par.rank
    inv = _inverse([[Fraction(x) for x in row] for row in par.coords])
    top = t * par.norm
    hits = 0
    for c, x in par.points(t):
        s = [sum(c[j] * inv[j][i] for j in range(m)) for i in range(m)]
        if region == CLOSED:
            first = all(0 <= v <= t for v in s)
        else:
            first = all(0 < v < t for v in s)
        d = [dot(x, r) for r in par.rows]
        recon = tuple(sum(d[i] * r[k] for i, r in enumerate(par.rows)) for k in range(len(x)))
        in_plane = recon == tuple(par.norm * v for v in x)
        if region == CLOSED:
            second = in_plane and all(0 <= v <= top for v in d)
        else:
            second = in_plane and all(0 < v < top for v in d)
        if first != second:
            raise InvariantViolation(f"membership tests disagree at {x}")
        hits += first
    return hits


def _inverse(mat):
    n = len(mat)
    a = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


_CACHE = {}


def _parallelotope(shape):
    if hasattr(shape, "rows"):
        rows = tuple(tuple(r) for r in shape.rows)
    elif hasattr(shape, "u"):
        rows = (tuple(shape.u), tuple(shape.v))
    else:
        rows = tuple(tuple(r) for r in shape)
    par = _CACHE.get(rows)
    if par is None:
        par = Parallelotope.from_rows(rows)
        if len(_CACHE) > 256:
            _CACHE.clear()
        _CACHE[rows] = par
    return par


def _count(shape, t, region, crosscheck):
    if region not in (CLOSED, OPEN):
        raise ValidationError(f"region must be {CLOSED!r} or {OPEN!r}")
    par = _parallelotope(shape)
    n = par.count(t, region)
    if crosscheck == "auto":
        crosscheck = par.box_size(t) <= AUTO_CROSSCHECK_LIMIT
    if crosscheck:
        slow = crosscheck_points(shape, t, region)
        if slow != n:
            raise InvariantViolation(f"interval count {n} != point-by-point count {slow}")
    return n


def count_square(shape, t, region=CLOSED, crosscheck="auto"):
    """Integer points in the t-th dilate of the square spanned by ``shape.u, shape.v``."""
    return _count(shape, t, region, crosscheck)


def count_frame(shape, t, region=CLOSED, crosscheck="auto"):
    """Integer points in the t-th dilate of the cube or hypercube spanned by ``shape.rows``."""
    return _count(shape, t, region, crosscheck)


def count_shape(shape, t, region=CLOSED, crosscheck="auto"):
    return _count(shape, t, region, crosscheck)


def corner_count_direct(a, b, t):
    """Pairs ``(x, y)`` with ``a x + b y`` and ``a y - b x`` both in ``[1, t(a^2+b^2) - 1]``."""
    n = a * a + b * b
    if n == 0:
        raise ValidationError("(a, b) must be nonzero")
    top = t * n - 1
    if top < 1:
        return 0
    # x = (a p - b q) / n and y = (b p + a q) / n with p, q in [1, top]
    xs = [a * p - b * q for p in (1, top) for q in (1, top)]
    ys = [b * p + a * q for p in (1, top) for q in (1, top)]
    total = 0
    for x in range(min(xs) // n, -(-max(xs) // n) + 1):
        for y in range(min(ys) // n, -(-max(ys) // n) + 1):
            if 1 <= a * x + b * y <= top and 1 <= a * y - b * x <= top:
                total += 1
    return total


def fit_ehrhart(shape, degree=None, crosscheck="auto"):
    """Fit the counting polynomial from closed counts at ``t = 1..degree+1``.

    Also checks the constant term, that the fit really has ``degree``, and that open counts equal
    ``(-1)^degree * poly(-t)`` at the same dilates.
    """
    par = _parallelotope(shape)
    if degree is None:
        degree = par.rank
    if degree not in (2, 3, 4):
        raise ValidationError("degree must be 2, 3 or 4")
    ts = range(1, degree + 2)
    counts = [count_shape(shape, t, CLOSED, crosscheck) for t in ts]
    open_counts = [count_shape(shape, t, OPEN, crosscheck) for t in ts]
    try:
        poly = fit_polynomial(list(zip(ts, counts)), degree)
    except Exception as exc:
        raise OracleMismatch(f"fit failed: {exc}", counts, open_counts) from exc
    if poly.coeffs[0] != 1:
        raise OracleMismatch(f"constant term {poly.coeffs[0]} != 1", counts, open_counts)
    if poly.degree != degree:
        raise OracleMismatch(f"counts fit degree {poly.degree}, expected {degree}", counts, open_counts)
    sign = -1 if degree % 2 else 1
    expected = [sign * poly(-t) for t in ts]
    if expected != open_counts:
        raise OracleMismatch(f"reciprocity fails: open {open_counts} vs {expected}", counts, open_counts)
    return poly
