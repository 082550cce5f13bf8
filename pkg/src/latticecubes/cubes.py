"""Orthogonal integer frames: cubes in Z^3, 3-cubes in Z^4, hypercubes in Z^4."""

from dataclasses import dataclass
from itertools import combinations
from math import isqrt

from .arith import cross3, dot, gcd_many
from .errors import FrameValidationError, ValidationError
from .polynomial import EhrhartPolynomial
from .squares import pair_minors

__all__ = [
    "OrthoFrame",
    "CubeEhrhart",
    "CorpusEntry",
    "CORPUS",
    "validate_frame",
    "ehrhart_cube_3d",
    "ehrhart_cube_in_4d",
    "ehrhart_hypercube",
    "coefficient_relation_holds",
    "hypercube_from_quaternions",
    "cube_from_twins_3d",
]


@dataclass(frozen=True)
class OrthoFrame:
    """Mutually orthogonal integer rows of a common squared norm.

    ``ell`` follows the cube convention in Z^3 (rows have squared norm
    ``ell**2``) and the hypercube convention in Z^4 (squared norm ``ell``).
    Rows are stored in canonical order; ``zeta[(i, j)]`` is the gcd of the
    2x2 minors of rows ``i < j``.
    """

    rows: tuple
    ell: int
    D: tuple
    zeta: dict

    @property
    def dim(self):
        return len(self.rows[0])

    @property
    def norm(self):
        return dot(self.rows[0], self.rows[0])

    @property
    def irreducible(self):
        return gcd_many(self.D) == 1

    @property
    def zeta_sum(self):
        return sum(self.zeta.values())

    def to_dict(self):
        return {
            "rows": [list(r) for r in self.rows],
            "ell": self.ell,
            "D": list(self.D),
            "zeta": {f"{i}{j}": z for (i, j), z in sorted(self.zeta.items())},
            "irreducible": self.irreducible,
        }

    @classmethod
    def from_dict(cls, data):
        return validate_frame(data["rows"])


@dataclass(frozen=True)
class CubeEhrhart:
    poly: EhrhartPolynomial

    @property
    def degree(self):
        return self.poly.degree


def _row_key(row):
    g = gcd_many(row)
    reduced = tuple(x // g for x in row)
    return dot(reduced, reduced), tuple(row)


def validate_frame(rows, sort=True):
    rows = [tuple(int(x) for x in r) for r in rows]
    if len(rows) not in (3, 4):
        raise FrameValidationError(f"expected 3 or 4 rows, got {len(rows)}")
    dim = len(rows[0])
    if dim not in (3, 4) or any(len(r) != dim for r in rows):
        raise FrameValidationError("rows must share a dimension of 3 or 4")
    if len(rows) > dim:
        raise FrameValidationError("more rows than coordinates")
    norm = dot(rows[0], rows[0])
    if norm == 0:
        raise FrameValidationError("zero row", pair=(0, 0))
    for i, r in enumerate(rows):
        if dot(r, r) != norm:
            raise FrameValidationError(f"row {i} has squared norm {dot(r, r)} != {norm}", pair=(0, i))
    for i, j in combinations(range(len(rows)), 2):
        if dot(rows[i], rows[j]):
            raise FrameValidationError(f"rows {i} and {j} are not orthogonal", pair=(i, j))
    if dim == 3:
        ell = isqrt(norm)
        if ell * ell != norm:
            raise FrameValidationError(f"squared norm {norm} of a frame in Z^3 must be a perfect square")
    else:
        ell = norm
    if sort:
        rows.sort(key=_row_key)
    D = tuple(gcd_many(r) for r in rows)
    zeta = {(i, j): gcd_many(pair_minors(rows[i], rows[j])) for i, j in combinations(range(len(rows)), 2)}
    return OrthoFrame(tuple(rows), ell, D, zeta)


def _from_descending(*coeffs):
    return CubeEhrhart(EhrhartPolynomial.from_descending(*coeffs))


def ehrhart_cube_3d(frame, allow_even=False):
    """``ell^3 t^3 + ell*S t^2 + S t + 1`` with ``S = d1 + d2 + d3``."""
    if frame.dim != 3 or len(frame.rows) != 3:
        raise ValidationError("expected three rows in Z^3")
    if not frame.irreducible:
        raise ValidationError(f"reducible frame: row gcds {frame.D}")
    ell = frame.ell
    if ell % 2 == 0 and not allow_even:
        raise ValidationError(f"ell = {ell} is even; irreducible cubes have odd ell")
    s = sum(frame.D)
    return _from_descending(ell ** 3, ell * s, s, 1)


def ehrhart_cube_in_4d(frame, r4):
    """3-cube in Z^4 spanned by ``frame``: ``ell D4 t^3 + sum(zeta) t^2 + sum(D) t + 1``.

    ``r4`` completes the three rows to an orthogonal frame; ``D4`` is its gcd.
    """
    if frame.dim != 4 or len(frame.rows) != 3:
        raise ValidationError("expected three rows in Z^4")
    full = validate_frame(list(frame.rows) + [tuple(r4)], sort=False)
    d4 = full.D[3]
    return _from_descending(frame.ell * d4, frame.zeta_sum, sum(frame.D), 1)


def ehrhart_hypercube(frame):
    """``ell^2 t^4 + ell*Delta t^3 + delta t^2 + Delta t + 1``.

    ``Delta`` is the sum of the row gcds and ``delta`` the sum of the six
    pairwise minor gcds.
    """
    if frame.dim != 4 or len(frame.rows) != 4:
        raise ValidationError("expected four rows in Z^4")
    if not frame.irreducible:
        raise ValidationError(f"reducible frame: row gcds {frame.D}")
    ell = frame.ell
    big = sum(frame.D)
    return _from_descending(ell * ell, ell * big, frame.zeta_sum, big, 1)


def cubic_coefficient(frame):
    """``ell * (D1 + D2 + D3 + D4)``, the predicted t^3 coefficient of a hypercube."""
    return frame.ell * sum(frame.D)


def coefficient_relation_holds(poly, frame):
    """Check ``a2 = a3 + delta - Delta`` on any degree-4 polynomial (e.g. an oracle fit)."""
    c = poly.coeffs
    if len(c) != 5:
        return False
    return c[2] == c[1] + frame.zeta_sum - sum(frame.D)


def hypercube_from_quaternions(q1, q2, sort=True):
    """Frame with rows ``q1 * e * conj(q2)`` for ``e`` in ``1, i, j, k``."""
    from .quaternions import I, J, K, ONE, Quaternion

    q1, q2 = Quaternion.of(q1), Quaternion.of(q2)
    if q1.norm() == 0 or q2.norm() == 0:
        raise ValidationError("quaternions must be nonzero")
    rows = [tuple(q1 * e * q2.conjugate()) for e in (ONE, I, J, K)]
    return validate_frame(rows, sort=sort)


def cube_from_twins_3d(pair):
    """Complete a square in Z^3 whose squared side ``L^2`` is a perfect square with ``(u x v) / L``."""
    if pair.dim != 3:
        raise ValidationError("expected a pair in Z^3")
    side = isqrt(pair.norm)
    if side * side != pair.norm:
        raise ValidationError(f"squared side {pair.norm} is not a perfect square")
    w = cross3(pair.u, pair.v)
    if any(x % side for x in w):
        raise ValidationError(f"u x v = {w} is not divisible by {side}")
    return validate_frame([pair.u, pair.v, tuple(x // side for x in w)])


@dataclass(frozen=True)
class CorpusEntry:
    """Printed hypercube example: rows (without the scalar prefactor) and its printed polynomial."""

    name: str
    rows: tuple
    printed: tuple  # descending coefficients as printed
    note: str = ""

    @property
    def printed_poly(self):
        return EhrhartPolynomial.from_descending(*self.printed)

    def frame(self):
        return validate_frame(self.rows)


CORPUS = (
    CorpusEntry(
        "sqrt2",
        ((1, 1, 0, 0), (1, -1, 0, 0), (0, 0, 1, 1), (0, 0, 1, -1)),
        (4, 8, 8, 4, 1),
        "fourth row printed as (0,0,0,-1), which is not orthogonal to the third; "
        "(0,0,1,-1) is the only completion consistent with (2t^2+2t+1)^2",
    ),
    CorpusEntry("sqrt3", ((1, 1, 1, 0), (-1, 1, 0, 1), (0, -1, 1, 1), (-1, 0, 1, -1)), (9, 12, 6, 4, 1)),
    CorpusEntry("half", ((1, 1, 1, -1), (-1, 1, 1, 1), (1, -1, 1, 1), (1, 1, -1, 1)), (16, 16, 12, 4, 1)),
    CorpusEntry("sqrt5", ((2, 1, 0, 0), (1, -2, 0, 0), (0, 0, 2, 1), (0, 0, 1, -2)), (25, 20, 14, 4, 1)),
    CorpusEntry("sqrt6", ((2, 1, 1, 0), (1, -2, 0, 1), (1, 0, -2, -1), (0, 1, -1, 2)), (36, 24, 8, 4, 1)),
    CorpusEntry("sqrt7", ((2, 1, 1, 1), (1, -2, -1, 1), (1, 1, -2, -1), (1, -1, 1, -2)), (49, 28, 6, 4, 1)),
    CorpusEntry("third_a", ((3, 0, 0, 0), (0, 2, 2, 1), (0, 2, -1, -2), (0, 1, -2, 2)), (81, 54, 18, 6, 1)),
    CorpusEntry("third_b", ((2, 2, 1, 0), (2, -2, 0, 1), (1, 0, -2, -2), (0, 1, -2, 2)), (81, 36, 6, 4, 1)),
    CorpusEntry("sqrt10_a", ((2, 2, 1, 1), (2, -2, -1, 1), (1, 1, -2, -2), (1, -1, 2, -2)), (100, 40, 16, 4, 1)),
    CorpusEntry("sqrt10_b", ((3, -1, 0, 0), (1, 3, 0, 0), (0, 0, 3, 1), (0, 0, 1, -3)), (100, 40, 24, 6, 1)),
    CorpusEntry("sqrt11", ((3, 1, 1, 0), (1, -3, 0, 1), (1, 0, -3, -1), (0, 1, -1, 3)), (121, 44, 6, 4, 1)),
    CorpusEntry(
        "sqrt13",
        ((2, 2, 2, 1), (2, -2, 1, -2), (2, -1, -2, 2), (1, 2, -2, -2)),
        (169, 53, 6, 4, 1),
        "printed t^3 coefficient 53 disagrees with ell*(D1+...+D4) = 52; settled by counting",
    ),
)
