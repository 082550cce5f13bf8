"""Lattice squares (twin vector pairs) in Z^2, Z^3, Z^4 and their Ehrhart polynomials."""

import logging
from dataclasses import dataclass
from math import gcd, isqrt

from .arith import cross3, dot, gcd_many, is_prime
from .errors import InvariantViolation, TwinValidationError, ValidationError
from .linalg import gram_volume, saturate
from .polynomial import EhrhartPolynomial

log = logging.getLogger(__name__)

__all__ = [
    "TwinPair",
    "SquareEhrhart",
    "validate_twin",
    "pair_minors",
    "ehrhart_square_2d",
    "ehrhart_square_3d",
    "ehrhart_square_generic",
    "ehrhart_square_4d_from_quaternions",
    "square_in_plane_3d",
    "param_square_3d",
    "param_normal_3d",
    "double_square_4d",
    "pseudo_orthogonal_matrix",
    "aps_witness_odd",
    "aps_witness_even",
    "odd_representation",
]


@dataclass(frozen=True)
class TwinPair:
    """Two orthogonal integer vectors of equal squared length ``norm``."""

    u: tuple
    v: tuple
    norm: int
    d1: int
    d2: int

    @property
    def dim(self):
        return len(self.u)

    def to_dict(self):
        return {"u": list(self.u), "v": list(self.v), "norm": self.norm, "D1": self.d1, "D2": self.d2}

    @classmethod
    def from_dict(cls, data):
        return validate_twin(data["u"], data["v"])


@dataclass(frozen=True)
class SquareEhrhart:
    poly: EhrhartPolynomial

    @property
    def leading(self):
        return self.poly.coeffs[2]

    @property
    def linear(self):
        return self.poly.coeffs[1]

    def interior(self, t):
        return self.poly.interior(t)


def _square(a, b, c):
    return SquareEhrhart(EhrhartPolynomial((c, b, a)))


def validate_twin(u, v):
    u, v = tuple(int(x) for x in u), tuple(int(x) for x in v)
    if len(u) != len(v) or not 2 <= len(u) <= 4:
        raise TwinValidationError("dimension", f"vectors must share a dimension in 2..4: {u}, {v}")
    nu, nv = dot(u, u), dot(v, v)
    if nu == 0 or nv == 0:
        raise TwinValidationError("zero", "twin vectors must be nonzero")
    if nu != nv:
        raise TwinValidationError("norm", f"unequal squared lengths {nu} != {nv}")
    if dot(u, v) != 0:
        raise TwinValidationError("orthogonality", f"u.v = {dot(u, v)} != 0")
    return TwinPair(u, v, nu, gcd_many(u), gcd_many(v))


def pair_minors(u, v):
    """All 2x2 minors ``u_i v_j - u_j v_i`` for ``i < j``."""
    n = len(u)
    return [u[i] * v[j] - u[j] * v[i] for i in range(n) for j in range(i + 1, n)]


def ehrhart_square_2d(a, b):
    """Square with vertices 0, (a, b), (a-b, a+b), (-b, a): ``(a^2+b^2) t^2 + 2t + 1``."""
    if a == 0 and b == 0:
        raise ValidationError("(a, b) must be nonzero")
    if gcd(a, b) != 1:
        raise ValidationError(f"gcd({a}, {b}) != 1")
    return _square(a * a + b * b, 2, 1)


def ehrhart_square_3d(pair):
    """``D t^2 + (d + d') t + 1`` with D the gcd of the cross product entries."""
    if pair.dim != 3:
        raise ValidationError("expected a pair in Z^3")
    common = gcd_many(pair.u + pair.v)
    if common != 1:
        raise ValidationError(f"reducible square: all coordinates share the factor {common}")
    D = gcd_many(cross3(pair.u, pair.v))
    return _square(D, pair.d1 + pair.d2, 1)


def plane_covolume(pair):
    """Covolume of ``Z^n`` intersected with the plane of the pair."""
    return gram_volume(saturate([pair.u, pair.v], pair.dim))


def ehrhart_square_generic(pair):
    """Leading coefficient ``norm / covolume``, linear ``D1 + D2``, constant 1; any dimension."""
    covol = plane_covolume(pair)
    lead, rem = divmod(pair.norm, covol)
    if rem or lead <= 0:
        raise InvariantViolation(f"norm {pair.norm} not a multiple of covolume {covol}")
    return _square(lead, pair.d1 + pair.d2, 1)


def ehrhart_square_4d_from_quaternions(q1, q2):
    """``gcd(N1, N2) t^2 + (D1 + D2) t + 1`` for the square built from odd minimal q1, q2."""
    from .quaternions import Quaternion, is_minimal_pair, square_from_quaternion_pair

    q1, q2 = Quaternion.of(q1), Quaternion.of(q2)
    if not (q1.is_odd() and q2.is_odd()):
        raise ValidationError("both quaternions must be odd")
    if not is_minimal_pair(q1, q2):
        raise ValidationError(f"{q1}, {q2} are right-divisible by a Gaussian prime")
    pair = square_from_quaternion_pair(q1, q2)
    result = _square(gcd(q1.norm(), q2.norm()), pair.d1 + pair.d2, 1)
    if ehrhart_square_generic(pair) != result:
        raise InvariantViolation(f"quaternion formula disagrees with the lattice volume for {q1}, {q2}")
    return result


def square_in_plane_3d(u_prime, normal):
    """Square ``(ell * u', u' x n)`` in the plane with normal ``n``, ``|n| = ell``."""
    u_prime, normal = tuple(u_prime), tuple(normal)
    if len(u_prime) != 3 or len(normal) != 3:
        raise ValidationError("expected vectors in Z^3")
    if dot(u_prime, normal) != 0:
        raise ValidationError("u' must be orthogonal to n")
    n2 = dot(normal, normal)
    ell = isqrt(n2)
    if ell * ell != n2 or ell == 0:
        raise ValidationError(f"|n|^2 = {n2} is not a nonzero perfect square")
    return validate_twin(tuple(ell * x for x in u_prime), cross3(u_prime, normal))


def param_square_3d(x, y, z, t):
    """Twin pair of squared length ``(x^2+y^2+z^2+t^2)^2`` from four parameters."""
    if not (x or y or z or t):
        raise ValidationError("parameters must not all vanish")
    u = (2 * t * y + 2 * z * x, 2 * t * z - 2 * y * x, t * t - z * z - y * y + x * x)
    v = (2 * z * y - 2 * t * x, z * z - t * t + x * x - y * y, 2 * t * z + 2 * y * x)
    return validate_twin(u, v)


def param_normal_3d(x, y, z, t):
    """Normal ``(u x v) / s`` of the parametrized square, ``s = x^2+y^2+z^2+t^2``.

    The third entry is ``2(zx - ty)``; with the opposite sign the vector is
    not orthogonal to ``u`` in general (try ``(0, 1, 0, 2)``).
    """
    return (-x * x + t * t - y * y + z * z, -2 * (t * x + z * y), 2 * (z * x - t * y))


def pseudo_orthogonal_matrix(a, b, c, d):
    return (
        (a, b, c, d),
        (-b, a, d, -c),
        (-c, -d, a, b),
        (-d, c, -b, a),
    )


def double_square_4d(a, b, c, d):
    """First two rows of the pseudo-orthogonal matrix: ``(a,b,c,d), (-b,a,d,-c)``."""
    if not (a or b or c or d):
        raise ValidationError("parameters must not all vanish")
    rows = pseudo_orthogonal_matrix(a, b, c, d)
    return validate_twin(rows[0], rows[1])


def odd_representation(k):
    """First ``(a, b, c)`` with ``k^2 = a^2 + b^2 + c^2``, a odd, b and c even, gcd 1.

    Search order: a ascending over odd values, then c descending.
    """
    if k < 1 or k % 2 == 0:
        raise ValidationError("k must be a positive odd integer")
    kk = k * k
    for a in range(1, k + 1, 2):
        rest = kk - a * a
        for c in range(isqrt(rest) // 2 * 2, -1, -2):
            b2 = rest - c * c
            b = isqrt(b2)
            if b * b == b2 and b % 2 == 0 and gcd_many((a, b, c)) == 1:
                return a, b, c
    raise InvariantViolation(f"no primitive representation of {k}^2 found")


def aps_witness_odd(k, rep=None):
    """Square ``u = (k, k, 0, 0)``, ``v = (a, -a, b+c, b-c)`` from ``k^2 = a^2 + b^2 + c^2``, a odd.

    The odd entry has to sit in the repeated slot.  Then ``v`` has gcd 1, the
    plane has covolume ``k`` and ``E(t) = 2k t^2 + (k+1) t + 1``, so the
    interior count at ``t = 1`` is ``k``.  (With an even entry repeated, the
    covolume doubles and the interior count drops to 0.)  The polynomial is
    measured from the plane lattice rather than assumed.
    """
    if k < 1 or k % 2 == 0:
        raise ValidationError("k must be a positive odd integer")
    a, b, c = rep if rep is not None else odd_representation(k)
    if a * a + b * b + c * c != k * k or a % 2 == 0 or b % 2 or c % 2:
        raise ValidationError(f"{(a, b, c)} is not a representation of {k}^2 with a odd")
    pair = validate_twin((k, k, 0, 0), (a, -a, b + c, b - c))
    result = ehrhart_square_generic(pair)
    if result.interior(1) != k:
        raise InvariantViolation(f"odd construction for k={k} gives {result.poly}")
    return pair, result


def aps_witness_even(p):
    """Square in Z^4 with ``E(t) = p t^2 + 2 t + 1`` for a prime ``p >= 11``.

    Two inequivalent primitive representations of ``p^2`` give quaternions
    ``q1, q2`` of norm ``p``; the square ``(q1 j conj(q2), q1 k conj(q2))``
    lies in a plane of covolume ``p``.  Candidate pairs are scanned in table
    order until both sides have coordinate gcd 1.
    """
    from .quaternions import quaternion_from_quadruple, square_from_quaternion_pair
    from .sequences import quadruple_table

    if p < 11 or not is_prime(p):
        raise ValidationError("p must be a prime >= 11")
    reps = quadruple_table(p).rows[p]
    if len(reps) < 2:
        raise ValidationError(f"{p}^2 has fewer than two primitive representations")
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            q1, _ = quaternion_from_quadruple(*_odd_last(reps[i]), p)
            q2, _ = quaternion_from_quadruple(*_odd_last(reps[j]), p)
            pair = square_from_quaternion_pair(q1, q2)
            poly = ehrhart_square_generic(pair)
            if poly.leading == p and poly.linear == 2:
                return pair, poly
            log.warning("representations %s, %s of %d^2 give %s", reps[i], reps[j], p, poly.poly)
    raise InvariantViolation(f"no representation pair of {p}^2 gives D1 + D2 = 2")


def _odd_last(rep):
    a, b, c = rep
    return b, c, a
