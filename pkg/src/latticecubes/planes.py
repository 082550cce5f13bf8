"""Rational 2-planes in Z^4 described by the six signed minors of a spanning pair.

For a pair ``u, v`` the minors ``D_ij = (-1)^(i-j) (u_i v_j - u_j v_i)`` satisfy
the Pluecker relation ``D12 D34 - D13 D24 + D14 D23 = 0`` and, for a twin pair
of squared length ``ell``, ``sum D_ij^2 = ell^2``.  Rescaling
``(D12 +- D34, -D13 +- D24, D14 +- D23)`` gives two representations of ``k^2``
as a sum of three squares, and the plane is cut out by

    0*x1 + D34*x2 + D24*x3 + D23*x4 = 0
    D23*x1 + D13*x2 + D12*x3 + 0*x4 = 0

which is the form used throughout this module.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product

from .arith import dot, gcd_many
from .errors import DegeneratePlaneError, SearchBudgetExceeded, ValidationError
from .forms import BinaryQuadraticForm, enumerate_form_values
from .linalg import gram_matrix, gram_volume, hermite_normal_form, integer_kernel, lagrange_reduce
from .squares import TwinPair, validate_twin

log = logging.getLogger(__name__)

__all__ = [
    "Minors",
    "PlaneData",
    "SublatticeBasis",
    "minors_from_pair",
    "plane_data_from_pair",
    "plane_from_representations",
    "sublattice_basis",
    "minimal_square_in_plane",
    "rotation_partner",
    "plane_point",
    "equivalent_planes",
]


@dataclass(frozen=True)
class Minors:
    d12: int
    d13: int
    d14: int
    d23: int
    d24: int
    d34: int

    def __iter__(self):
        return iter((self.d12, self.d13, self.d14, self.d23, self.d24, self.d34))

    def plucker(self):
        """``D12 D34 - D13 D24 + D14 D23``; identically zero for minors of a pair."""
        return self.d12 * self.d34 - self.d13 * self.d24 + self.d14 * self.d23

    def square_sum(self):
        return sum(d * d for d in self)

    def forms(self):
        """The two linear forms vanishing on the plane."""
        return (0, self.d34, self.d24, self.d23), (self.d23, self.d13, self.d12, 0)


def minors_from_pair(u, v):
    if len(u) != 4 or len(v) != 4:
        raise ValidationError("expected vectors in Z^4")

    def m(i, j):
        return (-1) ** ((j - i) % 2) * (u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1])

    return Minors(m(1, 2), m(1, 3), m(1, 4), m(2, 3), m(2, 4), m(3, 4))


@dataclass(frozen=True)
class PlaneData:
    """Minor description of a 2-plane in Z^4.

    ``deltas``, ``w1``, ``w2`` live in working coordinates obtained from the
    original ones by ``perm`` (working coordinate ``m`` is original coordinate
    ``perm[m]``) followed by multiplying coordinate ``m`` by ``signs[m]``.
    ``alphas``/``betas`` are the minors' sums and differences divided by
    ``dyadic * g``: ``dyadic`` the largest power of 2 and ``g`` the odd gcd
    that remain common to all six.
    """

    deltas: Minors
    k: int
    dyadic: int
    g: int
    alphas: tuple
    betas: tuple
    w1: tuple
    w2: tuple
    perm: tuple = (0, 1, 2, 3)
    signs: tuple = (1, 1, 1, 1)
    three_dimensional: bool = False

    @property
    def gcd_hypothesis(self):
        return self.g == 1

    def to_original(self, w):
        out = [0] * 4
        for m, (p, s) in enumerate(zip(self.perm, self.signs)):
            out[p] = s * w[m]
        return tuple(out)

    def to_working(self, x):
        return tuple(s * x[p] for p, s in zip(self.perm, self.signs))

    @property
    def normals(self):
        """``w1, w2`` in original coordinates."""
        return self.to_original(self.w1), self.to_original(self.w2)

    def contains(self, x):
        return all(dot(w, x) == 0 for w in self.normals)

    def to_dict(self):
        return {
            "deltas": dict(zip(("12", "13", "14", "23", "24", "34"), self.deltas)),
            "k": self.k,
            "dyadic": self.dyadic,
            "g": self.g,
            "alphas": list(self.alphas),
            "betas": list(self.betas),
            "w1": list(self.w1),
            "w2": list(self.w2),
            "perm": list(self.perm),
            "signs": list(self.signs),
            "three_dimensional": self.three_dimensional,
            "gcd_hypothesis": self.gcd_hypothesis,
        }

    @classmethod
    def from_dict(cls, data):
        d = data["deltas"]
        return cls(
            Minors(*(d[key] for key in ("12", "13", "14", "23", "24", "34"))),
            data["k"],
            data["dyadic"],
            data["g"],
            tuple(data["alphas"]),
            tuple(data["betas"]),
            tuple(data["w1"]),
            tuple(data["w2"]),
            tuple(data["perm"]),
            tuple(data["signs"]),
            data["three_dimensional"],
        )


def _alpha_beta(d):
    alphas = (d.d12 + d.d34, -d.d13 + d.d24, d.d14 + d.d23)
    betas = (d.d12 - d.d34, -d.d13 - d.d24, d.d14 - d.d23)
    return alphas, betas


def _w_vectors(alphas, betas):
    a1, a2, a3 = alphas
    b1, b2, b3 = betas
    w1 = (0, a1 - b1, a2 - b2, a3 - b3)
    w2 = (a3 - b3, -a2 - b2, a1 + b1, 0)
    return w1, w2


def _signed_permutations():
    # fixed search order: permutations first, sign patterns second
    for perm in permutations(range(4)):
        for signs in product((1, -1), repeat=4):
            yield perm, signs


def plane_data_from_pair(u, v):
    """Minor descriptor of the plane spanned by a twin pair in Z^4."""
    pair = validate_twin(u, v)
    if pair.dim != 4:
        raise ValidationError("expected a pair in Z^4")
    ell = pair.norm
    base = minors_from_pair(pair.u, pair.v)
    if not any(base):
        raise DegeneratePlaneError("all minors vanish")
    for perm, signs in _signed_permutations():
        uu = tuple(s * pair.u[p] for p, s in zip(perm, signs))
        vv = tuple(s * pair.v[p] for p, s in zip(perm, signs))
        d = minors_from_pair(uu, vv)
        if d.d23 != 0:
            break
    alphas, betas = _alpha_beta(d)
    common = gcd_many(alphas + betas)
    dyadic = 1
    while common % 2 == 0:
        common //= 2
        dyadic *= 2
    g = common
    scale = dyadic * g
    alphas = tuple(a // scale for a in alphas)
    betas = tuple(b // scale for b in betas)
    if ell % scale:
        raise ValidationError(f"squared length {ell} not divisible by {scale}")
    k = ell // scale
    w1, w2 = _w_vectors(alphas, betas)
    plane = PlaneData(d, k, dyadic, g, alphas, betas, w1, w2, perm, signs)
    for x in (pair.u, pair.v):
        if not plane.contains(x):
            raise ValidationError(f"{x} is not orthogonal to the computed normals")
    return plane


def _normalized_variants(rep):
    a, b, c = rep
    odd = [x for x in rep if x % 2]
    if len(odd) != 1:
        raise ValidationError(f"{rep} must have exactly one odd entry")
    evens = [x for x in rep if x % 2 == 0]
    if a % 2 == 0:
        a = odd[0]
        b, c = evens
    seen = []
    # reorderings before sign changes
    for sb, sc in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        for bb, cc in ((b, c), (c, b)):
            cand = (a, sb * bb, sc * cc)
            if cand not in seen:
                seen.append(cand)
    return seen


def plane_from_representations(k, rep1, rep2):
    """Plane of squares from ``k^2 = a^2+b^2+c^2 = a'^2+b'^2+c'^2`` (k odd).

    Each representation is rearranged so its odd entry comes first; the
    remaining entries are permuted and sign-changed in a fixed order until
    ``c' > c``.  If that never happens the representations coincide and a
    ``three_dimensional`` descriptor is returned.
    """
    if k <= 0 or k % 2 == 0:
        raise ValidationError("k must be a positive odd integer")
    for rep in (rep1, rep2):
        if sum(x * x for x in rep) != k * k:
            raise ValidationError(f"{rep} is not a representation of {k}^2")
    if gcd_many(tuple(rep1) + tuple(rep2)) != 1:
        raise ValidationError("the six entries must be coprime")
    choice = None
    for r1 in _normalized_variants(tuple(rep1)):
        for r2 in _normalized_variants(tuple(rep2)):
            if r2[2] > r1[2]:
                choice = (r1, r2)
                break
        if choice:
            break
    if choice is None:
        (a, b, c), (a2, b2, c2) = _normalized_variants(tuple(rep1))[0], _normalized_variants(tuple(rep2))[0]
        three_d = True
    else:
        (a, b, c), (a2, b2, c2) = choice
        three_d = False
    d = Minors(
        d12=(a2 - a) // 2,
        d13=-(b2 - b) // 2,
        d14=(c + c2) // 2,
        d23=(c2 - c) // 2,
        d24=(b + b2) // 2,
        d34=(a + a2) // 2,
    )
    alphas, betas = _alpha_beta(d)
    w1, w2 = _w_vectors(alphas, betas)
    return PlaneData(d, k, 1, 1, alphas, betas, w1, w2, three_dimensional=three_d)


@dataclass(frozen=True)
class SublatticeBasis:
    basis: tuple
    gram: tuple
    fundamental_volume: int


def sublattice_basis(plane):
    """Saturated basis of Z^4 intersected with the plane, plus its covolume."""
    if plane.three_dimensional:
        raise DegeneratePlaneError("representations coincide; not a 2-plane")
    normals = [w for w in plane.normals if any(w)]
    basis = integer_kernel(normals, 4)
    if len(basis) != 2:
        raise DegeneratePlaneError(f"kernel has rank {len(basis)}, expected 2")
    basis = tuple(basis)
    return SublatticeBasis(basis, tuple(gram_matrix(basis)), gram_volume(basis))


def plane_point(plane, v, w):
    """Working-coordinate point ``P(v, w)`` with free coordinates 2 and 3 (exact)."""
    d = plane.deltas
    return (
        Fraction(-(d.d13 * v + d.d12 * w), d.d23),
        Fraction(v),
        Fraction(w),
        Fraction(-(d.d34 * v + d.d24 * w), d.d23),
    )


def rotation_partner(plane, v, w):
    """Parameters ``(v', w')`` of the quarter-turn partner of ``P(v, w)`` in the plane.

    With ``w0 = D13^2 + D23^2 + D34^2`` and ``v0 = -(D34 D24 + D13 D12)``:
    ``v' = (v0^2 w - v0 w0 v + k^2 D23^2 w) / (k D23 w0)`` and
    ``w' = (v0 w - w0 v) / (k D23)``.  ``k`` is the odd number with
    ``sum D_ij^2 = k^2``.
    """
    d = plane.deltas
    kk = d.square_sum()
    w0 = d.d13 ** 2 + d.d23 ** 2 + d.d34 ** 2
    v0 = -(d.d34 * d.d24 + d.d13 * d.d12)
    k_scaled = _isqrt_exact(kk)
    vp = Fraction(v0 * v0 * w - v0 * w0 * v + kk * d.d23 ** 2 * w, k_scaled * d.d23 * w0)
    wp = Fraction(v0 * w - w0 * v, k_scaled * d.d23)
    return vp, wp


def _isqrt_exact(n):
    from math import isqrt

    r = isqrt(n)
    if r * r != n:
        raise ValidationError(f"{n} is not a perfect square")
    return r


def minimal_square_in_plane(plane, budget=None):
    """Twin pair of smallest squared length inside the plane.

    Norm classes ``k, 2k, 3k, ...`` of the plane's Gram form are scanned (every
    square's squared length is a multiple of the covolume) until a class
    holds two orthogonal vectors.  ``budget`` bounds the squared length and
    defaults to ``64 k^2``.
    """
    sub = sublattice_basis(plane)
    g1, g2 = lagrange_reduce(*sub.basis)
    form = BinaryQuadraticForm.from_gram(g1, g2)
    covol = sub.fundamental_volume
    if budget is None:
        budget = 64 * covol * covol
    target = covol
    while target <= budget:
        points = enumerate_form_values(form, target)
        vectors = [tuple(a * x + b * y for x, y in zip(g1, g2)) for a, b in points]
        for i, x in enumerate(vectors):
            for y in vectors[i + 1:]:
                if dot(x, y) == 0:
                    pair = validate_twin(x, y)
                    _check_rotation(plane, pair)
                    return pair
        target += covol
    raise SearchBudgetExceeded(f"no square of squared length <= {budget} in the plane", budget)


def _check_rotation(plane, pair):
    if plane.three_dimensional:
        return
    u = plane.to_working(pair.u)
    v = plane.to_working(pair.v)
    vp, wp = rotation_partner(plane, u[1], u[2])
    image = plane_point(plane, vp, wp)
    if image not in (tuple(Fraction(x) for x in v), tuple(Fraction(-x) for x in v)):
        log.warning("rotation formula maps %s to %s, expected +-%s", u, image, v)
    elif vp.denominator != 1 or wp.denominator != 1:
        log.info("rotation parameters (%s, %s) are not integral", vp, wp)


def equivalent_planes(basis1, basis2):
    """True iff some signed coordinate permutation maps one rank-2 lattice onto the other."""
    target = hermite_normal_form(basis2)
    for perm, signs in _signed_permutations():
        moved = [tuple(s * b[p] for p, s in zip(perm, signs)) for b in basis1]
        if hermite_normal_form(moved) == target:
            return True
    return False
