"""Lipschitz (integer coordinate) quaternions.

Covers Hamilton arithmetic, right division, the dyadic factorization
``q = 2^e * core * tail``, the map ``q -> q eps conj(q)`` onto Pythagorean
quadruples and its inverse, extraction of right factors that make a
quadruple imprimitive, the two-quaternion square ``(q1 j conj(q2), q1 k conj(q2))``
and the minimality test for such squares.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from math import gcd

from .arith import factorize, gcd_many, two_square_representations
from .errors import InvariantViolation, ValidationError
from .gaussian import GaussianInt, gaussian_gcd

__all__ = [
    "Quaternion",
    "UnitSymbol",
    "ONE",
    "I",
    "J",
    "K",
    "DYADIC_TAILS",
    "right_divide",
    "right_divides",
    "factor_dyadic",
    "quadruple_from_quaternion",
    "QuadrupleRecord",
    "quaternion_from_quadruple",
    "primitive_reduce",
    "square_from_quaternion_pair",
    "is_minimal_pair",
    "quaternions_of_norm",
]


@dataclass(frozen=True)
class Quaternion:
    """``x + y*i + z*j + t*k`` with integer coordinates."""

    x: int
    y: int = 0
    z: int = 0
    t: int = 0

    @classmethod
    def of(cls, value):
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, int):
            return cls(value)
        return cls(*value)

    def __iter__(self):
        return iter((self.x, self.y, self.z, self.t))

    def __add__(self, other):
        o = Quaternion.of(other)
        return Quaternion(self.x + o.x, self.y + o.y, self.z + o.z, self.t + o.t)

    __radd__ = __add__

    def __sub__(self, other):
        o = Quaternion.of(other)
        return Quaternion(self.x - o.x, self.y - o.y, self.z - o.z, self.t - o.t)

    def __neg__(self):
        return Quaternion(-self.x, -self.y, -self.z, -self.t)

    def __mul__(self, other):
        if isinstance(other, int):
            return Quaternion(self.x * other, self.y * other, self.z * other, self.t * other)
        a1, b1, c1, d1 = self
        a2, b2, c2, d2 = Quaternion.of(other)
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return Quaternion.of(other) * self

    def __bool__(self):
        return any(self)

    def conjugate(self):
        return Quaternion(self.x, -self.y, -self.z, -self.t)

    def norm(self):
        return self.x * self.x + self.y * self.y + self.z * self.z + self.t * self.t

    def is_odd(self):
        return self.norm() % 2 == 1

    def content(self):
        return gcd_many(tuple(self))

    def imag(self):
        return (self.y, self.z, self.t)

    def to_list(self):
        return [self.x, self.y, self.z, self.t]

    def __str__(self):
        parts = []
        for c, s in zip(self, ("", "i", "j", "k")):
            if c == 0:
                continue
            mag = "" if (abs(c) == 1 and s) else str(abs(c))
            parts.append(("-" if c < 0 else "+", mag + s))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return out + "".join(f" {sg} {body}" for sg, body in parts[1:])


ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)


class UnitSymbol(Enum):
    ONE = "1"
    I = "i"
    J = "j"
    K = "k"

    @property
    def quaternion(self):
        return {"1": ONE, "i": I, "j": J, "k": K}[self.value]

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        return cls(str(value).lower())


DYADIC_TAILS = (
    ONE,
    Quaternion(1, 1),
    Quaternion(1, 0, 1),
    Quaternion(1, 0, 0, 1),
    Quaternion(1, 0, 1) * Quaternion(1, 1),
    Quaternion(1, 0, 0, -1) * Quaternion(1, 1),
)


def right_divide(q, d):
    """Return ``w`` with ``q == w * d``, or None when ``d`` does not right-divide ``q``."""
    q, d = Quaternion.of(q), Quaternion.of(d)
    n = d.norm()
    if n == 0:
        raise ValueError("division by the zero quaternion")
    p = q * d.conjugate()
    if any(c % n for c in p):
        return None
    return Quaternion(*(c // n for c in p))


def right_divides(d, q):
    """True iff ``q = w * d`` for some integer quaternion ``w``."""
    return right_divide(q, d) is not None


def factor_dyadic(q):
    """Unique ``(e, core, tail)`` with ``q == 2**e * core * tail``.

    ``core`` is odd and ``tail`` is one of :data:`DYADIC_TAILS`.
    """
    q = Quaternion.of(q)
    if not q:
        raise ValueError("the zero quaternion has no dyadic factorization")
    e = 0
    while all(c % 2 == 0 for c in q):
        q = Quaternion(*(c // 2 for c in q))
        e += 1
    found = []
    for tail in DYADIC_TAILS:
        core = right_divide(q, tail)
        if core is not None and core.is_odd():
            found.append((core, tail))
    if len(found) != 1:
        raise InvariantViolation(f"expected one dyadic tail for {q}, found {len(found)}")
    core, tail = found[0]
    return e, core, tail


def quadruple_from_quaternion(q, eps=UnitSymbol.K):
    """Imaginary part of ``q * eps * conj(q)``; its squared length is ``N(q)^2``."""
    q = Quaternion.of(q)
    eps = UnitSymbol.parse(eps)
    if eps is UnitSymbol.ONE:
        raise ValidationError("eps must be an imaginary unit")
    r = q * eps.quaternion * q.conjugate()
    if r.x != 0:
        raise InvariantViolation("conjugate of a pure quaternion must be pure")
    return r.imag()


@dataclass(frozen=True)
class QuadrupleRecord:
    """How an input quadruple maps onto ``q * k * conj(q)``.

    ``quadruple_from_quaternion(q, eps)[m] == signs[m] * source[perm[m]]``.
    """

    perm: tuple
    signs: tuple
    eps: UnitSymbol = UnitSymbol.K

    def apply(self, source):
        return tuple(s * source[p] for s, p in zip(self.signs, self.perm))


def _gaussian_factor(target, modulus):
    """gcd(target, modulus) as a Gaussian integer of norm ``modulus`` (modulus > 0)."""
    if modulus == 1:
        return GaussianInt(1)
    g = gaussian_gcd(target, modulus)
    if g.norm() != modulus:
        raise InvariantViolation(f"gcd({target}, {modulus}) = {g} has norm {g.norm()}")
    return g


def quaternion_from_quadruple(n1, n2, n3, ell):
    """Quaternion ``q`` with ``N(q) = ell`` and ``q k conj(q)`` a permutation of the input.

    The input must be a primitive solution of ``n1^2 + n2^2 + n3^2 = ell^2``
    (``ell`` odd).  The odd entry is moved to the last slot; the returned
    :class:`QuadrupleRecord` says how.  Construction: with ``A = n1/2``,
    ``B = n2/2`` and ``alpha, beta = (ell +- n3)/2`` we have
    ``A - iB = (x - it)(z + iy)`` where the two factors are the Gaussian gcds
    of ``A - iB`` with ``alpha`` and with ``beta``.
    """
    source = (n1, n2, n3)
    if n1 * n1 + n2 * n2 + n3 * n3 != ell * ell or ell <= 0:
        raise ValidationError(f"{source} is not a quadruple of length {ell}")
    if ell % 2 == 0:
        raise ValidationError("ell must be odd for a primitive quadruple")
    if gcd_many(source) != 1:
        raise ValidationError(f"{source} is not primitive")
    odd = [i for i, n in enumerate(source) if n % 2]
    if len(odd) != 1:
        raise ValidationError(f"{source} must have exactly one odd entry")
    evens = [i for i in range(3) if i != odd[0]]
    perm = (evens[0], evens[1], odd[0])
    m1, m2, m3 = (source[p] for p in perm)
    alpha, beta = (ell + m3) // 2, (ell - m3) // 2
    target = GaussianInt(m1 // 2, -(m2 // 2))
    if not target:
        # m3 = +-1, ell = 1
        q = ONE if m3 > 0 else J
    else:
        # target != 0 forces alpha, beta > 0 since N(target) = alpha * beta
        g1 = _gaussian_factor(target, alpha)
        g2 = _gaussian_factor(target, beta)
        unit = target.exact_div(g1 * g2)
        if unit.norm() != 1:
            raise InvariantViolation(f"{target} != unit * {g1} * {g2}")
        g1 = g1 * unit
        # g1 = x - i t, g2 = z + i y
        q = Quaternion(g1.re, g2.im, g2.re, -g1.im)
    record = QuadrupleRecord(perm, (1, 1, 1), UnitSymbol.K)
    if quadruple_from_quaternion(q, UnitSymbol.K) != record.apply(source) or q.norm() != ell:
        raise InvariantViolation(f"reconstruction failed for {source}: {q}")
    return q, record


def _prime_norm_factors(p, eps):
    """Right-factor candidates of norm ``p`` that commute with ``eps`` or are dyadic."""
    e = UnitSymbol.parse(eps).quaternion
    if p == 2:
        others = [u for u in (I, J, K) if u != e]
        return [ONE + e] + [ONE + u for u in others]
    if p % 4 == 3:
        return [Quaternion(p)]
    cands = []
    for a, b in two_square_representations(p):
        for x, y in ((a, b), (a, -b), (b, a), (b, -a)):
            cands.append(Quaternion(x) + e * y)
    return cands


def primitive_reduce(q, eps=UnitSymbol.K):
    """Strip right factors until ``q eps conj(q)`` is primitive.

    Returns ``(reduced, factors)`` with ``q == reduced * factors[-1] * ... * factors[0]``.
    """
    q = Quaternion.of(q)
    if not q:
        raise ValueError("the zero quaternion has no quadruple")
    factors = []
    while True:
        g = gcd_many(quadruple_from_quaternion(q, eps))
        if g == 1:
            return q, factors
        for p in sorted(factorize(g)):
            for eta in _prime_norm_factors(p, eps):
                w = right_divide(q, eta)
                if w is not None:
                    q = w
                    factors.append(eta)
                    break
            else:
                continue
            break
        else:
            raise InvariantViolation(f"no right factor found for {q} with quadruple gcd {g}")


def square_from_quaternion_pair(q1, q2, eps2=UnitSymbol.J, eps3=UnitSymbol.K):
    """Twin pair ``(q1 eps2 conj(q2), q1 eps3 conj(q2))`` in Z^4."""
    from .squares import validate_twin

    q1, q2 = Quaternion.of(q1), Quaternion.of(q2)
    eps2, eps3 = UnitSymbol.parse(eps2), UnitSymbol.parse(eps3)
    if eps2 == eps3:
        raise ValidationError("eps2 and eps3 must differ")
    if UnitSymbol.ONE in (eps2, eps3):
        raise ValidationError("eps2 and eps3 must be imaginary units")
    if not q1 or not q2:
        raise ValidationError("quaternions must be nonzero")
    u = q1 * eps2.quaternion * q2.conjugate()
    v = q1 * eps3.quaternion * q2.conjugate()
    return validate_twin(tuple(u), tuple(v))


def _gaussian_primes_dividing(n):
    out = []
    for p, e in sorted(factorize(n).items()):
        if p == 2:
            out.append(Quaternion(1, 1))
        elif p % 4 == 3:
            # inert: p itself is a Gaussian prime of norm p^2
            if e >= 2:
                out.append(Quaternion(p))
        else:
            for a, b in two_square_representations(p):
                out.extend([Quaternion(a, b), Quaternion(a, -b), Quaternion(b, a), Quaternion(b, -a)])
    return out


def is_minimal_pair(q1, q2):
    """True iff neither quaternion is right-divisible by a Gaussian prime ``a + b i``.

    Only Gaussian primes whose norm divides ``N(q1) N(q2)`` can matter; that
    includes an inert rational prime ``p = 3 mod 4`` when ``p^2`` divides it.  A quaternion whose dyadic
    tail involves ``1 + i`` is right-divisible by ``1 + i`` and so fails.
    """
    q1, q2 = Quaternion.of(q1), Quaternion.of(q2)
    if not q1 or not q2:
        raise ValidationError("quaternions must be nonzero")
    for pi in _gaussian_primes_dividing(q1.norm() * q2.norm()):
        if right_divides(pi, q1) or right_divides(pi, q2):
            return False
    return True


def quaternions_of_norm(n):
    """All integer quaternions of norm ``n`` in lexicographic order."""
    from math import isqrt

    out = []
    r = isqrt(n)
    for x in range(-r, r + 1):
        rx = n - x * x
        ry = isqrt(rx)
        for y in range(-ry, ry + 1):
            rz_ = rx - y * y
            rz = isqrt(rz_)
            for z in range(-rz, rz + 1):
                t2 = rz_ - z * z
                t = isqrt(t2)
                if t * t == t2:
                    out.append(Quaternion(x, y, z, -t))
                    if t:
                        out.append(Quaternion(x, y, z, t))
    return out
