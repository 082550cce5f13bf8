"""Integer helpers: gcds, factorization by trial division, sums of squares."""

from functools import reduce
from math import gcd, isqrt

__all__ = [
    "gcd_many",
    "lcm",
    "is_square",
    "factorize",
    "is_prime",
    "is_sum_two_squares",
    "is_primitive_sum_two_squares",
    "decompose_two_squares",
    "two_square_representations",
    "is_sum_three_squares",
    "dot",
    "cross3",
]


def gcd_many(values):
    """Greatest common divisor of the absolute values; ``gcd_many([0, 0]) == 0``."""
    values = list(values)
    if not values:
        raise ValueError("gcd_many needs at least one value")
    return reduce(gcd, (abs(v) for v in values), 0)


def lcm(a, b):
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd(a, b)


def is_square(n):
    return n >= 0 and isqrt(n) ** 2 == n


def factorize(n):
    """Prime factorization of ``|n|`` as ``{prime: exponent}`` (trial division)."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    factors = {}
    while n % 2 == 0:
        factors[2] = factors.get(2, 0) + 1
        n //= 2
    p = 3
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            return False
        p += 2
    return True


def is_sum_two_squares(n):
    """True iff ``n = A**2 + B**2`` for integers A, B (``n >= 0``)."""
    if n < 0:
        return False
    if n == 0:
        return True
    return all(e % 2 == 0 for p, e in factorize(n).items() if p % 4 == 3)


def is_primitive_sum_two_squares(n):
    """True iff ``n = a**2 + b**2`` with ``gcd(a, b) == 1``."""
    if n <= 0:
        return False
    f = factorize(n)
    return f.get(2, 0) <= 1 and all(p % 4 == 1 for p in f if p != 2)


def decompose_two_squares(n):
    """Return ``(A, B)`` with ``A >= B >= 0`` and ``A**2 + B**2 == n``, or None.

    Among all such pairs the lexicographically smallest is returned.
    """
    if n < 0 or not is_sum_two_squares(n):
        return None
    a = isqrt(n // 2)
    while a * a * 2 < n:
        a += 1
    while a * a <= n:
        b2 = n - a * a
        b = isqrt(b2)
        if b * b == b2 and b <= a:
            return a, b
        a += 1
    return None


def two_square_representations(n):
    """All ``(A, B)`` with ``A >= B >= 0`` and ``A**2 + B**2 == n``, ascending in A."""
    reps = []
    if n < 0:
        return reps
    a = isqrt(n // 2)
    while a * a <= n:
        b2 = n - a * a
        b = isqrt(b2)
        if b * b == b2 and b <= a:
            reps.append((a, b))
        a += 1
    return reps


def is_sum_three_squares(n):
    """Legendre: ``n >= 0`` is a sum of three squares iff not of the form 4^k(8m+7)."""
    if n < 0:
        return False
    if n == 0:
        return True
    while n % 4 == 0:
        n //= 4
    return n % 8 != 7


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def cross3(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )
