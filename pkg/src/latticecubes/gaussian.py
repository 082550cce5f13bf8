"""Gaussian integers and their Euclidean gcd."""

from dataclasses import dataclass

__all__ = ["GaussianInt", "gaussian_gcd"]


def _round_div(a, b):
    # nearest integer to a/b for b > 0, ties rounded up
    return (2 * a + b) // (2 * b)


@dataclass(frozen=True)
class GaussianInt:
    re: int
    im: int = 0

    def __add__(self, other):
        other = _coerce(other)
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.re or self.im)

    def conjugate(self):
        return GaussianInt(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __divmod__(self, other):
        other = _coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("Gaussian division by zero")
        num = self * other.conjugate()
        q = GaussianInt(_round_div(num.re, n), _round_div(num.im, n))
        return q, self - q * other

    def divides(self, other):
        """True iff ``self`` divides ``other`` in Z[i]."""
        other = _coerce(other)
        if not self:
            return not other
        num = other * self.conjugate()
        n = self.norm()
        return num.re % n == 0 and num.im % n == 0

    def exact_div(self, other):
        other = _coerce(other)
        n = other.norm()
        num = self * other.conjugate()
        if num.re % n or num.im % n:
            raise ValueError(f"{other} does not divide {self}")
        return GaussianInt(num.re // n, num.im // n)

    def associates(self):
        z = self
        out = []
        for _ in range(4):
            out.append(z)
            z = GaussianInt(-z.im, z.re)
        return out

    def canonical(self):
        """Unit multiple with ``re > 0`` and ``re >= |im|`` (``im > 0`` on the diagonal)."""
        if not self:
            return self
        for z in self.associates():
            if z.re > 0 and z.re >= abs(z.im) and not (z.re == -z.im):
                return z
        raise AssertionError("unreachable")

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def _coerce(z):
    if isinstance(z, GaussianInt):
        return z
    return GaussianInt(z, 0)


def gaussian_gcd(z1, z2):
    """Greatest common divisor in Z[i], returned in canonical unit form."""
    a, b = _coerce(z1), _coerce(z2)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        _, r = divmod(a, b)
        a, b = b, r
    return a.canonical()
