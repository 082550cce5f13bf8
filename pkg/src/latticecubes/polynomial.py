"""Integer polynomials in ascending-coefficient form and exact interpolation."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegralFitError

__all__ = ["EhrhartPolynomial", "fit_polynomial"]


@dataclass(frozen=True)
class EhrhartPolynomial:
    """Polynomial with integer coefficients, ``coeffs[0]`` is the constant term."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_descending(cls, *coeffs):
        return cls(tuple(reversed(coeffs)))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1]

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def interior(self, t):
        """Interior lattice point count of the t-th dilate, ``(-1)^d p(-t)``."""
        return (-1) ** self.degree * self(-t)

    def __mul__(self, other):
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return EhrhartPolynomial(tuple(out))

    def to_dict(self):
        return {"poly": list(self.coeffs)}

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(data["poly"]))

    def __str__(self):
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            mag = abs(c)
            body = "" if (mag == 1 and power) else str(mag)
            if power >= 2:
                body += f"t^{power}"
            elif power == 1:
                body += "t"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def fit_polynomial(points, degree):
    """Unique polynomial of ``degree`` through ``degree + 1`` points ``(t, value)``.

    Solved exactly with Newton divided differences; raises
    :class:`NonIntegralFitError` if a coefficient is not an integer.
    """
    points = [(int(t), int(c)) for t, c in points]
    if len(points) != degree + 1:
        raise ValueError(f"need exactly {degree + 1} points for degree {degree}, got {len(points)}")
    ts = [t for t, _ in points]
    if len(set(ts)) != len(ts):
        raise ValueError("interpolation nodes must be distinct")
    n = len(points)
    table = [Fraction(c) for _, c in points]
    newton = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (ts[i + level] - ts[i])
            for i in range(n - level)
        ]
        newton.append(table[0])
    # expand Newton form into monomial coefficients
    coeffs = [Fraction(0)] * n
    basis = [Fraction(1)]
    for k in range(n):
        for i, b in enumerate(basis):
            coeffs[i] += newton[k] * b
        shifted = [Fraction(0)] + basis
        for i, b in enumerate(basis):
            shifted[i] -= ts[k] * b
        basis = shifted
    if any(c.denominator != 1 for c in coeffs):
        raise NonIntegralFitError(tuple(coeffs))
    return EhrhartPolynomial(tuple(int(c) for c in coeffs))
