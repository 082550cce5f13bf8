"""Positive definite binary quadratic forms and exact representation search."""

from dataclasses import dataclass
from math import isqrt

__all__ = ["BinaryQuadraticForm", "enumerate_form_values"]


@dataclass(frozen=True)
class BinaryQuadraticForm:
    """``A*v**2 + B*v*w + C*w**2``."""

    A: int
    B: int
    C: int

    def __call__(self, v, w):
        return self.A * v * v + self.B * v * w + self.C * w * w

    @property
    def determinant4(self):
        """``4AC - B^2``; positive exactly when the form is definite (given A > 0)."""
        return 4 * self.A * self.C - self.B * self.B

    def is_positive_definite(self):
        return self.A > 0 and self.determinant4 > 0

    def bounds(self, target):
        """Exact bounds ``(|v|max, |w|max)`` for solutions of ``f(v, w) = target``.

        From ``f >= (4AC - B^2) / (4C) * v^2`` and the symmetric inequality in w.
        """
        d = self.determinant4
        return isqrt(4 * self.C * target // d), isqrt(4 * self.A * target // d)

    @classmethod
    def from_gram(cls, b1, b2):
        """Norm form ``|v*b1 + w*b2|^2`` of a rank-2 lattice basis."""
        g11 = sum(x * x for x in b1)
        g12 = sum(x * y for x, y in zip(b1, b2))
        g22 = sum(y * y for y in b2)
        return cls(g11, 2 * g12, g22)


def enumerate_form_values(form, target):
    """All integer ``(v, w)`` with ``form(v, w) == target``, sorted lexicographically."""
    if not form.is_positive_definite():
        raise ValueError(f"{form} is not positive definite")
    if target < 0:
        return []
    if target == 0:
        return [(0, 0)]
    A, B, C = form.A, form.B, form.C
    _, wmax = form.bounds(target)
    sols = []
    for w in range(-wmax, wmax + 1):
        # A v^2 + (B w) v + (C w^2 - target) = 0
        disc = (B * w) ** 2 - 4 * A * (C * w * w - target)
        if disc < 0:
            continue
        r = isqrt(disc)
        if r * r != disc:
            continue
        for num in {-B * w + r, -B * w - r}:
            if num % (2 * A) == 0:
                sols.append((num // (2 * A), w))
    return sorted(sols)
