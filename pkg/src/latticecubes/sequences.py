"""Almost-perfect-squares sequences and primitive Pythagorean quadruple tables."""

import csv
import io
import json
from dataclasses import dataclass, field
from itertools import product
from math import gcd, isqrt

from .arith import gcd_many
from .errors import ValidationError

__all__ = [
    "QuadrupleTable",
    "quadruple_table",
    "ApsWitness",
    "ApsTable",
    "aps2_terms",
    "aps_witnessed",
    "search_k_square",
    "verify_k_square",
    "KSquareSearch",
]


@dataclass(frozen=True)
class QuadrupleTable:
    """Primitive ``[a, b, c]`` with ``a^2 + b^2 + c^2 = ell^2`` per odd ``ell``.

    Entries are nonnegative, odd entry first, the two even entries descending.
    """

    rows: dict

    def to_dict(self):
        return {"rows": {str(k): [list(r) for r in v] for k, v in self.rows.items()}}

    @classmethod
    def from_dict(cls, data):
        return cls({int(k): [tuple(r) for r in v] for k, v in data["rows"].items()})


def quadruple_table(ell_max, ell_min=1):
    """Exhaustive primitive quadruples for odd ``ell`` in ``[ell_min, ell_max]``."""
    rows = {}
    start = ell_min if ell_min % 2 else ell_min + 1
    for ell in range(start, ell_max + 1, 2):
        found = []
        target = ell * ell
        for a in range(1, ell + 1, 2):
            rest = target - a * a
            for b in range(0, isqrt(rest) + 1, 2):
                c2 = rest - b * b
                if c2 > b * b:
                    continue
                c = isqrt(c2)
                if c * c == c2 and c % 2 == 0 and gcd_many((a, b, c)) == 1:
                    found.append((a, b, c))
        rows[ell] = found
    return QuadrupleTable(rows)


@dataclass(frozen=True)
class ApsWitness:
    """Square ``(u, v)`` whose ``t``-th dilate has exactly ``term`` interior points."""

    term: int
    t: int
    u: tuple
    v: tuple

    def to_dict(self):
        return {"term": self.term, "t": self.t, "u": list(self.u), "v": list(self.v)}


@dataclass
class ApsTable:
    """Interior counts of dilated lattice squares in ``Z^dim`` up to ``bound``.

    ``complete`` is True only for the planar table; higher dimensional tables
    list values that were witnessed by an enumeration and say nothing about
    absent values.
    """

    dim: int
    bound: int
    terms: list
    witnesses: dict = field(default_factory=dict)
    complete: bool = False

    def __contains__(self, value):
        return value in self.witnesses

    def to_dict(self):
        return {
            "dim": self.dim,
            "bound": self.bound,
            "complete": self.complete,
            "terms": list(self.terms),
            "witnesses": [self.witnesses[v].to_dict() for v in self.terms],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"), sort_keys=True)

    @classmethod
    def from_dict(cls, data):
        wit = {}
        for w in data["witnesses"]:
            wit[w["term"]] = ApsWitness(w["term"], w["t"], tuple(w["u"]), tuple(w["v"]))
        return cls(data["dim"], data["bound"], list(data["terms"]), wit, data["complete"])

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["term", "dim", "t", "u", "v"])
        for v in self.terms:
            w = self.witnesses[v]
            writer.writerow([v, self.dim, w.t, ",".join(map(str, w.u)), ",".join(map(str, w.v))])
        return buf.getvalue()


def _record(witnesses, lead, lin, u, v, bound):
    t = 1
    while True:
        value = lead * t * t - lin * t + 1
        if value > bound:
            return
        if value >= 0 and value not in witnesses:
            witnesses[value] = ApsWitness(value, t, tuple(u), tuple(v))
        t += 1


def aps2_terms(bound):
    """All interior counts ``l t^2 - 2t + 1 <= bound`` of lattice squares in the plane.

    ``l`` runs over ``a^2 + b^2`` with ``gcd(a, b) = 1``; the witness for each
    value is the square on ``(a, b), (-b, a)`` with the smallest ``l``, then
    smallest ``t``.
    """
    if bound < 0:
        return ApsTable(2, bound, [], {}, True)
    sides = []
    top = bound + 1  # t = 1 gives l - 1
    for a in range(isqrt(top) + 1):
        for b in range(a + 1):
            ell = a * a + b * b
            if 0 < ell <= top and gcd(a, b) == 1:
                sides.append((ell, a, b))
    sides.sort()
    witnesses = {}
    for ell, a, b in sides:
        _record(witnesses, ell, 2, (a, b), (-b, a), bound)
    return ApsTable(2, bound, sorted(witnesses), witnesses, True)


def _canonical_u_vectors(dim, coord_bound):
    # nonnegative, sorted descending: one representative per signed permutation class
    def rec(prefix, cap):
        if len(prefix) == dim:
            yield tuple(prefix)
            return
        for x in range(cap, -1, -1):
            yield from rec(prefix + [x], x)

    for u in rec([], coord_bound):
        if any(u):
            yield u


def aps_witnessed(dim, coord_bound, term_bound):
    """Witnessed interior counts of twin pairs in ``Z^dim`` with coordinates in ``[-B, B]``.

    ``u`` ranges over one representative per signed coordinate permutation;
    the leading coefficient of each square is the gcd of its 2x2 minors and
    the linear one the sum of the coordinate gcds of ``u`` and ``v``.
    """
    if dim not in (3, 4):
        raise ValidationError("dim must be 3 or 4")
    by_norm = {}
    for v in product(range(-coord_bound, coord_bound + 1), repeat=dim):
        n = sum(x * x for x in v)
        if n:
            by_norm.setdefault(n, []).append(v)
    witnesses = {}
    for u in sorted(_canonical_u_vectors(dim, coord_bound), key=lambda w: (sum(x * x for x in w), w)):
        nu = sum(x * x for x in u)
        du = gcd_many(u)
        for v in by_norm.get(nu, ()):
            if sum(a * b for a, b in zip(u, v)):
                continue
            minors = [u[i] * v[j] - u[j] * v[i] for i in range(dim) for j in range(i + 1, dim)]
            _record(witnesses, gcd_many(minors), du + gcd_many(v), u, v, term_bound)
    return ApsTable(dim, term_bound, sorted(witnesses), witnesses, False)


@dataclass(frozen=True)
class KSquareSearch:
    """Outcome of :func:`search_k_square`; ``pair`` is None when the budget ran out."""

    k: int
    pair: object
    tried: int
    budget: int

    @property
    def found(self):
        return self.pair is not None

    def to_dict(self):
        out = {"k": self.k, "found": self.found, "tried": self.tried, "budget": self.budget}
        if self.found:
            out["u"], out["v"] = list(self.pair.u), list(self.pair.v)
        return out

    @classmethod
    def from_dict(cls, data):
        from .squares import validate_twin

        pair = validate_twin(data["u"], data["v"]) if data["found"] else None
        return cls(data["k"], pair, data["tried"], data["budget"])


def _left_unit_orbit_rep(q):
    from .quaternions import I, J, K, ONE

    orbit = []
    for e in (ONE, I, J, K):
        p = e * q
        orbit.append(tuple(p))
        orbit.append(tuple(-x for x in p))
    return max(orbit)


def search_k_square(k, budget=200_000):
    """Look for a square in ``Z^4`` with polynomial ``k t^2 + 2t + 1``.

    Candidates are ``u = q1 j conj(q2)``, ``v = q1 k conj(q2)`` for quaternions
    of norm ``k`` taken up to left multiplication by units (which only moves
    the square by a signed coordinate permutation).  A candidate succeeds when
    both vectors are primitive and its 2x2 minors have gcd ``k``.
    """
    from .quaternions import J, K, Quaternion, quaternions_of_norm
    from .squares import ehrhart_square_generic, validate_twin

    if k < 9 or k % 2 == 0:
        raise ValidationError("k must be odd and at least 9")
    reps = sorted({_left_unit_orbit_rep(q) for q in quaternions_of_norm(k)}, reverse=True)
    quats = [Quaternion(*r) for r in reps]
    conj = [q.conjugate() for q in quats]
    tried = 0
    for q1 in quats:
        a, b = q1 * J, q1 * K
        for q2c in conj:
            if tried >= budget:
                return KSquareSearch(k, None, tried, budget)
            tried += 1
            u, v = tuple(a * q2c), tuple(b * q2c)
            if gcd_many(u) != 1 or gcd_many(v) != 1:
                continue
            minors = [u[i] * v[j] - u[j] * v[i] for i in range(4) for j in range(i + 1, 4)]
            if gcd_many(minors) != k:
                continue
            pair = validate_twin(u, v)
            poly = ehrhart_square_generic(pair)
            if poly.poly.coeffs == (1, 2, k):
                return KSquareSearch(k, pair, tried, budget)
    return KSquareSearch(k, None, tried, budget)


def verify_k_square(k, u, v):
    """Validate a proposed witness: twin pair whose polynomial is ``k t^2 + 2t + 1``."""
    from .squares import ehrhart_square_generic, validate_twin

    pair = validate_twin(u, v)
    poly = ehrhart_square_generic(pair)
    if poly.poly.coeffs != (1, 2, k):
        raise ValidationError(f"polynomial is {poly.poly}, not {k}t^2 + 2t + 1")
    return pair, poly
