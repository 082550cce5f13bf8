"""Integer, Gaussian, linear-algebra, quadratic-form and polynomial primitives."""

from fractions import Fraction
from itertools import product
from math import gcd, isqrt

import pytest
from hypothesis import given, strategies as st

from latticecubes.arith import (
    decompose_two_squares,
    gcd_many,
    is_primitive_sum_two_squares,
    is_sum_three_squares,
    is_sum_two_squares,
    two_square_representations,
)
from latticecubes.errors import GramNotSquareError, NonIntegralFitError
from latticecubes.forms import BinaryQuadraticForm, enumerate_form_values
from latticecubes.gaussian import GaussianInt, gaussian_gcd
from latticecubes.linalg import (
    determinant,
    gram_volume,
    hermite_normal_form,
    integer_kernel,
    lagrange_reduce,
    maximal_minors_gcd,
    same_lattice,
    saturate,
    solve_in_basis,
)
from latticecubes.polynomial import EhrhartPolynomial, fit_polynomial

ints = st.integers(-60, 60)


# gcd and sums of squares ------------------------------------------------------


@pytest.mark.parametrize(
    "values, expected",
    [((12, 18, 24), 6), ((0, 0, 5), 5), ((6375, 2720, 2040), 85), ((0, 0), 0), ((-4, 6), 2)],
)
def test_gcd_many(values, expected):
    assert gcd_many(values) == expected


def test_gcd_many_rejects_empty():
    with pytest.raises(ValueError):
        gcd_many([])


@given(st.lists(ints, min_size=1, max_size=6), st.randoms())
def test_gcd_many_ignores_order_and_signs(values, rnd):
    shuffled = [v * rnd.choice((1, -1)) for v in values]
    rnd.shuffle(shuffled)
    assert gcd_many(shuffled) == gcd_many(values)


def test_two_squares_examples():
    assert is_sum_two_squares(2017) and decompose_two_squares(2017) == (44, 9)
    assert not is_sum_two_squares(3) and decompose_two_squares(3) is None
    assert decompose_two_squares(45) == (6, 3)
    assert decompose_two_squares(0) == (0, 0)


def test_two_squares_against_brute_force():
    for n in range(400):
        reps = sorted((a, b) for a in range(isqrt(n) + 1) for b in range(a + 1) if a * a + b * b == n)
        assert is_sum_two_squares(n) == bool(reps)
        assert two_square_representations(n) == reps
        primitive = any(gcd(a, b) == 1 for a, b in reps)
        assert is_primitive_sum_two_squares(n) == primitive


@pytest.mark.parametrize("n, expected", [(7, False), (28, False), (11, True), (0, True), (112, False)])
def test_three_squares_examples(n, expected):
    assert is_sum_three_squares(n) == expected


def test_three_squares_against_brute_force():
    limit = 300
    hit = {a * a + b * b + c * c for a, b, c in product(range(18), repeat=3)}
    for n in range(limit):
        assert is_sum_three_squares(n) == (n in hit)


# Gaussian integers -------------------------------------------------------------


def test_gaussian_gcd_examples():
    z = GaussianInt(3, -7)
    assert gaussian_gcd(z, 0) in z.associates()
    assert gaussian_gcd(z, 0) == z.canonical()
    assert gaussian_gcd(5, GaussianInt(2, 1)) in GaussianInt(2, 1).associates()
    # 4 + 2i = 2 (2 + i) so the gcd with 2 is 2 itself, not 1 + i
    assert gaussian_gcd(GaussianInt(4, 2), 2) == GaussianInt(2)


def test_gaussian_gcd_rejects_double_zero():
    with pytest.raises(ValueError):
        gaussian_gcd(0, 0)


def test_canonical_unit_choice():
    for z in (GaussianInt(1, 1), GaussianInt(-1, 1), GaussianInt(1, -1), GaussianInt(-1, -1)):
        assert z.canonical() == GaussianInt(1, 1)
    c = GaussianInt(-2, 5).canonical()
    assert c.re > 0 and c.re >= abs(c.im)


@given(ints, ints, ints, ints)
def test_gaussian_gcd_divides_and_is_greatest(a, b, c, d):
    z1, z2 = GaussianInt(a, b), GaussianInt(c, d)
    if not z1 and not z2:
        return
    g = gaussian_gcd(z1, z2)
    assert g.divides(z1) and g.divides(z2)
    assert gcd(z1.norm(), z2.norm()) % g.norm() == 0
    # any common divisor found by brute force has norm dividing N(g)
    for x, y in product(range(-3, 4), repeat=2):
        d_ = GaussianInt(x, y)
        if d_ and d_.divides(z1) and d_.divides(z2):
            assert g.norm() % d_.norm() == 0


@given(ints, ints, ints, ints)
def test_gaussian_norm_multiplicative(a, b, c, d):
    z1, z2 = GaussianInt(a, b), GaussianInt(c, d)
    assert (z1 * z2).norm() == z1.norm() * z2.norm()


# linear algebra ----------------------------------------------------------------


def test_kernel_of_two_plane_equations():
    basis = integer_kernel([[3, -1, -5, 0], [0, 2, 1, -3]])
    assert same_lattice(basis, [(1, 3, 0, 2), (0, -5, 1, -3)])
    assert gram_volume(basis) == 7


def test_kernel_of_identity_is_empty():
    assert integer_kernel([[int(i == j) for j in range(4)] for i in range(4)]) == []


def test_kernel_of_forty_five_plane():
    # 34v + 25w + 7t = 0 and 7u + 5v + w = 0 in the variables (u, v, w, t)
    basis = integer_kernel([[0, 34, 25, 7], [7, 5, 1, 0]])
    assert len(basis) == 2
    assert gram_volume(basis) == 45
    assert same_lattice(basis, [(1, 0, -7, 25), (0, 1, -5, 13)])


@pytest.mark.parametrize(
    "vectors, volume",
    [([(1, 3, 0, 2), (0, -5, 1, -3)], 7), ([(1, 0), (0, 1)], 1), ([(1, 0, -7, 25), (0, 1, -5, 13)], 45)],
)
def test_gram_volume(vectors, volume):
    assert gram_volume(vectors) == volume


def test_gram_volume_rejects_non_square():
    with pytest.raises(GramNotSquareError) as info:
        gram_volume([(1, 1, 0)])
    assert info.value.determinant == 2


@given(st.lists(st.lists(st.integers(-9, 9), min_size=4, max_size=4), min_size=1, max_size=2),
       st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_kernel_is_saturated(rows, coeffs):
    basis = integer_kernel(rows)
    for b in basis:
        assert all(sum(r[i] * b[i] for i in range(4)) == 0 for r in rows)
    if not basis:
        return
    assert maximal_minors_gcd(basis) == 1
    y = [sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(4)]
    g = gcd_many(y)
    if g == 0:
        return
    x = [v // g for v in y]  # integer point of the rational kernel
    coords = solve_in_basis(basis, x)
    assert coords is not None and all(c.denominator == 1 for c in coords)


@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=3, max_size=3))
def test_determinant_against_cofactor_expansion(m):
    (a, b, c), (d, e, f), (g, h, i) = m
    assert determinant(m) == a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def test_hnf_is_canonical():
    h1 = hermite_normal_form([(2, 4, 1), (0, 3, 3)])
    h2 = hermite_normal_form([(2, 7, 4), (2, 4, 1)])
    assert h1 == h2
    for row in h1:
        pivot = next(x for x in row if x)
        assert pivot > 0


def test_saturate_adds_missing_points():
    basis = saturate([(2, 0, 0), (0, 2, 0)], 3)
    assert same_lattice(basis, [(1, 0, 0), (0, 1, 0)])


@given(st.tuples(ints, ints, ints), st.tuples(ints, ints, ints))
def test_lagrange_reduce_keeps_lattice(b1, b2):
    if sum(x * x for x in b1) == 0 or sum(x * x for x in b2) == 0:
        return
    cross = (b1[1] * b2[2] - b1[2] * b2[1], b1[2] * b2[0] - b1[0] * b2[2], b1[0] * b2[1] - b1[1] * b2[0])
    if not any(cross):
        return
    r1, r2 = lagrange_reduce(b1, b2)
    assert same_lattice([r1, r2], [b1, b2])
    n1 = sum(x * x for x in r1)
    assert n1 <= sum(x * x for x in r2)
    assert 2 * abs(sum(x * y for x, y in zip(r1, r2))) <= n1


# quadratic forms ---------------------------------------------------------------


def test_form_examples():
    assert enumerate_form_values(BinaryQuadraticForm(1, 0, 1), 0) == [(0, 0)]
    f = BinaryQuadraticForm(675, 720, 195)
    assert f(-2, 3) == 135
    assert (-2, 3) in enumerate_form_values(f, 135)
    # norm form of z(4,0,1,0) + t(-6,2,0,1)
    g = BinaryQuadraticForm(17, -48, 41)
    assert enumerate_form_values(g, 121)


def test_form_rejects_indefinite():
    with pytest.raises(ValueError):
        enumerate_form_values(BinaryQuadraticForm(1, 3, 1), 5)


@given(st.integers(1, 12), st.integers(-12, 12), st.integers(1, 12), st.integers(0, 150))
def test_form_values_match_double_loop(a, b, c, target):
    f = BinaryQuadraticForm(a, b, c)
    if not f.is_positive_definite():
        return
    vmax, wmax = f.bounds(target)
    naive = sorted(
        (v, w) for v in range(-vmax - 2, vmax + 3) for w in range(-wmax - 2, wmax + 3) if f(v, w) == target
    )
    assert enumerate_form_values(f, target) == naive


# polynomials -------------------------------------------------------------------


def test_fit_examples():
    assert fit_polynomial([(1, 4), (2, 9), (3, 16)], 2) == EhrhartPolynomial((1, 2, 1))
    counts = [(t, 29 * t * t + 2 * t + 1) for t in (1, 2, 3)]
    assert fit_polynomial(counts, 2) == EhrhartPolynomial((1, 2, 29))
    with pytest.raises(ValueError):
        fit_polynomial([(1, 3), (2, 7)], 2)
    with pytest.raises(NonIntegralFitError):
        fit_polynomial([(1, 1), (2, 2), (3, 4)], 2)


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=5))
def test_fit_round_trip(coeffs):
    p = EhrhartPolynomial(tuple(coeffs))
    degree = len(coeffs) - 1
    pts = [(t, p(t)) for t in range(1, degree + 2)]
    q = fit_polynomial(pts, degree)
    assert q == p


def test_polynomial_helpers():
    p = EhrhartPolynomial.from_descending(11, 2, 1)
    assert p.coeffs == (1, 2, 11)
    assert p.degree == 2 and p.leading == 11
    assert p.interior(1) == 10
    assert str(p) == "11t^2 + 2t + 1"
    assert EhrhartPolynomial.from_dict(p.to_dict()) == p
    assert p.to_dict() == {"poly": [1, 2, 11]}
    sq = EhrhartPolynomial((1, 2, 2))
    assert sq * sq == EhrhartPolynomial.from_descending(4, 8, 8, 4, 1)
    assert p(Fraction(1, 2)) == Fraction(11, 4) + 2
