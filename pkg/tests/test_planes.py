"""Plane descriptors of squares in Z^4: minors, representations, bases, minimal squares."""

from itertools import product

import pytest
from hypothesis import given, strategies as st

from latticecubes.arith import dot, gcd_many
from latticecubes.errors import DegeneratePlaneError, SearchBudgetExceeded, ValidationError
from latticecubes.linalg import same_lattice
from latticecubes.planes import (
    Minors,
    PlaneData,
    equivalent_planes,
    minimal_square_in_plane,
    minors_from_pair,
    plane_data_from_pair,
    plane_from_representations,
    sublattice_basis,
)
from latticecubes.quaternions import Quaternion, square_from_quaternion_pair
from latticecubes.squares import double_square_4d, ehrhart_square_generic, validate_twin

EXAMPLE_1 = ((2, 1, 1, 1), (-1, 2, -1, 1))
EXAMPLE_2 = ((-4, 8, 5, 4), (10, 2, 4, 1))
EXAMPLE_3 = ((-2, 3, -1, -11), (-3, 6, -9, 3))

vec4 = st.tuples(*(st.integers(-12, 12) for _ in range(4)))
quat = st.builds(Quaternion, *(st.integers(-5, 5) for _ in range(4)))


def abs_multiset(values):
    return sorted(abs(x) for x in values)


def test_minors_coordinate_plane():
    d = minors_from_pair((1, 0, 0, 0), (0, 1, 0, 0))
    assert abs(d.d12) == 1 and [x for x in d if x] == [d.d12]


def test_minors_example_two_divisible_by_eleven():
    d = minors_from_pair(*EXAMPLE_2)
    assert all(x % 11 == 0 for x in d)
    assert d.square_sum() == 121 ** 2


@given(vec4, vec4)
def test_plucker_is_an_identity(u, v):
    assert minors_from_pair(u, v).plucker() == 0


@given(quat, quat)
def test_minor_squares_sum_to_norm_squared(q1, q2):
    if not q1 or not q2:
        return
    pair = square_from_quaternion_pair(q1, q2)
    assert minors_from_pair(pair.u, pair.v).square_sum() == pair.norm ** 2


def test_plane_data_example_two():
    plane = plane_data_from_pair(*EXAMPLE_2)
    assert plane.k == 11 and plane.g == 11 and not plane.gcd_hypothesis
    assert plane.w1 == (0, 2, 0, -4) and plane.w2 == (-4, -12, 16, 0)
    assert abs_multiset(plane.alphas) == [2, 6, 9] and abs_multiset(plane.betas) == [6, 6, 7]
    assert sublattice_basis(plane).fundamental_volume == 11


def test_plane_data_coordinate_plane():
    plane = plane_data_from_pair((1, 0, 0, 0), (0, 1, 0, 0))
    assert plane.k == 1
    assert plane.deltas.d23 != 0 and plane.perm != (0, 1, 2, 3)
    assert sublattice_basis(plane).fundamental_volume == 1


def test_parity_can_differ_for_even_length():
    # u has two odd and two even coordinates, so the minors are not all even
    plane = plane_data_from_pair((-1, 0, -1, 0), (0, 1, 0, 1))
    assert plane.k == 1 and plane.dyadic == 2
    assert (plane.alphas, plane.betas) == ((1, 0, 0), (0, 0, 1))
    assert sublattice_basis(plane).fundamental_volume == 2


def test_plane_data_three_dimensional_embedding():
    # a square of Z^3 placed in coordinates 1, 2, 4 makes D23 vanish
    u, v = (3, -3, 0, 0), (1, 1, 0, 4)
    raw = minors_from_pair(u, v)
    alphas = (raw.d12 + raw.d34, -raw.d13 + raw.d24, raw.d14 + raw.d23)
    betas = (raw.d12 - raw.d34, -raw.d13 - raw.d24, raw.d14 - raw.d23)
    assert raw.d23 == 0 and alphas[2] == betas[2]
    plane = plane_data_from_pair(u, v)
    assert plane.perm != (0, 1, 2, 3)
    assert plane.deltas.d23 != 0
    assert plane.contains(u) and plane.contains(v)


def test_plane_data_rejects_degenerate():
    with pytest.raises(ValidationError):
        plane_data_from_pair((1, 0, 0, 0), (2, 0, 0, 0))


def test_plane_data_round_trip():
    plane = plane_data_from_pair(*EXAMPLE_3)
    assert PlaneData.from_dict(plane.to_dict()) == plane
    assert Minors(*plane.deltas) == plane.deltas


@given(quat, quat)
def test_plane_invariants_on_random_squares(q1, q2):
    if not q1 or not q2:
        return
    pair = square_from_quaternion_pair(q1, q2)
    plane = plane_data_from_pair(pair.u, pair.v)
    k2 = plane.k ** 2
    assert sum(a * a for a in plane.alphas) == k2 == sum(b * b for b in plane.betas)
    assert plane.k % 2 == 1
    same_parity = all((a - b) % 2 == 0 for a, b in zip(plane.alphas, plane.betas))
    if pair.norm % 2:
        assert same_parity
    assert plane.deltas.plucker() == 0
    assert plane.contains(pair.u) and plane.contains(pair.v)
    w1 = plane.w1
    assert w1 == (0, *(a - b for a, b in zip(plane.alphas, plane.betas)))
    if plane.gcd_hypothesis and not plane.three_dimensional:
        # mixed parity only happens for even length and doubles the covolume
        expected = plane.k if same_parity else 2 * plane.k
        assert sublattice_basis(plane).fundamental_volume == expected


def test_representations_example_two():
    plane = plane_from_representations(11, (9, 2, 6), (7, 6, 6))
    assert sublattice_basis(plane).fundamental_volume == 11
    reference = sublattice_basis(plane_data_from_pair(*EXAMPLE_2)).basis
    assert equivalent_planes(sublattice_basis(plane).basis, reference)
    # the two defining equations reduce to y = 2t and x + 3y = 4z on some signed permutation
    assert equivalent_planes(sublattice_basis(plane).basis, [(4, 0, 1, 0), (-6, 2, 0, 1)])


def test_representations_example_three():
    plane = plane_from_representations(45, (33, 30, 6), (35, 20, 20))
    d = plane.deltas
    assert (d.d12, d.d34, d.d13, d.d24, d.d14, d.d23) == (1, 34, 5, 25, 13, 7)
    sub = sublattice_basis(plane)
    assert sub.fundamental_volume == 45
    assert same_lattice(sub.basis, [(1, 0, -7, 25), (0, 1, -5, 13)])
    for x in sub.basis:
        assert 34 * x[1] + 25 * x[2] + 7 * x[3] == 0
        assert 7 * x[0] + 5 * x[1] + x[2] == 0


def test_representations_identical_is_three_dimensional():
    plane = plane_from_representations(1, (1, 0, 0), (1, 0, 0))
    assert plane.three_dimensional
    with pytest.raises(DegeneratePlaneError):
        sublattice_basis(plane)


@pytest.mark.parametrize(
    "k, rep1, rep2",
    [(4, (2, 0, 0), (0, 2, 0)), (11, (9, 2, 6), (7, 6, 5)), (15, (15, 0, 0), (5, 10, 10))],
)
def test_representations_reject(k, rep1, rep2):
    with pytest.raises(ValidationError):
        plane_from_representations(k, rep1, rep2)


def test_example_one_volume():
    plane = plane_data_from_pair(*EXAMPLE_1)
    sub = sublattice_basis(plane)
    assert sub.fundamental_volume == 7
    for x in sub.basis:
        assert 3 * x[0] - x[1] - 5 * x[2] == 0 and 2 * x[1] + x[2] - 3 * x[3] == 0
    assert sub.fundamental_volume ** 2 == sub.gram[0][0] * sub.gram[1][1] - sub.gram[0][1] ** 2


def _same_square_up_to_rotation(pair, u, v):
    return {pair.u, pair.v} in ({u, v}, {tuple(-x for x in u), v}, {u, tuple(-x for x in v)},
                                {tuple(-x for x in u), tuple(-x for x in v)})


def test_minimal_square_example_two():
    plane = plane_data_from_pair(*EXAMPLE_2)
    pair = minimal_square_in_plane(plane)
    assert pair.norm == 121
    assert _same_square_up_to_rotation(pair, *EXAMPLE_2)


def test_minimal_square_example_three():
    plane = plane_from_representations(45, (33, 30, 6), (35, 20, 20))
    pair = minimal_square_in_plane(plane)
    assert pair.norm == 135
    assert _same_square_up_to_rotation(pair, *EXAMPLE_3)
    result = ehrhart_square_generic(pair)
    assert result.poly.coeffs == (1, 4, 3) and result.interior(1) == 0


def test_minimal_square_coordinate_plane():
    pair = minimal_square_in_plane(plane_data_from_pair((0, 0, 1, 0), (0, 0, 0, 1)))
    assert pair.norm == 1


def test_minimal_square_budget():
    plane = plane_from_representations(45, (33, 30, 6), (35, 20, 20))
    with pytest.raises(SearchBudgetExceeded) as info:
        minimal_square_in_plane(plane, budget=100)
    assert info.value.bound == 100


def test_round_trip_through_minimal_square():
    for k, rep1, rep2 in [(11, (9, 2, 6), (7, 6, 6)), (45, (33, 30, 6), (35, 20, 20)), (13, (5, 12, 0), (3, 4, 12))]:
        plane = plane_from_representations(k, rep1, rep2)
        again = plane_data_from_pair(*(lambda p: (p.u, p.v))(minimal_square_in_plane(plane)))
        assert again.k == plane.k
        assert abs_multiset(again.alphas + again.betas) == abs_multiset(plane.alphas + plane.betas)


@pytest.mark.parametrize("pair", [EXAMPLE_1, EXAMPLE_2, EXAMPLE_3, ((1, 2, 3, 4), (-2, 1, -4, 3))])
def test_every_square_in_plane_is_a_combination_of_the_minimal_one(pair):
    plane = plane_data_from_pair(*pair)
    sub = sublattice_basis(plane)
    small = minimal_square_in_plane(plane)
    g1, g2 = sub.basis
    bound = 8
    vectors = [tuple(a * x + b * y for x, y in zip(g1, g2)) for a, b in product(range(-bound, bound + 1), repeat=2)]
    vectors = [x for x in vectors if any(x)]
    by_norm = {}
    for x in vectors:
        by_norm.setdefault(dot(x, x), []).append(x)
    found = 0
    for n, group in by_norm.items():
        for x in group:
            for y in group:
                if dot(x, y) == 0 and x < y:
                    assert n % small.norm == 0
                    # x = a u - b v and y = b u + a v (or with v negated) for integers a, b
                    a, r1 = divmod(dot(x, small.u), small.norm)
                    b, r2 = divmod(-dot(x, small.v), small.norm)
                    assert r1 == r2 == 0
                    assert x == tuple(a * p - b * q for p, q in zip(small.u, small.v))
                    assert y in (tuple(b * p + a * q for p, q in zip(small.u, small.v)),
                                 tuple(-(b * p + a * q) for p, q in zip(small.u, small.v)))
                    found += 1
    assert found >= 4


def test_double_square_plane_volume():
    for params in [(1, 1, 1, 0), (2, 1, 1, 1), (3, 1, 1, 0), (1, 2, 3, 4)]:
        pair = double_square_4d(*params)
        if gcd_many(params) == 1:
            plane = plane_data_from_pair(pair.u, pair.v)
            lead = ehrhart_square_generic(pair).leading
            assert pair.norm == lead * sublattice_basis(plane).fundamental_volume


def test_equivalent_planes():
    assert equivalent_planes([(1, 0, 0, 0), (0, 1, 0, 0)], [(0, 0, 1, 0), (0, 0, 0, -1)])
    assert not equivalent_planes([(1, 0, 0, 0), (0, 1, 0, 0)], [(1, 1, 0, 0), (0, 0, 1, 1)])


def test_validate_pair_from_plane_coordinates():
    plane = plane_data_from_pair(*EXAMPLE_2)
    assert plane.to_working(plane.to_original((1, 2, 3, 4))) == (1, 2, 3, 4)
    validate_twin(*EXAMPLE_2)
