"""Brute-force counting, point-by-point crosschecks and polynomial fits."""

import ast
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

import latticecubes.oracle as oracle_module
from latticecubes.cubes import validate_frame
from latticecubes.errors import OracleMismatch, ValidationError
from latticecubes.oracle import (
    CLOSED,
    OPEN,
    Parallelotope,
    corner_count_direct,
    count_frame,
    count_shape,
    count_square,
    crosscheck_points,
    fit_ehrhart,
)
from latticecubes.polynomial import EhrhartPolynomial
from latticecubes.quaternions import Quaternion, square_from_quaternion_pair
from latticecubes.squares import validate_twin

EXAMPLE_2 = validate_twin((-4, 8, 5, 4), (10, 2, 4, 1))
EXAMPLE_3 = validate_twin((-2, 3, -1, -11), (-3, 6, -9, 3))
WITNESS_2015 = validate_twin((-836, 584, -1592, -697), (-506, 1414, 203, 1328))
SQRT3 = [(1, 1, 1, 0), (-1, 1, 0, 1), (0, -1, 1, 1), (-1, 0, 1, -1)]
quat = st.builds(Quaternion, *(st.integers(-3, 3) for _ in range(4)))


def test_oracle_shares_no_formula_code():
    tree = ast.parse(Path(oracle_module.__file__).read_text())
    imported = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.ImportFrom):
            imported.add(node.module)
    assert imported.isdisjoint({"squares", "cubes", "planes", "quaternions", "sequences"})


def test_unit_square():
    unit = validate_twin((1, 0), (0, 1))
    assert count_square(unit, 3) == 16
    assert count_square(unit, 3, OPEN) == 4


def test_figure_square_interior():
    assert count_square(validate_twin((5, 2), (-2, 5)), 1, OPEN) == 28


def test_example_two_closed():
    assert count_square(EXAMPLE_2, 1) == 14


def test_identity_hypercube():
    frame = validate_frame([tuple(int(i == j) for j in range(4)) for i in range(4)])
    assert count_frame(frame, 2) == 81


def test_sqrt3_hypercube():
    assert count_frame(validate_frame(SQRT3), 1) == 9 + 12 + 6 + 4 + 1 == 32


def test_rows_accepted_directly():
    assert count_shape(SQRT3, 1) == 32
    assert Parallelotope.from_rows(SQRT3).rank == 4


@pytest.mark.parametrize("a, b, t, expected", [(44, 9, 1, 2016), (1, 0, 1, 0), (5, 2, 1, 28), (5, 2, 2, 113)])
def test_corner_count(a, b, t, expected):
    assert corner_count_direct(a, b, t) == expected


def test_corner_count_rejects_zero():
    with pytest.raises(ValidationError):
        corner_count_direct(0, 0, 1)


def test_fit_examples():
    assert fit_ehrhart(EXAMPLE_3) == EhrhartPolynomial.from_descending(3, 4, 1)
    cube = validate_frame([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert fit_ehrhart(cube) == EhrhartPolynomial.from_descending(1, 3, 3, 1)


def test_fit_witness_2015():
    assert fit_ehrhart(WITNESS_2015, 2) == EhrhartPolynomial.from_descending(2015, 2, 1)


def test_fit_wrong_degree_reports_counts():
    unit = validate_twin((1, 0), (0, 1))
    with pytest.raises(OracleMismatch) as info:
        fit_ehrhart(unit, 3)
    assert info.value.counts == [4, 9, 16, 25]
    assert info.value.open_counts == [0, 1, 4, 9]


def test_invalid_inputs():
    with pytest.raises(ValidationError):
        count_square(validate_twin((1, 0), (0, 1)), -1)
    with pytest.raises(ValidationError):
        count_square(validate_twin((1, 0), (0, 1)), 1, region="half-open")
    with pytest.raises(ValidationError):
        Parallelotope.from_rows([(1, 0), (1, 1)])
    with pytest.raises(ValidationError):
        fit_ehrhart(validate_twin((1, 0), (0, 1)), 5)


def test_t_zero_is_the_origin():
    assert count_square(EXAMPLE_2, 0) == 1
    assert count_square(EXAMPLE_2, 0, OPEN) == 0


@settings(max_examples=60)
@given(quat, quat, st.integers(1, 3))
def test_membership_tests_agree(q1, q2, t):
    if not q1 or not q2:
        return
    pair = square_from_quaternion_pair(q1, q2)
    for region in (CLOSED, OPEN):
        assert crosscheck_points(pair, t, region) == count_square(pair, t, region, crosscheck=False)


@settings(max_examples=60)
@given(quat, quat)
def test_reciprocity_on_random_squares(q1, q2):
    if not q1 or not q2:
        return
    pair = square_from_quaternion_pair(q1, q2)
    poly = fit_ehrhart(pair)
    for t in range(1, 5):
        assert count_square(pair, t, OPEN) == poly.interior(t)
        assert count_square(pair, t) == poly(t)


@pytest.mark.parametrize("rows", [SQRT3, [(1, 2, 2), (2, 1, -2), (2, -2, 1)], SQRT3[:3]])
def test_crosscheck_on_frames(rows):
    for t in (1, 2):
        for region in (CLOSED, OPEN):
            assert crosscheck_points(rows, t, region) == count_shape(rows, t, region, crosscheck=False)
