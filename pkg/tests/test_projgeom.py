import itertools

import numpy as np
import pytest

from singer_ldpc.errors import EqualPoints, ZeroVector
from singer_ldpc.projgeom import (
    IncidenceStructure,
    contains_point,
    count_lines,
    count_points,
    incidence_matrix,
    lines_per_point,
    projective_space,
    structure_from_matrix,
    subspace_meet,
    subspace_of_points,
    subspace_points,
    subspace_span,
)


def test_point_from_element():
    space = projective_space(4, 2)
    top = space.top
    assert space.point_from_element(top.one) == 0
    assert space.point_from_element(top(top.exp(space.theta))) == 0
    assert space.point_from_element(top(top.exp(7))) == 7
    with pytest.raises(ZeroVector):
        space.point_from_element(top.zero)


@pytest.mark.parametrize("n,q", [(3, 3), (4, 4)])
def test_scalar_multiples_share_a_point(n, q):
    space = projective_space(n, q)
    top = space.top
    for i in range(0, top.q - 1, 7):
        for lam in space.tower.subfield(1)[1:]:
            assert space.point_from_element(top.mul(lam, top.exp(i))) == i % space.theta


def test_fano_line_through_0_and_1():
    space = projective_space(3, 2)
    line = space.line_through(0, 1)
    assert len(line) == 3 and {0, 1} <= set(line)
    # the third point is <alpha^0 + alpha^1>
    third = space.point_from_element(space.top.add(1, space.top.exp(1)))
    assert set(line) == {0, 1, third}


def test_line_through_equal_points():
    with pytest.raises(EqualPoints):
        projective_space(3, 2).line_through(4, 4 + 7)


@pytest.mark.parametrize("n,q", [(3, 2), (4, 2), (3, 3), (3, 4), (4, 3)])
def test_lines_match_coordinate_spans(n, q):
    space = projective_space(n, q)
    for a, b in itertools.combinations(range(space.theta), 2):
        via_coords = subspace_points(space, subspace_of_points(space, [a, b]))
        assert list(space.line_through(a, b)) == via_coords


def test_pg32_pair_enumeration_gives_35_lines():
    space = projective_space(4, 2)
    lines = {space.line_through(a, b) for a, b in itertools.combinations(range(15), 2)}
    assert all(len(ln) == 3 for ln in lines)
    assert len(lines) == 35 == (2**4 - 1) * (2**3 - 1) // ((2**2 - 1) * (2 - 1))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8])
def test_counting_formulas_small_planes_and_solids(q):
    assert count_lines(3, q) == q * q + q + 1
    assert count_lines(4, q) == (q * q + 1) * (q * q + q + 1)
    assert count_lines(5, q) == (q * q + 1) * (q**4 + q**3 + q**2 + q + 1)
    assert count_points(3, q) == q * q + q + 1


def test_counts_pg32():
    assert count_lines(4, 2) == 35
    assert count_points(4, 2) == 15


@pytest.mark.parametrize("n,q", [(3, 2), (4, 2), (3, 3), (3, 4), (5, 2), (4, 3)])
def test_counts_against_coordinate_oracle(coord_geometry, n, q):
    geo = coord_geometry(n, q)
    assert len(geo.points()) == count_points(n, q)
    assert len(geo.lines()) == count_lines(n, q)


@pytest.mark.parametrize("n,q", [(3, 2), (4, 2), (3, 4), (4, 4), (5, 2), (6, 2), (4, 3)])
def test_line_enumeration_properties(n, q):
    space = projective_space(n, q)
    lines = space.all_lines()
    assert len(lines) == count_lines(n, q)
    per_point = np.zeros(space.theta, dtype=int)
    pair_count = np.zeros((space.theta, space.theta), dtype=int)
    for ln in lines:
        idx = np.array(ln)
        per_point[idx] += 1
        pair_count[np.ix_(idx, idx)] += 1
    assert (per_point == lines_per_point(n, q)).all()
    off = pair_count[~np.eye(space.theta, dtype=bool)]
    assert (off == 1).all()


def test_lines_closed_under_span(coord_geometry):
    space = projective_space(4, 3)
    geo = coord_geometry(4, 3)
    for ln in space.all_lines()[::7]:
        coords = [geo.normalise(space.coords(i)) for i in ln]
        assert geo.line(coords[0], coords[1]) == frozenset(coords)


def test_meet_of_plane_lines_is_point():
    space = projective_space(3, 4)
    lines = space.all_lines()
    for a, b in [(0, 1), (3, 11), (5, 20)]:
        la, lb = subspace_of_points(space, lines[a]), subspace_of_points(space, lines[b])
        meet = subspace_meet(space, la, lb)
        assert meet.rank == 1
        assert subspace_points(space, meet) == sorted(set(lines[a]) & set(lines[b]))


def test_meet_of_spread_lines_is_empty():
    space = projective_space(4, 2)
    a = subspace_of_points(space, [0, 5, 10])
    b = subspace_of_points(space, [1, 6, 11])
    assert subspace_meet(space, a, b).rank == 0


def test_span_and_membership():
    space = projective_space(4, 2)
    line = space.line_through(2, 9)
    sub = subspace_span(space, [space.coords(i) for i in line])
    assert sub.rank == 2
    assert subspace_points(space, sub) == list(line)
    assert all(contains_point(space, sub, p) == (p in line) for p in range(space.theta))
    assert subspace_span(space, []).rank == 0
    assert subspace_points(space, subspace_span(space, [])) == []


def test_subspace_canonical_form_is_unique():
    space = projective_space(4, 3)
    line = space.line_through(0, 17)
    forms = {subspace_of_points(space, pair) for pair in itertools.permutations(line, 2)}
    assert len(forms) == 1


def test_fano_incidence_matrix():
    space = projective_space(3, 2)
    s = IncidenceStructure.from_blocks(space.theta, space.all_lines())
    m = incidence_matrix(s)
    assert m.shape == (7, 7)
    assert set(m.row_weights()) == {3} and set(m.col_weights()) == {3}
    assert structure_from_matrix(m) == s
    dense = m.to_dense()
    for i, blk in enumerate(s.blocks):
        assert all(dense[i, j] == (j in blk) for j in range(7))


def test_empty_structure():
    m = incidence_matrix(IncidenceStructure(5, ()))
    assert m.shape == (0, 5)
    assert structure_from_matrix(m) == IncidenceStructure(5, ())
