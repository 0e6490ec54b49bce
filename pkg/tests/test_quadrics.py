import itertools

import pytest

from singer_ldpc.errors import NotAnOvoid, PointNotOnQuadric, ReducibleForm, SpreadLine, UnsupportedOrder
from singer_ldpc.orbits import decompose_lines, desarguesian_spread, starter_set, verify_starter
from singer_ldpc.projgeom import projective_space, subspace_of_points
from singer_ldpc.quadrics import (
    Geometry,
    Quadric,
    canonical_quadric,
    ovoid_failures,
    quadric_for,
    quadric_partition,
    singer_quadric,
    starter_from_quadric,
    tangency,
    tangent_indices,
    tangent_lines_at,
    unique_tangent_quadric,
)


def brute_is_cap(space, points):
    """No three points of the set on a common line, by direct triple search."""
    for a, b, c in itertools.combinations(sorted(points), 3):
        if c in space.line_through(a, b):
            return False
    return True


def test_canonical_quadric_pg32():
    space = projective_space(4, 2)
    quadric = canonical_quadric(space, 1, 1)
    assert len(quadric) == 5
    assert brute_is_cap(space, quadric.points)
    assert not ovoid_failures(Geometry(space), quadric)


def test_canonical_quadric_rejects_reducible_form():
    with pytest.raises(ReducibleForm):
        canonical_quadric(projective_space(4, 2), 0, 1)


def test_canonical_quadric_pg34():
    space = projective_space(4, 4)
    f = space.base
    # find b, c with x^2 + bx + c irreducible; b = 1 always admits one in even characteristic
    c = next(c for c in range(1, 4) if all(f.add(f.add(f.mul(x, x), x), c) for x in range(4)))
    quadric = canonical_quadric(space, 1, c)
    assert len(quadric) == 17
    assert not ovoid_failures(Geometry(space), quadric)


@pytest.mark.parametrize("q", [2, 4, 8])
def test_singer_quadric_is_an_elliptic_quadric(q):
    space, quadric = quadric_for(q)
    assert len(quadric) == q * q + 1
    rep = tangency(Geometry(space), quadric)
    assert rep.is_cap
    assert rep.tangent == (q * q + 1) * (q + 1)
    assert rep.secant == (q * q + 1) * q * q // 2
    spread = desarguesian_spread(space, 2)
    assert all(len(quadric.points.intersection(el)) == 1 for el in spread.elements)


@pytest.mark.parametrize("q", [2, 4])
def test_singer_quadric_cap_by_brute_force(q):
    space, quadric = quadric_for(q)
    assert brute_is_cap(space, quadric.points)


def test_singer_quadric_other_seeds():
    space = projective_space(4, 4)
    geom = Geometry(space)
    for seed in (1, 7, 40):
        quadric = singer_quadric(space, seed, geom)
        assert seed in quadric.points


def test_non_ovoid_orbit_rejected():
    space = projective_space(4, 2)
    geom = Geometry(space)
    line = space.line_through(0, 1)
    fake = Quadric(frozenset(line) | {4, 9}, 2, "fake")
    assert ovoid_failures(geom, fake)


@pytest.mark.parametrize("q", [3, 5])
def test_odd_q_rejected(q):
    space = projective_space(4, q)
    with pytest.raises(UnsupportedOrder):
        singer_quadric(space)
    with pytest.raises(UnsupportedOrder):
        canonical_quadric(space, 1, 1)


def test_wrong_dimension_rejected():
    with pytest.raises(UnsupportedOrder):
        singer_quadric(projective_space(5, 2))


@pytest.mark.parametrize("q", [2, 4, 8])
def test_images_under_s1_partition_the_points(q):
    space, quadric = quadric_for(q)
    parts = quadric_partition(space, quadric)
    assert len(parts) == q + 1
    seen = [p for part in parts for p in part.points]
    assert sorted(seen) == list(range(space.theta))


@pytest.mark.parametrize("q,per_quadric", [(2, 10), (4, 68)])
def test_each_non_spread_line_is_tangent_to_one_quadric(q, per_quadric):
    space, quadric = quadric_for(q)
    parts = quadric_partition(space, quadric)
    spread = desarguesian_spread(space, 2)
    spread_lines = set(spread.elements)
    counts = [0] * (q + 1)
    for line in space.all_lines():
        if line in spread_lines:
            assert len(tangent_indices(line, parts)) == q + 1
            continue
        counts[unique_tangent_quadric(line, parts, spread)] += 1
    assert counts == [per_quadric] * (q + 1)


def test_spread_line_has_no_unique_tangent_quadric():
    space, quadric = quadric_for(2)
    spread = desarguesian_spread(space, 2)
    with pytest.raises(SpreadLine):
        unique_tangent_quadric(spread.elements[0], quadric_partition(space, quadric), spread)


@pytest.mark.parametrize("q", [2, 4, 8])
def test_tangents_at_a_point_fill_a_plane(q):
    space, quadric = quadric_for(q)
    point = min(quadric.points)
    lines = tangent_lines_at(space, quadric, point)
    assert len(lines) == q + 1
    plane = subspace_of_points(space, [p for ln in lines for p in ln])
    assert plane.rank == 3


def test_tangent_lines_need_a_point_on_the_quadric():
    space, quadric = quadric_for(2)
    off = next(p for p in range(space.theta) if p not in quadric.points)
    with pytest.raises(PointNotOnQuadric):
        tangent_lines_at(space, quadric, off)


@pytest.mark.parametrize("q", [2, 4, 8])
def test_starter_from_quadric_meets_every_orbit_once(q):
    space, quadric = quadric_for(q)
    orbits = decompose_lines(space)
    starter = starter_from_quadric(space, quadric, 0)
    assert len(starter.lines) == q + 1
    assert verify_starter(starter, orbits, space.theta)
    assert set(starter.orbit_keys) == set(starter_set(space, 0, orbits).orbit_keys)
    assert starter.lines[0] in set(desarguesian_spread(space, 2).elements)


def test_starter_from_quadric_other_point():
    space, quadric = quadric_for(4)
    point = sorted(quadric.points)[5]
    starter = starter_from_quadric(space, quadric, point)
    assert all(point in ln for ln in starter.lines)
    assert verify_starter(starter, decompose_lines(space), space.theta)


def test_non_ovoid_starter_rejected():
    space = projective_space(4, 2)
    with pytest.raises(NotAnOvoid):
        starter_from_quadric(space, Quadric(frozenset(range(15)), 2, "all"), 0)
