import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singer_ldpc.errors import NonDivisorRank
from singer_ldpc.orbits import (
    acts_regularly,
    apply_singer,
    decompose_lines,
    desarguesian_spread,
    expected_orbit_lengths,
    fixes_every_element,
    line_orbit,
    starter_set,
    subgroup_decomposition,
    verify_starter,
)
from singer_ldpc.projgeom import count_lines, projective_space, subspace_of_points, subspace_points


def brute_orbit(line, theta):
    images = [apply_singer(k, line, theta) for k in range(theta)]
    length = next((k for k in range(1, theta) if images[k] == tuple(sorted(line))), theta)
    return min(images), length, set(images)


def test_apply_singer_identity_and_full_cycle():
    space = projective_space(4, 2)
    line = space.line_through(3, 8)
    assert apply_singer(0, line, 15) == line
    assert apply_singer(15, line, 15) == line


def test_apply_singer_maps_lines_to_lines():
    space = projective_space(4, 3)
    lines = set(space.all_lines())
    for ln in list(lines)[:20]:
        for k in (1, 7, 39):
            assert apply_singer(k, ln, space.theta) in lines


@pytest.mark.parametrize("n,q", [(3, 2), (4, 2), (5, 2), (4, 3), (3, 4), (4, 4)])
def test_line_orbit_matches_brute_force(n, q):
    space = projective_space(n, q)
    for ln in space.all_lines():
        rep, length, _ = brute_orbit(ln, space.theta)
        orb = line_orbit(ln, space.theta)
        assert (orb.representative, orb.length) == (rep, length)


def test_pg42_lines_have_full_orbits():
    space = projective_space(5, 2)
    assert {line_orbit(ln, 31).length for ln in space.all_lines()} == {31}


def test_pg32_orbit_lengths_split_by_spread():
    space = projective_space(4, 2)
    spread = set(desarguesian_spread(space, 2).elements)
    for ln in space.all_lines():
        orb = line_orbit(ln, 15)
        assert orb.length == (5 if ln in spread else 15)
    spread_line = next(iter(spread))
    assert apply_singer(5, spread_line, 15) == spread_line


@pytest.mark.parametrize(
    "n,q,lengths",
    [
        (5, 2, [31] * 5),
        (4, 2, [5, 15, 15]),
        (4, 4, [17] + [85] * 4),
        (3, 2, [7]),
        (6, 2, [21] + [63] * 10),
    ],
)
def test_decompose_lines(n, q, lengths):
    orbits = decompose_lines(projective_space(n, q))
    assert [o.length for o in orbits] == lengths
    assert sum(lengths) == count_lines(n, q)


@pytest.mark.parametrize("n,q", [(3, 2), (4, 2), (5, 2), (4, 3), (3, 4), (4, 4), (6, 2)])
def test_decomposition_is_exact_partition_of_all_lines(n, q):
    space = projective_space(n, q)
    orbits = decompose_lines(space)
    members = [m for o in orbits for m in o.members()]
    assert len(members) == len(set(members)) == count_lines(n, q)
    assert set(members) == set(space.all_lines())
    assert [o.length for o in orbits] == expected_orbit_lengths(n, q)
    full = [o.representative for o in orbits if o.length == space.theta]
    assert full == sorted(full)


@pytest.mark.parametrize("n,q", [(4, 2), (4, 4), (6, 2), (4, 8)])
def test_short_orbit_is_the_desarguesian_spread(n, q):
    space = projective_space(n, q)
    short = decompose_lines(space)[0]
    assert set(short.members()) == set(desarguesian_spread(space, 2).elements)


@pytest.mark.parametrize(
    "n,q,t,count,size",
    [(4, 2, 2, 5, 3), (6, 2, 2, 21, 3), (6, 2, 3, 9, 7), (4, 3, 2, 10, 4), (4, 4, 2, 17, 5)],
)
def test_desarguesian_spread(n, q, t, count, size):
    space = projective_space(n, q)
    spread = desarguesian_spread(space, t)
    assert len(spread) == count
    assert spread.is_partition()
    for el in spread.elements:
        assert len(el) == size
        # each element is a genuine rank-t subspace
        sub = subspace_of_points(space, el)
        assert sub.rank == t and subspace_points(space, sub) == list(el)


def test_spread_rejects_non_divisor():
    with pytest.raises(NonDivisorRank):
        desarguesian_spread(projective_space(5, 2), 2)
    with pytest.raises(NonDivisorRank):
        subgroup_decomposition(projective_space(4, 2), 4)


@pytest.mark.parametrize("q,t,n,s1,s2", [(2, 2, 4, 3, 5), (4, 2, 4, 5, 17), (2, 3, 6, 7, 9)])
def test_subgroups_when_orders_are_coprime(q, t, n, s1, s2):
    space = projective_space(n, q)
    dec = subgroup_decomposition(space, t)
    spread = desarguesian_spread(space, t)
    assert (dec.s1_order, dec.s2_order) == (s1, s2)
    assert dec.is_direct
    assert fixes_every_element(dec.s1_elements(), spread)
    assert acts_regularly(dec.s2_elements(), spread)
    # S1 is a Singer cycle on each element: the orbit of a point is its spread element
    where = spread.element_of()
    for p in range(0, space.theta, 4):
        orbit = sorted((p + k) % space.theta for k in dec.s1_elements())
        assert tuple(orbit) == spread.elements[where[p]]


def test_subgroup_of_order_21_in_pg52_contains_s1():
    # gcd(3, 21) = 3: the unique order-21 subgroup contains S1 and cannot act freely
    space = projective_space(6, 2)
    dec = subgroup_decomposition(space, 2)
    assert not dec.is_direct
    assert set(dec.s1_elements()) <= set(dec.s2_elements())
    assert not acts_regularly(dec.s2_elements(), desarguesian_spread(space, 2))


def test_quotient_action_is_regular_in_pg52():
    # shifts 0..20 represent S/S1 and permute the 21 spread lines regularly
    space = projective_space(6, 2)
    assert acts_regularly(list(range(21)), desarguesian_spread(space, 2))


@pytest.mark.parametrize(
    "n,q,count", [(5, 2, 5), (4, 2, 3), (3, 2, 1), (4, 4, 5), (6, 2, 11), (7, 2, 21), (4, 3, 4)]
)
def test_starter_set(n, q, count):
    space = projective_space(n, q)
    orbits = decompose_lines(space)
    starter = starter_set(space, 0, orbits)
    assert len(starter.lines) == count
    assert all(0 in ln for ln in starter.lines)
    assert len(set(starter.orbit_keys)) == count
    assert verify_starter(starter, orbits, space.theta)
    covered = set()
    for ln in starter.lines:
        covered |= brute_orbit(ln, space.theta)[2]
    assert covered == set(space.all_lines())


def test_starter_counts_follow_formulas():
    for n, q in [(5, 2), (7, 2), (5, 3)]:
        assert len(starter_set(projective_space(n, q)).lines) == (q ** (n - 1) - 1) // (q * q - 1)
    for n, q in [(4, 2), (6, 2), (4, 4), (4, 8)]:
        assert len(starter_set(projective_space(n, q)).lines) == 1 + q * (q ** (n - 2) - 1) // (q * q - 1)


def test_starter_with_other_base_point():
    space = projective_space(4, 4)
    orbits = decompose_lines(space)
    starter = starter_set(space, 13, orbits)
    assert all(13 in ln for ln in starter.lines)
    assert verify_starter(starter, orbits, space.theta)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 356), st.integers(0, 84))
def test_orbit_key_invariant_under_shift(line_index, shift):
    space = projective_space(4, 4)
    ln = space.all_lines()[line_index]
    assert line_orbit(apply_singer(shift, ln, 85), 85) == line_orbit(ln, 85)
