"""Singer-cycle orbits of lines, Desarguesian spreads and starter sets.

The Singer cycle S = <sigma> acts on point indices as i -> i + 1 mod theta,
so every group element is a shift and a line orbit is a set of shifted
copies of one point set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import NonDivisorRank, OrbitMismatch
from .projgeom import Line, ProjectiveSpace, count_lines


def apply_singer(k: int, line: Sequence[int], theta: int) -> Line:
    """Image of a point set under sigma^k."""
    return tuple(sorted((i + k) % theta for i in line))


def orbit_data(line: Sequence[int], theta: int) -> tuple[Line, int]:
    """Canonical representative and length of the S-orbit of ``line``.

    A shift fixing the line must move its first point onto one of its
    points, and the lexicographically smallest image starts with 0, so
    only |line| candidate shifts need testing in each case.
    """
    pts = tuple(sorted(line))
    members = set(pts)
    length = theta
    for x in pts[1:]:
        k = (x - pts[0]) % theta
        if k < length and all((i + k) % theta in members for i in pts):
            length = k
    rep = min(apply_singer(-x, pts, theta) for x in pts)
    return rep, length


@dataclass(frozen=True)
class Orbit:
    representative: Line
    length: int
    theta: int

    def members(self) -> Iterator[Line]:
        for k in range(self.length):
            yield apply_singer(k, self.representative, self.theta)

    def stabiliser_order(self) -> int:
        return self.theta // self.length


def line_orbit(line: Sequence[int], theta: int) -> Orbit:
    rep, length = orbit_data(line, theta)
    return Orbit(rep, length, theta)


def decompose_lines(space: ProjectiveSpace) -> list[Orbit]:
    """Partition the lines of PG(n-1, q) into S-orbits.

    Only lines through point 0 are enumerated: every orbit contains a line
    through each point.  Short orbits come first, then the full-length
    orbits ordered by representative.
    """
    if space.n < 3:
        raise ValueError("line orbits need n >= 3")
    theta = space.theta
    found: dict[Line, int] = {}
    for line in space.lines_through(0):
        rep, length = orbit_data(line, theta)
        found.setdefault(rep, length)
    orbits = sorted((Orbit(rep, ln, theta) for rep, ln in found.items()),
                    key=lambda o: (o.length == theta, o.representative))
    total = sum(o.length for o in orbits)
    if total != count_lines(space.n, space.q):
        raise AssertionError(f"orbit lengths sum to {total}, expected {count_lines(space.n, space.q)}")
    return orbits


def expected_orbit_lengths(n: int, q: int) -> list[int]:
    """Orbit lengths predicted for lines under a Singer cycle (short orbit first)."""
    theta = (q**n - 1) // (q - 1)
    if n % 2:
        return [theta] * ((q ** (n - 1) - 1) // (q**2 - 1))
    short = (q**n - 1) // (q**2 - 1)
    half = n // 2
    others = q * sum(q ** (2 * j) for j in range(half - 1))
    return [short] + [theta] * others


# ---- Desarguesian spreads and the subgroups S1, S2 ----


@dataclass(frozen=True)
class Spread:
    """A family of rank-t subspaces given by their sorted point sets."""

    elements: tuple[tuple[int, ...], ...]
    t: int
    n: int
    q: int

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def theta(self) -> int:
        return (self.q**self.n - 1) // (self.q - 1)

    def element_of(self) -> dict[int, int]:
        """Map point -> index of the element containing it."""
        return {p: j for j, el in enumerate(self.elements) for p in el}

    def is_partition(self) -> bool:
        pts = [p for el in self.elements for p in el]
        return len(pts) == self.theta and set(pts) == set(range(self.theta))


def _check_rank(n: int, t: int) -> None:
    if t < 1 or t >= n or n % t:
        raise NonDivisorRank(f"t = {t} is not a proper divisor of n = {n}")


def desarguesian_spread(space: ProjectiveSpace, t: int) -> Spread:
    """The spread {GF(q^t) * alpha^j}.

    beta = alpha^e with e = (q^n - 1)/(q^t - 1) generates GF(q^t)^*, so the
    element through alpha^j consists of the points j + k*e (mod theta), i.e.
    one residue class modulo e.
    """
    _check_rank(space.n, t)
    q, n = space.q, space.n
    e = (q**n - 1) // (q**t - 1)
    theta = space.theta
    elements = tuple(tuple(range(j, theta, e)) for j in range(e))
    return Spread(elements, t, n, q)


@dataclass(frozen=True)
class SubgroupDecomposition:
    """Cyclic subgroups of S given by generating shift and order."""

    s1_shift: int
    s1_order: int
    s2_shift: int
    s2_order: int
    theta: int

    @property
    def is_direct(self) -> bool:
        """True when S is the internal direct product of the two subgroups."""
        return math.gcd(self.s1_order, self.s2_order) == 1

    def s1_elements(self) -> list[int]:
        return [k * self.s1_shift % self.theta for k in range(self.s1_order)]

    def s2_elements(self) -> list[int]:
        return [k * self.s2_shift % self.theta for k in range(self.s2_order)]


def subgroup_decomposition(space: ProjectiveSpace, t: int) -> SubgroupDecomposition:
    """Subgroups of orders (q^t-1)/(q-1) and (q^n-1)/(q^t-1) of the Singer group.

    In the cyclic group of shifts modulo theta the subgroup of order d is
    generated by the shift theta/d.
    """
    _check_rank(space.n, t)
    q, n, theta = space.q, space.n, space.theta
    s1 = (q**t - 1) // (q - 1)
    s2 = (q**n - 1) // (q**t - 1)
    return SubgroupDecomposition(theta // s1, s1, theta // s2, s2, theta)


def fixes_every_element(shifts: Sequence[int], spread: Spread) -> bool:
    members = [set(el) for el in spread.elements]
    theta = spread.theta
    return all({(p + k) % theta for p in el} == el for k in shifts for el in members)


def acts_regularly(shifts: Sequence[int], spread: Spread) -> bool:
    """Every ordered pair of elements is related by exactly one of ``shifts``."""
    where = spread.element_of()
    theta = spread.theta
    count = len(spread)
    for a, el in enumerate(spread.elements):
        hits = [0] * count
        for k in shifts:
            images = {where[(p + k) % theta] for p in el}
            if len(images) != 1:
                return False
            hits[images.pop()] += 1
        if hits != [1] * count:
            return False
    return True


# ---- starter sets ----


@dataclass(frozen=True)
class StarterSet:
    base_point: int
    lines: tuple[Line, ...]
    orbit_keys: tuple[Line, ...]


def starter_set(space: ProjectiveSpace, base_point: int = 0,
                orbits: Sequence[Orbit] | None = None) -> StarterSet:
    """One line through ``base_point`` from each S-orbit.

    Lines through the base point are scanned in lexicographic order and a
    line is kept when its orbit's canonical representative is new.
    """
    theta = space.theta
    orbits = decompose_lines(space) if orbits is None else orbits
    wanted = {o.representative for o in orbits}
    lines: list[Line] = []
    keys: list[Line] = []
    for line in space.lines_through(base_point % theta):
        rep, _ = orbit_data(line, theta)
        if rep in wanted and rep not in keys:
            lines.append(line)
            keys.append(rep)
            if len(keys) == len(wanted):
                break
    if len(keys) != len(wanted):
        raise OrbitMismatch("some orbit has no line through the base point")
    return StarterSet(base_point % theta, tuple(lines), tuple(keys))


def verify_starter(starter: StarterSet, orbits: Sequence[Orbit], theta: int) -> bool:
    """Both starter-set conditions: distinct orbits, and every orbit reached."""
    keys = [orbit_data(line, theta)[0] for line in starter.lines]
    if len(set(keys)) != len(keys):
        return False
    if any(starter.base_point not in line for line in starter.lines):
        return False
    return set(keys) == {o.representative for o in orbits}
