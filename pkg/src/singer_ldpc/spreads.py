"""Spread validators: reguli and regularity, normality, linear representation."""

from __future__ import annotations

import itertools
from typing import Sequence

from .errors import NotDisjoint, RankMismatch, SizeGuardExceeded, UnsupportedOrder
from .galois import size_guard
from .orbits import Spread, desarguesian_spread
from .projgeom import Line, ProjectiveSpace, projective_space, subspace_of_points, subspace_points

REGULARITY_FULL_LIMIT = 20
REGULARITY_SAMPLE = 1000


def _transversals(space: ProjectiveSpace, lines: Sequence[Line]) -> list[Line]:
    """Lines meeting every member of ``lines`` (the first two must be disjoint)."""
    a, b, *rest = lines
    rest_sets = [set(r) for r in rest]
    found = set()
    for x in a:
        for y in b:
            t = space.line_through(x, y)
            if all(s.intersection(t) for s in rest_sets):
                found.add(t)
    return sorted(found)


def compute_regulus(space: ProjectiveSpace, a: Line, b: Line, c: Line) -> list[Line]:
    """The unique regulus through three pairwise disjoint lines.

    The q+1 transversals of a, b, c are found first; the regulus is the
    set of lines meeting all of them.
    """
    for u, v in ((a, b), (a, c), (b, c)):
        if set(u) & set(v):
            raise NotDisjoint(f"lines {u} and {v} meet")
    transversals = _transversals(space, (a, b, c))
    if len(transversals) != space.q + 1:
        raise AssertionError(f"found {len(transversals)} transversals, expected {space.q + 1}")
    regulus = _transversals(space, transversals)
    if len(regulus) != space.q + 1 or not {a, b, c} <= set(regulus):
        raise AssertionError("regulus construction failed")
    return regulus


def opposite_regulus(space: ProjectiveSpace, regulus: Sequence[Line]) -> list[Line]:
    return _transversals(space, regulus)


def _regularity_triples(count: int):
    if count <= REGULARITY_FULL_LIMIT:
        yield from itertools.combinations(range(count), 3)
        return
    seen = set()
    for k in range(2, count):
        seen.add((0, 1, k))
        yield (0, 1, k)
    for tri in itertools.islice(itertools.combinations(range(count), 3), REGULARITY_SAMPLE):
        if tri not in seen:
            yield tri


def is_regular(space: ProjectiveSpace, spread: Spread) -> bool:
    """Whether the regulus of every (sampled) triple of spread lines lies in the spread.

    Refused for q = 2, where regularity does not characterise Desarguesian spreads.
    """
    if space.q == 2:
        raise UnsupportedOrder("regularity test requires q > 2")
    if spread.t != 2 or space.n != 4:
        raise RankMismatch("regularity test is implemented for line spreads of PG(3,q)")
    members = set(spread.elements)
    for i, j, k in _regularity_triples(len(spread)):
        els = spread.elements
        if not set(compute_regulus(space, els[i], els[j], els[k])) <= members:
            return False
    return True


def switch_regulus(space: ProjectiveSpace, spread: Spread, a: Line, b: Line, c: Line) -> Spread:
    """Replace the regulus through a, b, c by its opposite regulus."""
    regulus = set(compute_regulus(space, a, b, c))
    if not regulus <= set(spread.elements):
        raise ValueError("regulus is not contained in the spread")
    opposite = opposite_regulus(space, sorted(regulus))
    elements = sorted([e for e in spread.elements if e not in regulus] + opposite)
    return Spread(tuple(elements), spread.t, spread.n, spread.q)


def is_normal(space: ProjectiveSpace, spread: Spread) -> bool:
    """Whether every span of two elements is partitioned by the elements it contains."""
    t, n = spread.t, space.n
    if n % t or n // t <= 2:
        raise RankMismatch(f"normality needs n = r*t with r > 2 (n={n}, t={t})")
    sets = [frozenset(e) for e in spread.elements]
    for i, j in itertools.combinations(range(len(sets)), 2):
        span = set(subspace_points(space, subspace_of_points(space, spread.elements[i] + spread.elements[j])))
        covered: set[int] = set()
        for s in sets:
            inter = s & span
            if not inter:
                continue
            if inter != s:
                return False
            covered |= s
        if covered != span:
            return False
    return True


def linear_representation(r: int, t: int, q: int) -> Spread:
    """Spread of PG(rt-1, q) obtained from the points of PG(r-1, q^t).

    GF(q^(rt)) is an r-dimensional GF(q^t)-space with basis 1, alpha, ...,
    alpha^(r-1).  Each point of PG(r-1, q^t), written with normalised
    coordinates over GF(q^t), gives a vector x whose GF(q^t)-multiples form
    a rank-t GF(q)-subspace.
    """
    if r < 2 or t < 2:
        raise ValueError("linear representation needs r >= 2 and t >= 2")
    if q ** (r * t) > size_guard():
        raise SizeGuardExceeded(f"q^(rt) = {q}^{r * t} exceeds the size guard")
    space = projective_space(r * t, q)
    tower, top = space.tower, space.top
    big = tower.subfield(t)  # GF(q^t): 0, then beta^k
    nonzero = big[1:]
    elements = set()
    for lead in range(r):
        # normalised coordinates: zeros, then 1 at position lead, then anything
        for tail in itertools.product(big, repeat=r - 1 - lead):
            x = top.exp(lead)
            for i, c in enumerate(tail, start=lead + 1):
                x = top.add(x, top.mul(c, top.exp(i)))
            pts = sorted({int(top.log_table[top.mul(b, x)]) % space.theta for b in nonzero})
            elements.add(tuple(pts))
    spread = Spread(tuple(sorted(elements)), t, r * t, q)
    expected = (q ** (r * t) - 1) // (q**t - 1)
    if len(spread) != expected:
        raise AssertionError(f"got {len(spread)} elements, expected {expected}")
    return spread


def same_elements(a: Spread, b: Spread) -> bool:
    return set(a.elements) == set(b.elements)


def desarguesian(r: int, t: int, q: int) -> Spread:
    return desarguesian_spread(projective_space(r * t, q), t)
