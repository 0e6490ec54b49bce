"""Elliptic quadrics of PG(3, q), q even, and the quadric starter set.

With theta = (q^2+1)(q+1), S1 is generated by the shift q^2+1 and S2 by
the shift q+1.  The S2-orbit of a point is a candidate ovoid; it is
checked exhaustively (size, cap property, plane sections, tangency of
the spread lines) before it is handed out.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import NotAnOvoid, PointNotOnQuadric, ReducibleForm, SpreadLine, UnsupportedOrder
from .orbits import Spread, StarterSet, desarguesian_spread, orbit_data
from .projgeom import Line, ProjectiveSpace, projective_space


def _require_even_pg3(space: ProjectiveSpace) -> None:
    if space.n != 4:
        raise UnsupportedOrder(f"quadrics are built in PG(3,q), not PG({space.n - 1},q)")
    if space.q % 2:
        raise UnsupportedOrder(f"q = {space.q} is odd; only q = 2^e is supported")


@dataclass(frozen=True, eq=False)
class Geometry:
    """Exhaustive line and plane lists of PG(3, q) as index arrays."""

    space: ProjectiveSpace

    @cached_property
    def lines(self) -> np.ndarray:
        return np.array(self.space.all_lines(), dtype=np.int64)

    @cached_property
    def planes(self) -> list[np.ndarray]:
        """Point sets of all planes, one per dual point u: {x : u.x = 0}."""
        sp = self.space
        f = sp.base
        coords = sp.point_coords
        mul, add = f.mul_table, f.add_table
        out = []
        for u in coords:
            acc = np.zeros(len(coords), dtype=np.int64)
            for k in range(sp.n):
                acc = add[acc, mul[u[k], coords[:, k]]]
            out.append(np.flatnonzero(acc == 0))
        return out


@dataclass(frozen=True)
class Quadric:
    points: frozenset[int]
    q: int
    source: str

    def __len__(self) -> int:
        return len(self.points)

    def mask(self, theta: int) -> np.ndarray:
        m = np.zeros(theta, dtype=bool)
        m[list(self.points)] = True
        return m

    def shifted(self, k: int, theta: int, source: str | None = None) -> Quadric:
        return Quadric(frozenset((p + k) % theta for p in self.points), self.q, source or self.source)


@dataclass(frozen=True)
class TangencyReport:
    tangent: int
    secant: int
    external: int
    max_meet: int

    @property
    def is_cap(self) -> bool:
        return self.max_meet <= 2


def _irreducible_quadratic(f, b: int, c: int) -> bool:
    return all(f.add(f.add(f.mul(x, x), f.mul(b, x)), c) != 0 for x in range(f.q))


def canonical_quadric(space: ProjectiveSpace, b: int, c: int) -> Quadric:
    """Points with X0*X1 + X2^2 + b*X2*X3 + c*X3^2 = 0 (b, c as base-field encodings)."""
    _require_even_pg3(space)
    f = space.base
    if not _irreducible_quadratic(f, b, c):
        raise ReducibleForm(f"xi^2 + {b} xi + {c} has a root in GF({f.q})")
    x = space.point_coords
    mul, add = f.mul_table, f.add_table
    val = add[mul[x[:, 0], x[:, 1]], mul[x[:, 2], x[:, 2]]]
    val = add[val, mul[b, mul[x[:, 2], x[:, 3]]]]
    val = add[val, mul[c, mul[x[:, 3], x[:, 3]]]]
    return Quadric(frozenset(np.flatnonzero(val == 0).tolist()), space.q, f"canonical(b={b},c={c})")


def tangency(geom: Geometry, quadric: Quadric) -> TangencyReport:
    meets = quadric.mask(geom.space.theta)[geom.lines].sum(axis=1)
    return TangencyReport(
        tangent=int((meets == 1).sum()),
        secant=int((meets == 2).sum()),
        external=int((meets == 0).sum()),
        max_meet=int(meets.max()),
    )


def plane_section_sizes(geom: Geometry, quadric: Quadric) -> set[int]:
    m = quadric.mask(geom.space.theta)
    return {int(m[pl].sum()) for pl in geom.planes}


def ovoid_failures(geom: Geometry, quadric: Quadric, spread: Spread | None = None) -> list[str]:
    """Reasons ``quadric`` fails to be an elliptic quadric (empty when it passes)."""
    q = geom.space.q
    problems = []
    if len(quadric) != q * q + 1:
        problems.append(f"has {len(quadric)} points, expected {q * q + 1}")
    rep = tangency(geom, quadric)
    if not rep.is_cap:
        problems.append(f"a line meets it in {rep.max_meet} points")
    if rep.tangent != (q * q + 1) * (q + 1):
        problems.append(f"{rep.tangent} tangent lines, expected {(q * q + 1) * (q + 1)}")
    sizes = plane_section_sizes(geom, quadric)
    if not sizes <= {1, q + 1}:
        problems.append(f"plane sections of sizes {sorted(sizes)}")
    if spread is not None:
        for line in spread.elements:
            if len(quadric.points.intersection(line)) != 1:
                problems.append(f"spread line {line} is not tangent")
                break
    return problems


def singer_quadric(space: ProjectiveSpace, seed: int = 0, geom: Geometry | None = None) -> Quadric:
    """S2-orbit of ``seed``, returned only after passing every ovoid check."""
    _require_even_pg3(space)
    q, theta = space.q, space.theta
    step = q + 1  # S2 = <sigma^(q+1)>, order q^2 + 1
    quadric = Quadric(
        frozenset((seed + k * step) % theta for k in range(q * q + 1)), q, f"singer(seed={seed % theta})"
    )
    geom = geom or Geometry(space)
    problems = ovoid_failures(geom, quadric, desarguesian_spread(space, 2))
    if problems:
        raise NotAnOvoid("; ".join(problems))
    return quadric


def s1_shift(space: ProjectiveSpace) -> int:
    return space.q**2 + 1


def quadric_partition(space: ProjectiveSpace, quadric: Quadric) -> list[Quadric]:
    """The images O_i = O^(tau^i), i = 0..q, under the generator tau of S1."""
    _require_even_pg3(space)
    theta, tau = space.theta, s1_shift(space)
    parts = [quadric.shifted(i * tau, theta, f"{quadric.source}^tau^{i}") for i in range(space.q + 1)]
    union = set().union(*(p.points for p in parts))
    if sum(len(p) for p in parts) != theta or len(union) != theta:
        raise AssertionError("images of the quadric under S1 do not partition the points")
    return parts


def tangent_indices(line: Sequence[int], partition: Sequence[Quadric]) -> list[int]:
    return [i for i, o in enumerate(partition) if len(o.points.intersection(line)) == 1]


def unique_tangent_quadric(line: Line, partition: Sequence[Quadric], spread: Spread) -> int:
    """Index of the only quadric of the partition to which a non-spread line is tangent."""
    if tuple(sorted(line)) in set(spread.elements):
        raise SpreadLine(f"{line} is a spread line, tangent to every quadric of the partition")
    hits = tangent_indices(line, partition)
    if len(hits) != 1:
        raise AssertionError(f"line {line} is tangent to quadrics {hits}")
    return hits[0]


def tangent_lines_at(space: ProjectiveSpace, quadric: Quadric, point: int) -> list[Line]:
    if point % space.theta not in quadric.points:
        raise PointNotOnQuadric(f"point {point} is not on the quadric")
    point %= space.theta
    return [ln for ln in space.lines_through(point) if len(quadric.points.intersection(ln)) == 1]


def starter_from_quadric(space: ProjectiveSpace, quadric: Quadric, point: int) -> StarterSet:
    """The q+1 tangents to ``quadric`` at ``point``, one per line orbit."""
    _require_even_pg3(space)
    lines = tangent_lines_at(space, quadric, point)
    if len(lines) != space.q + 1:
        raise NotAnOvoid(f"{len(lines)} tangents at point {point}, expected {space.q + 1}")
    keys = [orbit_data(ln, space.theta)[0] for ln in lines]
    spread = set(desarguesian_spread(space, 2).elements)
    in_spread = [ln for ln in lines if ln in spread]
    if len(in_spread) != 1:
        raise AssertionError(f"{len(in_spread)} tangents at {point} are spread lines, expected 1")
    # spread tangent first, matching the short-orbit-first block order
    order = sorted(range(len(lines)), key=lambda i: (lines[i] not in spread, keys[i]))
    return StarterSet(point % space.theta, tuple(lines[i] for i in order), tuple(keys[i] for i in order))


def quadric_for(q: int, seed: int = 0) -> tuple[ProjectiveSpace, Quadric]:
    space = projective_space(4, q)
    return space, singer_quadric(space, seed)
