"""PG(n-1, q) realised as PG(GF(q^n), GF(q)).

Point ``i`` is the GF(q)-span of alpha^i, for 0 <= i < theta with
theta = (q^n - 1)/(q - 1).  In this indexing the Singer map x -> alpha*x
is the shift i -> i + 1 (mod theta).  Lines are sorted tuples of point
indices.  A coordinate view on the basis 1, alpha, ..., alpha^(n-1) is
available for linear algebra over GF(q).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import EqualPoints, ZeroVector
from .galois import FieldElement, FieldSpec, FieldTower, tower_for
from .sparse import SparseBinaryMatrix

Line = tuple[int, ...]


def count_points(n: int, q: int) -> int:
    if n < 2:
        raise ValueError("n must be at least 2")
    return (q**n - 1) // (q - 1)


def count_lines(n: int, q: int) -> int:
    if n < 2:
        raise ValueError("n must be at least 2")
    return (q**n - 1) * (q ** (n - 1) - 1) // ((q**2 - 1) * (q - 1))


def lines_per_point(n: int, q: int) -> int:
    return (q ** (n - 1) - 1) // (q - 1)


@dataclass(frozen=True, eq=False)
class ProjectiveSpace:
    tower: FieldTower

    @property
    def n(self) -> int:
        return self.tower.n

    @property
    def q(self) -> int:
        return self.tower.q

    @property
    def theta(self) -> int:
        return self.tower.theta

    @property
    def top(self) -> FieldSpec:
        return self.tower.top

    @property
    def base(self) -> FieldSpec:
        return self.tower.base

    def __repr__(self) -> str:
        return f"PG({self.n - 1},{self.q})"

    @cached_property
    def zech(self) -> np.ndarray:
        """zech[k] = log(1 + alpha^k), or -1 when 1 + alpha^k = 0."""
        top = self.top
        vals = top.add_arrays(top.exp_table, 1)
        out = np.where(vals == 0, -1, top.log_table[vals])
        out.setflags(write=False)
        return out

    @cached_property
    def point_coords(self) -> np.ndarray:
        """Homogeneous coordinates (over GF(q)) of the representative alpha^i of each point."""
        coords = self.tower.coordinates[self.top.exp_table[: self.theta]]
        coords.setflags(write=False)
        return coords

    # ---- points ----

    def point_from_element(self, x: FieldElement | int) -> int:
        v = x.value if isinstance(x, FieldElement) else int(x)
        if v == 0:
            raise ZeroVector("the zero vector is not a point")
        return int(self.top.log_table[v]) % self.theta

    def point_from_coords(self, vec: Sequence[int]) -> int:
        return self.point_from_element(self.tower.from_coordinates(vec))

    def coords(self, i: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self.point_coords[i % self.theta])

    # ---- lines ----

    def line_through(self, a: int, b: int) -> Line:
        """The q+1 points of the line joining points ``a`` and ``b``.

        Besides <alpha^b>, the points are <lambda*alpha^a + alpha^b> for
        lambda = alpha^(theta*m) running over GF(q)^*, and lambda = 0.
        """
        theta, order = self.theta, self.top.q - 1
        a, b = a % theta, b % theta
        if a == b:
            raise EqualPoints(f"points {a} and {b} coincide")
        m = np.arange(self.q - 1, dtype=np.int64)
        ks = (theta * m + a - b) % order
        pts = (b + self.zech[ks]) % theta
        return tuple(sorted({a, b, *map(int, pts)}))

    def lines_through(self, point: int) -> list[Line]:
        """All lines through ``point`` in lexicographic order."""
        seen: set[Line] = set()
        for other in range(self.theta):
            if other != point:
                seen.add(self.line_through(point, other))
        return sorted(seen)

    def all_lines(self) -> list[Line]:
        """Exhaustive enumeration of every line via pairs of points."""
        theta = self.theta
        covered = np.zeros((theta, theta), dtype=bool)
        lines = []
        for a in range(theta):
            for b in range(a + 1, theta):
                if covered[a, b]:
                    continue
                line = self.line_through(a, b)
                idx = np.array(line)
                covered[np.ix_(idx, idx)] = True
                lines.append(line)
        return sorted(lines)


@lru_cache(maxsize=None)
def projective_space(n: int, q: int) -> ProjectiveSpace:
    """PG(n-1, q) with default field moduli (cached)."""
    return ProjectiveSpace(tower_for(q, n))


def point_from_element(space: ProjectiveSpace, x: FieldElement) -> int:
    return space.point_from_element(x)


def line_through(space: ProjectiveSpace, a: int, b: int) -> Line:
    return space.line_through(a, b)


# ---- subspaces over GF(q) ----


def _rref(rows: Iterable[Sequence[int]], f: FieldSpec, n: int) -> list[tuple[int, ...]]:
    work = [list(r) for r in rows if any(r)]
    out: list[list[int]] = []
    col = 0
    while work and col < n:
        piv = next((r for r in work if r[col]), None)
        if piv is None:
            col += 1
            continue
        work.remove(piv)
        s = f.inv(piv[col])
        piv = [f.mul(s, c) for c in piv]
        reduce = lambda r: [f.sub(x, f.mul(r[col], y)) for x, y in zip(r, piv)]  # noqa: E731
        work = [r2 for r2 in (reduce(r) for r in work) if any(r2)]
        out = [reduce(r) for r in out]
        out.append(piv)
        col += 1
    out.sort(key=lambda r: next(i for i, c in enumerate(r) if c))
    return [tuple(r) for r in out]


def _nullspace(rows: Sequence[Sequence[int]], f: FieldSpec, n: int) -> list[tuple[int, ...]]:
    """Basis of {v : r.v = 0 for every row r}."""
    red = _rref(rows, f, n)
    pivots = [next(i for i, c in enumerate(r) if c) for r in red]
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        v = [0] * n
        v[free] = 1
        for r, pc in zip(red, pivots):
            v[pc] = f.neg(r[free])
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class Subspace:
    """A GF(q)-subspace of GF(q)^n stored by its reduced echelon basis."""

    n: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)


def subspace_span(space: ProjectiveSpace, vectors: Iterable[Sequence[int]]) -> Subspace:
    vecs = [tuple(int(c) for c in v) for v in vectors]
    for v in vecs:
        if len(v) != space.n:
            raise ValueError(f"vector {v} has length {len(v)}, expected {space.n}")
    return Subspace(space.n, tuple(_rref(vecs, space.base, space.n)))


def subspace_of_points(space: ProjectiveSpace, points: Iterable[int]) -> Subspace:
    return subspace_span(space, (space.coords(i) for i in points))


def subspace_meet(space: ProjectiveSpace, a: Subspace, b: Subspace) -> Subspace:
    f, n = space.base, space.n
    dual = _nullspace(a.basis, f, n) + _nullspace(b.basis, f, n)
    return subspace_span(space, _nullspace(dual, f, n))


def subspace_join(space: ProjectiveSpace, a: Subspace, b: Subspace) -> Subspace:
    return subspace_span(space, a.basis + b.basis)


def subspace_points(space: ProjectiveSpace, a: Subspace) -> list[int]:
    """Sorted point indices of the (q^t - 1)/(q - 1) points of ``a``."""
    if a.rank == 0:
        return []
    tower, top = space.tower, space.top
    gens = [tower.from_coordinates(v) for v in a.basis]
    multiples = [
        np.array([top.mul(tower.embed(c), g) for c in range(space.q)], dtype=np.int64) for g in gens
    ]
    vals = multiples[0]
    for m in multiples[1:]:
        vals = top.add_arrays(vals[None, :], m[:, None]).reshape(-1)
    vals = vals[vals != 0]
    return sorted(set((top.log_table[vals] % space.theta).tolist()))


def contains_point(space: ProjectiveSpace, a: Subspace, point: int) -> bool:
    return subspace_span(space, a.basis + (space.coords(point),)).rank == a.rank


# ---- incidence structures ----


@dataclass(frozen=True)
class IncidenceStructure:
    num_points: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for blk in self.blocks:
            if list(blk) != sorted(set(blk)):
                raise ValueError(f"block {blk} is not sorted")
            if blk and (blk[0] < 0 or blk[-1] >= self.num_points):
                raise ValueError(f"block {blk} out of range")

    @classmethod
    def from_blocks(cls, num_points: int, blocks: Iterable[Iterable[int]]) -> IncidenceStructure:
        return cls(num_points, tuple(tuple(sorted(set(b))) for b in blocks))


def incidence_matrix(s: IncidenceStructure) -> SparseBinaryMatrix:
    """Binary matrix with m[i][j] = 1 iff point j lies in block i."""
    return SparseBinaryMatrix(len(s.blocks), s.num_points, s.blocks)


def structure_from_matrix(m: SparseBinaryMatrix) -> IncidenceStructure:
    return IncidenceStructure(m.num_cols, m.rows)
