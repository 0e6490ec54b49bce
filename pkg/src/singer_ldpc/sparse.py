"""Row-major sparse binary matrices with optional block metadata."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp


@dataclass(frozen=True)
class Block:
    """A horizontal band of rows; ``circulant`` marks a square cyclic block."""

    start: int
    num_rows: int
    circulant: bool
    orbit_length: int

    def to_json(self) -> dict:
        return {
            "start": self.start,
            "rows": self.num_rows,
            "circulant": self.circulant,
            "orbit_length": self.orbit_length,
        }


@dataclass(frozen=True)
class SparseBinaryMatrix:
    num_rows: int
    num_cols: int
    rows: tuple[tuple[int, ...], ...]
    blocks: tuple[Block, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if len(self.rows) != self.num_rows:
            raise ValueError(f"expected {self.num_rows} rows, got {len(self.rows)}")
        for r in self.rows:
            if any(b <= a for a, b in zip(r, r[1:])):
                raise ValueError(f"row support {r} is not strictly increasing")
            if r and (r[0] < 0 or r[-1] >= self.num_cols):
                raise ValueError(f"row support {r} out of range for {self.num_cols} columns")

    @classmethod
    def from_rows(
        cls, num_cols: int, rows: Iterable[Iterable[int]], blocks: Sequence[Block] = ()
    ) -> SparseBinaryMatrix:
        supports = tuple(tuple(sorted(set(int(c) for c in r))) for r in rows)
        return cls(len(supports), num_cols, supports, tuple(blocks))

    @classmethod
    def from_dense(cls, a: np.ndarray) -> SparseBinaryMatrix:
        a = np.asarray(a)
        return cls.from_rows(a.shape[1], (np.flatnonzero(row) for row in a))

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.num_rows, self.num_cols), dtype=np.uint8)
        for i, r in enumerate(self.rows):
            out[i, list(r)] = 1
        return out

    def to_csr(self) -> sp.csr_matrix:
        indptr = np.zeros(self.num_rows + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(r) for r in self.rows])
        indices = np.fromiter((c for r in self.rows for c in r), dtype=np.int64, count=int(indptr[-1]))
        data = np.ones(len(indices), dtype=np.int64)
        return sp.csr_matrix((data, indices, indptr), shape=(self.num_rows, self.num_cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.num_rows, self.num_cols

    def columns(self) -> list[list[int]]:
        cols: list[list[int]] = [[] for _ in range(self.num_cols)]
        for i, r in enumerate(self.rows):
            for c in r:
                cols[c].append(i)
        return cols

    def transpose(self) -> SparseBinaryMatrix:
        return SparseBinaryMatrix(self.num_cols, self.num_rows, tuple(tuple(c) for c in self.columns()))

    def row_weights(self) -> list[int]:
        return [len(r) for r in self.rows]

    def col_weights(self) -> list[int]:
        w = [0] * self.num_cols
        for r in self.rows:
            for c in r:
                w[c] += 1
        return w

    def with_blocks(self, blocks: Sequence[Block]) -> SparseBinaryMatrix:
        return SparseBinaryMatrix(self.num_rows, self.num_cols, self.rows, tuple(blocks))

    def circulant_violations(self) -> list[int]:
        """Row indices breaking the cyclic row-shift rule inside circulant blocks."""
        bad = []
        for blk in self.blocks:
            if not blk.circulant:
                continue
            if blk.num_rows != self.num_cols:
                bad.append(blk.start)
                continue
            last = blk.start + blk.num_rows - 1
            for j in range(blk.start, last + 1):
                nxt = j + 1 if j < last else blk.start  # the last row wraps to the first
                shifted = tuple(sorted((c + 1) % self.num_cols for c in self.rows[j]))
                if shifted != self.rows[nxt]:
                    bad.append(nxt)
        return bad
