"""Binary codes from parity-check matrices: rank, encoding, bit-flip decoding."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import LengthMismatch, ZeroMatrix
from .sparse import SparseBinaryMatrix


def gf2_rref(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(2); pivots taken at the lowest column first."""
    m = np.array(a, dtype=bool)
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hit = np.flatnonzero(m[r:, c])
        if hit.size == 0:
            continue
        p = r + hit[0]
        if p != r:
            m[[r, p]] = m[[p, r]]
        mask = m[:, c].copy()
        mask[r] = False
        m[mask] ^= m[r]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def gf2_rank(a: np.ndarray) -> int:
    return len(gf2_rref(np.asarray(a) % 2 == 1)[1])


@dataclass(frozen=True, eq=False)
class BinaryCode:
    parity: SparseBinaryMatrix
    generator: np.ndarray  # k x n, identity on ``info_positions``
    info_positions: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.parity.num_cols

    @property
    def k(self) -> int:
        return len(self.info_positions)

    def syndrome(self, word: np.ndarray) -> np.ndarray:
        return np.array([int(word[list(r)].sum()) & 1 for r in self.parity.rows], dtype=np.uint8)


def code_from_matrix(m: SparseBinaryMatrix) -> BinaryCode:
    """Null space of ``m`` over GF(2) with a systematic generator on the free columns."""
    if not any(m.rows):
        raise ZeroMatrix("parity-check matrix has no nonzero entry")
    red, pivots = gf2_rref(m.to_dense().astype(bool))
    free = [c for c in range(m.num_cols) if c not in set(pivots)]
    gen = np.zeros((len(free), m.num_cols), dtype=np.uint8)
    for i, f in enumerate(free):
        gen[i, f] = 1
        gen[i, pivots] = red[:, f]
    return BinaryCode(m, gen, tuple(free))


def encode(code: BinaryCode, message: Sequence[int]) -> np.ndarray:
    msg = np.asarray(message, dtype=np.uint8)
    if msg.shape != (code.k,):
        raise LengthMismatch(f"message length {msg.size} != k = {code.k}")
    return (msg.astype(np.int64) @ code.generator % 2).astype(np.uint8)


@dataclass(frozen=True)
class DecodeResult:
    word: np.ndarray
    success: bool
    iterations: int


def decode_bit_flip(code: BinaryCode, received: Sequence[int], max_iter: int = 50) -> DecodeResult:
    """Hard-decision bit flipping with simultaneous updates.

    A bit of column weight r flips when at least ceil((r+1)/2) of its
    checks are unsatisfied, i.e. a strict majority.
    """
    word = np.asarray(received, dtype=np.uint8).copy() & 1
    if word.shape != (code.n,):
        raise LengthMismatch(f"word length {word.size} != n = {code.n}")
    h = code.parity.to_csr()
    col_weight = np.asarray(h.sum(axis=0)).ravel()
    threshold = np.array([math.ceil((r + 1) / 2) for r in col_weight])
    ht = h.T.tocsr()
    iterations = 0
    while True:
        syn = (h @ word) % 2
        if not syn.any():
            return DecodeResult(word, True, iterations)
        if iterations == max_iter:
            break
        flips = (ht @ syn >= threshold) & (col_weight > 0)
        if not flips.any():
            break
        word ^= flips.astype(np.uint8)
        iterations += 1
    return DecodeResult(word, False, iterations)
