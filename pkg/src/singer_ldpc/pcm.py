"""Parity-check matrices from starter sets, regular-LDPC checks, alist I/O."""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import MalformedAlist, NotASpread, OrbitMismatch
from .orbits import Orbit, Spread, StarterSet, apply_singer, decompose_lines, orbit_data, starter_set
from .projgeom import ProjectiveSpace
from .sparse import Block, SparseBinaryMatrix


def assemble(space: ProjectiveSpace, starter: StarterSet, orbits: Sequence[Orbit]) -> SparseBinaryMatrix:
    """Stack one block per orbit; row k of a block is its starter line shifted by k.

    Columns are points in Singer order, so every full-length orbit yields a
    theta x theta circulant block.
    """
    theta = space.theta
    by_key = {}
    for line in starter.lines:
        rep, _ = orbit_data(line, theta)
        if rep in by_key:
            raise OrbitMismatch(f"two starter lines lie in the orbit of {rep}")
        by_key[rep] = line
    if set(by_key) != {o.representative for o in orbits}:
        raise OrbitMismatch("starter set does not match the orbit decomposition")
    rows = []
    blocks = []
    for orbit in orbits:
        line = by_key[orbit.representative]
        blocks.append(Block(len(rows), orbit.length, orbit.length == theta, orbit.length))
        rows.extend(apply_singer(k, line, theta) for k in range(orbit.length))
    return SparseBinaryMatrix(len(rows), theta, tuple(rows), tuple(blocks))


def spread_block(spread: Spread) -> tuple[SparseBinaryMatrix, list[int]]:
    """Incidence matrix of a line spread plus the column order giving (I | I | ... | I).

    ``perm[c]`` is the point placed in column ``c`` of the permuted matrix:
    the k-th smallest point of element j goes to column k*|spread| + j.
    """
    if not spread.is_partition():
        raise NotASpread("spread elements do not partition the point set")
    size = len(spread)
    perm = [0] * spread.theta
    for j, el in enumerate(spread.elements):
        for k, p in enumerate(el):
            perm[k * size + j] = p
    m = SparseBinaryMatrix(size, spread.theta, tuple(spread.elements), (Block(0, size, False, size),))
    return m, perm


def permute_columns(m: SparseBinaryMatrix, perm: Sequence[int]) -> SparseBinaryMatrix:
    where = {p: c for c, p in enumerate(perm)}
    return SparseBinaryMatrix.from_rows(m.num_cols, ([where[p] for p in r] for r in m.rows))


def pg1_matrix(space: ProjectiveSpace) -> SparseBinaryMatrix:
    """Full point-line incidence matrix of PG(n-1, q) in orbit-block form."""
    orbits = decompose_lines(space)
    return assemble(space, starter_set(space, 0, orbits), orbits)


def pg2_matrix(space: ProjectiveSpace) -> SparseBinaryMatrix:
    return pg1_matrix(space).transpose()


# ---- regular LDPC checks ----


@dataclass(frozen=True)
class LdpcReport:
    num_rows: int
    num_cols: int
    row_weight_histogram: dict[int, int]
    col_weight_histogram: dict[int, int]
    max_col_overlap: int
    density: float
    girth: float  # math.inf when the Tanner graph is a forest

    @property
    def k(self) -> int | None:
        """Constant row weight, if any."""
        return _constant(self.row_weight_histogram)

    @property
    def r(self) -> int | None:
        """Constant column weight, if any."""
        return _constant(self.col_weight_histogram)

    @property
    def l1(self) -> bool:
        return self.k is not None

    @property
    def l2(self) -> bool:
        return self.r is not None

    @property
    def l3(self) -> bool:
        return self.max_col_overlap <= 1

    @property
    def l4_ratio(self) -> float | None:
        """max(k, r) / min(rows, cols); reported only, no threshold applies."""
        if self.k is None or self.r is None or min(self.num_rows, self.num_cols) == 0:
            return None
        return max(self.k, self.r) / min(self.num_rows, self.num_cols)


def _constant(hist: dict[int, int]) -> int | None:
    if len(hist) == 1:
        (w,) = hist
        return w if w > 0 else None
    return None


def max_column_overlap(m: SparseBinaryMatrix) -> int:
    if m.num_cols < 2:
        return 0
    a = m.to_csr()
    gram = (a.T @ a).tocoo()
    off = gram.data[gram.row != gram.col]
    return int(off.max()) if off.size else 0


def tanner_girth(m: SparseBinaryMatrix, overlap: int | None = None) -> float:
    """Shortest cycle length of the Tanner graph by BFS from every column node.

    A column overlap of 2 or more is already a 4-cycle; otherwise the girth
    is at least 6 and the search stops as soon as a 6-cycle is seen.
    """
    overlap = max_column_overlap(m) if overlap is None else overlap
    if overlap >= 2:
        return 4
    cols = m.columns()
    nc = m.num_cols
    # vertices: columns 0..nc-1, rows nc..nc+num_rows-1
    adj = [[nc + r for r in c] for c in cols] + [list(r) for r in m.rows]
    best = math.inf
    for root in range(nc):
        if not adj[root]:
            continue
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    best = min(best, dist[u] + dist[v] + 1)
        if best == 6:
            break
    return best


def ldpc_check(m: SparseBinaryMatrix) -> LdpcReport:
    overlap = max_column_overlap(m)
    nnz = sum(len(r) for r in m.rows)
    cells = m.num_rows * m.num_cols
    return LdpcReport(
        num_rows=m.num_rows,
        num_cols=m.num_cols,
        row_weight_histogram=dict(sorted(Counter(m.row_weights()).items())),
        col_weight_histogram=dict(sorted(Counter(m.col_weights()).items())),
        max_col_overlap=overlap,
        density=nnz / cells if cells else 0.0,
        girth=tanner_girth(m, overlap),
    )


def report_json(m: SparseBinaryMatrix, report: LdpcReport, n: int | None = None, q: int | None = None) -> dict:
    return {
        "n": n,
        "q": q,
        "num_rows": report.num_rows,
        "num_cols": report.num_cols,
        "row_weights": {str(w): c for w, c in report.row_weight_histogram.items()},
        "col_weights": {str(w): c for w, c in report.col_weight_histogram.items()},
        "max_col_overlap": report.max_col_overlap,
        "girth": None if math.isinf(report.girth) else int(report.girth),
        "blocks": [
            {"rows": b.num_rows, "circulant": b.circulant, "orbit_length": b.orbit_length} for b in m.blocks
        ],
    }


# ---- alist ----


def _padded(indices: Sequence[int], width: int) -> str:
    return " ".join([str(i + 1) for i in indices] + ["0"] * (width - len(indices)))


def export_alist(m: SparseBinaryMatrix) -> bytes:
    cols = m.columns()
    cmax = max((len(c) for c in cols), default=0)
    rmax = max((len(r) for r in m.rows), default=0)
    lines = [
        f"{m.num_cols} {m.num_rows}",
        f"{cmax} {rmax}",
        " ".join(str(len(c)) for c in cols),
        " ".join(str(len(r)) for r in m.rows),
    ]
    lines += [_padded(c, cmax) for c in cols]
    lines += [_padded(r, rmax) for r in m.rows]
    return ("\n".join(lines) + "\n").encode("ascii")


def _ints(line: str, where: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError as exc:
        raise MalformedAlist(f"{where}: non-integer token") from exc


def _support(values: list[int], weight: int, width: int, bound: int, where: str) -> list[int]:
    if len(values) != width:
        raise MalformedAlist(f"{where}: expected {width} entries, got {len(values)}")
    head, tail = values[:weight], values[weight:]
    if any(v != 0 for v in tail):
        raise MalformedAlist(f"{where}: padding must be zeros after the {weight} indices")
    if any(not 1 <= v <= bound for v in head):
        raise MalformedAlist(f"{where}: index out of range 1..{bound}")
    if len(set(head)) != len(head):
        raise MalformedAlist(f"{where}: repeated index")
    return sorted(v - 1 for v in head)


def import_alist(data: bytes | str) -> SparseBinaryMatrix:
    text = data.decode("ascii") if isinstance(data, bytes) else data
    lines = text.splitlines()
    if len(lines) < 4:
        raise MalformedAlist("alist needs at least four header lines")
    dims = _ints(lines[0], "line 1")
    maxes = _ints(lines[1], "line 2")
    if len(dims) != 2 or len(maxes) != 2 or min(dims + maxes) < 0:
        raise MalformedAlist("header lines must hold two non-negative integers")
    n_cols, n_rows = dims
    cmax, rmax = maxes
    col_w = _ints(lines[2], "line 3")
    row_w = _ints(lines[3], "line 4")
    if len(col_w) != n_cols or len(row_w) != n_rows:
        raise MalformedAlist("weight lines do not match the header dimensions")
    if max(col_w, default=0) != cmax or max(row_w, default=0) != rmax:
        raise MalformedAlist("declared maximum weights disagree with the weight lines")
    if any(w < 0 for w in col_w + row_w):
        raise MalformedAlist("negative weight")
    body = lines[4:]
    if len(body) != n_cols + n_rows:
        raise MalformedAlist(f"expected {n_cols + n_rows} index lines, got {len(body)}")
    cols = [
        _support(_ints(body[j], f"column {j + 1}"), col_w[j], cmax, n_rows, f"column {j + 1}")
        for j in range(n_cols)
    ]
    rows = [
        _support(_ints(body[n_cols + i], f"row {i + 1}"), row_w[i], rmax, n_cols, f"row {i + 1}")
        for i in range(n_rows)
    ]
    m = SparseBinaryMatrix(n_rows, n_cols, tuple(tuple(r) for r in rows))
    if m.columns() != cols:
        raise MalformedAlist("column lists and row lists describe different matrices")
    return m


def dense_equal(a: SparseBinaryMatrix, b: SparseBinaryMatrix) -> bool:
    return a.shape == b.shape and bool(np.array_equal(a.to_dense(), b.to_dense()))
