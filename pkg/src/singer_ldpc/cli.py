"""Command-line entry point: construct, verify, orbits, decode.

Results are written as JSON on stdout (one object per invocation) and a
short human-readable summary goes to stderr.  Module errors exit with
status 2 and an error object on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import codec, orbits, pcm, quadrics
from .errors import InvalidConfig, MalformedAlist, SingerLdpcError
from .galois import prime_power
from .projgeom import count_lines, projective_space
from .sparse import Block, SparseBinaryMatrix

METHODS = ("full", "starter-odd", "starter-even", "quadric")
QUADRIC_ORDERS = (2, 4, 8, 16)


@dataclass(frozen=True)
class RunConfig:
    q: int
    n: int
    method: str = "full"
    base_point: int | None = None
    seed_point: int = 0
    out: Path | None = None
    report: Path | None = None
    max_iter: int = 50

    def validate(self) -> None:
        prime_power(self.q)
        if self.n < 3:
            raise InvalidConfig("n must be at least 3")
        if self.method not in METHODS:
            raise InvalidConfig(f"unknown method {self.method!r}")
        if self.method == "starter-odd" and self.n % 2 == 0:
            raise InvalidConfig("method starter-odd requires odd n")
        if self.method in ("starter-even", "quadric") and self.n % 2:
            raise InvalidConfig(f"method {self.method} requires even n")
        if self.method == "quadric" and (self.n != 4 or self.q not in QUADRIC_ORDERS):
            raise InvalidConfig("method quadric requires n = 4 and q in {2, 4, 8, 16}")


def sidecar_path(alist: Path) -> Path:
    return alist.with_name(alist.name + ".blocks.json")


def _dump(obj: dict) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def build_matrix(cfg: RunConfig) -> SparseBinaryMatrix:
    cfg.validate()
    space = projective_space(cfg.n, cfg.q)
    decomposition = orbits.decompose_lines(space)
    if cfg.method == "quadric":
        quadric = quadrics.singer_quadric(space, cfg.seed_point)
        point = cfg.seed_point if cfg.base_point is None else cfg.base_point
        starter = quadrics.starter_from_quadric(space, quadric, point)
    else:
        base = 0 if cfg.base_point is None else cfg.base_point
        starter = orbits.starter_set(space, base, decomposition)
    if not orbits.verify_starter(starter, decomposition, space.theta):
        raise AssertionError("starter set fails the starter conditions")
    return pcm.assemble(space, starter, decomposition)


def structural_problems(m: SparseBinaryMatrix, report: pcm.LdpcReport, n: int, q: int) -> list[str]:
    problems = []
    if m.circulant_violations():
        problems.append("circulant row-shift check failed")
    if m.num_rows != count_lines(n, q):
        problems.append(f"{m.num_rows} rows, expected {count_lines(n, q)} lines")
    if report.k != q + 1:
        problems.append(f"row weight {report.k}, expected {q + 1}")
    if report.r != (q ** (n - 1) - 1) // (q - 1):
        problems.append(f"column weight {report.r}, expected {(q ** (n - 1) - 1) // (q - 1)}")
    if not report.l3:
        problems.append(f"column overlap {report.max_col_overlap} exceeds 1")
    return problems


def cmd_construct(args: argparse.Namespace) -> int:
    cfg = RunConfig(
        q=args.q, n=args.n, method=args.method, base_point=args.base_point,
        seed_point=args.seed_point, out=args.out, report=args.report,
    )
    m = build_matrix(cfg)
    report = pcm.ldpc_check(m)
    out = cfg.out or Path(f"pg{cfg.n - 1}_{cfg.q}_{cfg.method}.alist")
    report_path = cfg.report or out.with_name(out.name + ".report.json")
    data = pcm.report_json(m, report, cfg.n, cfg.q)
    out.write_bytes(pcm.export_alist(m))
    sidecar = {"num_rows": m.num_rows, "num_cols": m.num_cols, "blocks": [b.to_json() for b in m.blocks]}
    sidecar_path(out).write_text(_dump(sidecar) + "\n")
    report_path.write_text(_dump(data) + "\n")
    problems = structural_problems(m, report, cfg.n, cfg.q)
    print(_dump(data))
    print(f"PG({cfg.n - 1},{cfg.q}) {cfg.method}: {m.num_rows}x{m.num_cols}, "
          f"{len(m.blocks)} blocks -> {out}", file=sys.stderr)
    for p in problems:
        print(f"FAILED: {p}", file=sys.stderr)
    return 1 if problems else 0


def read_alist(path: Path) -> SparseBinaryMatrix:
    try:
        return pcm.import_alist(path.read_bytes())
    except (OSError, UnicodeDecodeError) as exc:
        raise MalformedAlist(f"cannot read {path}: {exc}") from exc


def load_blocks(path: Path, m: SparseBinaryMatrix) -> SparseBinaryMatrix:
    try:
        meta = json.loads(path.read_text())
        blocks = [Block(b["start"], b["rows"], b["circulant"], b["orbit_length"]) for b in meta["blocks"]]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise MalformedAlist(f"cannot read block sidecar {path}: {exc}") from exc
    return m.with_blocks(blocks)


def cmd_verify(args: argparse.Namespace) -> int:
    m = read_alist(args.matrix)
    status = 0
    if args.expect_circulant:
        m = load_blocks(sidecar_path(args.matrix), m)
    report = pcm.ldpc_check(m)
    data = pcm.report_json(m, report)
    data.update({"l1": report.l1, "l2": report.l2, "l3": report.l3, "l4_ratio": report.l4_ratio})
    if args.expect_circulant:
        bad = m.circulant_violations()
        data["circulant_ok"] = not bad
        if bad:
            status = 1
            print(f"circulant check failed at rows {bad[:10]}", file=sys.stderr)
    print(_dump(data))
    return status


def cmd_orbits(args: argparse.Namespace) -> int:
    space = projective_space(args.n, args.q)
    decomposition = orbits.decompose_lines(space)
    starter = orbits.starter_set(space, args.base_point, decomposition)
    data = {
        "n": args.n,
        "q": args.q,
        "orbits": [o.length for o in decomposition],
        "count": len(decomposition),
        "starter": [list(line) for line in starter.lines],
    }
    print(_dump(data))
    print(f"PG({args.n - 1},{args.q}): {len(decomposition)} line orbits", file=sys.stderr)
    return 0


def read_word(path: Path) -> np.ndarray:
    text = "".join(path.read_text().split())
    if any(ch not in "01" for ch in text):
        raise InvalidConfig(f"{path} must contain only 0/1 characters")
    return np.array([int(ch) for ch in text], dtype=np.uint8)


def cmd_decode(args: argparse.Namespace) -> int:
    code = codec.code_from_matrix(read_alist(args.matrix))
    result = codec.decode_bit_flip(code, read_word(args.word), args.max_iter)
    data = {
        "success": result.success,
        "iterations": result.iterations,
        "word": "".join(map(str, result.word.tolist())),
    }
    print(_dump(data))
    return 0 if result.success else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="singer-ldpc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a parity-check matrix and write alist + JSON")
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--method", choices=METHODS, default="full")
    c.add_argument("--base-point", type=int, default=None)
    c.add_argument("--seed-point", type=int, default=0)
    c.add_argument("--out", type=Path)
    c.add_argument("--report", type=Path)
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check an alist matrix against the regular-LDPC conditions")
    v.add_argument("matrix", type=Path)
    v.add_argument("--expect-circulant", action="store_true")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("orbits", help="list the Singer orbits of lines")
    o.add_argument("--q", type=int, required=True)
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--base-point", type=int, default=0)
    o.set_defaults(func=cmd_orbits)

    d = sub.add_parser("decode", help="bit-flip decode a received word")
    d.add_argument("matrix", type=Path)
    d.add_argument("word", type=Path)
    d.add_argument("--max-iter", type=int, default=50)
    d.set_defaults(func=cmd_decode)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except SingerLdpcError as exc:
        print(_dump(exc.to_json()))
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
