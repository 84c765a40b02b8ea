"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or malformed input,
3 budget or resource limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from typing import Optional, Sequence

from .construct import DEFAULT_MAX_VERTICES, BudgetExceeded, build_partition, predicted_size
from .core import Biclique, OrderedPartition
from .matrix import (
    FoolingSetClaim,
    MatrixFormatError,
    gap_report,
    parse_matrix_text,
    partition_to_matrix,
    rank_exact,
    verify_fooling_set,
)
from .search import DEFAULT_BUDGET, min_cover_size
from .verify import verify_family_laws, verify_ordered

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

MODE_NAMES = {"bp": "partition", "bp2": "two_cover", "obp": "ordered"}


class InputError(Exception):
    pass


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dump_json(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=False) + "\n"


def dump_partition(obj: dict) -> str:
    """Partition-schema JSON with one biclique per line."""
    extra = {key: v for key, v in obj.items() if key not in ("n_vertices", "bicliques")}
    lines = [json.dumps(b, separators=(", ", ": ")) for b in obj["bicliques"]]
    body = ",\n  ".join(lines)
    out = f'{{"n_vertices": {obj["n_vertices"]},\n "bicliques": [\n  {body}\n ]'
    for key, v in extra.items():
        out += f",\n {json.dumps(key)}: {json.dumps(v)}"
    return out + "}\n"


def _read_bytes(path: str) -> bytes:
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(exc.strerror) from exc


def _load_json(path: str):
    data = _read_bytes(path)
    try:
        return json.loads(data.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise InputError(f"byte {exc.start}: not valid UTF-8") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"byte {exc.pos}: {exc.msg}") from exc


def _int_list(obj, where: str) -> list[int]:
    if not isinstance(obj, list) or not obj:
        raise InputError(f"{where}: expected a nonempty list of integers")
    for x, v in enumerate(obj):
        if not isinstance(v, int) or isinstance(v, bool):
            raise InputError(f"{where}[{x}]: expected an integer")
    return obj


def partition_from_json(obj, source: str = "$") -> OrderedPartition:
    if not isinstance(obj, dict):
        raise InputError(f"{source}: expected an object")
    n = obj.get("n_vertices")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError(f"{source}.n_vertices: expected a positive integer")
    raw = obj.get("bicliques")
    if not isinstance(raw, list):
        raise InputError(f"{source}.bicliques: expected a list")
    out = []
    for x, b in enumerate(raw):
        where = f"{source}.bicliques[{x}]"
        if not isinstance(b, dict):
            raise InputError(f"{where}: expected an object")
        u = _int_list(b.get("u"), f"{where}.u")
        w = _int_list(b.get("w"), f"{where}.w")
        for side, vals in (("u", u), ("w", w)):
            for y, v in enumerate(vals):
                if not 1 <= v <= n:
                    raise InputError(f"{where}.{side}[{y}]: vertex {v} outside [1, {n}]")
        try:
            out.append(Biclique(tuple(u), tuple(w)))
        except ValueError as exc:
            raise InputError(f"{where}: {exc}") from exc
    return OrderedPartition(n, tuple(out))


def load_partition(path: str) -> OrderedPartition:
    try:
        return partition_from_json(_load_json(path))
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from exc


def load_matrix(path: str):
    try:
        return parse_matrix_text(_read_bytes(path))
    except (InputError, MatrixFormatError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def load_cells(path: str) -> list[tuple[int, int]]:
    try:
        obj = _load_json(path)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from exc
    if not isinstance(obj, list):
        raise InputError(f"{path}: $: expected a list of [row, column] pairs")
    cells = []
    for x, c in enumerate(obj):
        if (
            not isinstance(c, list)
            or len(c) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in c)
        ):
            raise InputError(f"{path}: $[{x}]: expected [row, column] integers")
        cells.append((c[0], c[1]))
    return cells


# ---------------------------------------------------------------------------
# subcommands


def cmd_construct(args) -> int:
    p = build_partition(args.n, args.k, args.max_vertices)
    if args.out:
        write_atomic(args.out, dump_partition(p.to_json()))
    print(f"N={p.universe_size} m={len(p)} predicted_size={predicted_size(args.n, args.k)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    p = load_partition(args.partition)
    ok, rep = verify_ordered(p)
    print(rep.summary())
    for edge, reason in rep.violations[:20]:
        print(f"  {edge[0]}-{edge[1]}: {reason}")
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_laws(args) -> int:
    rep = verify_family_laws(args.n, args.k, args.max_vertices)
    print(f"pairs={rep.pairs_checked} counterexamples={len(rep.counterexamples)}")
    for name, size in rep.intersection_sizes.items():
        print(f"  |{name}| = {size}")
    for law, u, v in rep.counterexamples[:20]:
        print(f"  {law}: u={u} v={v}")
    print("PASS" if rep.ok else "FAIL")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_matrix(args) -> int:
    p = load_partition(args.partition)
    try:
        m = partition_to_matrix(p)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.out:
        write_atomic(args.out, m.to_text())
    else:
        sys.stdout.write(m.to_text())
    return EXIT_OK


def cmd_rank(args) -> int:
    m = load_matrix(args.matrix)
    print(rank_exact(m, "rationals" if args.field == "q" else "gf2"))
    return EXIT_OK


def cmd_fool(args) -> int:
    m = load_matrix(args.matrix)
    cells = load_cells(args.cells) if args.cells else [(x, x) for x in range(1, m.order + 1)]
    try:
        ok = verify_fooling_set(m, FoolingSetClaim(tuple(cells), args.z))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    print(f"size={len(set(cells))} z={args.z} {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_search(args) -> int:
    res = min_cover_size(args.n, MODE_NAMES[args.mode], args.budget)
    if not res.known:
        print(f"unknown (between {res.lower} and {res.upper})")
        return EXIT_BUDGET
    print(res.value)
    if args.out:
        record = {**res.witness.to_json(), "mode": res.mode, "value": res.value}
        write_atomic(args.out, dump_partition(record))
    return EXIT_OK


def cmd_report(args) -> int:
    p = build_partition(args.n, args.k, args.max_vertices)
    ok, rep = verify_ordered(p)
    record = {
        "n": args.n,
        "k": args.k,
        "N": p.universe_size,
        "m": len(p),
        "predicted_size": predicted_size(args.n, args.k),
        "verify": {"pass": ok, "once": rep.once_count, "twice": rep.twice_count,
                   "violations": len(rep.violations)},
    }
    if ok:
        gap = gap_report(p)
        record["matrix"] = gap.to_json()
        record["fooling_set"] = {"cells": "diagonal", "z": 0, "pass": True}
    text = dump_json(record)
    if args.out:
        write_atomic(args.out, text)
    sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="obpart", description="Ordered biclique partitions of complete graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def nk(sp):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)

    sp = sub.add_parser("construct", help="build the explicit partition of K_{n^(2k-1)}")
    nk(sp)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="check a partition file is an ordered biclique partition")
    sp.add_argument("--partition", required=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("laws", help="check the edge-family laws exhaustively")
    nk(sp)
    sp.set_defaults(func=cmd_laws)

    sp = sub.add_parser("matrix", help="write the 0/1 matrix of a partition")
    sp.add_argument("--partition", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("rank", help="exact rank of a matrix file")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--field", choices=("q", "gf2"), default="q")
    sp.set_defaults(func=cmd_rank)

    sp = sub.add_parser("fool", help="verify a fooling set (default: full diagonal, z=0)")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--cells")
    sp.add_argument("--z", type=int, choices=(0, 1), default=0)
    sp.set_defaults(func=cmd_fool)

    sp = sub.add_parser("search", help="exact minimum cover size of K_n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--mode", choices=tuple(MODE_NAMES), required=True)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--out", help="write the witness JSON here")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("report", help="construct, verify, and measure in one JSON record")
    nk(sp)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_report)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
