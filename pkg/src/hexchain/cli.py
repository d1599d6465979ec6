"""Command-line front end.

Subcommands::

    hexchain compute   one chain, all requested methods, agreement flag
    hexchain enumerate all chains of a length, CSV or JSON lines
    hexchain extremal  top-ranked chains vs the predicted extremal codes
    hexchain verify    full invariant suite up to a chosen length
    hexchain bench     timings of the methods on seeded random codes

Exit codes: 0 success; 2 bad arguments or unparsable code; 3 method
disagreement or invariant failure; 4 I/O failure; 5 refusal because a
length exceeds the exhaustive limit (see ``HEXCHAIN_MAX_N``).

All numeric output is exact decimal integers.  CSV rows carry the
columns ``code,kind,n,w_closed`` (plus ``w_bfs`` with ``--with-bfs``)
and end with a summary line prefixed ``#``; JSON-lines output carries
the same fields one object per line.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import IO

from .codes import CodeError, CodeWord, parse_code, random_code
from .enumeration import (
    LimitError,
    average_wiener,
    count_chains,
    enumerate_chains,
    matches_theorem,
    rank_extremal,
)
from .graphs import ChainKind, build_chain
from .verify import run_verification
from .wiener import (
    METHODS,
    compute_report,
    wiener_bfs,
    wiener_closed,
    wiener_recurrence,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DISAGREEMENT = 3
EXIT_IO = 4
EXIT_LIMIT = 5

# bench skips the BFS tier on graphs larger than this.
BENCH_BFS_VERTEX_CAP = 12_000


class _RecordWriter:
    """Writes flat dict records as CSV or JSON lines.

    CSV emits a header from the first record's keys; the key set must
    stay constant across records.  ``comment`` lines go out prefixed
    ``#`` in CSV and as an ordinary object in JSON-lines mode.
    """

    def __init__(self, fmt: str, stream: IO[str]):
        self.fmt = fmt
        self.stream = stream
        self._header: list[str] | None = None

    def write(self, record: dict) -> None:
        if self.fmt == "jsonl":
            print(json.dumps(record), file=self.stream)
            return
        if self._header is None:
            self._header = list(record)
            print(",".join(self._header), file=self.stream)
        print(",".join(str(record[key]) for key in self._header), file=self.stream)

    def comment(self, record: dict) -> None:
        if self.fmt == "jsonl":
            print(json.dumps(record), file=self.stream)
        else:
            body = " ".join(f"{key}={value}" for key, value in record.items())
            print(f"# {body}", file=self.stream)


def _parse_kind(value: str) -> ChainKind:
    return ChainKind(value)


def _resolve_code(args) -> CodeWord:
    if args.code is not None:
        return parse_code(args.code, args.n)
    if args.n is None:
        raise CodeError("provide --code, --n, or both")
    return parse_code("", args.n)


def _cmd_compute(args) -> int:
    code = _resolve_code(args)
    methods = tuple(args.methods.split(",")) if args.methods else None
    report = compute_report(args.kind, code, methods)
    print(json.dumps(report.as_record()))
    return EXIT_OK if report.agree else EXIT_DISAGREEMENT


def _open_output(path: str | None):
    if path is None:
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _cmd_enumerate(args) -> int:
    codes = list(enumerate_chains(args.n))
    stream, owned = _open_output(args.output)
    try:
        writer = _RecordWriter(args.format, stream)
        total = 0
        for code in codes:
            record = {
                "code": str(code),
                "kind": args.kind.value,
                "n": args.n,
                "w_closed": wiener_closed(args.kind, code),
            }
            if args.with_bfs:
                record["w_bfs"] = wiener_bfs(build_chain(args.kind, code))
                if record["w_bfs"] != record["w_closed"]:
                    print(f"error: methods disagree on {code}", file=sys.stderr)
                    return EXIT_DISAGREEMENT
            total += record["w_closed"]
            writer.write(record)
        count = len(codes)
        if total % count:
            print("error: Wiener sum not divisible by chain count", file=sys.stderr)
            return EXIT_DISAGREEMENT
        mean = total // count
        writer.comment({"count": count, "mean": mean})
        if mean != average_wiener(args.kind, args.n):
            print("error: exhaustive mean disagrees with closed form", file=sys.stderr)
            return EXIT_DISAGREEMENT
    finally:
        if owned:
            stream.close()
    return EXIT_OK


def _cmd_extremal(args) -> int:
    direction = "max" if args.max else "min"
    ranking = rank_extremal(args.kind, args.n, direction, args.top)
    checks = matches_theorem(ranking)
    writer = _RecordWriter(args.format, sys.stdout)
    for entry in ranking.entries:
        check = checks[entry.rank]
        record = {
            "code": str(entry.code),
            "kind": args.kind.value,
            "n": args.n,
            "w_closed": entry.wiener,
            "direction": direction,
            "rank": entry.rank,
            "matches_theorem": check.matches,
            "note": check.note,
        }
        writer.write(record)
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = run_verification(args.max_n)
    for result in report.results:
        status = "PASS" if result.ok else "FAIL"
        line = f"{status} {result.name}: {result.passed} checks"
        if result.note:
            line += f" ({result.note})"
        print(line)
        for detail in result.failures:
            print(f"  {detail}")
    print(f"{'OK' if report.ok else 'FAILED'} (max n = {report.max_n})")
    return EXIT_OK if report.ok else EXIT_DISAGREEMENT


def _cmd_bench(args) -> int:
    methods = tuple(args.methods.split(",")) if args.methods else ("closed", "recurrence", "bfs")
    for name in methods:
        if name not in ("closed", "recurrence", "bfs"):
            raise CodeError(f"unknown bench method {name!r}")
    rng = random.Random(args.seed)
    print(json.dumps({"seed": args.seed}))
    for n in args.n:
        code = random_code(n, rng)
        values = {}
        for method in methods:
            if method == "bfs":
                num_vertices = 5 * n + 1 if args.kind is ChainKind.SPIRO else 6 * n
                if num_vertices > BENCH_BFS_VERTEX_CAP:
                    print(json.dumps({
                        "n": n,
                        "kind": args.kind.value,
                        "method": "bfs",
                        "skipped": f"{num_vertices} vertices exceed the "
                                   f"{BENCH_BFS_VERTEX_CAP}-vertex bfs cap",
                    }))
                    continue
                graph = build_chain(args.kind, code)
                start = time.perf_counter()
                value = wiener_bfs(graph)
            elif method == "recurrence":
                start = time.perf_counter()
                value = wiener_recurrence(args.kind, code)
            else:
                start = time.perf_counter()
                value = wiener_closed(args.kind, code)
            elapsed = time.perf_counter() - start
            values[method] = value
            print(json.dumps({
                "n": n,
                "kind": args.kind.value,
                "method": method,
                "seconds": round(elapsed, 6),
                "wiener": value,
            }))
        if len(set(values.values())) > 1:
            print(f"error: methods disagree at n={n}: {values}", file=sys.stderr)
            return EXIT_DISAGREEMENT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexchain",
        description="Wiener indices of spiro and polyphenyl hexagonal chains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate one chain by several methods")
    p.add_argument("--kind", type=_parse_kind, choices=list(ChainKind), default=ChainKind.SPIRO)
    p.add_argument("--code", help="code word over O/M/P (empty for n <= 2)")
    p.add_argument("--n", type=int, help="hexagon count (inferred from --code if omitted)")
    p.add_argument("--methods", help=f"comma list from: {','.join(METHODS)}")
    p.set_defaults(handler=_cmd_compute)

    p = sub.add_parser("enumerate", help="list every distinct chain of a length")
    p.add_argument("--kind", type=_parse_kind, choices=list(ChainKind), default=ChainKind.SPIRO)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--with-bfs", action="store_true", help="add a BFS column (slow)")
    p.add_argument("--output", help="write to a file instead of stdout")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("extremal", help="rank chains with smallest or largest Wiener index")
    p.add_argument("--kind", type=_parse_kind, choices=list(ChainKind), default=ChainKind.SPIRO)
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--min", action="store_true", help="smallest Wiener indices")
    group.add_argument("--max", action="store_true", help="largest Wiener indices")
    p.add_argument("--top", type=int, default=3, help="number of rank groups")
    p.add_argument("--format", choices=("csv", "jsonl"), default="jsonl")
    p.set_defaults(handler=_cmd_extremal)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--max-n", type=int, default=7)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("bench", help="time the methods on seeded random codes")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--kind", type=_parse_kind, choices=list(ChainKind), default=ChainKind.SPIRO)
    p.add_argument("--methods", help="comma list from: closed,recurrence,bfs")
    p.add_argument("--seed", type=int, default=1, help="seed for the random codes")
    p.set_defaults(handler=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except LimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except CodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
