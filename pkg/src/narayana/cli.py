"""Command-line front end.

Exit codes: 0 success, 2 bad input text or arguments, 3 capacity or search
budget exhausted, 4 malformed binary stream.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Iterable, Sequence

from . import analysis
from .bits import BitBuffer
from .codec import CODECS, decode_stream, decode_stream_lenient, encode_stream
from .errors import CapacityExceeded, MalformedCodeword, SearchBudgetExceeded
from .sequences import consecutive_ratios, narayana_ratio_limit
from .zeckendorf import Gap

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAPACITY = 3
EXIT_MALFORMED = 4


class InputError(Exception):
    pass


def _read_bytes(path: str | None) -> bytes:
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write_bytes(path: str | None, data: bytes) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _write_text(path: str | None, text: str) -> None:
    _write_bytes(path, text.encode("utf-8"))


def _csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return out.getvalue()


def _json(records) -> str:
    return json.dumps(records, indent=2) + "\n"


def parse_integers(text: str) -> list[int]:
    values = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            value = int(line, 10)
        except ValueError:
            raise InputError(f"line {lineno}: not a decimal integer: {line!r}") from None
        if value < 1:
            raise InputError(f"line {lineno}: {value} is not a positive integer")
        values.append(value)
    return values


# -- subcommands ----------------------------------------------------------------


def cmd_encode(args) -> int:
    try:
        text = _read_bytes(args.input).decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"input is not UTF-8 text: {exc}") from None
    values = parse_integers(text)
    buffer = encode_stream(values)
    _write_bytes(args.output, buffer.data)
    mean = buffer.bit_length / len(values) if values else 0.0
    print(f"count={len(values)} total_bits={buffer.bit_length} mean_bits={mean:.6f}", file=sys.stderr)
    return EXIT_OK


def cmd_decode(args) -> int:
    buffer = BitBuffer.from_bytes(_read_bytes(args.input))
    if args.lenient:
        result = decode_stream_lenient(buffer)
        values = result.values
        for start, end in result.skipped:
            print(f"skipped bits {start}..{end}", file=sys.stderr)
    else:
        values = decode_stream(buffer, strict=True)
    _write_text(args.output, "".join(f"{v}\n" for v in values))
    return EXIT_OK


def cmd_stats(args) -> int:
    if args.max < 1:
        raise InputError("--max must be at least 1")
    curve = analysis.length_curve(args.max) if args.table in ("curve", "both") else None
    hist = analysis.length_histogram(args.max) if args.table in ("histogram", "both") else None
    if args.format == "json":
        curve_json = [{"n": n, "bits": b} for n, b in curve] if curve is not None else None
        hist_json = (
            [{"length": m, "count": c, "complete": done} for m, c, done in hist.records()]
            if hist is not None
            else None
        )
        if args.table == "both":
            text = _json({"curve": curve_json, "histogram": hist_json})
        else:
            text = _json(curve_json if curve is not None else hist_json)
    else:
        parts = []
        if curve is not None:
            parts.append(_csv(("n", "bits"), curve))
        if hist is not None:
            rows = [(m, c, str(done).lower()) for m, c, done in hist.records()]
            parts.append(_csv(("length", "count", "complete"), rows))
        text = "\n".join(parts)
    _write_text(args.output, text)
    return EXIT_OK


def cmd_ratio(args) -> int:
    if args.terms < 2:
        raise InputError("--terms must be at least 2")
    samples = consecutive_ratios(args.terms)
    limit = narayana_ratio_limit(1e-14)
    if args.format == "json":
        records = [{"k": s.k, "ratio": s.ratio} for s in samples]
        records.append({"k": "limit", "ratio": limit})
        text = _json(records)
    else:
        rows = [(s.k, f"{s.ratio:.17g}") for s in samples]
        rows.append(("limit", f"{limit:.17g}"))
        text = _csv(("k", "ratio"), rows)
    _write_text(args.output, text)
    return EXIT_OK


def cmd_variants(args) -> int:
    try:
        report = analysis.variant_coverage(
            args.a, args.max, Gap(args.gap), formula_seeds=args.formula_seeds
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.format == "json":
        text = _json(report.as_dict())
    else:
        text = _csv(("n",), [(n,) for n in report.unrepresentable])
    _write_text(args.output, text)
    print(
        f"variant a={report.variant_a} seeds={list(report.seeds)} gap={int(report.constraint)} "
        f"max={report.max_n}: {len(report.unrepresentable)} unrepresentable, "
        f"{len(report.indeterminate)} indeterminate",
        file=sys.stderr,
    )
    print(f"claimed unrepresentable: {report.claimed}", file=sys.stderr)
    print(f"claimed but representable: {report.claimed_but_representable}", file=sys.stderr)
    print(f"unrepresentable but unclaimed: {report.unclaimed_unrepresentable}", file=sys.stderr)
    if report.indeterminate:
        return EXIT_CAPACITY
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        dist = analysis.Distribution.parse(args.dist)
        codecs = [c.strip() for c in args.codecs.split(",") if c.strip()]
        for name in codecs:
            if name not in CODECS:
                raise ValueError(f"unknown codec {name!r}; choose from {', '.join(CODECS)}")
        if args.samples == "all":
            count = None
        else:
            count = int(args.samples)
            if count < 1:
                raise ValueError("--samples must be at least 1")
        report = analysis.compare_codes(dist, count, args.seed, codecs)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.format == "json":
        text = _json(
            [
                {
                    "codec": r.codec,
                    "distribution": r.distribution,
                    "samples": r.samples,
                    "total_bits": r.total_bits,
                    "mean_bits": r.mean_bits,
                }
                for r in report.records
            ]
        )
    else:
        rows = [(r.codec, r.distribution, r.samples, r.total_bits, repr(r.mean_bits)) for r in report.records]
        text = _csv(("codec", "distribution", "samples", "total_bits", "mean_bits"), rows)
    _write_text(args.output, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="narayana", description="Narayana universal code tools")
    sub = parser.add_subparsers(dest="command", required=True)

    def io_flags(p):
        p.add_argument("--input", "-i", help="input file (default: standard input)")
        p.add_argument("--output", "-o", help="output file (default: standard output)")

    def fmt_flag(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", "-o", help="output file (default: standard output)")

    p = sub.add_parser("encode", help="decimal integers, one per line -> .nuc stream")
    io_flags(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help=".nuc stream -> decimal integers")
    io_flags(p)
    p.add_argument("--lenient", action="store_true", help="skip damaged regions instead of failing")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("stats", help="codeword length curve and histogram")
    p.add_argument("--max", type=int, default=1000)
    p.add_argument("--table", choices=("curve", "histogram", "both"), default="both")
    fmt_flag(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("ratio", help="consecutive Narayana term ratios and their limit")
    p.add_argument("--terms", type=int, default=100)
    fmt_flag(p)
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("variants", help="which integers a variant sequence cannot represent")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--max", type=int, default=100)
    p.add_argument("--gap", type=int, choices=(1, 2, 3), default=3)
    p.add_argument(
        "--formula-seeds",
        action="store_true",
        help="seed with a, 3-a, 1-a even where the printed sequence differs",
    )
    fmt_flag(p)
    p.set_defaults(func=cmd_variants)

    p = sub.add_parser("bench", help="mean codeword length per codec on a sample")
    p.add_argument("--dist", required=True, help="uniform:K, zipf:S:K or geometric:P")
    p.add_argument("--samples", default="10000", help="sample count, or 'all' for uniform")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--codecs", default=",".join(CODECS))
    fmt_flag(p)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"narayana: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (CapacityExceeded, SearchBudgetExceeded) as exc:
        print(f"narayana: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except MalformedCodeword as exc:
        print(f"narayana: malformed stream: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
