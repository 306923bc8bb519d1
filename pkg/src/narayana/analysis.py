"""Measurements over the code: length law, variant coverage, benchmarks, resync."""
from __future__ import annotations

import statistics
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Sequence

import numpy as np

from .codec import CODECS, codeword_length, decode_bits, decode_bits_lenient, encode_bits
from .errors import SearchBudgetExceeded
from .sequences import SequenceKind, j_term, table
from .zeckendorf import DEFAULT_NODE_BUDGET, Gap, representable

#: Integers originally claimed to be unrepresentable over each variant sequence.
CLAIMED_UNREPRESENTABLE = {
    -1: (3, 15),
    -2: (2,),
    -3: (2, 13, 19),
}

#: Variant parameters whose sequences have an increasing positive tail.
SUPPORTED_VARIANTS = range(-5, 4)


# -- length law ---------------------------------------------------------------


@dataclass
class LengthHistogram:
    max_n: int
    entries: dict[int, int]
    #: lengths whose whole integer range lies inside [1, max_n]
    complete: frozenset[int]

    def count(self, length: int) -> int:
        return self.entries.get(length, 0)

    def records(self) -> list[tuple[int, int, bool]]:
        return [(m, c, m in self.complete) for m, c in sorted(self.entries.items())]


def length_histogram(max_n: int) -> LengthHistogram:
    """How many ``n`` in ``[1, max_n]`` have each codeword length."""
    if max_n < 1:
        raise ValueError("max_n must be positive")
    entries = Counter(codeword_length(n) for n in range(1, max_n + 1))
    # length m covers J(m-2) .. J(m-1) - 1
    complete = frozenset(m for m in entries if j_term(m - 1) - 1 <= max_n)
    return LengthHistogram(max_n, dict(sorted(entries.items())), complete)


def length_curve(max_n: int) -> list[tuple[int, int]]:
    if max_n < 1:
        raise ValueError("max_n must be positive")
    return [(n, codeword_length(n)) for n in range(1, max_n + 1)]


# -- variant coverage -----------------------------------------------------------


@dataclass
class CoverageReport:
    variant_a: int
    seeds: tuple[int, ...]
    constraint: Gap
    max_n: int
    unrepresentable: list[int]
    #: values whose search ran out of budget
    indeterminate: list[int]
    claimed: list[int]

    @property
    def claimed_but_representable(self) -> list[int]:
        bad = set(self.unrepresentable) | set(self.indeterminate)
        return [n for n in self.claimed if n <= self.max_n and n not in bad]

    @property
    def unclaimed_unrepresentable(self) -> list[int]:
        return [n for n in self.unrepresentable if n not in self.claimed]

    @property
    def discrepancies(self) -> list[int]:
        return sorted(set(self.claimed_but_representable) | set(self.unclaimed_unrepresentable))

    def as_dict(self) -> dict:
        return {
            "variant_a": self.variant_a,
            "seeds": list(self.seeds),
            "gap": int(self.constraint),
            "max_n": self.max_n,
            "unrepresentable": self.unrepresentable,
            "indeterminate": self.indeterminate,
            "claimed": self.claimed,
            "claimed_but_representable": self.claimed_but_representable,
            "unclaimed_unrepresentable": self.unclaimed_unrepresentable,
            "discrepancies": self.discrepancies,
        }


def variant_coverage(
    a: int,
    max_n: int,
    constraint: Gap = Gap.CANONICAL,
    formula_seeds: bool = False,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> CoverageReport:
    """Exhaustively test which of ``1 .. max_n`` the variant sequence can represent.

    Published claims are recorded alongside and compared, never assumed.
    """
    if a not in SUPPORTED_VARIANTS:
        raise ValueError(
            f"variant a={a} unsupported; its terms do not settle into a positive increasing tail"
        )
    if not 1 <= max_n <= 10**4:
        raise ValueError("max_n must lie in [1, 10000]")
    kind = SequenceKind.variant(a, formula_seeds)
    tbl = table(kind)
    missing, unknown = [], []
    for n in range(1, max_n + 1):
        try:
            if not representable(n, tbl, constraint, node_budget=node_budget):
                missing.append(n)
        except SearchBudgetExceeded:
            unknown.append(n)
    claimed = list(CLAIMED_UNREPRESENTABLE.get(a, ()))
    return CoverageReport(a, kind.seeds, Gap(constraint), max_n, missing, unknown, claimed)


# -- code comparison ------------------------------------------------------------


@dataclass(frozen=True)
class Distribution:
    """Source of test integers, written ``uniform:K``, ``zipf:S:K`` or ``geometric:P``."""

    kind: str
    params: tuple[float, ...]

    @classmethod
    def parse(cls, text: str) -> Distribution:
        name, _, rest = text.partition(":")
        parts = rest.split(":") if rest else []
        try:
            if name == "uniform" and len(parts) == 1:
                dist = cls(name, (int(parts[0]),))
            elif name == "zipf" and len(parts) == 2:
                dist = cls(name, (float(parts[0]), int(parts[1])))
            elif name == "geometric" and len(parts) == 1:
                dist = cls(name, (float(parts[0]),))
            else:
                raise ValueError
        except ValueError:
            raise ValueError(
                f"bad distribution {text!r}; expected uniform:K, zipf:S:K or geometric:P"
            ) from None
        dist.validate()
        return dist

    def validate(self) -> None:
        if self.kind == "uniform" and self.params[0] < 1:
            raise ValueError("uniform upper bound must be at least 1")
        if self.kind == "zipf" and (self.params[0] <= 0 or self.params[1] < 1):
            raise ValueError("zipf needs s > 0 and K >= 1")
        if self.kind == "geometric" and not 0 < self.params[0] <= 1:
            raise ValueError("geometric needs 0 < p <= 1")

    def __str__(self) -> str:
        def fmt(x):
            return str(int(x)) if float(x).is_integer() and self.kind != "geometric" else repr(x)

        return ":".join([self.kind, *(fmt(p) for p in self.params)])

    def sample(self, count: int, seed: int) -> list[int]:
        rng = np.random.default_rng(seed)
        if self.kind == "uniform":
            draws = rng.integers(1, int(self.params[0]) + 1, size=count)
        elif self.kind == "zipf":
            s, k = self.params[0], int(self.params[1])
            weights = np.arange(1, k + 1, dtype=float) ** -s
            draws = rng.choice(np.arange(1, k + 1), size=count, p=weights / weights.sum())
        else:
            draws = rng.geometric(self.params[0], size=count)
        return [int(v) for v in draws]

    def support(self) -> list[int]:
        """Every value of a uniform distribution once, in order."""
        if self.kind != "uniform":
            raise ValueError(f"{self.kind} has no finite support to enumerate")
        return list(range(1, int(self.params[0]) + 1))


@dataclass(frozen=True)
class BenchRecord:
    codec: str
    distribution: str
    samples: int
    total_bits: int

    @property
    def mean_bits(self) -> float:
        return self.total_bits / self.samples


@dataclass
class BenchReport:
    records: list[BenchRecord]

    def by_codec(self) -> dict[str, BenchRecord]:
        return {r.codec: r for r in self.records}

    def ranking(self) -> list[str]:
        """Codec names from fewest to most mean bits."""
        return [r.codec for r in sorted(self.records, key=lambda r: (r.mean_bits, r.codec))]


def compare_codes(
    distribution: Distribution | str,
    sample_count: int | None,
    seed: int = 0,
    codecs: Sequence[str] = tuple(CODECS),
) -> BenchReport:
    """Encode one shared sample with each codec and count bits.

    ``sample_count=None`` enumerates a uniform distribution's support instead
    of sampling it. Every stream is decoded again and checked against the
    sample.
    """
    if isinstance(distribution, str):
        distribution = Distribution.parse(distribution)
    if sample_count is None:
        values = distribution.support()
    elif sample_count < 1:
        raise ValueError("sample_count must be at least 1")
    else:
        values = distribution.sample(sample_count, seed)
    records = []
    for name in codecs:
        bits = encode_bits(values, name)
        if decode_bits(bits, codec=name) != values:
            raise RuntimeError(f"{name} failed to round-trip its own stream")
        records.append(BenchRecord(name, str(distribution), len(values), len(bits)))
    return BenchReport(records)


# -- resynchronisation --------------------------------------------------------


@dataclass(frozen=True)
class ResyncTrial:
    flip_position: int
    #: original symbols that did not come back intact
    symbols_lost: int
    #: decoded symbols that do not correspond to any original symbol
    symbols_spurious: int
    #: bits from the flip until the decoder is back on an original boundary
    resync_offset: int

    @property
    def symbols_affected(self) -> int:
        return max(self.symbols_lost, self.symbols_spurious)


@dataclass
class ResyncReport:
    codec: str
    stream_symbols: int
    stream_bits: int
    trials: list[ResyncTrial] = field(default_factory=list)

    def summary(self) -> dict[str, float]:
        if not self.trials:
            return {"trials": 0}
        lost = [t.symbols_lost for t in self.trials]
        affected = [t.symbols_affected for t in self.trials]
        offsets = [t.resync_offset for t in self.trials]
        return {
            "trials": len(self.trials),
            "mean_symbols_lost": statistics.fmean(lost),
            "max_symbols_lost": max(lost),
            "mean_symbols_affected": statistics.fmean(affected),
            "max_symbols_affected": max(affected),
            "mean_resync_offset": statistics.fmean(offsets),
            "max_resync_offset": max(offsets),
        }


class _Stream:
    """An encoded, byte-padded stream plus its codeword boundaries."""

    def __init__(self, values: Sequence[int], codec: str):
        self.codec = codec
        self.values = list(values)
        lengths = [len(CODECS[codec].encode(v)) for v in self.values]
        self.ends = list(accumulate(lengths))
        self.starts = [0, *self.ends[:-1]] if self.ends else []
        raw = encode_bits(self.values, codec)
        self.bits = raw + "0" * (-len(raw) % 8)
        self.boundaries = set(self.ends)

    def flip(self, position: int) -> ResyncTrial:
        if not 0 <= position < len(self.bits):
            raise ValueError(f"flip position {position} outside stream of {len(self.bits)} bits")
        damaged = self.bits[:position] + ("1" if self.bits[position] == "0" else "0") + self.bits[position + 1 :]
        # codewords ending at or before the flip decode unchanged
        first = bisect_right(self.ends, position)
        start = self.starts[first] if first < len(self.values) else (self.ends[-1] if self.ends else 0)
        out = decode_bits_lenient(
            damaged, self.codec, start=start, until=lambda e: e > position and e in self.boundaries
        )
        end = out.spans[-1][1] if out.spans else start
        if out.skipped:
            end = max(end, out.skipped[-1][1])
        synced = end in self.boundaries and end > position
        stop = bisect_right(self.ends, end) if synced else len(self.values)
        lost = stop - first
        spurious = len(out.values)
        if lost == 0 and spurious == 0:
            offset = 0
        else:
            offset = (end if synced else len(damaged)) - position
        return ResyncTrial(position, lost, spurious, offset)


def resync_experiment(values: Sequence[int], flip_position: int, codec: str = "narayana") -> ResyncTrial:
    """Flip one bit of the encoded stream and measure the damage after lenient decoding."""
    return _Stream(values, codec).flip(flip_position)


def resync_trials(
    values: Sequence[int], trials: int, seed: int = 0, codec: str = "narayana"
) -> ResyncReport:
    """Monte-Carlo version of :func:`resync_experiment` with uniform flip positions."""
    stream = _Stream(values, codec)
    rng = np.random.default_rng(seed)
    positions = rng.integers(0, len(stream.bits), size=trials) if stream.bits else []
    report = ResyncReport(codec, len(stream.values), len(stream.bits))
    report.trials = [stream.flip(int(p)) for p in positions]
    return report
