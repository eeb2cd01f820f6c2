"""Benchmark list-update rules on real files, MTF as the baseline.

Two tokenizations: ``bytes`` serves raw octets on a fixed list 0..255;
``words`` splits on ASCII whitespace and grows the list as new words
appear.  A word seen for the first time is appended at the back, costs the
new list length, and is then moved by the rule as if it had been found
there.
"""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels
from .algorithms import MTF, RuleSpec
from .errors import ContractViolation

MODES = ("bytes", "words")
REPORT_COLUMNS = ("file", "mode", "rule", "n", "distinct", "cost", "gain")


@dataclass
class TokenStream:
    mode: str
    tokens: list
    alphabet_size: int
    vocabulary: list | None = None
    name: str = ""

    def __len__(self) -> int:
        return len(self.tokens)


def tokens_from_bytes(data: bytes, mode: str, name: str = "") -> TokenStream:
    if mode == "bytes":
        toks = list(data)
        return TokenStream("bytes", toks, len(set(toks)), name=name)
    if mode == "words":
        ids: dict = {}
        toks = [ids.setdefault(w, len(ids)) for w in data.split()]
        vocab = [w.decode("latin-1") for w in ids]
        return TokenStream("words", toks, len(ids), vocab, name=name)
    raise ContractViolation(f"unknown mode {mode!r}; choose bytes or words")


def tokenize(path, mode: str) -> TokenStream:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return tokens_from_bytes(data, mode, name=str(path))


@dataclass
class CorpusRun:
    cost: int
    n: int
    distinct: int
    final_list: list
    counts: list = field(default_factory=list)


def run_corpus(stream: TokenStream, rule: RuleSpec, initial: Sequence[int] | None = None,
               counts: list | None = None, backend: str | None = None) -> CorpusRun:
    """Total cost of serving ``stream`` under ``rule``.

    ``initial`` and ``counts`` continue from an earlier run's
    ``final_list``/``counts``; by default bytes mode starts from 0..255 and
    words mode from an empty list.
    """
    counts = list(counts) if counts else []
    if stream.mode == "bytes":
        order = list(range(256)) if initial is None else list(initial)
        access, _, final, _, _ = kernels.serve(order, stream.tokens, rule.code, rule.q or 0, counts,
                                               dynamic=False, backend=backend)
    elif stream.mode == "words":
        order = [] if initial is None else list(initial)
        access, _, final, _, _ = kernels.serve(order, stream.tokens, rule.code, rule.q or 0, counts,
                                               dynamic=True, backend=backend)
    else:
        raise ContractViolation(f"unknown mode {stream.mode!r}")
    return CorpusRun(access, len(stream), stream.alphabet_size, final, counts)


@dataclass(frozen=True)
class ReportRow:
    file: str
    mode: str
    rule: str
    n: int
    distinct: int
    cost: int
    gain: Fraction

    def as_dict(self) -> dict:
        d = asdict(self)
        d["gain"] = float(self.gain)
        return d


def gain(mtf_cost: int, cost: int) -> Fraction:
    """Relative cost reduction versus MTF; zero when MTF costs nothing."""
    if mtf_cost == 0:
        return Fraction(0)
    return Fraction(mtf_cost - cost, mtf_cost)


def _file_rows(stream: TokenStream, rules: Sequence[RuleSpec]) -> list[ReportRow]:
    costs = {r.name: run_corpus(stream, r).cost for r in rules}
    base = costs[MTF.name] if MTF.name in costs else run_corpus(stream, MTF).cost
    return [
        ReportRow(stream.name, stream.mode, name, len(stream), stream.alphabet_size, c, gain(base, c))
        for name, c in costs.items()
    ]


def report(streams: Iterable[TokenStream], rules: Sequence[RuleSpec], workers: int = 1) -> list[ReportRow]:
    """One row per (file, rule), sorted by file name then rule name."""
    streams = list(streams)
    if not rules:
        raise ContractViolation("report needs at least one rule")
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            parts = list(ex.map(lambda s: _file_rows(s, rules), streams))
    else:
        parts = [_file_rows(s, rules) for s in streams]
    rows = [r for part in parts for r in part]
    return sorted(rows, key=lambda r: (r.file, r.rule))


def report_csv(rows: Iterable[ReportRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_COLUMNS)
    for r in rows:
        w.writerow([r.file, r.mode, r.rule, r.n, r.distinct, r.cost, f"{float(r.gain):.6f}"])
    return buf.getvalue()


def report_json(rows: Iterable[ReportRow]) -> str:
    return json.dumps([r.as_dict() for r in rows], indent=2) + "\n"
