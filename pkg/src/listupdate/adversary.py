"""Cruel request sequences and seeded synthetic workloads."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import Item, ListState, middle
from .errors import ContractViolation

FULL_CYCLES = "full"
PARTIAL_TAIL = "partial"
CASES = (FULL_CYCLES, PARTIAL_TAIL)


@dataclass(frozen=True)
class CruelSpec:
    """Shape of an MFM cruel sequence.

    ``full`` repeats the block ``x_l, ..., x_m`` ``k`` times; ``partial``
    adds one more pass over ``x_l, ..., x_{m+1}``.  ``residual`` overrides
    the length of that extra pass (expert use; the tables need ``l - m``).
    """

    l: int
    k: int
    case: str = FULL_CYCLES
    residual: int | None = None

    def __post_init__(self):
        if self.l < 2:
            raise ContractViolation("cruel sequences need l >= 2")
        if self.k < 1:
            raise ContractViolation("k must be >= 1")
        if self.case not in CASES:
            raise ContractViolation(f"unknown case {self.case!r}")
        if self.residual is not None and not 0 <= self.residual <= self.block:
            raise ContractViolation(f"residual must lie in 0..{self.block}")

    @property
    def m(self) -> int:
        return middle(self.l)

    @property
    def block(self) -> int:
        return self.l - self.m + 1

    @property
    def tail(self) -> int:
        if self.case == FULL_CYCLES:
            return 0
        return self.l - self.m if self.residual is None else self.residual

    @property
    def n(self) -> int:
        return self.k * self.block + self.tail


def _block_sequence(initial: ListState, lo: int, k: int, tail: int) -> list:
    """``(x_l, ..., x_lo)`` repeated ``k`` times, then its first ``tail`` items."""
    block = [initial.order[i - 1] for i in range(len(initial), lo - 1, -1)]
    return block * k + block[:tail]


def cruel_mfm(spec: CruelSpec, initial: ListState | None = None) -> list:
    if initial is None:
        initial = ListState.range(spec.l)
    if len(initial) != spec.l:
        raise ContractViolation(f"initial list has length {len(initial)}, spec says {spec.l}")
    return _block_sequence(initial, spec.m, spec.k, spec.tail)


def cruel_mtp(q: int, l: int, k: int, initial: ListState | None = None) -> list:
    """MFM-style cruel sequence adapted to MTP(q): the block ``x_l..x_q``.

    Every request is then found at position ``l`` under MTP(q).  Needs
    ``q < l``: MTP(l) moves everything to the front and is just MTF.
    """
    if not 1 <= q < l:
        raise ContractViolation(f"q={q} outside 1..{l - 1}")
    if initial is None:
        initial = ListState.range(l)
    return _block_sequence(initial, q, k, 0)


def cruel_trans(l: int, n: int, initial: ListState | None = None) -> list:
    """Alternate the two items initially last; TRANS pays ``l`` every time."""
    if l < 2:
        raise ContractViolation("cruel_trans needs l >= 2")
    if initial is None:
        initial = ListState.range(l)
    last, second = initial.order[-1], initial.order[-2]
    return [last if i % 2 == 0 else second for i in range(n)]


def cruel_mtf(l: int, n: int, initial: ListState | None = None) -> list:
    """Always request the item MTF currently keeps last."""
    if initial is None:
        initial = ListState.range(l)
    order = list(initial.order)
    out = []
    for _ in range(n):
        x = order.pop()
        order.insert(0, x)
        out.append(x)
    return out


def workload(kind: str, alphabet: ListState, n: int, seed: int | np.random.Generator = 0,
             s: float = 1.0) -> list:
    """Seeded random requests over ``alphabet``.

    ``uniform`` draws each item with equal probability; ``zipf`` gives the
    item at rank ``r`` (its initial position) weight ``r ** -s``.  ``seed``
    may be an int or a ``numpy.random.Generator`` (spawn it to split).
    """
    if kind not in ("uniform", "zipf"):
        raise ContractViolation(f"unknown workload kind {kind!r}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    items = np.asarray(alphabet.order)
    if n == 0:
        return []
    if kind == "uniform":
        idx = rng.integers(0, len(items), size=n)
    elif kind == "zipf":
        w = np.arange(1, len(items) + 1, dtype=float) ** -s
        idx = rng.choice(len(items), size=n, p=w / w.sum())
    return items[idx].tolist()


def format_sequence(seq: Iterable[Item]) -> str:
    return " ".join(str(x) for x in seq)


def parse_sequence(text: str) -> list:
    out = []
    for tok in text.split():
        try:
            v = int(tok)
        except ValueError:
            raise ContractViolation(f"malformed sequence token {tok!r}") from None
        if v < 0:
            raise ContractViolation(f"negative item id {v}")
        out.append(v)
    return out
