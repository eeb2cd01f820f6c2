"""Online move rules and the deterministic simulation engine."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from . import kernels
from .core import CostLedger, Item, ListState, middle
from .errors import ContractViolation, ItemNotInList

KINDS = ("MTF", "TRANS", "FC", "MFM", "MTP")
_CODES = {
    "MTF": kernels.MTF,
    "TRANS": kernels.TRANS,
    "FC": kernels.FC,
    "MFM": kernels.MFM,
    "MTP": kernels.MTP,
}


@dataclass(frozen=True)
class RuleSpec:
    """An online list-update rule.

    ``q`` is the threshold/target position of the MTP family and must be
    ``None`` for every other kind.  MFM's middle position is derived from
    the list length at serve time, never stored.
    """

    kind: str
    q: int | None = None

    def __post_init__(self):
        kind = self.kind.upper()
        object.__setattr__(self, "kind", kind)
        if kind not in KINDS:
            raise ContractViolation(f"unknown rule {self.kind!r}")
        if kind == "MTP":
            if self.q is None or self.q < 1:
                raise ContractViolation("MTP needs a target position q >= 1")
        elif self.q is not None:
            raise ContractViolation(f"{kind} takes no q")

    @property
    def code(self) -> int:
        return _CODES[self.kind]

    @property
    def name(self) -> str:
        return f"mtp{self.q}" if self.kind == "MTP" else self.kind.lower()

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, text: str, l: int | None = None) -> "RuleSpec":
        """Parse ``mtf``, ``trans``, ``fc``, ``mfm``, ``mtp:Q``/``mtpQ`` or ``mflp``.

        ``mflp`` resolves to MTP with ``q = ceil(log2 l)`` and so needs ``l``.
        """
        t = text.strip().lower()
        if t == "mflp":
            if l is None:
                raise ContractViolation("mflp needs the list length")
            return mflp(l)
        if t.startswith("mtp"):
            rest = t[3:].lstrip(":=")
            if not rest.isdigit():
                raise ContractViolation(f"malformed MTP rule {text!r}; use mtp:Q")
            return cls("MTP", int(rest))
        if t.upper() not in KINDS:
            raise ContractViolation(f"unknown rule {text!r}")
        return cls(t.upper())


MTF = RuleSpec("MTF")
TRANS = RuleSpec("TRANS")
FC = RuleSpec("FC")
MFM = RuleSpec("MFM")


def mtp(q: int) -> RuleSpec:
    return RuleSpec("MTP", q)


def mflp(l: int) -> RuleSpec:
    """Move-to-front-or-log-position: MTP with q = ceil(log2 l), at least 1."""
    return RuleSpec("MTP", max(1, math.ceil(math.log2(l))) if l > 1 else 1)


@dataclass
class FcState:
    counts: dict = field(default_factory=dict)

    def count(self, x: Item) -> int:
        return self.counts.get(x, 0)


@dataclass(frozen=True)
class TraceRecord:
    item: Item
    position: int
    cost: int
    target: int
    list_after: tuple | None = None


@dataclass
class RunResult:
    rule: RuleSpec
    requests: tuple
    positions: list
    targets: list
    ledger: CostLedger
    final_list: ListState
    snapshots: list | None = None
    fc: FcState | None = None

    @property
    def total(self) -> int:
        return self.ledger.total()

    @property
    def trace(self) -> list[TraceRecord]:
        snaps = self.snapshots or [None] * len(self.positions)
        return [
            TraceRecord(x, p, p, t, s)
            for x, p, t, s in zip(self.requests, self.positions, self.targets, snaps)
        ]


def target_position(rule: RuleSpec, p: int, l: int, fc: FcState | None = None,
                    lst: ListState | None = None) -> int:
    """Position the rule moves an item found at ``p`` to.

    For FC, ``fc`` must already hold the accessed item's updated count and
    ``lst`` the list before the move.
    """
    if not 1 <= p <= l:
        raise ContractViolation(f"found position {p} outside 1..{l}")
    kind = rule.kind
    if kind == "MTF":
        return 1
    if kind == "TRANS":
        return max(1, p - 1)
    if kind == "MFM":
        m = middle(l)
        return 1 if p <= m else m
    if kind == "MTP":
        return 1 if p <= rule.q else rule.q
    if fc is None or lst is None:
        raise ContractViolation("FC needs the count state and the current list")
    c = fc.count(lst.order[p - 1])
    t = p
    while t > 1 and fc.count(lst.order[t - 2]) < c:
        t -= 1
    return t


def simulate(rule: RuleSpec, initial: ListState, sigma: Sequence[Item], trace: bool = False,
             backend: str | None = None) -> RunResult:
    """Serve ``sigma`` on a copy of ``initial`` under ``rule``.

    Each request pays its found position, then the item takes one free
    move to the rule's target.  With ``trace`` the list after every request
    is kept as well (memory grows as n * l).
    """
    l = len(initial)
    if rule.kind == "MTP" and rule.q > l:
        raise ContractViolation(f"MTP target q={rule.q} exceeds list length {l}")
    items = initial.order
    dense = {x: i for i, x in enumerate(items)}
    try:
        req = [dense[x] for x in sigma]
    except KeyError:
        for i, x in enumerate(sigma):
            if x not in dense:
                raise ItemNotInList(x, i) from None
        raise
    counts: list = []
    access, free_moves, final, found, targets = kernels.serve(
        list(range(l)), req, rule.code, rule.q or 0, counts,
        dynamic=False, record=True, backend=backend,
    )
    snapshots = _replay(items, found, targets) if trace else None
    fc = None
    if rule.kind == "FC":
        fc = FcState({items[i]: c for i, c in enumerate(counts) if c})
    return RunResult(
        rule=rule,
        requests=tuple(sigma),
        positions=found,
        targets=targets,
        ledger=CostLedger(access=access, paid=0, free_moves=free_moves),
        final_list=ListState([items[i] for i in final]),
        snapshots=snapshots,
        fc=fc,
    )


def total_cost(rule: RuleSpec, initial: ListState, sigma: Sequence[Item], backend: str | None = None) -> int:
    """Total cost only, without recording per-request positions."""
    dense = {x: i for i, x in enumerate(initial.order)}
    req = []
    for i, x in enumerate(sigma):
        if x not in dense:
            raise ItemNotInList(x, i)
        req.append(dense[x])
    if rule.kind == "MTP" and rule.q > len(initial):
        raise ContractViolation(f"MTP target q={rule.q} exceeds list length {len(initial)}")
    access, *_ = kernels.serve(list(range(len(initial))), req, rule.code, rule.q or 0, [],
                               backend=backend)
    return access


def _replay(items, found, targets) -> list:
    order = list(items)
    out = []
    for p, t in zip(found, targets):
        if t < p:
            order.insert(t - 1, order.pop(p - 1))
        out.append(tuple(order))
    return out
