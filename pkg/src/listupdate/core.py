"""List state and the standard (full) cost model.

Positions are 1-based on every public interface: the item at position
``i`` costs ``i`` to access.  Internally the order is a plain Python list.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ContractViolation, ItemNotInList
from . import kernels

Item = int


def middle(l: int) -> int:
    """Middle position ``ceil(l / 2)`` of a list of length ``l``."""
    return (l + 1) // 2


@dataclass
class CostLedger:
    access: int = 0
    paid: int = 0
    free_moves: int = 0

    def total(self) -> int:
        return self.access + self.paid

    def __add__(self, other: "CostLedger") -> "CostLedger":
        return CostLedger(
            self.access + other.access,
            self.paid + other.paid,
            self.free_moves + other.free_moves,
        )


class ListState:
    """A permutation of distinct items with 1-based positions."""

    __slots__ = ("order",)

    def __init__(self, items: Iterable[Item]):
        order = [int(x) for x in items]
        if len(set(order)) != len(order):
            raise ContractViolation("list items must be distinct")
        if any(x < 0 for x in order):
            raise ContractViolation("item ids must be non-negative")
        self.order = order

    @classmethod
    def range(cls, l: int) -> "ListState":
        """The list ``(1, 2, ..., l)``."""
        return cls(range(1, l + 1))

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __eq__(self, other) -> bool:
        if isinstance(other, ListState):
            return self.order == other.order
        if isinstance(other, (tuple, list)):
            return tuple(self.order) == tuple(other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"ListState({tuple(self.order)})"

    def copy(self) -> "ListState":
        new = ListState.__new__(ListState)
        new.order = list(self.order)
        return new

    def as_tuple(self) -> tuple:
        return tuple(self.order)

    @property
    def middle(self) -> int:
        return middle(len(self.order))

    def position_of(self, x: Item) -> int:
        try:
            return self.order.index(x) + 1
        except ValueError:
            raise ItemNotInList(x) from None

    def item_at(self, position: int) -> Item:
        self._check_position(position)
        return self.order[position - 1]

    def free_move_forward(self, src: int, dst: int, ledger: CostLedger | None = None) -> "ListState":
        """Move the item at ``src`` forward to ``dst`` at no cost.

        Items formerly at ``dst .. src-1`` shift back by one.
        """
        self._check_position(src)
        self._check_position(dst)
        if dst > src:
            raise ContractViolation(f"free exchanges only move forward (from {src} to {dst})")
        if dst < src:
            self.order.insert(dst - 1, self.order.pop(src - 1))
            if ledger is not None:
                ledger.free_moves += 1
        return self

    def paid_transpose(self, i: int, ledger: CostLedger | None = None) -> "ListState":
        """Swap positions ``i`` and ``i + 1``, charging 1."""
        if not 1 <= i <= len(self.order) - 1:
            raise ContractViolation(f"transpose position {i} out of range for l={len(self.order)}")
        o = self.order
        o[i - 1], o[i] = o[i], o[i - 1]
        if ledger is not None:
            ledger.paid += 1
        return self

    def _check_position(self, p: int) -> None:
        if not 1 <= p <= len(self.order):
            raise ContractViolation(f"position {p} out of range for l={len(self.order)}")


def _as_order(x) -> list:
    return x.order if isinstance(x, ListState) else list(x)


def inversion_distance(a: ListState | Sequence[Item], b: ListState | Sequence[Item]) -> int:
    """Number of item pairs ordered differently in ``a`` and ``b``.

    Equals the minimum number of adjacent (paid) transpositions that turn
    ``a`` into ``b``.
    """
    oa, ob = _as_order(a), _as_order(b)
    rank = {x: i for i, x in enumerate(ob)}
    if len(oa) != len(ob) or len(rank) != len(ob) or any(x not in rank for x in oa):
        raise ContractViolation("inversion_distance needs two orders over the same item set")
    return kernels.count_inversions([rank[x] for x in oa])


def sort_by_transpositions(a: ListState, b: ListState | Sequence[Item], ledger: CostLedger | None = None) -> int:
    """Turn ``a`` into ``b`` in place with adjacent swaps (bubble sort).

    Returns the number of swaps performed; this is always the inversion
    distance.
    """
    rank = {x: i for i, x in enumerate(_as_order(b))}
    swaps = 0
    n = len(a)
    changed = True
    while changed:
        changed = False
        for i in range(1, n):
            if rank[a.order[i - 1]] > rank[a.order[i]]:
                a.paid_transpose(i, ledger)
                swaps += 1
                changed = True
    return swaps
