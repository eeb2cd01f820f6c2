"""Offline baselines.

``stat_paper`` is the frequency-ordered static list, ``stat_exact`` the
true minimum over all static orders, ``dyn_opt`` the move-to-front offline
baseline, and ``true_opt`` an exact search over every offline strategy on
small instances.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .algorithms import MTF, RunResult, simulate
from .core import Item, ListState, inversion_distance
from .errors import ContractViolation, ItemNotInList, SizeLimitError

TIE_BREAKS = ("stable-initial", "first-occurrence")

STAT_EXACT_MAX_L = 9
TRUE_OPT_MAX_L = 5
TRUE_OPT_MAX_N = 12


@dataclass(frozen=True)
class StaticPlan:
    target_order: ListState
    paid_cost: int
    access_cost: int
    tie_break: str

    @property
    def total(self) -> int:
        return self.paid_cost + self.access_cost


def _check_requests(initial: ListState, sigma: Sequence[Item]) -> None:
    present = set(initial.order)
    for i, x in enumerate(sigma):
        if x not in present:
            raise ItemNotInList(x, i)


def static_access_cost(order: ListState, sigma: Sequence[Item]) -> int:
    pos = {x: i + 1 for i, x in enumerate(order.order)}
    return sum(pos[x] for x in sigma)


def stat_paper(initial: ListState, sigma: Sequence[Item], tie_break: str = "stable-initial") -> StaticPlan:
    """Reorder once by non-increasing request frequency, then never move.

    ``stable-initial`` keeps equal-frequency items in their initial
    relative order; ``first-occurrence`` orders them by first appearance in
    ``sigma`` (unrequested items stay last, in initial order).
    """
    if tie_break not in TIE_BREAKS:
        raise ContractViolation(f"unknown tie_break {tie_break!r}")
    _check_requests(initial, sigma)
    freq = Counter(sigma)
    init_idx = {x: i for i, x in enumerate(initial.order)}
    if tie_break == "stable-initial":
        key = lambda x: (-freq[x], init_idx[x])
    else:
        first: dict = {}
        for i, x in enumerate(sigma):
            first.setdefault(x, i)
        key = lambda x: (-freq[x], first.get(x, len(sigma)), init_idx[x])
    target = ListState(sorted(initial.order, key=key))
    return StaticPlan(
        target_order=target,
        paid_cost=inversion_distance(initial, target),
        access_cost=static_access_cost(target, sigma),
        tie_break=tie_break,
    )


def stat_exact(initial: ListState, sigma: Sequence[Item]) -> StaticPlan:
    """Static order minimising paid exchanges plus access cost.

    Solved exactly as a linear-ordering problem by dynamic programming over
    subsets of placed items: appending ``x`` after the set ``S`` costs
    ``freq(x) * (|S| + 1)`` plus one for every item of ``S`` that started
    behind ``x``.  Among optimal orders the one that picks initially-earlier
    items first is returned.
    """
    l = len(initial)
    if l > STAT_EXACT_MAX_L:
        raise SizeLimitError(f"stat_exact enumerates l! orders; l={l} exceeds {STAT_EXACT_MAX_L}")
    _check_requests(initial, sigma)
    freq = Counter(sigma)
    f = [freq[x] for x in initial.order]
    full = (1 << l) - 1
    # rest[mask] = cheapest completion once the items in mask are placed
    rest = [0] * (1 << l)
    for mask in range(full - 1, -1, -1):
        placed = bin(mask).count("1")
        best = None
        for x in range(l):
            if mask >> x & 1:
                continue
            behind = bin(mask >> (x + 1)).count("1")
            c = f[x] * (placed + 1) + behind + rest[mask | 1 << x]
            if best is None or c < best:
                best = c
        rest[mask] = best
    order = []
    mask = 0
    while mask != full:
        placed = len(order)
        for x in range(l):
            if mask >> x & 1:
                continue
            behind = bin(mask >> (x + 1)).count("1")
            if f[x] * (placed + 1) + behind + rest[mask | 1 << x] == rest[mask]:
                order.append(x)
                mask |= 1 << x
                break
    target = ListState([initial.order[i] for i in order])
    plan = StaticPlan(
        target_order=target,
        paid_cost=inversion_distance(initial, target),
        access_cost=static_access_cost(target, sigma),
        tie_break="exact",
    )
    assert plan.total == rest[0]
    return plan


def dyn_opt(initial: ListState, sigma: Sequence[Item], trace: bool = False) -> RunResult:
    """Offline move-to-front: every served item goes to the front."""
    return simulate(MTF, initial, sigma, trace=trace)


@dataclass(frozen=True)
class OptStep:
    item: Item
    paid: int
    order_before: tuple
    position: int
    moved_to: int


@dataclass(frozen=True)
class OptResult:
    total: int
    paid: int
    access: int
    steps: tuple


@lru_cache(maxsize=None)
def _perm_tables(l: int):
    perms = list(itertools.permutations(range(l)))
    index = {p: i for i, p in enumerate(perms)}
    pos = np.empty((len(perms), l), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, x in enumerate(p):
            pos[i, x] = j
    dist = np.zeros((len(perms), len(perms)), dtype=np.int64)
    for u, v in itertools.combinations(range(l), 2):
        before = pos[:, u] < pos[:, v]
        dist += before[:, None] != before[None, :]
    moves = []
    for x in range(l):
        src, dst, cost, to = [], [], [], []
        for i, p in enumerate(perms):
            at = pos[i, x] + 1
            for t in range(1, at + 1):
                q = list(p)
                q.insert(t - 1, q.pop(at - 1))
                src.append(i)
                dst.append(index[tuple(q)])
                cost.append(at)
                to.append(t)
        moves.append(tuple(np.array(a, dtype=np.int64) for a in (src, dst, cost, to)))
    return perms, index, dist, moves


_INF = np.int64(1) << 50


def true_opt(initial: ListState, sigma: Sequence[Item]) -> OptResult:
    """Minimum offline cost over all strategies, by DP over permutations.

    Before each access any rearrangement is allowed at its inversion
    distance; the access then costs the found position and the accessed
    item may take one free forward move.
    """
    l, n = len(initial), len(sigma)
    if l > TRUE_OPT_MAX_L or n > TRUE_OPT_MAX_N:
        raise SizeLimitError(
            f"true_opt limited to l <= {TRUE_OPT_MAX_L}, n <= {TRUE_OPT_MAX_N} (got l={l}, n={n})"
        )
    _check_requests(initial, sigma)
    if n == 0:
        return OptResult(0, 0, 0, ())
    perms, index, dist, moves = _perm_tables(l)
    dense = {x: i for i, x in enumerate(initial.order)}
    size = len(perms)
    dp = np.full(size, _INF, dtype=np.int64)
    dp[index[tuple(range(l))]] = 0
    back = []
    for x in sigma:
        via = dp[:, None] + dist
        arg_paid = via.argmin(axis=0)
        before = via[arg_paid, np.arange(size)]
        src, dst, cost, to = moves[dense[x]]
        cand = before[src] + cost
        order = np.lexsort((to, cand, dst))
        first = np.unique(dst[order], return_index=True)[1]
        pick = order[first]
        dp = np.full(size, _INF, dtype=np.int64)
        dp[dst[pick]] = cand[pick]
        chosen = np.full(size, -1, dtype=np.int64)
        chosen[dst[pick]] = pick
        back.append((arg_paid, chosen, src, cost, to))
    end = int(dp.argmin())
    total = int(dp[end])
    steps = []
    cur = end
    for x, (arg_paid, chosen, src, cost, to) in zip(reversed(sigma), reversed(back)):
        e = chosen[cur]
        q = int(src[e])
        p = int(arg_paid[q])
        steps.append(OptStep(
            item=x,
            paid=int(dist[p, q]),
            order_before=tuple(initial.order[i] for i in perms[q]),
            position=int(cost[e]),
            moved_to=int(to[e]),
        ))
        cur = p
    steps.reverse()
    paid = sum(s.paid for s in steps)
    access = sum(s.position for s in steps)
    assert paid + access == total
    return OptResult(total=total, paid=paid, access=access, steps=tuple(steps))
