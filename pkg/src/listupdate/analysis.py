"""Closed-form costs, ratio tables, limits and competitiveness checks.

All ratios are exact :class:`fractions.Fraction` values.  Decimal renderings
truncate (never round) to a fixed number of digits.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .adversary import FULL_CYCLES, PARTIAL_TAIL, CruelSpec, cruel_mfm, cruel_mtp
from .algorithms import MFM, mtp, simulate, total_cost
from .core import ListState, middle
from .errors import ContractViolation
from .offline import dyn_opt, stat_paper

CASE1, CASE2, DYNOPT = "case1", "case2", "dynopt"
TABLES = (CASE1, CASE2, DYNOPT)

# (l, k, printed decimal digits) for every row of the three published tables
TABLE_ROWS = {
    CASE1: [(5, 2, 2), (5, 4, 2), (5, 8, 2), (5, 10, 2), (5, 100, 2), (5, 1000, 2), (5, 10000, 3)],
    CASE2: [(6, k, d) for k, d in zip(range(1, 11), (2, 2, 1, 1, 2, 3, 3, 2, 2, 2))],
    DYNOPT: [(5, 2, 2), (5, 4, 2), (5, 8, 2), (5, 10, 3), (5, 100, 3), (5, 1000, 3), (5, 10000, 3)],
}

CSV_COLUMNS = ("l", "k", "numerator", "denominator", "ratio_exact", "ratio_printed")


def triangular(n: int) -> int:
    return n * (n + 1) // 2


def block_size(l: int) -> int:
    """Number of distinct items ``l - m + 1`` in the MFM cruel cycle."""
    return l - middle(l) + 1


def truncate(x: Fraction, digits: int) -> str:
    """Decimal string of ``x`` truncated toward zero at ``digits`` places."""
    scale = 10 ** digits
    v = x.numerator * scale // x.denominator if x >= 0 else -((-x.numerator) * scale // x.denominator)
    if digits == 0:
        return str(v)
    sign = "-" if v < 0 else ""
    v = abs(v)
    return f"{sign}{v // scale}.{v % scale:0{digits}d}"


def fmt_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# -- closed forms ------------------------------------------------------------

def c_mfm_closed(l: int, k: int, case: str = FULL_CYCLES) -> int:
    return CruelSpec(l, k, case).n * l


def c_stat_case1_closed(l: int, k: int) -> int:
    m = middle(l)
    b = l - m + 1
    return b * (m - 1) + k * triangular(b)


def c_stat_case2_closed(l: int, k: int, as_printed: bool = False) -> int:
    """STAT cost on the partial-tail sequence.

    The block-to-front and in-block sort exchanges, plus the access cost of
    ``k`` full passes and the residual pass of ``r = l - m`` items.
    ``as_printed`` evaluates the published formula, whose last sum stops at
    ``r - 1`` and so misses the residual pass's final access.
    """
    m = middle(l)
    b = l - m + 1
    r = l - m
    paid_block = b * (m - 1)
    paid_sort = sum(l - m - i for i in range(r))
    tail_access = triangular(r - 1) if as_printed else triangular(r)
    return paid_block + paid_sort + k * triangular(b) + tail_access


def c_dynopt_closed(l: int, k: int) -> int:
    b = block_size(l)
    return l * b + (k - 1) * b * b


# -- tables -------------------------------------------------------------------

@dataclass(frozen=True)
class RatioRow:
    l: int
    k: int
    numerator: int
    denominator: int
    digits: int = 3

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def printed(self) -> str:
        return truncate(self.ratio, self.digits)

    def as_csv_row(self) -> list:
        return [self.l, self.k, self.numerator, self.denominator, fmt_fraction(self.ratio), self.printed]


def closed_row(which: str, l: int, k: int, digits: int = 3, as_printed: bool = False) -> RatioRow:
    if which == CASE1:
        return RatioRow(l, k, c_mfm_closed(l, k), c_stat_case1_closed(l, k), digits)
    if which == CASE2:
        return RatioRow(l, k, c_mfm_closed(l, k, PARTIAL_TAIL), c_stat_case2_closed(l, k, as_printed), digits)
    if which == DYNOPT:
        return RatioRow(l, k, c_mfm_closed(l, k), c_dynopt_closed(l, k), digits)
    raise ContractViolation(f"unknown table {which!r}")


def simulated_row(which: str, l: int, k: int, digits: int = 3) -> RatioRow:
    """Same row, with both costs obtained by running the algorithms."""
    initial = ListState.range(l)
    case = PARTIAL_TAIL if which == CASE2 else FULL_CYCLES
    sigma = cruel_mfm(CruelSpec(l, k, case), initial)
    num = total_cost(MFM, initial, sigma)
    if which == CASE1:
        den = stat_paper(initial, sigma, "stable-initial").total
    elif which == CASE2:
        den = stat_paper(initial, sigma, "first-occurrence").total
    elif which == DYNOPT:
        den = dyn_opt(initial, sigma).total
    else:
        raise ContractViolation(f"unknown table {which!r}")
    return RatioRow(l, k, num, den, digits)


def reproduce_table(which: str, source: str = "closed", as_printed: bool = False) -> list[RatioRow]:
    if which not in TABLES:
        raise ContractViolation(f"unknown table {which!r}; choose from {', '.join(TABLES)}")
    if source == "closed":
        return [closed_row(which, l, k, d, as_printed) for l, k, d in TABLE_ROWS[which]]
    if source == "simulated":
        return [simulated_row(which, l, k, d) for l, k, d in TABLE_ROWS[which]]
    raise ContractViolation(f"unknown source {source!r}")


def table_csv(rows: Iterable[RatioRow], header: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow(r.as_csv_row())
    return buf.getvalue()


def gnuplot_dump(rows: Iterable[RatioRow]) -> str:
    """Two whitespace-separated columns: k and the ratio as a float."""
    return "".join(f"{r.k} {float(r.ratio):.10g}\n" for r in rows)


# -- ratios and limits --------------------------------------------------------

def stat_ratio(l: int, k: int) -> Fraction:
    return Fraction(c_mfm_closed(l, k), c_stat_case1_closed(l, k))


def dynopt_ratio(l: int, k: int) -> Fraction:
    return Fraction(c_mfm_closed(l, k), c_dynopt_closed(l, k))


def asymptote(which: str, l: int) -> Fraction:
    """Limit of the ratio as ``k`` grows, for fixed list length ``l``.

    ``stat``: ``l * B / T(B)``; ``dynopt``: ``l / B``, with ``B = l - m + 1``
    and ``T`` the triangular number.
    """
    b = block_size(l)
    if which in ("stat", "statLimit"):
        return Fraction(l * b, triangular(b))
    if which in ("dynopt", "dynoptLimit"):
        return Fraction(l, b)
    raise ContractViolation(f"unknown limit {which!r}")


def min_k_exceeding(l: int, d: Fraction | int = 2) -> int | None:
    """Smallest ``k`` whose Case-1 ratio strictly exceeds ``d``; None if never."""
    d = Fraction(d)
    m = middle(l)
    b = l - m + 1
    slope = l * b - d * triangular(b)
    if slope <= 0:
        return None
    rhs = d * b * (m - 1)
    k = int(rhs // slope) + 1
    return max(k, 1)


@dataclass(frozen=True)
class CompetitiveVerdict:
    d: Fraction
    beta: int
    holds: bool
    checked: int
    first_violation: tuple | None = None


def check_competitive(alg_costs: Sequence[int], off_costs: Sequence[int], d, beta: int = 0,
                      labels: Sequence | None = None) -> CompetitiveVerdict:
    """Test ``alg <= d * off + beta`` on every paired instance.

    ``first_violation`` is ``(label, alg, off)`` for the first failing pair,
    where the label defaults to the instance index.
    """
    d = Fraction(d)
    if len(alg_costs) != len(off_costs):
        raise ContractViolation("cost lists differ in length")
    for i, (a, o) in enumerate(zip(alg_costs, off_costs)):
        if a > d * o + beta:
            label = labels[i] if labels is not None else i
            return CompetitiveVerdict(d, beta, False, i + 1, (label, a, o))
    return CompetitiveVerdict(d, beta, True, len(alg_costs))


@dataclass(frozen=True)
class MtpRow:
    l: int
    k: int
    q: int
    alg_cost: int
    stat_cost: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.alg_cost, self.stat_cost)


def mtp_sweep(l: int, k: int, qs: Iterable[int] | None = None) -> list[MtpRow]:
    """MTP(q) against stable-initial STAT on the block ``x_l..x_q`` cycled ``k`` times.

    This adapts the MFM construction to other thresholds; it is an
    extrapolation, not a construction taken from a proof.
    """
    initial = ListState.range(l)
    if qs is None:
        qs = range(1, middle(l) + 1)
    rows = []
    for q in qs:
        sigma = cruel_mtp(q, l, k, initial)
        rows.append(MtpRow(l, k, q, total_cost(mtp(q), initial, sigma),
                           stat_paper(initial, sigma, "stable-initial").total))
    return rows


def simulate_cruel(l: int, k: int, case: str = FULL_CYCLES):
    """MFM run on the cruel sequence with the initial list ``1..l``."""
    initial = ListState.range(l)
    return simulate(MFM, initial, cruel_mfm(CruelSpec(l, k, case), initial))
