from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from listupdate.adversary import CruelSpec, cruel_mfm
from listupdate.algorithms import (
    FC, MFM, MTF, TRANS, FcState, RuleSpec, mflp, mtp, simulate, target_position, total_cost,
)
from listupdate.core import ListState
from listupdate.errors import ContractViolation, ItemNotInList

from oracles import naive_serve

WORKED = (5, 4, 3, 3, 5, 4, 2, 2, 5, 4, 1, 1)


@st.composite
def instances(draw, max_l=10, max_n=40):
    l = draw(st.integers(1, max_l))
    order = draw(st.permutations(list(range(1, l + 1))))
    sigma = draw(st.lists(st.sampled_from(order), max_size=max_n))
    return ListState(order), sigma


@pytest.mark.parametrize("rule, p, l, expected", [
    (MFM, 5, 5, 3),
    (MFM, 3, 5, 1),
    (TRANS, 1, 4, 1),
    (TRANS, 4, 4, 3),
    (mtp(2), 5, 8, 2),
    (mtp(2), 2, 8, 1),
    (MTF, 7, 9, 1),
])
def test_target_position(rule, p, l, expected):
    assert target_position(rule, p, l) == expected


def test_target_position_fc_stays_behind_equal_counts():
    lst = ListState((1, 2, 3, 4))
    fc = FcState({1: 3, 2: 2, 3: 1, 4: 2})
    # item 4 was just counted up to 2: it passes 3 (count 1) but not 2 (count 2)
    assert target_position(FC, 4, 4, fc, lst) == 3


def test_target_position_rejects_bad_position():
    with pytest.raises(ContractViolation):
        target_position(MTF, 0, 3)


def test_worked_trace_trace(backend):
    r = simulate(MFM, ListState.range(5), WORKED, trace=True, backend=backend)
    assert r.total == 54
    assert r.final_list == (1, 2, 3, 4, 5)
    assert r.ledger.paid == 0
    # first step: item 5 found at 5, moved to the middle
    assert r.trace[0].position == 5 and r.trace[0].list_after == (1, 2, 5, 3, 4)
    assert r.trace[3].target == 1


def test_mtf_on_worked_trace_sequence():
    # hand trace: 5+5+5+1+3+3+5+1+3+3+5+1
    assert simulate(MTF, ListState.range(5), WORKED).total == 40


def test_empty_sequence():
    for rule in (MTF, TRANS, FC, MFM, mtp(2)):
        r = simulate(rule, ListState.range(4), [])
        assert r.total == 0 and r.final_list == (1, 2, 3, 4) and r.trace == []


def test_mfm_case1_k2_costs_30():
    sigma = cruel_mfm(CruelSpec(5, 2))
    r = simulate(MFM, ListState.range(5), sigma)
    assert r.total == 30
    assert all(p == 5 for p in r.positions)


def test_missing_request_reports_index():
    with pytest.raises(ItemNotInList) as info:
        simulate(MTF, ListState.range(3), [1, 2, 9, 1])
    assert info.value.index == 2


def test_mtp_target_beyond_list():
    with pytest.raises(ContractViolation):
        simulate(mtp(5), ListState.range(4), [1])


def test_rule_parsing():
    assert RuleSpec.parse("MFM") == MFM
    assert RuleSpec.parse("mtp:3") == mtp(3)
    assert RuleSpec.parse("mtp3") == mtp(3)
    assert RuleSpec.parse("mflp", 64) == mtp(6)
    assert RuleSpec.parse("mflp", 5) == mtp(3)
    for bad in ("lru", "mtp:", "mtp:x"):
        with pytest.raises(ContractViolation):
            RuleSpec.parse(bad)
    with pytest.raises(ContractViolation):
        RuleSpec("MFM", 2)


def test_mflp_small_lists():
    assert mflp(1) == mtp(1) and mflp(2) == mtp(1)


@settings(max_examples=200)
@given(instances(), st.sampled_from(["mtf", "trans", "fc", "mfm", "mtp"]), st.integers(1, 10))
def test_matches_reference_simulator(inst, name, q):
    initial, sigma = inst
    q = min(q, len(initial))
    rule = mtp(q) if name == "mtp" else RuleSpec(name)
    r = simulate(rule, initial, sigma, trace=True)
    total, found, final = naive_serve(name, initial.order, sigma, q)
    assert r.total == total
    assert r.positions == found
    assert r.final_list == final
    assert r.ledger.access == sum(t.cost for t in r.trace)
    assert len(r.trace) == len(sigma)
    if sigma:
        assert r.trace[-1].list_after == tuple(final)


@given(instances(), st.sampled_from([MTF, TRANS, FC, MFM]))
def test_cost_bounds_and_no_paid_exchanges(inst, rule):
    initial, sigma = inst
    r = simulate(rule, initial, sigma)
    assert len(sigma) <= r.total <= len(sigma) * len(initial)
    assert r.ledger.paid == 0


@given(instances())
def test_deterministic(inst):
    initial, sigma = inst
    a = simulate(MFM, initial, sigma, trace=True)
    b = simulate(MFM, initial, sigma, trace=True)
    assert a.trace == b.trace and a.ledger == b.ledger


@given(instances(max_l=2))
def test_mtf_and_mfm_agree_on_tiny_lists(inst):
    initial, sigma = inst
    assert simulate(MTF, initial, sigma, trace=True).trace == simulate(MFM, initial, sigma, trace=True).trace


@given(instances())
def test_mtp1_is_mtf(inst):
    initial, sigma = inst
    assert simulate(mtp(1), initial, sigma).positions == simulate(MTF, initial, sigma).positions


@given(instances())
def test_fc_counts_match_histogram(inst):
    initial, sigma = inst
    r = simulate(FC, initial, sigma)
    assert r.fc.counts == dict(Counter(sigma))
    # the list stays sorted by non-increasing count
    counts = [r.fc.count(x) for x in r.final_list]
    assert counts == sorted(counts, reverse=True)


def test_total_cost_matches_simulate():
    sigma = cruel_mfm(CruelSpec(9, 7, "partial"))
    assert total_cost(MFM, ListState.range(9), sigma) == simulate(MFM, ListState.range(9), sigma).total
