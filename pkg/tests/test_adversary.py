from collections import Counter

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from listupdate.adversary import (
    CruelSpec, cruel_mfm, cruel_mtf, cruel_mtp, cruel_trans, format_sequence, parse_sequence, workload,
)
from listupdate.algorithms import MFM, MTF, TRANS, mtp, simulate
from listupdate.core import ListState
from listupdate.errors import ContractViolation


def test_cruel_mfm_examples():
    assert cruel_mfm(CruelSpec(5, 2)) == [5, 4, 3, 5, 4, 3]
    assert cruel_mfm(CruelSpec(6, 1, "partial")) == [6, 5, 4, 3, 6, 5, 4]
    # for l=2 the block x_l..x_m spans the whole list
    assert cruel_mfm(CruelSpec(2, 1)) == [2, 1]


def test_cruel_mfm_uses_initial_labels():
    initial = ListState((9, 7, 5, 3, 1))
    seq = cruel_mfm(CruelSpec(5, 1), initial)
    assert seq == [1, 3, 5]
    assert simulate(MFM, initial, seq).positions == [5, 5, 5]


def test_cruel_spec_validation():
    with pytest.raises(ContractViolation):
        CruelSpec(1, 1)
    with pytest.raises(ContractViolation):
        CruelSpec(5, 0)
    with pytest.raises(ContractViolation):
        CruelSpec(5, 1, "sideways")
    with pytest.raises(ContractViolation):
        cruel_mfm(CruelSpec(5, 1), ListState.range(4))


@given(st.integers(2, 80), st.integers(1, 12), st.sampled_from(["full", "partial"]))
def test_cruel_lengths(l, k, case):
    spec = CruelSpec(l, k, case)
    m = (l + 1) // 2
    expected = k * (l - m + 1) + (l - m if case == "partial" else 0)
    assert spec.n == expected == len(cruel_mfm(spec))


@given(st.integers(2, 40), st.integers(1, 6), st.sampled_from(["full", "partial"]))
def test_cruel_mfm_always_hits_last_position(l, k, case):
    r = simulate(MFM, ListState.range(l), cruel_mfm(CruelSpec(l, k, case)))
    assert set(r.positions) == {l}
    assert r.total == CruelSpec(l, k, case).n * l


def test_cruel_mtp_needs_q_below_l():
    with pytest.raises(ContractViolation):
        cruel_mtp(4, 4, 1)


def test_residual_override():
    spec = CruelSpec(8, 2, "partial", residual=1)
    assert spec.n == 2 * 5 + 1
    assert cruel_mfm(spec)[-1] == 8
    with pytest.raises(ContractViolation):
        CruelSpec(8, 2, "partial", residual=9)


@given(st.integers(2, 30), st.integers(1, 5), st.data())
def test_cruel_mtp_hits_last_position(l, k, data):
    q = data.draw(st.integers(1, l - 1))
    r = simulate(mtp(q), ListState.range(l), cruel_mtp(q, l, k))
    assert set(r.positions) == {l}


def test_cruel_trans_examples():
    seq = cruel_trans(3, 4)
    assert seq == [3, 2, 3, 2]
    assert simulate(TRANS, ListState.range(3), seq).total == 12
    assert cruel_trans(3, 0) == []
    assert simulate(TRANS, ListState.range(5), cruel_trans(5, 6)).total == 30


@given(st.integers(2, 30), st.integers(0, 40))
def test_cruel_trans_invariant(l, n):
    r = simulate(TRANS, ListState.range(l), cruel_trans(l, n))
    assert all(p >= l - 1 for p in r.positions)
    assert r.total == n * l


def test_cruel_mtf_examples():
    seq = cruel_mtf(3, 3)
    assert seq == [3, 2, 1]
    assert simulate(MTF, ListState.range(3), seq).total == 9
    assert cruel_mtf(3, 0) == []
    assert simulate(MTF, ListState.range(5), cruel_mtf(5, 5)).total == 25


@given(st.integers(1, 20), st.integers(0, 50))
def test_cruel_mtf_invariant(l, n):
    assert simulate(MTF, ListState.range(l), cruel_mtf(l, n)).total == n * l


def test_workload_determinism_and_shape():
    alphabet = ListState.range(6)
    assert workload("uniform", alphabet, 0, seed=1) == []
    a = workload("uniform", alphabet, 500, seed=42)
    assert a == workload("uniform", alphabet, 500, seed=42)
    assert set(a) <= set(range(1, 7))
    assert a != workload("uniform", alphabet, 500, seed=43)


def test_workload_zipf_frequencies_fall_with_rank():
    seq = workload("zipf", ListState.range(4), 10_000, seed=3, s=1.0)
    freq = Counter(seq)
    counts = [freq[x] for x in (1, 2, 3, 4)]
    assert counts == sorted(counts, reverse=True)


def test_workload_accepts_spawned_generators():
    parent = np.random.SeedSequence(11)
    g1, g2 = (np.random.default_rng(s) for s in parent.spawn(2))
    a = workload("uniform", ListState.range(5), 50, g1)
    b = workload("uniform", ListState.range(5), 50, g2)
    assert a != b


def test_workload_unknown_kind():
    with pytest.raises(ContractViolation):
        workload("pareto", ListState.range(3), 5)


def test_sequence_text_round_trip():
    assert parse_sequence(format_sequence([5, 4, 3])) == [5, 4, 3]
    assert parse_sequence("  1\n2\t3 ") == [1, 2, 3]
    assert parse_sequence("") == []
    for bad in ("1 two", "-3"):
        with pytest.raises(ContractViolation):
            parse_sequence(bad)
