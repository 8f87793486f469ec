"""Decomposability: worked examples and oracle equivalence with brute force."""

import random

import pytest

from toricrep.splitting import (
    check_line_bound,
    find_split_witness,
    indecomposable_blocks,
    induced_lines,
    is_decomposable,
)
from toricrep.sweeps import (
    enumerate_weight_systems,
    iterated_witness_blocks,
    oracle_split_witness,
)
from toricrep.weights import WeightSystem

WS = WeightSystem.canonicalize


def test_induced_lines_examples():
    assert len(induced_lines(WS(2, [(1, 0), (0, 1), (1, 1)]))) == 3
    lines = induced_lines(WS(2, [(2, 0), (1, 0)]))
    assert lines == ((1, 0),)
    assert len(induced_lines(WS(2, [(1, 2), (2, 4), (0, 1)]))) == 2


def test_find_split_witness_examples():
    w = find_split_witness(WS(2, [(1, 0), (0, 1)]))
    assert w is not None
    parts = {w.theta1, w.theta2}
    assert parts == {(0,), (1,)}
    assert find_split_witness(WS(2, [(1, 0), (0, 1), (1, 1)])) is None
    assert find_split_witness(WS(1, [(1,), (2,)])) is None


def test_witness_rank_additivity():
    ws = WS(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 1)])
    w = find_split_witness(ws)
    assert w is not None
    assert set(w.theta1) | set(w.theta2) == set(range(len(ws.weights)))
    assert not set(w.theta1) & set(w.theta2)


def test_is_decomposable_examples():
    r = is_decomposable(WS(2, [(1, 0), (0, 1)]))
    assert r.decomposable and r.witness is not None
    r = is_decomposable(WS(2, [(1, 0), (0, 1), (1, 1)]))
    assert not r.decomposable
    r = is_decomposable(WS(1, [(1,)], fixed_dim=2))
    assert r.decomposable and "flat" in r.reason
    r = is_decomposable(WS(1, [(1,)]))
    assert not r.decomposable


def test_indecomposable_blocks_examples():
    assert len(indecomposable_blocks(WS(2, [(1, 0), (0, 1)])).blocks) == 2
    assert len(indecomposable_blocks(WS(2, [(1, 0), (0, 1), (1, 1)])).blocks) == 1
    ws = WS(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 1)])
    blocks = indecomposable_blocks(ws).blocks
    assert len(blocks) == 2
    by_weights = sorted(tuple(ws.weights[i] for i in b) for b in blocks)
    assert by_weights == [((0, 0, 1), (0, 1, 0), (0, 1, 1)), ((1, 0, 0),)]


def test_blocks_are_internally_indecomposable():
    rng = random.Random(17)
    for _ in range(40):
        k = rng.randint(2, 3)
        m = rng.randint(2, 5)
        raw = []
        while len(raw) < m:
            v = tuple(rng.randint(-2, 2) for _ in range(k))
            if any(v):
                raw.append(v)
        ws = WS(k, raw)
        dec = indecomposable_blocks(ws)
        assert sorted(i for b in dec.blocks for i in b) == list(range(len(ws.weights)))
        for block in dec.blocks:
            sub = WS(k, [ws.weights[i] for i in block])
            assert find_split_witness(sub) is None


def test_check_line_bound():
    assert check_line_bound(WS(2, [(1, 0), (0, 1), (1, 1)]))
    assert check_line_bound(WS(2, [(1, 0), (0, 1), (1, 1), (1, 2)]))
    with pytest.raises(ValueError, match="faithful"):
        check_line_bound(WS(2, [(1, 1)], [3]))
    with pytest.raises(ValueError, match="rank"):
        check_line_bound(WS(1, [(1,), (2,)]))
    with pytest.raises(ValueError, match="decomposable"):
        check_line_bound(WS(2, [(1, 0), (0, 1)]))


def test_witness_matches_brute_force_small_universe():
    count = 0
    for ws in enumerate_weight_systems(2, 2, 3, 1):
        assert (find_split_witness(ws) is not None) == oracle_split_witness(ws)
        count += 1
    assert count > 200


def test_witness_matches_brute_force_random_larger():
    rng = random.Random(23)
    for _ in range(40):
        k = rng.randint(2, 4)
        m = rng.randint(2, 7)
        raw = []
        while len(raw) < m:
            v = tuple(rng.randint(-2, 2) for _ in range(k))
            if any(v):
                raw.append(v)
        ws = WS(k, raw)
        assert (find_split_witness(ws) is not None) == oracle_split_witness(ws)


def test_blocks_match_iterated_witness_splitting():
    rng = random.Random(29)
    for _ in range(30):
        k = rng.randint(2, 3)
        m = rng.randint(2, 6)
        raw = []
        while len(raw) < m:
            v = tuple(rng.randint(-2, 2) for _ in range(k))
            if any(v):
                raw.append(v)
        ws = WS(k, raw)
        got = tuple(sorted(indecomposable_blocks(ws).blocks))
        assert got == iterated_witness_blocks(ws)


def test_multiplicities_do_not_affect_splitting():
    base = WS(2, [(1, 0), (0, 1), (1, 1)])
    fat = WS(2, [(1, 0), (0, 1), (1, 1)], [3, 2, 2])
    assert (find_split_witness(base) is None) == (find_split_witness(fat) is None)
    assert indecomposable_blocks(base).blocks == indecomposable_blocks(fat).blocks


def test_exactly_k_lines_forces_decomposable():
    # contrapositive of the line bound, checked through the witness search
    for ws in enumerate_weight_systems(2, 2, 3, 1):
        if ws.is_faithful() and len(induced_lines(ws)) == ws.k:
            assert is_decomposable(ws).decomposable
