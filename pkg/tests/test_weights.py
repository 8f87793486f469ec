"""Weight-system invariants, with a numerical orbit-dimension cross-check."""

import random

import numpy as np
import pytest

from toricrep.sweeps import enumerate_weight_systems
from toricrep.weights import WeightSystem, primitive, sign_canonical

WS = WeightSystem.canonicalize


def test_sign_canonical_and_primitive():
    assert sign_canonical((-1, -2)) == (1, 2)
    assert sign_canonical((0, -3)) == (0, 3)
    assert primitive((2, 4)) == (1, 2)
    assert primitive((-3, 0)) == (1, 0)
    with pytest.raises(ValueError):
        primitive((0, 0))


def test_canonicalize_merges_opposite_weights():
    ws = WS(1, [(1,), (-1,)])
    assert ws.weights == ((1,),)
    assert ws.multiplicities == (2,)


def test_canonicalize_plain():
    ws = WS(2, [(1, 0), (0, 1), (1, 1)])
    assert ws.weights == ((0, 1), (1, 0), (1, 1))
    assert ws.multiplicities == (1, 1, 1)


def test_canonicalize_sign_merge():
    ws = WS(2, [(-1, -2), (1, 2)])
    assert ws.weights == ((1, 2),)
    assert ws.multiplicities == (2,)


def test_canonicalize_rejects_zero():
    with pytest.raises(ValueError):
        WS(2, [(0, 0)])


def test_canonicalize_idempotent_and_order_independent():
    rng = random.Random(9)
    raw = [(1, 0), (-1, 0), (2, 3), (-2, -3), (0, 1), (2, 3)]
    reference = WS(2, raw)
    for _ in range(20):
        shuffled = raw[:]
        rng.shuffle(shuffled)
        assert WS(2, shuffled) == reference
    again = WS(2, reference.weights, reference.multiplicities)
    assert again == reference


def test_total_dim():
    assert WS(1, [(1,), (2,)]).total_dim == 4
    assert WS(2, [(1, 0), (0, 1), (1, 1)]).total_dim == 6
    assert WS(1, [(1,)], fixed_dim=3).total_dim == 5


def test_discrete_kernel():
    assert WS(2, [(1, 0), (0, 1)]).has_discrete_kernel()
    assert not WS(2, [(1, 0), (2, 0)]).has_discrete_kernel()
    assert WS(1, [(2,)]).has_discrete_kernel()


def test_faithful():
    # the order-2 element acts trivially through an even weight
    assert not WS(1, [(2,)]).is_faithful()
    assert WS(1, [(1,), (2,)]).is_faithful()
    assert WS(2, [(1, 0), (0, 1), (1, 1)]).is_faithful()
    assert not WS(2, [(1, 1)], [3]).is_faithful()


def test_cohomogeneity():
    assert WS(1, [(1,), (2,)]).cohomogeneity() == 3
    assert WS(2, [(1, 0), (0, 1), (1, 1)]).cohomogeneity() == 4
    assert WS(1, [(1,)]).cohomogeneity() == 1


def numeric_orbit_dim(ws: WeightSystem, seed: int = 0) -> int:
    """Independent oracle: rank of the infinitesimal action at a random point."""
    rng = np.random.default_rng(seed)
    p = rng.standard_normal(ws.total_dim)
    cols = []
    for j in range(ws.k):
        col = np.zeros(ws.total_dim)
        for comp in ws.components():
            speed = comp.weight[j]
            for plane in range(comp.multiplicity):
                at = comp.coordinate_offset + 2 * plane
                col[at] = -speed * p[at + 1]
                col[at + 1] = speed * p[at]
        cols.append(col)
    mat = np.column_stack(cols)
    s = np.linalg.svd(mat, compute_uv=False)
    return int(np.sum(s > 1e-9 * max(s[0], 1e-30)))


def test_cohomogeneity_against_numeric_orbits():
    for ws in (WS(1, [(1,), (2,)]),
               WS(2, [(1, 0), (0, 1), (1, 1)]),
               WS(2, [(1, 0), (2, 0)]),
               WS(1, [(1,)], fixed_dim=2)):
        assert ws.cohomogeneity() == ws.total_dim - numeric_orbit_dim(ws)


def test_components_tile_contiguously():
    ws = WS(2, [(1, 0), (0, 1), (1, 1)], [2, 1, 3], fixed_dim=1)
    comps = ws.components()
    offset = ws.fixed_dim
    for comp in comps:
        assert comp.coordinate_offset == offset
        assert comp.real_dim == 2 * comp.multiplicity
        offset += comp.real_dim
    assert offset == ws.total_dim


def test_enumerated_invariants():
    checked = 0
    for ws in enumerate_weight_systems(2, 2, 3, 2):
        assert ws.total_dim % 2 == 0  # fixed_dim is 0 across the enumeration
        if ws.is_faithful():
            assert ws.has_discrete_kernel()
        assert ws.cohomogeneity() >= ws.total_dim - ws.k
        assert (ws.cohomogeneity() == ws.total_dim - ws.k) == ws.has_discrete_kernel()
        checked += 1
    assert checked > 1000


def test_json_round_trip():
    ws = WS(2, [(1, 0), (0, 1)], [2, 1], fixed_dim=1)
    assert WeightSystem.from_json(ws.to_json()) == ws
    with pytest.raises(ValueError):
        WeightSystem.from_json({"k": 2, "weights": [[1, 0]], "multiplicities": [1, 2]})
    with pytest.raises(ValueError):
        WeightSystem.from_json({"weights": [[1, 0]]})
    with pytest.raises(ValueError):
        WeightSystem.from_json([1, 2, 3])
