"""Exact linear algebra: worked examples plus randomized structural checks."""

import random
from fractions import Fraction

import pytest

from toricrep.lattice import (
    IntMatrix,
    RationalMatrix,
    hnf,
    in_sublattice,
    lattice_key,
    rank,
    right_kernel_basis,
    snf,
    xgcd,
)


def M(rows, cols=None):
    return IntMatrix.from_rows(rows, cols=cols)


def laplace_det(rows):
    """Independent determinant oracle: cofactor expansion."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * laplace_det(minor)
    return total


def test_xgcd_identity():
    rng = random.Random(7)
    for _ in range(500):
        a, b = rng.randint(-50, 50), rng.randint(-50, 50)
        g, x, y = xgcd(a, b)
        assert g >= 0
        assert x * a + y * b == g
        if a or b:
            assert a % g == 0 and b % g == 0


def test_hnf_already_normal():
    h, u = hnf(M([[2, 0], [0, 2]]))
    assert h.entries == ((2, 0), (0, 2))
    assert u.entries == ((1, 0), (0, 1))


def test_hnf_generic_two_by_two():
    m = M([[1, 2], [3, 4]])
    h, u = hnf(m)
    assert h.entries == ((1, 0), (0, 2))
    assert (u @ m) == h
    assert abs(u.det()) == 1


def test_hnf_zero_matrix():
    h, u = hnf(M([[0, 0]]))
    assert h.entries == ((0, 0),)
    assert u.entries == ((1,),)


def test_hnf_shape_properties():
    m = M([[6, 4, 2], [2, 8, 0], [0, 0, 0]])
    h, u = hnf(m)
    assert (u @ m) == h
    assert abs(u.det()) == 1
    # echelon with positive pivots and reduced columns above each pivot
    last_lead = -1
    for row in h.entries:
        lead = next((j for j, x in enumerate(row) if x != 0), None)
        if lead is None:
            continue
        assert lead > last_lead
        assert row[lead] > 0
        last_lead = lead


def test_snf_examples():
    assert snf(M([[2, 4], [4, 8]])) == [2, 0]
    assert snf(IntMatrix.identity(3)) == [1, 1, 1]
    assert snf(M([[2]])) == [2]


def test_snf_classic():
    # standard worked case: diag(1, 10, 30) up to ordering of operations
    assert snf(M([[12, 6, 4], [3, 9, 6], [2, 16, 14]])) == [1, 10, 30]


def test_rank_examples():
    assert rank(M([[1, 0], [0, 1], [1, 1]])) == 2
    assert rank(M([[0, 0], [0, 0]])) == 0
    assert rank(M([[1, 2], [2, 4]])) == 1


def test_in_sublattice_examples():
    assert in_sublattice((2, 0), M([[1, 0]]))
    assert not in_sublattice((1, 0), M([[2, 0]]))
    assert in_sublattice((1, 1), M([[1, 0], [0, 1]]))


def test_in_sublattice_dimension_mismatch():
    with pytest.raises(ValueError):
        in_sublattice((1, 0, 0), M([[1, 0]]))


def brute_force_membership(v, gens, bound=10):
    """Oracle: search all integer coefficient boxes with |c| <= bound."""
    rows = list(gens.entries)
    if not rows:
        return all(x == 0 for x in v)

    def recurse(i, acc):
        if i == len(rows):
            return list(acc) == list(v)
        for c in range(-bound, bound + 1):
            if recurse(i + 1, [a + c * g for a, g in zip(acc, rows[i])]):
                return True
        return False

    return recurse(0, [0] * len(v))


def test_in_sublattice_matches_brute_force():
    rng = random.Random(11)
    for _ in range(40):
        nrows = rng.randint(1, 2)
        cols = rng.randint(2, 3)
        gens = M([[rng.randint(-3, 3) for _ in range(cols)] for _ in range(nrows)], cols=cols)
        # half the time take a true lattice point, half the time a random vector
        if rng.random() < 0.5:
            coeffs = [rng.randint(-5, 5) for _ in range(nrows)]
            v = [sum(c * g[j] for c, g in zip(coeffs, gens.entries)) for j in range(cols)]
        else:
            v = [rng.randint(-6, 6) for _ in range(cols)]
        assert in_sublattice(v, gens) == brute_force_membership(v, gens)


def test_random_matrix_battery():
    rng = random.Random(42)
    for _ in range(200):
        r = rng.randint(1, 5)
        c = rng.randint(1, 5)
        m = M([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)], cols=c)
        h, u = hnf(m)
        assert (u @ m) == h
        assert abs(u.det()) == 1
        nonzero_rows = sum(1 for row in h.entries if any(x != 0 for x in row))
        assert rank(m) == nonzero_rows
        factors = snf(m)
        assert len(factors) == min(r, c)
        chain = [d for d in factors if d != 0]
        assert all(chain[i + 1] % chain[i] == 0 for i in range(len(chain) - 1))
        assert all(d == 0 for d in factors[len(chain):])
        if r == c and rank(m) == r:
            prod = 1
            for d in chain:
                prod *= d
            assert prod == abs(m.det())


def test_det_against_laplace():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 4)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        assert M(rows).det() == laplace_det(rows)


def test_right_kernel_basis():
    rng = random.Random(3)
    for _ in range(60):
        r = rng.randint(1, 4)
        c = rng.randint(1, 4)
        m = M([[rng.randint(-4, 4) for _ in range(c)] for _ in range(r)], cols=c)
        ker = right_kernel_basis(m)
        assert ker.rows == c - rank(m)
        for z in ker.entries:
            image = [sum(m.entries[i][j] * z[j] for j in range(c)) for i in range(r)]
            assert all(x == 0 for x in image)
        if ker.rows:
            assert rank(ker) == ker.rows


def test_lattice_key_canonical():
    # two generating sets of the same lattice share a key
    assert lattice_key([(2, 0), (0, 2)], 2) == lattice_key([(2, 2), (2, -2), (4, 0)], 2)
    assert lattice_key([], 2) == ()
    assert lattice_key([(1, 2)], 2) != lattice_key([(2, 4)], 2)


def test_rational_matrix_rank_and_identity():
    m = RationalMatrix.from_rows([["1/2", 1], [1, 2]])
    assert m.rank() == 1
    assert RationalMatrix.identity(3).is_identity()
    assert not m.is_identity()
    assert (m - m).rank() == 0
    assert m.entries[0][0] == Fraction(1, 2)


def test_int_matrix_validation():
    with pytest.raises(ValueError):
        IntMatrix(1, 2, ((1,),))
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(ValueError):
        IntMatrix.from_rows([])
