"""Exact integer and rational matrix kernels.

All arithmetic runs on Python ints and ``fractions.Fraction``; intermediate
cofactor growth is therefore harmless.  Matrices are row-major and immutable;
lattices are always row spans.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

RationalLike = Union[int, str, Fraction]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix; ``entries`` is a tuple of row tuples."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows:
            raise ValueError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged rows")
            for x in row:
                if not isinstance(x, int):
                    raise ValueError(f"non-integer entry {x!r}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> IntMatrix:
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if not data:
            if cols is None:
                raise ValueError("column count required for an empty matrix")
            return cls(0, cols, ())
        return cls(len(data), len(data[0]), data)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.entries[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in product")
        data = tuple(
            tuple(sum(self.entries[i][t] * other.entries[t][j] for t in range(self.cols))
                  for j in range(other.cols))
            for i in range(self.rows))
        return IntMatrix(self.rows, other.cols, data)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in difference")
        data = tuple(tuple(a - b for a, b in zip(ra, rb))
                     for ra, rb in zip(self.entries, other.entries))
        return IntMatrix(self.rows, self.cols, data)

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in sum")
        data = tuple(tuple(a + b for a, b in zip(ra, rb))
                     for ra, rb in zip(self.entries, other.entries))
        return IntMatrix(self.rows, self.cols, data)

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for i in range(n - 1):
            if a[i][i] == 0:
                piv = next((r for r in range(i + 1, n) if a[r][i] != 0), None)
                if piv is None:
                    return 0
                a[i], a[piv] = a[piv], a[i]
                sign = -sign
            for r in range(i + 1, n):
                for c in range(i + 1, n):
                    a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
                a[r][i] = 0
            prev = a[i][i]
        return sign * a[n - 1][n - 1]

    def to_rational(self) -> RationalMatrix:
        return RationalMatrix(self.rows, self.cols,
                              tuple(tuple(Fraction(x) for x in row) for row in self.entries))

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable matrix of exact rationals (Fraction keeps lowest terms)."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows:
            raise ValueError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged rows")
            for x in row:
                if not isinstance(x, Fraction):
                    raise ValueError(f"non-Fraction entry {x!r}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[RationalLike]]) -> RationalMatrix:
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not data:
            raise ValueError("empty rational matrix")
        return cls(len(data), len(data[0]), data)

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        one, zero = Fraction(1), Fraction(0)
        return cls(n, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(self.cols, self.rows,
                              tuple(tuple(self.entries[i][j] for i in range(self.rows))
                                    for j in range(self.cols)))

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in product")
        data = tuple(
            tuple(sum((self.entries[i][t] * other.entries[t][j] for t in range(self.cols)),
                      Fraction(0))
                  for j in range(other.cols))
            for i in range(self.rows))
        return RationalMatrix(self.rows, other.cols, data)

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in difference")
        data = tuple(tuple(a - b for a, b in zip(ra, rb))
                     for ra, rb in zip(self.entries, other.entries))
        return RationalMatrix(self.rows, self.cols, data)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(self.entries[i][j] == (1 if i == j else 0)
                   for i in range(self.rows) for j in range(self.cols))

    def rank(self) -> int:
        return _fraction_rank([list(row) for row in self.entries])

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.entries]


def _fraction_rank(a: list[list[Fraction]]) -> int:
    """Rank by ordinary Gaussian elimination over the rationals."""
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def rank(m: IntMatrix) -> int:
    """Exact rank over the rationals (independent of the HNF path)."""
    return _fraction_rank([[Fraction(x) for x in row] for row in m.entries])


def hnf(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form with its unimodular witness.

    Returns (h, u) with u*m = h, |det u| = 1, h in row-echelon form with
    positive pivots and the entries above each pivot reduced into
    [0, pivot).  Zero rows sit at the bottom, so the nonzero rows of h are
    a canonical basis of the row span of m.
    """
    if m.rows == 0:
        raise ValueError("empty matrix")
    h = [list(row) for row in m.entries]
    u = [[1 if i == j else 0 for j in range(m.rows)] for i in range(m.rows)]
    pr = 0
    pivots: list[tuple[int, int]] = []
    for col in range(m.cols):
        piv = next((i for i in range(pr, m.rows) if h[i][col] != 0), None)
        if piv is None:
            continue
        if piv != pr:
            h[pr], h[piv] = h[piv], h[pr]
            u[pr], u[piv] = u[piv], u[pr]
        for i in range(pr + 1, m.rows):
            b = h[i][col]
            if b == 0:
                continue
            a = h[pr][col]
            g, x, y = xgcd(a, b)
            ag, bg = a // g, b // g
            h[pr], h[i] = ([x * p + y * q for p, q in zip(h[pr], h[i])],
                           [-bg * p + ag * q for p, q in zip(h[pr], h[i])])
            u[pr], u[i] = ([x * p + y * q for p, q in zip(u[pr], u[i])],
                           [-bg * p + ag * q for p, q in zip(u[pr], u[i])])
        if h[pr][col] < 0:
            h[pr] = [-x for x in h[pr]]
            u[pr] = [-x for x in u[pr]]
        pivots.append((pr, col))
        pr += 1
        if pr == m.rows:
            break
    for i, col in pivots:
        for ii in range(i):
            q = h[ii][col] // h[i][col]
            if q:
                h[ii] = [p - q * r for p, r in zip(h[ii], h[i])]
                u[ii] = [p - q * r for p, r in zip(u[ii], u[i])]
    return IntMatrix.from_rows(h, cols=m.cols), IntMatrix.from_rows(u, cols=m.rows)


def snf(m: IntMatrix) -> list[int]:
    """Invariant factors d1 | d2 | ... | dr >= 1, zero-padded to min(rows, cols).

    The matrix is first diagonalized by unimodular row and column
    operations; the diagonal is then folded into a divisibility chain via
    gcd/lcm swaps, which yields the invariant factors of any
    diagonalization.
    """
    if m.rows == 0:
        raise ValueError("empty matrix")
    a = [list(row) for row in m.entries]
    rows, cols = m.rows, m.cols
    n = min(rows, cols)
    s = 0
    while s < n:
        piv = None
        best = None
        for i in range(s, rows):
            for j in range(s, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    piv, best = (i, j), abs(a[i][j])
        if piv is None:
            break
        pi, pj = piv
        a[s], a[pi] = a[pi], a[s]
        for row_ in a:
            row_[s], row_[pj] = row_[pj], row_[s]
        while True:
            for i in range(s + 1, rows):
                b = a[i][s]
                if b == 0:
                    continue
                p = a[s][s]
                if b % p == 0:
                    q = b // p
                    a[i] = [w - q * v for v, w in zip(a[s], a[i])]
                else:
                    g, x, y = xgcd(p, b)
                    pg, bg = p // g, b // g
                    a[s], a[i] = ([x * v + y * w for v, w in zip(a[s], a[i])],
                                  [-bg * v + pg * w for v, w in zip(a[s], a[i])])
            for j in range(s + 1, cols):
                b = a[s][j]
                if b == 0:
                    continue
                p = a[s][s]
                if b % p == 0:
                    q = b // p
                    for row_ in a:
                        row_[j] -= q * row_[s]
                else:
                    g, x, y = xgcd(p, b)
                    pg, bg = p // g, b // g
                    for row_ in a:
                        row_[s], row_[j] = (x * row_[s] + y * row_[j],
                                            -bg * row_[s] + pg * row_[j])
            if all(a[i][s] == 0 for i in range(s + 1, rows)) and \
               all(a[s][j] == 0 for j in range(s + 1, cols)):
                break
        s += 1
    diag = [abs(a[i][i]) for i in range(n)]
    diag = sorted(diag, key=lambda d: (d == 0, d))
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            x, y = diag[i], diag[i + 1]
            if y == 0 or x == 0:
                continue
            if y % x != 0:
                g = gcd(x, y)
                diag[i], diag[i + 1] = g, x * y // g
                changed = True
    nonzero = sorted(d for d in diag if d != 0)
    return nonzero + [0] * (n - len(nonzero))


def in_sublattice(v: Sequence[int], gens: IntMatrix) -> bool:
    """Decide whether v is an integer combination of the rows of gens.

    Works by back-substitution against the Hermite basis: each pivot must
    divide the current residual at its column, and the residual must
    vanish once all pivots are consumed.
    """
    if len(v) != gens.cols:
        raise ValueError(f"vector length {len(v)} does not match {gens.cols} columns")
    if gens.rows == 0:
        return all(x == 0 for x in v)
    h, _ = hnf(gens)
    w = [int(x) for x in v]
    for row in h.entries:
        col = next((j for j, x in enumerate(row) if x != 0), None)
        if col is None:
            break
        if w[col] != 0:
            if w[col] % row[col] != 0:
                return False
            q = w[col] // row[col]
            w = [wi - q * ri for wi, ri in zip(w, row)]
    return all(x == 0 for x in w)


def right_kernel_basis(m: IntMatrix) -> IntMatrix:
    """Integer basis (as rows) of {z : m z = 0}, via HNF of the transpose."""
    h, u = hnf(m.transpose())
    zero_rows = [i for i in range(h.rows) if all(x == 0 for x in h.entries[i])]
    return IntMatrix.from_rows([u.entries[i] for i in zero_rows], cols=m.cols)


def lattice_key(rows: Iterable[Sequence[int]], cols: int) -> tuple[tuple[int, ...], ...]:
    """Canonical key of an integer row span: the nonzero rows of its HNF."""
    mat = IntMatrix.from_rows(rows, cols=cols)
    if mat.rows == 0:
        return ()
    h, _ = hnf(mat)
    return tuple(row for row in h.entries if any(x != 0 for x in row))
