"""Decomposability of torus representations via their weight matroid.

A system splits as a product exactly when the weight classes admit a
bipartition whose two spans intersect only in zero, i.e. when the ranks of
the parts add up to the full rank; multiplicities never matter here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lattice import IntMatrix, rank
from .weights import WeightSystem, primitive

EXHAUSTIVE_CLASS_LIMIT = 12


@dataclass(frozen=True)
class SplitWitness:
    """A rank-additive bipartition of the weight-class indices."""

    theta1: tuple[int, ...]
    theta2: tuple[int, ...]


@dataclass(frozen=True)
class BlockDecomposition:
    flat_dim: int
    blocks: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class DecomposabilityResult:
    decomposable: bool
    reason: str
    witness: SplitWitness | None = None


def induced_lines(ws: WeightSystem) -> tuple[tuple[int, ...], ...]:
    """Distinct lines spanned by the weights, as primitive representatives."""
    return tuple(sorted({primitive(w) for w in ws.weights}))


def _subset_rank(ws: WeightSystem, indices: Sequence[int]) -> int:
    if not indices:
        return 0
    return rank(IntMatrix.from_rows([ws.weights[i] for i in indices], cols=ws.k))


def _split_among(ws: WeightSystem, indices: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """First rank-additive bipartition of ``indices``, in ascending-mask order
    with the lowest index pinned to the first part."""
    m = len(indices)
    if m < 2:
        return None
    total = _subset_rank(ws, indices)
    if m <= EXHAUSTIVE_CLASS_LIMIT:
        for mask in range(1 << (m - 1)):
            bits = (mask << 1) | 1
            part1 = tuple(indices[i] for i in range(m) if bits >> i & 1)
            part2 = tuple(indices[i] for i in range(m) if not bits >> i & 1)
            if not part2:
                continue
            if _subset_rank(ws, part1) + _subset_rank(ws, part2) == total:
                return part1, part2
        return None
    comps = _circuit_components([ws.weights[i] for i in indices])
    if len(comps) < 2:
        return None
    first = comps[0]
    part1 = tuple(indices[i] for i in first)
    part2 = tuple(indices[i] for i in range(m) if i not in set(first))
    return part1, part2


def find_split_witness(ws: WeightSystem) -> SplitWitness | None:
    """Rank-additive bipartition of all weight classes, or None.

    Exhaustive up to EXHAUSTIVE_CLASS_LIMIT classes; beyond that the
    matroid components supply a witness whenever one exists.
    """
    split = _split_among(ws, tuple(range(len(ws.weights))))
    if split is None:
        return None
    return SplitWitness(*split)


def is_decomposable(ws: WeightSystem) -> DecomposabilityResult:
    """Total decomposability decision for torus weight systems.

    A nonzero fixed subspace splits off as a flat factor; a fully trivial
    action splits once it has dimension at least 2; otherwise
    decomposability is equivalent to a rank-additive bipartition of the
    weight classes.
    """
    if ws.fixed_dim > 0 and ws.total_dim > ws.fixed_dim:
        return DecomposabilityResult(True, "flat factor splits off")
    if ws.fixed_dim == ws.total_dim and ws.total_dim >= 2:
        return DecomposabilityResult(True, "trivial action of dimension >= 2 splits")
    witness = find_split_witness(ws)
    if witness is not None:
        return DecomposabilityResult(True, "rank-additive split witness", witness)
    return DecomposabilityResult(False, "no flat factor and no rank-additive bipartition")


def indecomposable_blocks(ws: WeightSystem) -> BlockDecomposition:
    """Partition the weight classes into indecomposable sub-systems.

    Splits recursively with the witness search until no part admits a
    rank-additive bipartition; blocks come out sorted by smallest member.
    """
    blocks: list[tuple[int, ...]] = []
    stack: list[tuple[int, ...]] = [tuple(range(len(ws.weights)))]
    while stack:
        part = stack.pop()
        if not part:
            continue
        split = _split_among(ws, part)
        if split is None:
            blocks.append(tuple(sorted(part)))
        else:
            stack.extend(split)
    blocks.sort(key=lambda b: b[0] if b else -1)
    return BlockDecomposition(ws.fixed_dim, tuple(blocks))


def check_line_bound(ws: WeightSystem) -> bool:
    """Faithful indecomposable systems with k >= 2 must induce >= k+1 lines."""
    failures = []
    if not ws.is_faithful():
        failures.append("system is not faithful")
    if ws.k < 2:
        failures.append("torus rank is below 2")
    if is_decomposable(ws).decomposable:
        failures.append("system is decomposable")
    if failures:
        raise ValueError("line-bound preconditions violated: " + "; ".join(failures))
    return len(induced_lines(ws)) >= ws.k + 1


def _circuit_components(vectors: list[tuple[int, ...]]) -> list[list[int]]:
    """Connected components of the linear matroid on ``vectors``.

    A greedy basis is extracted over the rationals; every non-basis vector
    is joined to the basis elements appearing in its fundamental circuit.
    The resulting classes are exactly the direct-sum components.
    """
    n = len(vectors)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    basis: list[int] = []
    reduced: list[list[Fraction]] = []
    combos: list[list[Fraction]] = []  # reduced row as a combination of original basis vectors
    for i, vec in enumerate(vectors):
        row = [Fraction(x) for x in vec]
        acc = [Fraction(0)] * len(basis)
        for t, (brow, combo) in enumerate(zip(reduced, combos)):
            lead = next(j for j, x in enumerate(brow) if x != 0)
            if row[lead] != 0:
                f = row[lead] / brow[lead]
                row = [x - f * y for x, y in zip(row, brow)]
                for s, c in enumerate(combo):
                    acc[s] += f * c
        if any(x != 0 for x in row):
            basis.append(i)
            reduced.append(row)
            combos.append([-c for c in acc] + [Fraction(1)])
        else:
            for t, c in enumerate(acc):
                if c != 0:
                    union(i, basis[t])
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: g[0])
