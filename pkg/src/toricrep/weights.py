"""Weight systems of torus representations.

A representation of the k-torus on a real vector space V is encoded by the
dimension of its fixed subspace together with the multiset of nonzero
integer weights; a weight and its negative span the same real isotypical
plane pair, so weights are stored sign-canonically (first nonzero entry
positive) with merged multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .lattice import IntMatrix, rank, snf


def sign_canonical(vec: Sequence[int]) -> tuple[int, ...]:
    """Flip the sign so the first nonzero entry is positive."""
    v = tuple(int(x) for x in vec)
    for x in v:
        if x != 0:
            return v if x > 0 else tuple(-y for y in v)
    return v


def primitive(vec: Sequence[int]) -> tuple[int, ...]:
    """Divide out the content and sign-canonicalize; identifies the line."""
    v = sign_canonical(vec)
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector spans no line")
    return tuple(x // g for x in v)


@dataclass(frozen=True)
class IsotypicalComponent:
    """One real isotypical block and where it sits in V's coordinates."""

    weight: tuple[int, ...]
    multiplicity: int
    real_dim: int
    coordinate_offset: int


@dataclass(frozen=True)
class WeightSystem:
    k: int
    fixed_dim: int
    weights: tuple[tuple[int, ...], ...]
    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("torus rank must be at least 1")
        if self.fixed_dim < 0:
            raise ValueError("fixed dimension must be non-negative")
        if len(self.weights) != len(self.multiplicities):
            raise ValueError("weights and multiplicities differ in length")
        seen = set()
        for w, m in zip(self.weights, self.multiplicities):
            if len(w) != self.k:
                raise ValueError(f"weight {w} has length {len(w)}, expected {self.k}")
            if all(x == 0 for x in w):
                raise ValueError("zero weight vector")
            if w != sign_canonical(w):
                raise ValueError(f"weight {w} is not sign-canonical")
            if w in seen:
                raise ValueError(f"duplicate weight {w}")
            if m < 1:
                raise ValueError("multiplicity must be at least 1")
            seen.add(w)
        if tuple(sorted(self.weights)) != self.weights:
            raise ValueError("weights must be sorted")

    @classmethod
    def canonicalize(cls, k: int, raw_weights: Iterable[Sequence[int]],
                     multiplicities: Sequence[int] | None = None,
                     fixed_dim: int = 0) -> WeightSystem:
        """Merge each weight with its negative, sum multiplicities, sort.

        ``raw_weights`` may repeat vectors (including up to sign); repeats
        accumulate.  When ``multiplicities`` is omitted each raw vector
        counts once.
        """
        raw = [tuple(int(x) for x in w) for w in raw_weights]
        if multiplicities is None:
            mults = [1] * len(raw)
        else:
            mults = [int(m) for m in multiplicities]
            if len(mults) != len(raw):
                raise ValueError("weights and multiplicities differ in length")
        merged: dict[tuple[int, ...], int] = {}
        for w, m in zip(raw, mults):
            if all(x == 0 for x in w):
                raise ValueError("zero weight vector rejected")
            if m < 1:
                raise ValueError("multiplicity must be at least 1")
            c = sign_canonical(w)
            merged[c] = merged.get(c, 0) + m
        ordered = sorted(merged)
        return cls(k, fixed_dim, tuple(ordered), tuple(merged[w] for w in ordered))

    @property
    def total_dim(self) -> int:
        return self.fixed_dim + 2 * sum(self.multiplicities)

    def weight_matrix(self) -> IntMatrix:
        return IntMatrix.from_rows(self.weights, cols=self.k)

    def weight_rank(self) -> int:
        if not self.weights:
            return 0
        return rank(self.weight_matrix())

    def has_discrete_kernel(self) -> bool:
        """The kernel is finite exactly when the weights span full rank."""
        return self.weight_rank() == self.k

    def is_faithful(self) -> bool:
        """Trivial kernel: the weights must generate the full character lattice,
        i.e. the weight matrix has k invariant factors all equal to 1."""
        if len(self.weights) < self.k:
            return False
        factors = snf(self.weight_matrix())
        return len(factors) >= self.k and all(d == 1 for d in factors[:self.k])

    def cohomogeneity(self) -> int:
        """dim of the orbit space: principal torus orbits have the weight rank."""
        return self.total_dim - self.weight_rank()

    def components(self) -> tuple[IsotypicalComponent, ...]:
        out = []
        offset = self.fixed_dim
        for w, m in zip(self.weights, self.multiplicities):
            out.append(IsotypicalComponent(w, m, 2 * m, offset))
            offset += 2 * m
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "fixed_dim": self.fixed_dim,
            "weights": [list(w) for w in self.weights],
            "multiplicities": list(self.multiplicities),
        }

    @classmethod
    def from_json(cls, data: dict) -> WeightSystem:
        if not isinstance(data, dict):
            raise ValueError("weight system JSON must be an object")
        try:
            k = int(data["k"])
            weights = data["weights"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed weight system JSON: {exc}") from exc
        mults = data.get("multiplicities")
        fixed_dim = int(data.get("fixed_dim", 0))
        if mults is not None and len(mults) != len(weights):
            raise ValueError("weights and multiplicities arrays must have equal length")
        return cls.canonicalize(k, weights, multiplicities=mults, fixed_dim=fixed_dim)
