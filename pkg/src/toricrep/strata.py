"""Isotropy strata of a torus weight system and the orbit-space boundary.

Every point's isotropy subgroup is cut out by the sublattice generated by
the weights supported at the point, so strata are enumerated over subsets
of weight classes and merged whenever two subsets span the same lattice.
For abelian groups the stratum through p has the dimension of the fixed
space of its isotropy, which makes the boundary decision purely arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import IntMatrix, in_sublattice, lattice_key, rank, snf
from .splitting import is_decomposable
from .weights import WeightSystem

SUBSET_ENUMERATION_CAP = 2 ** 18


@dataclass(frozen=True)
class StratumRecord:
    """One isotropy type.

    ``support`` is the maximal set of weight-class indices lying in the
    isotropy's defining sublattice; ``isotropy_invariants`` are the
    invariant factors of the support matrix and encode the finite part of
    the isotropy group.
    """

    support: tuple[int, ...]
    isotropy_dim: int
    isotropy_invariants: tuple[int, ...]
    fixed_dim_of_isotropy: int
    stratum_dim: int
    quotient_dim: int
    quotient_codim: int

    @property
    def is_principal(self) -> bool:
        return self.quotient_codim == 0


@dataclass(frozen=True)
class ReductionCandidacy:
    ok: bool
    failures: tuple[str, ...]


def enumerate_strata(ws: WeightSystem) -> tuple[StratumRecord, ...]:
    """All isotropy types arising from support subsets, one record each.

    Subsets spanning the same lattice give the same isotropy and merge;
    the empty subset (isotropy the whole torus, fixed space V0) and the
    full subset (principal isotropy) are always present.  Records come
    back sorted by the canonical Hermite key of their lattice.
    """
    m = len(ws.weights)
    if 2 ** m > SUBSET_ENUMERATION_CAP:
        raise ValueError(
            f"{m} weight classes need 2^{m} subsets, beyond the exact-enumeration cap")
    chm = ws.cohomogeneity()
    records: dict[tuple, StratumRecord] = {}
    for mask in range(2 ** m):
        subset = [i for i in range(m) if mask >> i & 1]
        key = lattice_key([ws.weights[i] for i in subset], ws.k)
        if key in records:
            continue
        if subset:
            gens = IntMatrix.from_rows([ws.weights[i] for i in subset], cols=ws.k)
            support = tuple(i for i in range(m) if in_sublattice(ws.weights[i], gens))
            span_rank = rank(gens)
        else:
            support = ()
            span_rank = 0
        if support:
            invariants = tuple(snf(IntMatrix.from_rows(
                [ws.weights[i] for i in support], cols=ws.k)))
        else:
            invariants = ()
        isotropy_dim = ws.k - span_rank
        fixed = ws.fixed_dim + 2 * sum(ws.multiplicities[i] for i in support)
        stratum_dim = fixed
        quotient_dim = stratum_dim - (ws.k - isotropy_dim)
        records[key] = StratumRecord(
            support=support,
            isotropy_dim=isotropy_dim,
            isotropy_invariants=invariants,
            fixed_dim_of_isotropy=fixed,
            stratum_dim=stratum_dim,
            quotient_dim=quotient_dim,
            quotient_codim=chm - quotient_dim,
        )
    return tuple(records[key] for key in sorted(records))


def boundary_empty(ws: WeightSystem) -> bool:
    """True when no stratum maps to a codimension-1 set in the orbit space."""
    return all(rec.quotient_codim != 1 for rec in enumerate_strata(ws))


def has_trivial_copolarity(ws: WeightSystem) -> bool:
    """A torus orbit space has empty boundary exactly when no proper
    generalized section exists."""
    return boundary_empty(ws)


def minimal_reduction_candidate(ws: WeightSystem) -> ReductionCandidacy:
    """Screen for the systems that can appear as minimal torus reductions:
    no fixed part, faithful, indecomposable, boundary-free orbit space."""
    failures = []
    if ws.fixed_dim != 0:
        failures.append("fixed subspace is nonzero")
    if not ws.is_faithful():
        failures.append("system is not faithful")
    if is_decomposable(ws).decomposable:
        failures.append("system is decomposable")
    if not boundary_empty(ws):
        failures.append("orbit space has nonempty boundary")
    return ReductionCandidacy(not failures, tuple(failures))
