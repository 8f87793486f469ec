"""Exhaustive desk-scale verification sweeps.

Each sweep enumerates every weight system (and, where relevant, every
signed block-permutation involution) inside an explicit finite universe and
returns the counterexample list, which the theory predicts to be empty.
Enumeration order is deterministic, so any counterexample reproduces from
its printed input.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .involutions import (
    VERDICT_K_PLUS_2,
    InvolutiveExtension,
    PropertyViolation,
    block_involution,
    centralizer_dim,
    conclude_cohomogeneity,
    fixed_space_dim,
    is_nice_involution,
    weight_class_pairing,
)
from .lattice import IntMatrix
from .splitting import check_line_bound, find_split_witness, is_decomposable
from .strata import minimal_reduction_candidate
from .weights import WeightSystem, sign_canonical


@dataclass
class SweepResult:
    check_id: str
    ranges: dict
    enumerated: int = 0
    passed_preconditions: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "check_id": self.check_id,
            "ranges": self.ranges,
            "enumerated": self.enumerated,
            "passed_preconditions": self.passed_preconditions,
            "counterexamples": self.counterexamples,
        }


def canonical_weight_vectors(k: int, max_entry: int) -> list[tuple[int, ...]]:
    """All sign-canonical nonzero integer vectors with bounded entries."""
    out = set()
    for vec in itertools.product(range(-max_entry, max_entry + 1), repeat=k):
        if any(x != 0 for x in vec):
            out.add(sign_canonical(vec))
    return sorted(out)


def enumerate_weight_systems(k: int, max_entry: int, max_classes: int,
                             max_mult: int) -> Iterator[WeightSystem]:
    """Every weight system over the canonical vectors, in sorted order."""
    vectors = canonical_weight_vectors(k, max_entry)
    for size in range(1, max_classes + 1):
        for combo in itertools.combinations(vectors, size):
            for mults in itertools.product(range(1, max_mult + 1), repeat=size):
                yield WeightSystem(k, 0, combo, mults)


def order_two_matrices(k: int, max_entry: int = 2) -> list[IntMatrix]:
    """All integer k x k involutions with bounded entries, identity included."""
    out = []
    for flat in itertools.product(range(-max_entry, max_entry + 1), repeat=k * k):
        m = IntMatrix.from_rows(
            [flat[i * k:(i + 1) * k] for i in range(k)], cols=k)
        if (m @ m) == IntMatrix.identity(k):
            out.append(m)
    return out


def involution_candidates(ws: WeightSystem,
                          a_matrices: Sequence[IntMatrix] | None = None,
                          ) -> Iterator[tuple[InvolutiveExtension, dict]]:
    """All signed block-permutation involutions compatible with some
    bounded lattice involution, skipping the identity element."""
    if a_matrices is None:
        a_matrices = order_two_matrices(ws.k)
    for a_matrix in a_matrices:
        pairing = weight_class_pairing(ws, a_matrix)
        if pairing is None:
            continue
        plus_fixed = sum(1 for i, (j, s) in enumerate(pairing) if j == i and s == 1)
        for signs in itertools.product((1, -1), repeat=plus_fixed):
            omega = block_involution(ws, a_matrix, signs)
            if omega.is_identity():
                continue
            ext = InvolutiveExtension(ws, a_matrix, omega)
            yield ext, {"A": a_matrix.to_lists(), "signs": list(signs)}


def sweep_line_bound(k: int = 2, max_entry: int = 2, max_classes: int = 4,
                     max_mult: int = 2) -> SweepResult:
    """Faithful indecomposable systems must induce at least k+1 lines."""
    result = SweepResult("cor2.7", {
        "k": k, "max_entry": max_entry, "max_classes": max_classes, "max_mult": max_mult})
    for ws in enumerate_weight_systems(k, max_entry, max_classes, max_mult):
        result.enumerated += 1
        if not ws.is_faithful() or is_decomposable(ws).decomposable:
            continue
        result.passed_preconditions += 1
        if not check_line_bound(ws):
            result.counterexamples.append({"weight_system": ws.to_json()})
    return result


def sweep_even_dim(ks: Sequence[int] = (1, 2), max_entry: int = 2, max_classes: int = 4,
                   max_mult: int = 2) -> SweepResult:
    """Minimal-reduction candidates have even dimension at least 2k+2."""
    result = SweepResult("lem3.3", {
        "k": list(ks), "max_entry": max_entry, "max_classes": max_classes,
        "max_mult": max_mult})
    for k in ks:
        for ws in enumerate_weight_systems(k, max_entry, max_classes, max_mult):
            result.enumerated += 1
            if not minimal_reduction_candidate(ws).ok:
                continue
            result.passed_preconditions += 1
            total = ws.total_dim
            if total % 2 != 0 or total < 2 * k + 2:
                result.counterexamples.append(
                    {"weight_system": ws.to_json(), "total_dim": total})
    return result


def sweep_no_codim_one(ks: Sequence[int] = (1, 2), max_entry: int = 2,
                       max_classes: int = 3, max_mult: int = 2) -> SweepResult:
    """No nice involution fixes a subspace of codimension 1."""
    result = SweepResult("lem3.4", {
        "k": list(ks), "max_entry": max_entry, "max_classes": max_classes,
        "max_mult": max_mult})
    for k in ks:
        a_matrices = order_two_matrices(k)
        for ws in enumerate_weight_systems(k, max_entry, max_classes, max_mult):
            result.enumerated += 1
            for ext, recipe in involution_candidates(ws, a_matrices):
                if not is_nice_involution(ext):
                    continue
                result.passed_preconditions += 1
                codim = ws.total_dim - fixed_space_dim(ext)
                if codim == 1:
                    result.counterexamples.append(
                        {"weight_system": ws.to_json(), **recipe, "codim": codim})
    return result


def sweep_k1_verdicts(max_entry: int = 3, max_classes: int = 3,
                      max_mult: int = 2) -> SweepResult:
    """Every nice involution over a rank-1 candidate concludes cohomogeneity 3."""
    result = SweepResult("thm4.1", {
        "k": 1, "max_entry": max_entry, "max_classes": max_classes, "max_mult": max_mult})
    a_matrices = order_two_matrices(1)
    for ws in enumerate_weight_systems(1, max_entry, max_classes, max_mult):
        result.enumerated += 1
        if not minimal_reduction_candidate(ws).ok:
            continue
        for ext, recipe in involution_candidates(ws, a_matrices):
            if not is_nice_involution(ext):
                continue
            result.passed_preconditions += 1
            try:
                verdict = conclude_cohomogeneity(ext)
            except PropertyViolation as exc:
                result.counterexamples.append(
                    {"weight_system": ws.to_json(), **recipe, "violation": str(exc)})
                continue
            if verdict.kind != VERDICT_K_PLUS_2 or verdict.cohomogeneity != 3:
                result.counterexamples.append(
                    {"weight_system": ws.to_json(), **recipe,
                     "verdict": verdict.to_json()})
    return result


def sweep_codim_top(ks: Sequence[int] = (1, 2), max_entry: int = 2,
                    max_classes: int = 3, max_mult: int = 2) -> SweepResult:
    """Nice involutions of top codimension k+1 force k+1 planes and
    cohomogeneity k+2, matching the weight-rank computation exactly."""
    result = SweepResult("prop3.8", {
        "k": list(ks), "max_entry": max_entry, "max_classes": max_classes,
        "max_mult": max_mult})
    for k in ks:
        a_matrices = order_two_matrices(k)
        for ws in enumerate_weight_systems(k, max_entry, max_classes, max_mult):
            result.enumerated += 1
            if not minimal_reduction_candidate(ws).ok:
                continue
            for ext, recipe in involution_candidates(ws, a_matrices):
                if not is_nice_involution(ext):
                    continue
                if ws.total_dim - fixed_space_dim(ext) != k + 1:
                    continue
                result.passed_preconditions += 1
                try:
                    verdict = conclude_cohomogeneity(ext)
                except PropertyViolation as exc:
                    result.counterexamples.append(
                        {"weight_system": ws.to_json(), **recipe, "violation": str(exc)})
                    continue
                if verdict.kind != VERDICT_K_PLUS_2 or verdict.cohomogeneity != k + 2:
                    result.counterexamples.append(
                        {"weight_system": ws.to_json(), **recipe,
                         "verdict": verdict.to_json()})
    return result


def oracle_split_witness(ws: WeightSystem) -> bool:
    """Brute-force bipartition oracle: some split with additive ranks exists.

    Kept deliberately separate from the production search so the two can
    disagree in tests if either is wrong.
    """
    from .lattice import rank as _rank

    m = len(ws.weights)
    for mask in range(1, 2 ** m - 1):
        part1 = [ws.weights[i] for i in range(m) if mask >> i & 1]
        part2 = [ws.weights[i] for i in range(m) if not mask >> i & 1]
        r1 = _rank(IntMatrix.from_rows(part1, cols=ws.k))
        r2 = _rank(IntMatrix.from_rows(part2, cols=ws.k))
        if r1 + r2 == ws.weight_rank():
            return True
    return False


def iterated_witness_blocks(ws: WeightSystem) -> tuple[tuple[int, ...], ...]:
    """Independent reference for the block decomposition: split with the
    witness search until nothing splits, tracking index subsets directly."""
    from .lattice import rank as _rank

    def subset_rank(indices: tuple[int, ...]) -> int:
        if not indices:
            return 0
        return _rank(IntMatrix.from_rows([ws.weights[i] for i in indices], cols=ws.k))

    def find_split(indices: tuple[int, ...]):
        m = len(indices)
        total = subset_rank(indices)
        for mask in range(1, 2 ** m - 1):
            p1 = tuple(indices[i] for i in range(m) if mask >> i & 1)
            p2 = tuple(indices[i] for i in range(m) if not mask >> i & 1)
            if subset_rank(p1) + subset_rank(p2) == total:
                return p1, p2
        return None

    blocks = []
    stack = [tuple(range(len(ws.weights)))]
    while stack:
        part = stack.pop()
        if not part:
            continue
        split = find_split(part)
        if split is None:
            blocks.append(tuple(sorted(part)))
        else:
            stack.extend(split)
    return tuple(sorted(blocks))


SWEEPS = {
    "cor2.7": sweep_line_bound,
    "lem3.3": sweep_even_dim,
    "lem3.4": sweep_no_codim_one,
    "thm4.1": sweep_k1_verdicts,
    "prop3.8": sweep_codim_top,
}


def run_sweep(check_id: str, k: int | None = None, max_entry: int | None = None,
              max_classes: int | None = None, max_mult: int | None = None) -> SweepResult:
    """Dispatch a named sweep with optional range overrides."""
    if check_id not in SWEEPS:
        raise ValueError(f"unknown check id {check_id!r}; choose from {sorted(SWEEPS)}")
    kwargs: dict = {}
    if max_entry is not None:
        kwargs["max_entry"] = max_entry
    if max_classes is not None:
        kwargs["max_classes"] = max_classes
    if max_mult is not None:
        kwargs["max_mult"] = max_mult
    if k is not None:
        if check_id in ("lem3.3", "lem3.4", "prop3.8"):
            kwargs["ks"] = (k,)
        elif check_id == "cor2.7":
            kwargs["k"] = k
        # thm4.1 is rank-1 by definition
    return SWEEPS[check_id](**kwargs)
