"""Floating-point orbit analysis of the SO(2) x SO(n) family.

The representation acts on (R^2 tensor R^n) + a sum of weighted planes for
the circle factor.  Orbit dimensions are numerical ranks of the action
matrix whose columns are Lie-algebra basis elements applied to a sample
point; every rank decision is re-run at a tenth and ten times the cutoff
and flagged when unstable, since this is the only inexact module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np


class ToleranceInstability(Exception):
    """A numerical rank decision changed under a factor-10 tolerance shift."""


@dataclass(frozen=True)
class FamilySpec:
    n: int
    circle_weights: tuple[int, ...]
    seed: int = 42
    samples: int = 100
    svd_tol: float = 1e-8

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("the orthogonal factor needs n >= 3")
        if not self.circle_weights:
            raise ValueError("at least one circle weight is required")
        if any(int(a) != a or a == 0 for a in self.circle_weights):
            raise ValueError("circle weights must be nonzero integers")
        if self.samples < 1:
            raise ValueError("at least one sample is required")
        object.__setattr__(self, "circle_weights", tuple(int(a) for a in self.circle_weights))

    @property
    def m(self) -> int:
        return len(self.circle_weights)

    @property
    def dim_w(self) -> int:
        return 2 * self.n + 2 * self.m

    @property
    def dim_h(self) -> int:
        return 1 + self.n * (self.n - 1) // 2


@dataclass(frozen=True)
class OrbitProbe:
    point: np.ndarray
    orbit_dim: int
    isotropy_algebra_dim: int
    tol_stable: bool


def so_basis(n: int) -> list[np.ndarray]:
    """Standard basis E_pq (p < q) of the skew-symmetric n x n matrices."""
    basis = []
    for p in range(n):
        for q in range(p + 1, n):
            e = np.zeros((n, n))
            e[p, q] = 1.0
            e[q, p] = -1.0
            basis.append(e)
    return basis


_J2 = np.array([[0.0, -1.0], [1.0, 0.0]])


def action_matrix(spec: FamilySpec, point: np.ndarray) -> np.ndarray:
    """Columns are the Lie-algebra basis elements applied to ``point``.

    The first column is the circle generator (rotating the tensor factor
    with speed 1 and the j-th extra plane with speed a_j); the remaining
    columns run over the E_pq basis acting on the tensor factor alone.
    """
    point = np.asarray(point, dtype=float)
    if point.shape != (spec.dim_w,):
        raise ValueError(f"point must have {spec.dim_w} coordinates")
    u = point[: 2 * spec.n].reshape(2, spec.n)
    w2 = point[2 * spec.n:].reshape(spec.m, 2)
    cols = []
    circle = np.concatenate([
        (_J2 @ u).ravel(),
        np.concatenate([a * (_J2 @ plane) for a, plane in zip(spec.circle_weights, w2)]),
    ])
    cols.append(circle)
    zeros_w2 = np.zeros(2 * spec.m)
    for e in so_basis(spec.n):
        cols.append(np.concatenate([(u @ e.T).ravel(), zeros_w2]))
    return np.column_stack(cols)


def _rank_with_stability(mat: np.ndarray, tol: float) -> tuple[int, bool]:
    """Numerical rank at the relative cutoff, plus a factor-10 stability flag."""
    s = np.linalg.svd(mat, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0, True
    ranks = [int(np.sum(s > t * s[0])) for t in (tol / 10, tol, tol * 10)]
    return ranks[1], ranks[0] == ranks[1] == ranks[2]


def _sample_point(spec: FamilySpec, index: int) -> np.ndarray:
    rng = np.random.default_rng((spec.seed, index))
    return rng.standard_normal(spec.dim_w)


def orbit_probes(spec: FamilySpec) -> list[OrbitProbe]:
    """One probe per sample point, with per-sample seeded randomness."""
    probes = []
    for i in range(spec.samples):
        point = _sample_point(spec, i)
        dim, stable = _rank_with_stability(action_matrix(spec, point), spec.svd_tol)
        probes.append(OrbitProbe(point, dim, spec.dim_h - dim, stable))
    return probes


def _max_orbit_dim(spec: FamilySpec) -> int:
    probes = orbit_probes(spec)
    if not all(p.tol_stable for p in probes):
        raise ToleranceInstability(
            "orbit-dimension rank decisions are unstable under tolerance shifts")
    return max(p.orbit_dim for p in probes)


def principal_isotropy_algebra_dim(spec: FamilySpec) -> int:
    """Isotropy-algebra dimension along principal orbits; the family's
    closed form is (n-2)(n-3)/2."""
    return spec.dim_h - _max_orbit_dim(spec)


def cohomogeneity_numeric(spec: FamilySpec) -> int:
    """Orbit-space dimension; the family attains 2 + dim of the weighted planes."""
    return spec.dim_w - _max_orbit_dim(spec)


def lrs_quotient_dim(spec: FamilySpec) -> int:
    """Dimension of the reduction acting on the principal-isotropy fixed space.

    The isotropy algebra at a generic point is identified numerically from
    the kernel of the action matrix; its normalizer inside the full algebra
    is then cut out by the exact bracket-inclusion conditions, and the
    difference of dimensions is returned.  Refuses n = 3, where the
    principal isotropy is a finite group this Lie-algebra computation
    cannot see.
    """
    if spec.n < 4:
        raise ValueError(
            "the reduction dimension needs n >= 4: at n = 3 the principal isotropy "
            "is finite and invisible to Lie-algebra ranks")
    mat = action_matrix(spec, _sample_point(spec, 0))
    _, s, vh = np.linalg.svd(mat)
    ranks = [int(np.sum(s > t * s[0])) for t in
             (spec.svd_tol / 10, spec.svd_tol, spec.svd_tol * 10)]
    if not ranks[0] == ranks[1] == ranks[2]:
        raise ToleranceInstability("isotropy-kernel rank is unstable under tolerance shifts")
    r = ranks[1]
    kernel = vh[r:]  # orthonormal rows spanning the isotropy algebra coefficients
    d = kernel.shape[0]
    if d == 0:
        raise ValueError("trivial principal isotropy algebra, nothing to normalize")
    basis = so_basis(spec.n)
    pq_index = [(p, q) for p in range(spec.n) for q in range(p + 1, spec.n)]

    def to_matrix(coeffs: np.ndarray) -> np.ndarray:
        out = np.zeros((spec.n, spec.n))
        for c, e in zip(coeffs[1:], basis):
            out += c * e
        return out

    def to_coeffs(matrix: np.ndarray) -> np.ndarray:
        # circle coefficient is zero: the circle factor is central
        return np.concatenate([[0.0], [matrix[p, q] for p, q in pq_index]])

    kernel_mats = [to_matrix(k) for k in kernel]
    proj = np.eye(spec.dim_h) - kernel.T @ kernel
    cols = []
    for alpha in range(spec.dim_h):
        e_alpha = np.zeros(spec.dim_h)
        e_alpha[alpha] = 1.0
        y_alpha = to_matrix(e_alpha)
        cols.append(np.concatenate([
            proj @ to_coeffs(y_alpha @ km - km @ y_alpha) for km in kernel_mats]))
    bracket_system = np.column_stack(cols)
    norm_rank, stable = _rank_with_stability(bracket_system, spec.svd_tol)
    if not stable:
        raise ToleranceInstability("normalizer rank is unstable under tolerance shifts")
    return (spec.dim_h - norm_rank) - d


def circle_rep_is_polar(weights: Sequence[int]) -> bool:
    """A circle acting on a sum of weighted planes is polar only for a
    single plane."""
    ws = [int(a) for a in weights]
    if not ws or any(a == 0 for a in ws):
        raise ValueError("weights must be nonzero integers")
    return len(ws) <= 1


def family_report(spec: FamilySpec) -> dict:
    """Aggregate report for one family member; never raises on instability,
    it reports the flag instead."""
    probes = orbit_probes(spec)
    stable = all(p.tol_stable for p in probes)
    max_orbit = max(p.orbit_dim for p in probes)
    report = {
        "n": spec.n,
        "weights": list(spec.circle_weights),
        "chm": spec.dim_w - max_orbit,
        "isotropy_dim": spec.dim_h - max_orbit,
        "lrs_dim": None,
        "tol_stable": stable,
    }
    if spec.n >= 4:
        try:
            report["lrs_dim"] = lrs_quotient_dim(spec)
        except ToleranceInstability:
            report["tol_stable"] = False
    return report


def expected_values(spec: FamilySpec) -> dict:
    """Closed-form targets for the family: the principal isotropy algebra is
    the rotation algebra in n-2 letters and the reduction is 2-dimensional."""
    return {
        "chm": 2 + 2 * spec.m,
        "isotropy_dim": (spec.n - 2) * (spec.n - 3) // 2,
        "lrs_dim": 2 if spec.n >= 4 else None,
    }


def verify_family(spec: FamilySpec) -> tuple[dict, list[str]]:
    """Report plus the list of closed-form equalities that failed."""
    report = family_report(spec)
    expect = expected_values(spec)
    failures = []
    if not report["tol_stable"]:
        failures.append("tolerance instability in rank decisions")
    for key in ("chm", "isotropy_dim", "lrs_dim"):
        if expect[key] is not None and report[key] != expect[key]:
            failures.append(f"{key}: expected {expect[key]}, computed {report[key]}")
    return report, failures
