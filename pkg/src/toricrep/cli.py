"""Command-line harness: analyze one system, replay an involution, run a
verification sweep, or check a family member numerically.

Machine-readable JSON goes to stdout, a short human summary to stderr.
Exit codes: 0 all checks pass, 1 a checked property failed (counterexample),
2 malformed or out-of-range input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .family import FamilySpec, ToleranceInstability, verify_family
from .involutions import (
    InvolutiveExtension,
    PropertyViolation,
    codim_bounds_check,
    conclude_cohomogeneity,
    fixed_space_dim,
    centralizer_dim,
    is_nice_involution,
    split_by_involution,
    validate,
)
from .splitting import indecomposable_blocks, induced_lines, is_decomposable
from .strata import boundary_empty, enumerate_strata, minimal_reduction_candidate
from .sweeps import run_sweep
from .weights import WeightSystem

RANGE_CAPS = {"k": 2, "max_entry": 3, "max_classes": 4, "max_mult": 3}


class InputProblem(Exception):
    """Anything wrong with the user's input; maps to exit code 2."""


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputProblem(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputProblem(f"{path} is not valid JSON: {exc}") from exc


def _load_weight_system(path: str) -> WeightSystem:
    try:
        return WeightSystem.from_json(_load_json(path))
    except ValueError as exc:
        raise InputProblem(f"{path}: {exc}") from exc


def _emit(report: dict, summary: str) -> None:
    sys.stdout.write(json.dumps(report, indent=2) + "\n")
    sys.stderr.write(summary + "\n")


def _analysis_report(ws: WeightSystem) -> dict:
    dec = is_decomposable(ws)
    blocks = indecomposable_blocks(ws)
    lines = induced_lines(ws)
    candidacy = minimal_reduction_candidate(ws)
    strata = enumerate_strata(ws)
    return {
        "input": ws.to_json(),
        "total_dim": ws.total_dim,
        "faithful": ws.is_faithful(),
        "discrete_kernel": ws.has_discrete_kernel(),
        "cohomogeneity": ws.cohomogeneity(),
        "line_count": len(lines),
        "induced_lines": [list(v) for v in lines],
        "decomposable": dec.decomposable,
        "decomposition_reason": dec.reason,
        "split_witness": (
            {"theta1": list(dec.witness.theta1), "theta2": list(dec.witness.theta2)}
            if dec.witness else None),
        "blocks": [list(b) for b in blocks.blocks],
        "strata": [
            {
                "support": list(rec.support),
                "isotropy_dim": rec.isotropy_dim,
                "isotropy_invariants": list(rec.isotropy_invariants),
                "fixed_dim_of_isotropy": rec.fixed_dim_of_isotropy,
                "stratum_dim": rec.stratum_dim,
                "quotient_dim": rec.quotient_dim,
                "quotient_codim": rec.quotient_codim,
            }
            for rec in strata
        ],
        "boundary_empty": boundary_empty(ws),
        "trivial_copolarity": boundary_empty(ws),
        "minimal_reduction_candidate": candidacy.ok,
        "candidacy_failures": list(candidacy.failures),
    }


def _cmd_analyze(args: argparse.Namespace) -> int:
    ws = _load_weight_system(args.weight_system)
    report = _analysis_report(ws)
    exit_code = 0
    if args.extension:
        ext_report, exit_code = _involution_report(ws, args.extension)
        report["involution"] = ext_report
    _emit(report, f"analyze: dim {report['total_dim']}, chm {report['cohomogeneity']}, "
                  f"{report['line_count']} lines, "
                  f"{'decomposable' if report['decomposable'] else 'indecomposable'}, "
                  f"boundary {'empty' if report['boundary_empty'] else 'nonempty'}")
    return exit_code


def _load_extension(ws: WeightSystem, path: str) -> InvolutiveExtension:
    data = _load_json(path)
    if not isinstance(data, dict):
        raise InputProblem(f"{path}: extension JSON must be an object")
    if "weight_system" in data:
        try:
            ext = InvolutiveExtension.from_json(data)
        except ValueError as exc:
            raise InputProblem(f"{path}: {exc}") from exc
        if ext.ws != ws:
            raise InputProblem(
                f"{path}: embedded weight system disagrees with the one supplied")
        return ext
    try:
        ext = InvolutiveExtension.from_json({"weight_system": ws.to_json(), **data})
    except ValueError as exc:
        raise InputProblem(f"{path}: {exc}") from exc
    return ext


def _involution_report(ws: WeightSystem, ext_path: str) -> tuple[dict, int]:
    ext = _load_extension(ws, ext_path)
    verdict_of = validate(ext)
    if not verdict_of.valid:
        raise InputProblem(f"invalid extension: {verdict_of.violation}")
    report: dict = {"valid": True, "nice": is_nice_involution(ext)}
    exit_code = 0
    if not report["nice"]:
        report["note"] = "the involution does not satisfy the reflection dimension identity"
        return report, exit_code
    bounds = codim_bounds_check(ext)
    report["fixed_space_dim"] = fixed_space_dim(ext)
    report["codim"] = bounds.codim
    report["centralizer_dim"] = bounds.centralizer_dim
    report["bounds_violations"] = list(bounds.violations)
    if bounds.violations:
        exit_code = 1
    report["split"] = None
    report["verdict"] = None
    candidacy = minimal_reduction_candidate(ws)
    report["verdict_preconditions_unmet"] = list(candidacy.failures)
    if candidacy.ok and ws.k in (1, 2):
        try:
            verdict = conclude_cohomogeneity(ext)
            report["verdict"] = verdict.to_json()
            if verdict.split is not None:
                report["split"] = verdict.split.to_json()
            elif ws.k == 2 and bounds.codim == 2:
                report["split"] = split_by_involution(ext).to_json()
        except PropertyViolation as exc:
            report["property_violation"] = str(exc)
            exit_code = 1
    return report, exit_code


def _cmd_involution(args: argparse.Namespace) -> int:
    ws = _load_weight_system(args.weight_system)
    report, exit_code = _involution_report(ws, args.extension)
    payload = {"weight_system": ws.to_json(), **report}
    if report.get("verdict"):
        summary = (f"involution: nice, codim {report['codim']}, "
                   f"verdict {report['verdict']['kind']} "
                   f"(chm {report['verdict']['cohomogeneity']})")
    elif report["nice"]:
        summary = f"involution: nice, codim {report['codim']}"
    else:
        summary = "involution: valid but not nice"
    if exit_code == 1:
        summary += " [PROPERTY VIOLATION]"
    _emit(payload, summary)
    return exit_code


def _cmd_verify(args: argparse.Namespace) -> int:
    for name in ("k", "max_entry", "max_classes", "max_mult"):
        value = getattr(args, name)
        if value is not None:
            if value < 1:
                raise InputProblem(f"--{name.replace('_', '-')} must be positive")
            if value > RANGE_CAPS[name]:
                raise InputProblem(
                    f"--{name.replace('_', '-')} {value} exceeds the exhaustiveness "
                    f"cap {RANGE_CAPS[name]}; unbounded sweeps are refused")
    try:
        result = run_sweep(args.check_id, k=args.k, max_entry=args.max_entry,
                           max_classes=args.max_classes, max_mult=args.max_mult)
    except ValueError as exc:
        raise InputProblem(str(exc)) from exc
    _emit(result.to_json(),
          f"verify {args.check_id}: {result.enumerated} systems, "
          f"{result.passed_preconditions} past preconditions, "
          f"{len(result.counterexamples)} counterexamples")
    return 0 if result.ok else 1


def _cmd_family(args: argparse.Namespace) -> int:
    try:
        weights = tuple(int(x) for x in args.weights.split(","))
    except ValueError as exc:
        raise InputProblem(f"--weights must be comma-separated integers: {exc}") from exc
    if len(weights) < 2:
        raise InputProblem("the family needs at least two circle weights (m >= 2)")
    try:
        spec = FamilySpec(n=args.n, circle_weights=weights, seed=args.seed,
                          samples=args.samples, svd_tol=args.tol)
    except ValueError as exc:
        raise InputProblem(str(exc)) from exc
    try:
        report, failures = verify_family(spec)
    except ToleranceInstability as exc:
        raise InputProblem(str(exc)) from exc
    report["failures"] = failures
    _emit(report,
          f"family n={spec.n} weights={list(spec.circle_weights)}: chm {report['chm']}, "
          f"isotropy {report['isotropy_dim']}, lrs {report['lrs_dim']}, "
          f"{'ok' if not failures else 'FAILED: ' + '; '.join(failures)}")
    return 0 if not failures else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricrep",
        description="Exact analysis of torus weight systems and their involutive extensions")
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="full invariant battery for one system")
    p_analyze.add_argument("weight_system", help="path to weight-system JSON")
    p_analyze.add_argument("--extension", help="optional extension JSON to check too")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_inv = sub.add_parser("involution", help="validate an involutive extension and conclude")
    p_inv.add_argument("weight_system", help="path to weight-system JSON")
    p_inv.add_argument("extension", help="path to extension JSON (A and omega)")
    p_inv.set_defaults(func=_cmd_involution)

    p_verify = sub.add_parser("verify", help="run an exhaustive verification sweep")
    p_verify.add_argument("check_id",
                          choices=["cor2.7", "lem3.3", "lem3.4", "thm4.1", "prop3.8"])
    p_verify.add_argument("--k", type=int, default=None)
    p_verify.add_argument("--max-entry", dest="max_entry", type=int, default=None)
    p_verify.add_argument("--max-classes", dest="max_classes", type=int, default=None)
    p_verify.add_argument("--max-mult", dest="max_mult", type=int, default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_family = sub.add_parser("family", help="numerical checks for one family member")
    p_family.add_argument("--n", type=int, required=True)
    p_family.add_argument("--weights", required=True,
                          help="comma-separated circle weights, e.g. 1,2")
    p_family.add_argument("--seed", type=int, default=42)
    p_family.add_argument("--samples", type=int, default=100)
    p_family.add_argument("--tol", type=float, default=1e-8)
    p_family.set_defaults(func=_cmd_family)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputProblem as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return 2
    except PropertyViolation as exc:
        sys.stderr.write(f"property violation: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
