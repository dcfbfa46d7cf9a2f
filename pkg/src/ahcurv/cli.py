"""Command line interface.

Subcommands
-----------
gen         write a curvature tensor file (random-rk | pencil | constrained)
check       validate the algebraic symmetries and J-invariance of a tensor file
invariants  print traces, Bochner norm and Ricci spectra of a tensor file
verify      run one of the verification drivers:
              theorem    two-case classification under the plane-invariance condition
              corollary  constant antiholomorphic curvature criterion, both directions
              lemma      kernel of the plane constraints (exact or float mode)
              replay     stage-by-stage derivation chain residuals

Exit codes: 0 pass, 1 a check or verification failed, 2 usage or file format
error, 3 the constraint system admits no solution, 4 the input tensor does not
satisfy the hypothesis, 5 the exact kernel computation did not stabilize.

All commands are deterministic for a fixed --seed: rerunning produces
byte-identical files and reports.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .constraints import (LemmaConfig, constrained_sample, lemma_kernel, pencil,
                          random_rk_tensor, replay_derivation, verify_corollary,
                          verify_theorem)
from .curvature import (bochner, ricci, rk_residual, star_ricci, scalars,
                        tensor_norm, validate_curvature_symmetries)
from .errors import (DimensionTooSmall, FileFormatError, HypothesisNotSatisfied,
                     Inconclusive, InvalidArgument, NoSolution, ShapeError)
from .structures import ANTIHOLOMORPHIC, HOLOMORPHIC, standard_structure
from .tensor_io import TensorFile, read_tensor_file, write_tensor_file

__all__ = ["main"]


def _fmt(x: float) -> str:
    return f"{x:.12e}"


def _emit(lines) -> None:
    for key, value in lines:
        if isinstance(value, float):
            value = _fmt(value)
        print(f"{key:<24} {value}")


def _write_json(path, payload) -> None:
    if path:
        Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True,
                                         default=float) + "\n")


def _load(path):
    tf = read_tensor_file(path)
    structure = standard_structure(tf.n)
    return tf, structure


def _cmd_gen(args) -> int:
    structure = standard_structure(args.n)
    rng = np.random.default_rng(args.seed)
    extra = {}
    if args.kind == "random-rk":
        tensor = random_rk_tensor(rng, structure)
    elif args.kind == "pencil":
        tensor = pencil(structure, args.a, args.b)
        extra = {"a": args.a, "b": args.b}
    else:
        sample = constrained_sample(structure, args.lam, args.mu, args.nu, rng)
        tensor = sample.tensor
        extra = {"lambda": args.lam, "mu": args.mu, "nu": args.nu,
                 "c_est": sample.c_est, "solution_dim": sample.solution_dim,
                 "condition_dev": sample.condition_dev}
    write_tensor_file(args.out, TensorFile(n=args.n, tensor=tensor,
                                           kind=args.kind, seed=args.seed))
    lines = [("kind", args.kind), ("n", args.n), ("seed", args.seed),
             ("norm", tensor_norm(tensor)), ("out", args.out)]
    lines += [(k, v) for k, v in extra.items()]
    _emit(lines)
    _write_json(args.json, {"command": "gen", "kind": args.kind, "n": args.n,
                            "seed": args.seed, "out": str(args.out),
                            "norm": tensor_norm(tensor), **extra})
    return 0


def _cmd_check(args) -> int:
    tf, structure = _load(args.file)
    report = validate_curvature_symmetries(tf.tensor)
    rk = rk_residual(tf.tensor, structure)
    budget = args.tol * max(1.0, report.tensor_norm)
    passed = report.passes(args.tol) and rk <= budget
    _emit([
        ("n", tf.n), ("kind", tf.kind), ("norm", report.tensor_norm),
        ("skew12_residual", report.skew12), ("skew34_residual", report.skew34),
        ("bianchi_residual", report.bianchi),
        ("pair_symmetry_residual", report.pair_symmetry),
        ("rk_residual", rk), ("tolerance", args.tol),
        ("result", "pass" if passed else "fail"),
    ])
    _write_json(args.json, {
        "command": "check", "n": tf.n, "kind": tf.kind,
        "norm": report.tensor_norm, "skew12": report.skew12,
        "skew34": report.skew34, "bianchi": report.bianchi,
        "pair_symmetry": report.pair_symmetry, "rk": rk,
        "tol": args.tol, "passed": passed,
    })
    return 0 if passed else 1


def _cmd_invariants(args) -> int:
    tf, structure = _load(args.file)
    S = ricci(tf.tensor)
    Sst = star_ricci(tf.tensor, structure)
    tau, taust = scalars(tf.tensor, structure)
    s_eigs = np.linalg.eigvalsh(S)
    sst_eigs = np.linalg.eigvalsh(0.5 * (Sst + Sst.T))
    if tf.n >= 3:
        bnorm = tensor_norm(bochner(tf.tensor, structure))
        bochner_repr = _fmt(bnorm)
    else:
        bnorm = None
        bochner_repr = "n/a (needs n >= 3)"
    _emit([
        ("n", tf.n), ("kind", tf.kind), ("norm", tensor_norm(tf.tensor)),
        ("tau", tau), ("tau_star", taust), ("bochner_norm", bochner_repr),
        ("ricci_eigenvalues", " ".join(_fmt(v) for v in s_eigs)),
        ("star_ricci_eigenvalues", " ".join(_fmt(v) for v in sst_eigs)),
    ])
    _write_json(args.json, {
        "command": "invariants", "n": tf.n, "kind": tf.kind,
        "tau": tau, "tau_star": taust, "bochner_norm": bnorm,
        "ricci_eigenvalues": s_eigs.tolist(),
        "star_ricci_eigenvalues": sst_eigs.tolist(),
    })
    return 0


def _cmd_verify_theorem(args) -> int:
    tf, structure = _load(args.file)
    rng = np.random.default_rng(args.seed)
    report = verify_theorem(tf.tensor, structure, args.lam, args.mu, args.nu,
                            rng, tol=args.tol)
    _emit([
        ("case", report.case), ("condition_dev", report.condition_dev),
        ("c_est", report.c_est),
        ("bochner_norm", _fmt(report.bochner_norm)
         if report.bochner_norm is not None else "n/a (lambda = 0 case)"),
        ("proportionality", report.proportionality_residual),
        ("tolerance", report.tol),
        ("result", "pass" if report.passed else "fail"),
    ])
    _write_json(args.json, {
        "command": "verify-theorem", "case": report.case,
        "condition_dev": report.condition_dev, "c_est": report.c_est,
        "bochner_norm": report.bochner_norm,
        "proportionality": report.proportionality_residual,
        "tol": report.tol, "passed": report.passed,
    })
    return 0 if report.passed else 1


def _cmd_verify_corollary(args) -> int:
    tf, structure = _load(args.file)
    rng = np.random.default_rng(args.seed)
    report = verify_corollary(tf.tensor, structure, rng, tol=args.tol)

    def _direction(applicable, passed):
        if not applicable:
            return "not applicable"
        return "pass" if passed else "fail"

    _emit([
        ("condition_dev", report.condition_dev), ("c_est", report.c_est),
        ("bochner_norm", report.bochner_norm),
        ("proportionality", report.proportionality_residual),
        ("forward", _direction(report.forward_applicable, report.forward_passed)),
        ("reverse", _direction(report.reverse_applicable, report.reverse_passed)),
        ("tolerance", report.tol),
        ("result", "pass" if report.passed else "fail"),
    ])
    _write_json(args.json, {
        "command": "verify-corollary",
        "condition_dev": report.condition_dev, "c_est": report.c_est,
        "bochner_norm": report.bochner_norm,
        "proportionality": report.proportionality_residual,
        "forward_applicable": report.forward_applicable,
        "forward_passed": report.forward_passed,
        "reverse_applicable": report.reverse_applicable,
        "reverse_passed": report.reverse_passed,
        "tol": report.tol, "passed": report.passed,
    })
    return 0 if report.passed else 1


def _cmd_verify_lemma(args) -> int:
    families = tuple(args.families)
    config = LemmaConfig(families=families, max_levels=args.max_levels,
                         float_planes=args.planes, seed=args.seed)
    result = lemma_kernel(args.n, mode=args.mode, config=config)
    passed = result.dimension == 0
    lines = [
        ("mode", result.mode), ("n", args.n),
        ("families", ",".join(families)),
        ("columns", result.ncols), ("plane_count", result.plane_count),
        ("kernel_dimension", result.dimension),
    ]
    if result.mode == "exact":
        lines.append(("level_dimensions",
                      " ".join(str(d) for d in result.levels)))
    else:
        lines.append(("smallest_retained_ratio",
                      _fmt(result.smallest_retained_ratio)))
    lines.append(("result", "pass" if passed else "fail"))
    _emit(lines)
    _write_json(args.json, {
        "command": "verify-lemma", "mode": result.mode, "n": args.n,
        "families": list(families), "columns": result.ncols,
        "plane_count": result.plane_count,
        "kernel_dimension": result.dimension,
        "level_dimensions": list(result.levels),
        "smallest_retained_ratio": result.smallest_retained_ratio,
        "passed": passed,
    })
    return 0 if passed else 1


def _cmd_verify_replay(args) -> int:
    tf, structure = _load(args.file)
    rng = np.random.default_rng(args.seed)
    report = replay_derivation(tf.tensor, structure, args.lam, args.mu,
                               args.nu, rng, sample_count=args.samples)
    passed = report.normalized_max() <= args.tol
    lines = [("stage_" + key.replace(".", "_"), value)
             for key, value in sorted(report.residuals.items())]
    lines += [
        ("c1_formula", report.c1_formula),
        ("c1_empirical", report.c1_empirical),
        ("scale", report.scale),
        ("normalized_max", report.normalized_max()),
        ("tolerance", args.tol),
        ("result", "pass" if passed else "fail"),
    ]
    _emit(lines)
    _write_json(args.json, {
        "command": "verify-replay", "residuals": report.residuals,
        "c1_formula": report.c1_formula, "c1_empirical": report.c1_empirical,
        "scale": report.scale, "normalized_max": report.normalized_max(),
        "tol": args.tol, "passed": passed,
    })
    return 0 if passed else 1


def _add_seed(p, default=0):
    p.add_argument("--seed", type=int, default=default,
                   help="RNG seed; identical seeds give byte-identical output")


def _add_json(p):
    p.add_argument("--json", default=None, metavar="PATH",
                   help="also write a JSON report to PATH")


def _add_coeffs(p, lam_default):
    p.add_argument("--lambda", dest="lam", type=float, default=lam_default,
                   help="coefficient of the sectional numerator")
    p.add_argument("--mu", type=float, default=0.0,
                   help="coefficient of the Ricci quadratic forms")
    p.add_argument("--nu", type=float, default=0.0,
                   help="coefficient of the star-Ricci quadratic forms")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ahcurv",
        description="pointwise curvature algebra for almost Hermitian structures")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a curvature tensor file")
    p.add_argument("--n", type=int, default=3, help="complex dimension (real dim 2n)")
    p.add_argument("--kind", required=True,
                   choices=["random-rk", "pencil", "constrained"])
    p.add_argument("--a", type=float, default=1.0,
                   help="pencil coefficient of pi1")
    p.add_argument("--b", type=float, default=0.0,
                   help="pencil coefficient of pi2")
    _add_coeffs(p, 1.0)
    _add_seed(p)
    p.add_argument("--out", required=True, help="output tensor file path")
    _add_json(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check", help="validate symmetries and J-invariance")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-9)
    _add_json(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("invariants", help="print traces, Bochner norm and spectra")
    p.add_argument("file")
    _add_json(p)
    p.set_defaults(func=_cmd_invariants)

    v = sub.add_parser("verify", help="run a verification driver")
    vsub = v.add_subparsers(dest="verify_command", required=True)

    p = vsub.add_parser("theorem", help="two-case classification check")
    p.add_argument("file")
    _add_coeffs(p, 1.0)
    p.add_argument("--tol", type=float, default=1e-6)
    _add_seed(p)
    _add_json(p)
    p.set_defaults(func=_cmd_verify_theorem)

    p = vsub.add_parser("corollary",
                        help="constant antiholomorphic curvature criterion")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-6)
    _add_seed(p)
    _add_json(p)
    p.set_defaults(func=_cmd_verify_corollary)

    p = vsub.add_parser("lemma", help="kernel of the plane constraints")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["exact", "float"], default="exact")
    p.add_argument("--families", nargs="+",
                   choices=[HOLOMORPHIC, ANTIHOLOMORPHIC],
                   default=[HOLOMORPHIC, ANTIHOLOMORPHIC])
    p.add_argument("--max-levels", type=int, default=4)
    p.add_argument("--planes", type=int, default=800,
                   help="sampled planes in float mode")
    _add_seed(p)
    _add_json(p)
    p.set_defaults(func=_cmd_verify_lemma)

    p = vsub.add_parser("replay", help="derivation chain residuals")
    p.add_argument("file")
    _add_coeffs(p, 1.0)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--samples", type=int, default=40)
    _add_seed(p)
    _add_json(p)
    p.set_defaults(func=_cmd_verify_replay)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (FileFormatError, DimensionTooSmall, InvalidArgument, ShapeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NoSolution as exc:
        print(f"no solution: {exc}", file=sys.stderr)
        return 3
    except HypothesisNotSatisfied as exc:
        print(f"hypothesis not satisfied: {exc}", file=sys.stderr)
        return 4
    except Inconclusive as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
