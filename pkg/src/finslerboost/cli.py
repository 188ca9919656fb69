"""Command-line front end.

Every number printed is produced by a library call.  Output is JSON with
stable key order; identical argv and seed give byte-identical output.
Exit codes: 0 success, 1 usage error, 2 domain error, 3 check failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import boost, checks, spinor, subgroups, velocity_space
from .core import (
    DEFAULT_TOL,
    AnisotropySpec,
    DomainError,
    FourVector,
    Tolerance,
    UnitVector3,
    Velocity3,
    bispinor_from_json,
    bispinor_to_json,
    finsler_interval_sq,
    matrix_to_json,
    minkowski_interval,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_CHECK = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _floats(text: str, count: int, what: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != count:
        raise argparse.ArgumentTypeError(
            f"{what} needs {count} comma-separated numbers, got {text!r}"
        )
    try:
        return np.array([float(p) for p in parts])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad {what}: {exc}") from None


def _triple(text: str) -> np.ndarray:
    return _floats(text, 3, "vector")


def _four(text: str) -> np.ndarray:
    return _floats(text, 4, "event")


def _psi(text: str) -> np.ndarray:
    vals = _floats(text, 8, "bispinor (re,im interleaved)")
    return vals[0::2] + 1j * vals[1::2]


def _tolerance(args) -> Tolerance:
    override = args.tol
    if override is None:
        env = os.environ.get("FINSLER_TOL")
        if env:
            override = float(env)
    if override is None:
        return DEFAULT_TOL
    return Tolerance(abs_tol=override, rel_tol=override)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _params_or_velocity(args, nu, tol, suffix=""):
    n = getattr(args, "n" + suffix, None)
    alpha = getattr(args, "alpha" + suffix, None)
    v = getattr(args, "v" + suffix, None)
    if v is not None:
        if n is not None or alpha is not None:
            raise argparse.ArgumentTypeError("give either (n, alpha) or v, not both")
        vel = Velocity3.from_array(v)
        return boost.params_from_velocity(nu, vel, tol), vel
    if n is None or alpha is None:
        raise argparse.ArgumentTypeError(
            f"need --n{suffix} and --alpha{suffix}, or --v{suffix}"
        )
    params = boost.BoostParams(UnitVector3.normalized(n), alpha)
    return params, boost.velocity_from_params(nu, params, tol)


def cmd_boost(args) -> int:
    tol = _tolerance(args)
    nu = UnitVector3.normalized(args.nu)
    spec = AnisotropySpec(nu, args.r)
    params, vel = _params_or_velocity(args, nu, tol)
    mat = boost.generalized_boost_matrix(spec, params, tol)
    out = {
        "matrix": matrix_to_json(mat),
        "params": params.to_json(),
        "velocity": vel.to_json(),
        "dilation": boost.dilation_factor(spec, vel),
    }
    if args.x is not None:
        out["x_prime"] = boost.apply_matrix(mat, FourVector.from_array(args.x)).to_json()
    _emit(out)
    return EXIT_OK


def cmd_compose(args) -> int:
    tol = _tolerance(args)
    nu = UnitVector3.normalized(args.nu)
    g1, _ = _params_or_velocity(args, nu, tol, "1")
    g2, _ = _params_or_velocity(args, nu, tol, "2")
    g = boost.compose(nu, g1, g2, tol)
    product = boost.boost_matrix(nu, g2, tol) @ boost.boost_matrix(nu, g1, tol)
    residual = float(np.max(np.abs(boost.boost_matrix(nu, g, tol) - product)))
    _emit(
        {
            "params": g.to_json(),
            "velocity": boost.velocity_from_params(nu, g, tol).to_json(),
            "residual": residual,
        }
    )
    return EXIT_OK


def _guarded(out: dict, key: str, fn) -> bool:
    try:
        out[key] = fn()
        return False
    except DomainError as exc:
        out[key] = {"error": type(exc).__name__, "message": str(exc)}
        return True


def cmd_invariants(args) -> int:
    tol = _tolerance(args)
    nu = UnitVector3.normalized(args.nu)
    spec = AnisotropySpec(nu, args.r)
    out = {}
    failed = False
    if args.x is not None:
        x = FourVector.from_array(args.x)
        out["minkowski_interval"] = minkowski_interval(x)
        failed |= _guarded(
            out, "finsler_interval_sq", lambda: finsler_interval_sq(x, spec, tol)
        )
        failed |= _guarded(
            out, "axial_invariants", lambda: subgroups.axial_invariants(spec, x).to_json()
        )
    if args.v is not None:
        v = Velocity3.from_array(args.v)
        out["horosphere_level"] = velocity_space.horosphere_level(nu, v)
        out["cylinder_level"] = velocity_space.cylinder_level(nu, v)
        out["dilation"] = boost.dilation_factor(spec, v)
    if args.psi is not None:
        psi = args.psi
        rho = complex(spinor.dirac_adjoint(psi) @ psi)
        out["density"] = rho.real
        failed |= _guarded(
            out,
            "finsler_bispinor_invariant",
            lambda: spinor.finsler_bispinor_invariant(spec, psi, tol),
        )
    _emit(out)
    return EXIT_DOMAIN if failed else EXIT_OK


def cmd_spinor(args) -> int:
    tol = _tolerance(args)
    nu = UnitVector3.normalized(args.nu)
    spec = AnisotropySpec(nu, args.r)
    v = Velocity3.from_array(args.v)
    psi_p = spinor.bispinor_transform(spec, v, args.psi, tol)
    _emit(
        {
            "psi_prime": bispinor_to_json(psi_p),
            "dilation": boost.dilation_factor(spec, v),
        }
    )
    return EXIT_OK


def cmd_check(args) -> int:
    tol = _tolerance(args)
    names = args.suite if args.suite else list(checks.SUITES)
    reports = checks.run_all(names, seed=args.seed, samples=args.samples, tol=tol)
    passed = all(r.passed for r in reports)
    _emit(
        {
            "seed": args.seed,
            "samples": args.samples,
            "pass": passed,
            "suites": [r.to_json() for r in reports],
        }
    )
    return EXIT_OK if passed else EXIT_CHECK


def cmd_surface(args) -> int:
    nu = UnitVector3.normalized(args.nu)
    n1, _, n2 = args.resolution.partition("x")
    try:
        resolution = (int(n1), int(n2))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad resolution {args.resolution!r}") from None
    sample = velocity_space.sample_surface(
        nu, args.family, args.level, resolution, extent=args.extent
    )
    if args.family == "cylinder" and args.level == 0.0:
        sys.stderr.write(
            "warning: cylinder level 0 degenerates to the diameter parallel to nu\n"
        )
    try:
        with open(args.output, "w", newline="") as fh:
            if args.format == "json":
                json.dump(sample.to_json(), fh, indent=2)
                fh.write("\n")
            else:
                sample.write_csv(fh)
    except OSError as exc:
        sys.stderr.write(f"error writing {args.output}: {exc}\n")
        return EXIT_DOMAIN
    _emit(
        {
            "family": sample.family,
            "level": sample.level,
            "points": len(sample.points),
            "path": args.output,
        }
    )
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="finslerboost", description=__doc__)
    tol_parent = _Parser(add_help=False)
    tol_parent.add_argument("--tol", type=float, default=None,
                            help="override abs/rel tolerance (also env FINSLER_TOL)")
    common = _Parser(add_help=False, parents=[tol_parent])
    common.add_argument("--nu", type=_triple, required=True,
                        help="preferred direction, comma triple (normalized)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("boost", parents=[common], help="build one generalized boost")
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--n", type=_triple)
    p.add_argument("--alpha", type=float)
    p.add_argument("--v", type=_triple)
    p.add_argument("--x", type=_four, help="optional event to transform")
    p.set_defaults(func=cmd_boost)

    p = sub.add_parser("compose", parents=[common], help="compose two boosts")
    for suffix in ("1", "2"):
        p.add_argument(f"--n{suffix}", type=_triple)
        p.add_argument(f"--alpha{suffix}", type=float)
        p.add_argument(f"--v{suffix}", type=_triple)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("invariants", parents=[common], help="report invariants")
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--x", type=_four)
    p.add_argument("--v", type=_triple)
    p.add_argument("--psi", type=_psi)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("spinor", parents=[common], help="transform a bispinor")
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--v", type=_triple, required=True)
    p.add_argument("--psi", type=_psi, required=True)
    p.set_defaults(func=cmd_spinor)

    p = sub.add_parser("check", parents=[tol_parent], help="run conformance suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--suite", action="append", choices=list(checks.SUITES))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("surface", parents=[common], help="export an invariant surface")
    p.add_argument("--family", choices=["horosphere", "cylinder"], required=True)
    p.add_argument("--level", type=float, required=True)
    p.add_argument("--resolution", default="8x8", help="grid, e.g. 8x8")
    p.add_argument("--extent", type=float, default=2.0,
                   help="half-width of the parameter grid")
    p.add_argument("--output", required=True)
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.set_defaults(func=cmd_surface)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        sys.stderr.write(f"{parser.prog}: error: {exc}\n")
        return EXIT_USAGE
    except (DomainError, ValueError) as exc:
        sys.stderr.write(f"{parser.prog}: {type(exc).__name__}: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
