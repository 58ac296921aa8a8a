"""
Command line entry point.

Exit codes: 0 success, 1 invalid input, 2 invariant or selftest failure,
3 I/O failure.
"""
from __future__ import annotations

import argparse
import sys
import warnings

import numpy as np

from . import acceptance, config
from .core import Doppler, PhysicalConstants, Quadratic, gaussian_packet
from .diagnostics import compare
from .dirac import dirac_energy, expect_alpha, expect_beta, make_dirac_state
from .kinematics import (FrameBoost, boost_energy, boost_momentum, gamma,
                         nonrel_energy, rest_frame)
from .oracles import rigid_translation
from .output import OutputError, emit_csv, resolve_prefix
from .propagator import (AliasingWarning, Method, convolution_valid,
                         propagate_convolution, propagate_schedule,
                         propagate_spectral)

EXIT_OK, EXIT_INVALID, EXIT_INVARIANT, EXIT_IO = 0, 1, 2, 3

RIGID_TOL = 1e-10
METHOD_TOL = 1e-3


def _load(path):
    try:
        return config.load(path)
    except OSError as exc:
        print(f"error: cannot read config {path}: {exc.strerror or exc}", file=sys.stderr)
        raise SystemExit(EXIT_IO)
    except config.ConfigError as exc:
        print(f"error: invalid config {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)


def cmd_propagate(args) -> int:
    cfg = _load(args.config)
    w = gaussian_packet(cfg.grid.build(), cfg.initial, cfg.constants)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", AliasingWarning)
        result = propagate_schedule(w, cfg.dispersion, cfg.times, cfg.method)
    for wrn in caught:
        print(f"warning: {wrn.message}", file=sys.stderr)
    prefix = resolve_prefix(args.output or cfg.output)
    try:
        paths = emit_csv(result, prefix, cfg.hash())
    except OutputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    for p in paths:
        print(p)
    return EXIT_OK


def _fmt_cmp(label, t, rec) -> str:
    return (f"{label:<22} t={t:<10.6g} l2_rel={rec.l2_relative_error:.3e} "
            f"max_abs={rec.max_abs_error:.3e} phase_aligned_l2={rec.global_phase_aligned_l2:.3e}")


def cmd_compare(args) -> int:
    cfg = _load(args.config)
    consts = cfg.constants
    w = gaussian_packet(cfg.grid.build(), cfg.initial, consts)
    v = args.v if args.v is not None else (
        cfg.dispersion.v if isinstance(cfg.dispersion, Doppler) else 1.0)
    modes = ("rigid", "methods", "dispersions") if args.mode == "all" else (args.mode,)
    status = EXIT_OK
    times = [t for t in cfg.times if t != 0] or [1.0]
    for mode in modes:
        for t in times:
            if mode == "rigid":
                rec = compare(propagate_spectral(w, Doppler(v), t), rigid_translation(w, v, t))
                ok = rec.max_abs_error < RIGID_TOL
                print(_fmt_cmp("doppler-vs-rigid", t, rec) + ("" if ok else "  FAIL"))
                if not ok:
                    status = EXIT_INVARIANT
            elif mode == "methods":
                valid = convolution_valid(w.grid, t, consts)
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore", AliasingWarning)
                    rec = compare(propagate_spectral(w, Quadratic(), t), propagate_convolution(w, t))
                flag = "" if valid else "  (outside validity window)"
                if valid and rec.l2_relative_error >= METHOD_TOL:
                    flag = "  FAIL"
                    status = EXIT_INVARIANT
                print(_fmt_cmp("spectral-vs-convolution", t, rec) + flag)
            else:
                rec = compare(propagate_spectral(w, Quadratic(), t), propagate_spectral(w, Doppler(v), t))
                print(_fmt_cmp("quadratic-vs-doppler", t, rec))
    return status


def cmd_dirac_check(args) -> int:
    consts = PhysicalConstants(args.hbar, args.m0, args.c)
    rng = np.random.default_rng(args.seed)
    c, m0 = consts.c, consts.m0
    print(f"{'|p|/m0c':>10} {'s':>3} {'alpha_res':>11} {'beta_res':>11} {'energy_res':>11}")
    worst = 0.0
    for _ in range(args.samples):
        d = rng.normal(size=3)
        p = d / np.linalg.norm(d) * rng.uniform(0, args.pmax * m0 * c)
        E = dirac_energy(p, consts)
        for s in (1, -1):
            u = make_dirac_state(p, s, consts)
            v = expect_alpha(u)
            v_ex = c**2 * p / E
            r_a = np.linalg.norm(v - v_ex) / max(np.linalg.norm(v_ex), c * 1e-12)
            r_b = abs(expect_beta(u) - m0 * c**2 / E) / (m0 * c**2 / E)
            r_e = abs(np.dot(v, p) + expect_beta(u) * m0 * c**2 - E) / E
            worst = max(worst, r_a, r_b, r_e)
            print(f"{np.linalg.norm(p) / (m0 * c):10.4f} {s:+3d} {r_a:11.2e} {r_b:11.2e} {r_e:11.2e}")
    ok = worst < 1e-10
    print(f"worst relative residual {worst:.2e} ({'ok' if ok else 'FAIL'}, tol 1e-10)")
    return EXIT_OK if ok else EXIT_INVARIANT


def cmd_kinematics(args) -> int:
    consts = PhysicalConstants(args.hbar, args.m0, args.c)
    c = consts.c
    speeds = args.v or [0.001 * c, 0.01 * c, 0.1 * c, 0.5 * c, 0.9 * c]
    try:
        boosts = [FrameBoost(v, c) for v in speeds]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    rest = rest_frame(consts)
    print(f"{'v':>10} {'gamma':>12} {'p=gamma m0 v':>14} {'E=v.p+E0/g':>18} "
          f"{'gamma m0 c^2':>18} {'E nonrel':>18} {'rel err':>10}")
    for v, b in zip(speeds, boosts):
        p = boost_momentum(b, rest)
        E = boost_energy(b, rest, p)
        En = nonrel_energy(b.v, p, consts)
        print(f"{v:10.4g} {gamma(b):12.8f} {p[0]:14.8g} {E:18.12g} "
              f"{gamma(b) * consts.m0 * c**2:18.12g} {En:18.12g} {abs(En - E) / E:10.2e}")
    return EXIT_OK


def cmd_selftest(args) -> int:
    results, elapsed = acceptance.run_all()
    ok = all(r.passed for r in results)
    timing_ok = elapsed < 30
    print(f"[{'PASS' if timing_ok else 'FAIL'}] 8. selftest runtime {elapsed:.2f} s (limit 30 s)")
    return EXIT_OK if ok and timing_ok else EXIT_INVARIANT


def _constants_args(p):
    p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--m0", type=float, default=1.0)
    p.add_argument("--c", type=float, default=10.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nonspread", description="Free wave-packet evolution under quadratic and Doppler dispersion.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("propagate", help="run a config and write CSV snapshots")
    p.add_argument("config", help="YAML run configuration")
    p.add_argument("-o", "--output", help="override the output path prefix")
    p.set_defaults(func=cmd_propagate)

    p = sub.add_parser("compare", help="print comparison records between propagation routes")
    p.add_argument("config", help="YAML run configuration (grid, constants, initial state, times)")
    p.add_argument("--mode", choices=("all", "rigid", "methods", "dispersions"), default="all",
                   help="rigid: Doppler vs rigid translation; methods: spectral vs convolution; "
                        "dispersions: quadratic vs Doppler")
    p.add_argument("--v", type=float, help="frame velocity (default: from config, else 1)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("dirac-check", help="residual table for the Dirac expectation identities")
    p.add_argument("--pmax", type=float, default=10.0, help="max |p| in units of m0 c")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    _constants_args(p)
    p.set_defaults(func=cmd_dirac_check)

    p = sub.add_parser("kinematics", help="tables of boosted energy and its low-velocity form")
    p.add_argument("--v", type=float, action="append", help="frame speed along x (repeatable)")
    _constants_args(p)
    p.set_defaults(func=cmd_kinematics)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
