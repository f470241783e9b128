"""Command line entry point.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage or
configuration errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import digits, operators, spectral
from .numerics import ProductConfig, muhat_atoms, muhat_trunc, tail_bound

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# Figure 1 of the reference computation: 16 factors, 128 terms per component.
FIGURE1_FACTORS = 16
FIGURE1_LEVEL = 7
DEFAULT_GRID = (-2.0, 2.0, 0.01)
DEFAULT_DEFICIENCY_THRESHOLD = 1e-3


class ConfigError(ValueError):
    pass


def _odd(value: str) -> int:
    p = int(value)
    if p < 1 or p % 2 == 0:
        raise argparse.ArgumentTypeError(f"p must be an odd positive integer, got {p}")
    return p


def _positive(value: str) -> int:
    k = int(value)
    if k < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {k}")
    return k


def _add_grid(sub):
    sub.add_argument("--from", dest="t_from", type=float, default=DEFAULT_GRID[0])
    sub.add_argument("--to", dest="t_to", type=float, default=DEFAULT_GRID[1])
    sub.add_argument("--step", type=float, default=DEFAULT_GRID[2])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quartercantor",
        description="Fourier analysis of the 1/4 Cantor measure: transform, spectra, Cuntz isometries.",
    )
    cmds = parser.add_subparsers(dest="command", required=True)

    ev = cmds.add_parser("eval-mu", help="evaluate the truncated transform at t")
    ev.add_argument("--t", type=float, required=True)
    ev.add_argument("--factors", type=_positive, default=16)
    ev.add_argument("--atom-level", type=_positive, default=None,
                    help="level of the atomic cross-check (default: min(factors, 20))")
    ev.add_argument("--format", choices=["text", "json"], default="text")

    fig = cmds.add_parser("figure1", help="CSV of c0, c1 and c0+c1 on a grid")
    _add_grid(fig)
    fig.add_argument("--m", type=int, default=FIGURE1_LEVEL, help="terms per component = 2**m")
    fig.add_argument("--factors", type=_positive, default=FIGURE1_FACTORS)
    fig.add_argument("--format", choices=["csv", "json"], default="csv")
    fig.add_argument("--out", default="-")

    cs = cmds.add_parser("check-spectrum", help="orthogonality and completeness of a frequency set")
    cs.add_argument("--set", dest="kind", choices=["canonical", "scaled", "additive"], default="canonical")
    cs.add_argument("--p", type=_odd, default=1)
    cs.add_argument("--m", type=int, default=12)
    cs.add_argument("--factors", type=_positive, default=20)
    cs.add_argument("--threshold", type=float, default=DEFAULT_DEFICIENCY_THRESHOLD)
    cs.add_argument("--workers", type=int, default=None)
    _add_grid(cs)
    cs.add_argument("--out", default="-")

    co = cmds.add_parser("check-operators", help="exact Cuntz / Lemma / W~ label checks")
    co.add_argument("--p", type=_odd, default=5)
    co.add_argument("--m", type=int, default=8)
    co.add_argument("--out", default="-")
    return parser


def _emit(text: str, out: str):
    if out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise ConfigError(f"cannot write {out}: {exc}") from None


def cmd_eval_mu(args) -> int:
    cfg = ProductConfig(args.factors, max(abs(args.t), 1.0))
    level = args.atom_level or min(args.factors, 20)
    value = muhat_trunc(args.t, cfg)
    oracle = muhat_atoms(args.t, level)
    result = {
        "t": args.t,
        "factors": args.factors,
        "value": value,
        "tail_bound": tail_bound(cfg),
        "atom_level": level,
        "atom_value": oracle,
        "atom_difference": abs(value - oracle),
    }
    if args.format == "json":
        sys.stdout.write(json.dumps(result, sort_keys=True) + "\n")
    else:
        for key, val in result.items():
            sys.stdout.write(f"{key}: {val!r}\n")
    return EXIT_OK


def figure1_sample(t_from=-2.0, t_to=2.0, step=0.01, m=FIGURE1_LEVEL, factors=FIGURE1_FACTORS):
    return spectral.sample_grid(["c0", "c1", "c0+c1"], t_from, t_to, step, m, factors=factors)


def cmd_figure1(args) -> int:
    sample = figure1_sample(args.t_from, args.t_to, args.step, args.m, args.factors)
    if args.format == "csv":
        text = sample.to_csv()
    else:
        payload = {"meta": sample.meta, "t": sample.grid.tolist()}
        payload.update({k: v.tolist() for k, v in sample.per_residue.items()})
        text = json.dumps(payload, sort_keys=True) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _digit_system(kind: str, p: int):
    return {"canonical": lambda _: digits.canonical(), "scaled": digits.scaled, "additive": digits.additive}[kind](p)


def check_spectrum(ds, m, factors, grid, threshold, workers=None) -> dict:
    levels = digits.enumerate_level(ds, m)
    ortho = digits.orthogonality_check(levels)
    complete = spectral.completeness_defect(
        ds, grid, m, factors=factors, threshold=threshold, workers=workers
    )
    return {
        "orthogonality": ortho.to_dict(),
        "completeness": complete.to_dict(),
        "pass": bool(ortho.passed and complete.passed),
    }


def cmd_check_spectrum(args) -> int:
    ds = _digit_system(args.kind, args.p)
    grid = spectral.make_grid(args.t_from, args.t_to, args.step)
    report = check_spectrum(ds, args.m, args.factors, grid, args.threshold, args.workers)
    _emit(json.dumps(report, sort_keys=True) + "\n", args.out)
    return EXIT_OK if report["pass"] else EXIT_FAIL


def operator_reports(p: int, m: int):
    return [
        operators.cuntz_check(m),
        operators.lemma_us1_check(p, m),
        operators.w_tilde_bijection_check(p, m),
        digits.invariance_check(m),
    ]


def cmd_check_operators(args) -> int:
    reports = operator_reports(args.p, args.m)
    for r in reports:
        sys.stderr.write(r.summary_line() + "\n")
    _emit(json.dumps([r.to_dict() for r in reports], sort_keys=True) + "\n", args.out)
    return EXIT_OK if all(reports) else EXIT_FAIL


COMMANDS = {
    "eval-mu": cmd_eval_mu,
    "figure1": cmd_figure1,
    "check-spectrum": cmd_check_spectrum,
    "check-operators": cmd_check_operators,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, OverflowError) as exc:
        sys.stderr.write(f"{parser.prog} {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
