"""Command line front end: capacity sweeps to CSV, single-point reports,
and the numerical verification suites.

Exit codes: 0 all good, 1 a verification check failed, 2 configuration
or I/O error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path

import numpy as np

from . import capacities, covariance
from .channels import check_composition

__all__ = ["InvalidConfigError", "SweepConfig", "main"]

QUANTITIES = ("c1", "q", "ce", "bounds", "coeffs", "entanglement", "p_opt", "c_ad1")
POINT_QUANTITIES = ("c1", "q", "ce", "bounds", "p_opt", "c_ad1")
SUITES = ("covariance", "degradability", "inequalities", "symmetrization", "composition", "all")

# column -> quantity group that switches it on (None = always emitted)
_COLUMNS = (
    ("eta", None),
    ("c1", "c1"),
    ("c1_chain_check", "c1"),
    ("q", "q"),
    ("ce", "ce"),
    ("chi_lb1", "bounds"),
    ("chi_lb2", "bounds"),
    ("alpha_c1", "coeffs"),
    ("beta_c1", "coeffs"),
    ("delta_c1", "coeffs"),
    ("alpha_q", "coeffs"),
    ("beta_q", "coeffs"),
    ("delta_q", "coeffs"),
    ("alpha_ce", "coeffs"),
    ("beta_ce", "coeffs"),
    ("delta_ce", "coeffs"),
    ("p_opt", "p_opt"),
    ("c_ad1", "c_ad1"),
    ("e_phi", "entanglement"),
    ("e_avg", "entanglement"),
)


class InvalidConfigError(ValueError):
    """Bad command line or config file input."""


@dataclass
class SweepConfig:
    eta_start: float = 0.0
    eta_end: float = 1.0
    eta_step: float = 0.05
    quantities: tuple[str, ...] = QUANTITIES
    coarse_step: float = 1e-2
    refine_tol: float = 1e-7
    seed: int = 0
    output_path: str | None = None

    def validate(self) -> "SweepConfig":
        if not 0.0 <= self.eta_start <= self.eta_end <= 1.0:
            raise InvalidConfigError(
                f"need 0 <= eta-start <= eta-end <= 1, got [{self.eta_start}, {self.eta_end}]"
            )
        if self.eta_step <= 0.0:
            raise InvalidConfigError(f"eta-step must be positive, got {self.eta_step}")
        if not 0.0 < self.coarse_step <= 0.5:
            raise InvalidConfigError(f"coarse-step must be in (0, 0.5], got {self.coarse_step}")
        if self.refine_tol <= 0.0:
            raise InvalidConfigError(f"refine-tol must be positive, got {self.refine_tol}")
        if self.seed < 0:
            raise InvalidConfigError(f"seed must be nonnegative, got {self.seed}")
        bad = [q for q in self.quantities if q not in QUANTITIES]
        if bad or not self.quantities:
            raise InvalidConfigError(
                f"unknown quantities {bad}; choose from {', '.join(QUANTITIES)}"
            )
        return self


def _parse_quantities(text: str) -> tuple[str, ...]:
    names = tuple(q.strip() for q in text.split(",") if q.strip())
    if names == ("all",):
        return QUANTITIES
    return names


def _load_config_file(path: str) -> dict[str, str]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InvalidConfigError(f"cannot read config file {path}: {exc}") from exc
    out: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise InvalidConfigError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        out[key.strip().replace("-", "_")] = value.strip()
    return out


def _sweep_config(args: argparse.Namespace) -> SweepConfig:
    cfg = SweepConfig()
    if args.config is not None:
        raw = _load_config_file(args.config)
        known = {f.name for f in fields(SweepConfig)} | {"out"}
        for key, value in raw.items():
            if key not in known:
                raise InvalidConfigError(f"unknown config key {key!r}")
        try:
            updates: dict = {}
            for key in ("eta_start", "eta_end", "eta_step", "coarse_step", "refine_tol"):
                if key in raw:
                    updates[key] = float(raw[key])
            if "seed" in raw:
                updates["seed"] = int(raw["seed"])
            if "quantities" in raw:
                updates["quantities"] = _parse_quantities(raw["quantities"])
            if "out" in raw:
                updates["output_path"] = raw["out"]
            if "output_path" in raw:
                updates["output_path"] = raw["output_path"]
            cfg = replace(cfg, **updates)
        except ValueError as exc:
            raise InvalidConfigError(f"bad value in config file: {exc}") from exc
    # flags win over the config file
    overrides: dict = {}
    if args.eta_start is not None:
        overrides["eta_start"] = args.eta_start
    if args.eta_end is not None:
        overrides["eta_end"] = args.eta_end
    if args.eta_step is not None:
        overrides["eta_step"] = args.eta_step
    if args.coarse_step is not None:
        overrides["coarse_step"] = args.coarse_step
    if args.refine_tol is not None:
        overrides["refine_tol"] = args.refine_tol
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.quantities is not None:
        overrides["quantities"] = _parse_quantities(args.quantities)
    if args.out is not None:
        overrides["output_path"] = args.out
    return replace(cfg, **overrides).validate()


def _fmt(value: float) -> str:
    value = float(value)
    if value == 0.0:
        value = 0.0  # normalize -0.0
    return format(value, ".9g")


def _eta_grid(cfg: SweepConfig) -> list[float]:
    etas = []
    i = 0
    while True:
        eta = cfg.eta_start + i * cfg.eta_step
        if eta > cfg.eta_end + 1e-9:
            break
        etas.append(min(eta, 1.0))
        i += 1
    return etas


def _row_values(pt: capacities.CapacityPoint) -> dict[str, float]:
    return {
        "eta": pt.eta,
        "c1": pt.c1,
        "c1_chain_check": pt.c1_opt,
        "q": pt.q,
        "ce": pt.ce,
        "chi_lb1": pt.chi_lb1,
        "chi_lb2": pt.chi_lb2,
        "alpha_c1": pt.coeffs_c1.alpha,
        "beta_c1": pt.coeffs_c1.beta,
        "delta_c1": pt.coeffs_c1.delta,
        "alpha_q": pt.coeffs_q.alpha,
        "beta_q": pt.coeffs_q.beta,
        "delta_q": pt.coeffs_q.delta,
        "alpha_ce": pt.coeffs_ce.alpha,
        "beta_ce": pt.coeffs_ce.beta,
        "delta_ce": pt.coeffs_ce.delta,
        "p_opt": pt.p_opt,
        "c_ad1": pt.c_ad1,
        "e_phi": pt.e_phi,
        "e_avg": pt.e_avg,
    }


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _sweep_config(args)
    selected = set(cfg.quantities)
    columns = [name for name, group in _COLUMNS if group is None or group in selected]
    lines = [",".join(columns)]
    for eta in _eta_grid(cfg):
        values = _row_values(capacities.capacity_point(eta, cfg.coarse_step, cfg.refine_tol))
        lines.append(",".join(_fmt(values[c]) for c in columns))
    text = "\n".join(lines) + "\n"
    if cfg.output_path is None:
        sys.stdout.write(text)
    else:
        try:
            Path(cfg.output_path).write_text(text)
        except OSError as exc:
            raise InvalidConfigError(f"cannot write {cfg.output_path}: {exc}") from exc
    return 0


def cmd_point(args: argparse.Namespace) -> int:
    eta = args.eta
    if not 0.0 <= eta <= 1.0:
        raise InvalidConfigError(f"eta must be in [0, 1], got {eta}")
    coarse = args.coarse_step if args.coarse_step is not None else 1e-2
    refine = args.refine_tol if args.refine_tol is not None else 1e-7
    print(f"eta = {_fmt(eta)}")
    print(f"quantity = {args.quantity}")
    if args.quantity == "c1":
        closed = capacities.c1(eta)
        opt = capacities.c1_via_optimization(eta, coarse, refine)
        print(f"value = {_fmt(closed.value)}")
        print(f"optimized = {_fmt(opt.value)}")
        _print_point(opt)
    elif args.quantity == "q":
        res = capacities.q_capacity(eta, coarse, refine)
        print(f"value = {_fmt(res.value)}")
        _print_point(res)
    elif args.quantity == "ce":
        res = capacities.ce_capacity(eta, coarse, refine)
        print(f"value = {_fmt(res.value)}")
        _print_point(res)
    elif args.quantity == "bounds":
        lb1, lb2 = capacities.c1_lower_bounds(eta, coarse, refine)
        print(f"chi_lb1 = {_fmt(lb1)}")
        print(f"chi_lb2 = {_fmt(lb2)}")
    elif args.quantity == "p_opt":
        print(f"value = {_fmt(capacities.p_opt(eta))}")
    elif args.quantity == "c_ad1":
        res = capacities.c_ad1_search(eta)
        print(f"value = {_fmt(res.value)}")
        print(f"p1 = {_fmt(res.point)}")
        print(f"evaluations = {res.evaluations}")
    return 0


def _print_point(res: capacities.CapacityResult) -> None:
    print(f"alpha = {_fmt(res.point.alpha)}")
    print(f"beta = {_fmt(res.point.beta)}")
    print(f"delta = {_fmt(res.point.delta)}")
    print(f"evaluations = {res.evaluations}")
    print(f"final_step = {_fmt(res.grid_step_final)}")


def _emit(name: str, passed: bool, margin: float) -> bool:
    print(f"CHECK {name} {'PASS' if passed else 'FAIL'} margin={format(margin, '.3g')}")
    return passed


def cmd_verify(args: argparse.Namespace) -> int:
    suites = SUITES[:-1] if args.suite == "all" else (args.suite,)
    seed = args.seed if args.seed is not None else 0
    ok = True

    if "covariance" in suites:
        samples = args.samples if args.samples is not None else 100
        tol = args.tol if args.tol is not None else 1e-12
        for op in covariance.symmetry_ops():
            dev = max(
                covariance.check_covariance(eta, op, samples, seed, tol)
                for eta in np.linspace(0.0, 1.0, 11)
            )
            ok &= _emit(f"covariance_{op.name}", dev < tol, dev)
        commutation = covariance.check_kraus_commutation()
        cdev = max(commutation.values())
        ctol = args.tol if args.tol is not None else 1e-14
        ok &= _emit("kraus_commutation", cdev < ctol, cdev)

    if "degradability" in suites:
        samples = args.samples if args.samples is not None else 100
        tol = args.tol if args.tol is not None else 1e-12
        dev = max(
            covariance.check_degradability(eta, samples, seed, tol)
            for eta in np.arange(0.50, 1.0 + 1e-9, 0.05)
        )
        ok &= _emit("degradability", dev < tol, dev)

    if "inequalities" in suites:
        samples = args.samples if args.samples is not None else 100_000
        tol = args.tol if args.tol is not None else 1e-10
        split = capacities.verify_state_splitting_inequality(samples, seed, margin_tol=tol)
        ok &= _emit("state_splitting", split.passed, split.min_margin)
        pair = capacities.verify_entangled_pair_inequality(margin_tol=tol)
        ok &= _emit("entangled_pair", pair.passed, pair.min_margin)

    if "symmetrization" in suites:
        samples = args.samples if args.samples is not None else 100
        tol = args.tol if args.tol is not None else 1e-10
        chain = capacities.verify_symmetrization_chain(samples, seed, tol)
        worst = min(chain.min_step_margins.values())
        ok &= _emit("symmetrization_chain", all(m >= -tol for m in chain.min_step_margins.values()), worst)
        ok &= _emit("separable_gain", chain.min_separable_gain > 0.0, chain.min_separable_gain)

    if "composition" in suites:
        samples = args.samples if args.samples is not None else 100
        tol = args.tol if args.tol is not None else 1e-12
        dev = check_composition(samples, seed, tol)
        ok &= _emit("composition", dev < tol, dev)

    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fcad",
        description="Capacities of the fully correlated two-qubit amplitude damping channel.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="write a CSV table of capacities over a transmissivity grid")
    sweep.add_argument("--eta-start", type=float, default=None)
    sweep.add_argument("--eta-end", type=float, default=None)
    sweep.add_argument("--eta-step", type=float, default=None)
    sweep.add_argument(
        "--quantities",
        type=str,
        default=None,
        help=f"comma separated subset of {{{','.join(QUANTITIES)}}} or 'all'",
    )
    sweep.add_argument("--coarse-step", type=float, default=None)
    sweep.add_argument("--refine-tol", type=float, default=None)
    sweep.add_argument("--seed", type=int, default=None)
    sweep.add_argument("--out", type=str, default=None, help="output CSV path (default: stdout)")
    sweep.add_argument("--config", type=str, default=None, help="key = value config file; flags win")
    sweep.set_defaults(func=cmd_sweep)

    point = sub.add_parser("point", help="report one quantity at one transmissivity")
    point.add_argument("--eta", type=float, required=True)
    point.add_argument("--quantity", choices=POINT_QUANTITIES, required=True)
    point.add_argument("--coarse-step", type=float, default=None)
    point.add_argument("--refine-tol", type=float, default=None)
    point.set_defaults(func=cmd_point)

    verify = sub.add_parser("verify", help="run a numerical verification suite")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--samples", type=int, default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--tol", type=float, default=None)
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
