"""Command-line front end.

Config files are flat ``key = value`` lines; ``#`` starts a comment. Keys are
the long flag names without the leading dashes (``uf-list``, ``sample-time``,
...); a custom mixture additionally takes ``gamma_u``, ``gamma_b``, ``Q``,
``W_mix`` and optionally ``W_burnt``. Command-line flags override the file.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass, field

from .errors import SphereFlameError
from .gas import GasModel, GasState, R_UNIVERSAL, hydrogen_air_mixture
from .output import default_radii, sample_solution, write_profile_csv, write_states_table
from .similarity_ode import N_MAX, N_MIN
from .solver import SolverConfig, solve_given_flame_speed, solve_given_mach, sweep_flame_speeds

log = logging.getLogger("sphereflame")

MODES = ("mach", "flame-speed", "sweep")
MIXTURES = ("hydrogen-air-stoichiometric", "custom")
LOG_LEVELS = {"quiet": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    mode: str
    mixture: str = "hydrogen-air-stoichiometric"
    p0: float = 1e5
    T0: float = 283.0
    gamma: float = 1.4
    M_p: float | None = None
    u_f: float | None = None
    u_f_list: list[float] | None = None
    N: int = 5000
    m0: float = 1.0001
    delta: float = 0.001
    epsilon: float = 1e-5
    max_iter: int = 100
    refine_sigma_r: bool = False
    sample_time: float | None = None
    out: str | None = None
    states_out: str | None = None
    workers: int = 1
    custom: dict = field(default_factory=dict)

    def solver_config(self) -> SolverConfig:
        return SolverConfig(
            m0=self.m0,
            delta=self.delta,
            epsilon=self.epsilon,
            max_iter=self.max_iter,
            refine_sigma_r=self.refine_sigma_r,
        )

    def model(self) -> GasModel:
        if self.mixture == "hydrogen-air-stoichiometric":
            return hydrogen_air_mixture(self.p0, self.T0, self.gamma)
        c = self.custom
        W_mix = c["W_mix"]
        rho0 = self.p0 * W_mix / (R_UNIVERSAL * self.T0)
        return GasModel(
            gamma_u=c.get("gamma_u", self.gamma),
            gamma_b=c.get("gamma_b", self.gamma),
            Q=c["Q"],
            W_mix=W_mix,
            W_burnt=c.get("W_burnt"),
            W0=GasState(rho0, 0.0, self.p0),
        )


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="sphereflame",
        description="Self-similar flow around a spherical flame expanding at constant speed.",
    )
    p.add_argument("--mode", choices=MODES)
    p.add_argument("--mixture", choices=MIXTURES)
    p.add_argument("--mach", type=float, help="precursor shock Mach number (mode mach)")
    p.add_argument("--uf", type=float, help="flame speed in m/s (mode flame-speed)")
    p.add_argument("--uf-list", help="comma-separated flame speeds in m/s (mode sweep)")
    p.add_argument("--n", type=int, help="grid intervals on [0, sigma_p] (default 5000)")
    p.add_argument("--p0", type=float, help="ambient pressure in Pa (default 1e5)")
    p.add_argument("--t0", type=float, help="ambient temperature in K (default 283)")
    p.add_argument("--sample-time", type=float, help="time in s for the radial profile")
    p.add_argument("--out", help="radial profile CSV (r,rho,u,p)")
    p.add_argument("--states-out", help="states table CSV")
    p.add_argument("--config", help="key = value config file")
    p.add_argument("--refine-sigma-r", action="store_true", default=None,
                   help="interpolate the reactive shock inside its bracket")
    p.add_argument("--max-iter", type=int)
    p.add_argument("--m0", type=float)
    p.add_argument("--delta", type=float)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--workers", type=int, help="processes for sweeps")
    return p


def parse_config_text(text: str) -> dict[str, str]:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"config line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        values[key] = value
    return values


# file key -> (RunConfig attribute, converter)
_FILE_KEYS = {
    "mode": ("mode", str),
    "mixture": ("mixture", str),
    "mach": ("M_p", float),
    "uf": ("u_f", float),
    "uf-list": ("u_f_list", str),
    "n": ("N", int),
    "p0": ("p0", float),
    "t0": ("T0", float),
    "gamma": ("gamma", float),
    "sample-time": ("sample_time", float),
    "out": ("out", str),
    "states-out": ("states_out", str),
    "refine-sigma-r": ("refine_sigma_r", lambda v: v.lower() in ("1", "true", "yes", "on")),
    "max-iter": ("max_iter", int),
    "m0": ("m0", float),
    "delta": ("delta", float),
    "epsilon": ("epsilon", float),
    "workers": ("workers", int),
}
_CUSTOM_KEYS = ("gamma_u", "gamma_b", "Q", "W_mix", "W_burnt")
_FLAG_ATTRS = {
    "mode": "mode", "mixture": "mixture", "mach": "M_p", "uf": "u_f", "uf_list": "u_f_list",
    "n": "N", "p0": "p0", "t0": "T0", "sample_time": "sample_time", "out": "out",
    "states_out": "states_out", "refine_sigma_r": "refine_sigma_r", "max_iter": "max_iter",
    "m0": "m0", "delta": "delta", "epsilon": "epsilon", "workers": "workers",
}


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"bad flame-speed list {text!r}") from exc


def parse_config(args: list[str], config_text: str | None = None) -> RunConfig:
    """Merge config-file values and CLI flags into a validated :class:`RunConfig`."""
    ns = build_parser().parse_args(args)
    if config_text is None and ns.config:
        try:
            with open(ns.config, encoding="utf-8") as fh:
                config_text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read config file: {exc}") from exc

    merged: dict = {}
    custom: dict = {}
    for key, value in parse_config_text(config_text or "").items():
        if key in _CUSTOM_KEYS:
            try:
                custom[key] = float(value)
            except ValueError as exc:
                raise UsageError(f"config key {key}: not a number") from exc
            continue
        if key not in _FILE_KEYS:
            raise UsageError(f"unknown config key {key!r}")
        attr, conv = _FILE_KEYS[key]
        try:
            merged[attr] = conv(value)
        except ValueError as exc:
            raise UsageError(f"config key {key}: bad value {value!r}") from exc
    for flag, attr in _FLAG_ATTRS.items():
        value = getattr(ns, flag)
        if value is not None:
            merged[attr] = value
    if isinstance(merged.get("u_f_list"), str):
        merged["u_f_list"] = _parse_floats(merged["u_f_list"])

    if "mode" not in merged:
        raise UsageError("--mode is required")
    cfg = RunConfig(custom=custom, **merged)
    _validate(cfg)
    return cfg


def _validate(cfg: RunConfig) -> None:
    if cfg.mode not in MODES:
        raise UsageError(f"unknown mode {cfg.mode!r}")
    if cfg.mixture not in MIXTURES:
        raise UsageError(f"unknown mixture {cfg.mixture!r}")
    given = {"mach": cfg.M_p is not None, "flame-speed": cfg.u_f is not None,
             "sweep": cfg.u_f_list is not None}
    if not given[cfg.mode]:
        flag = {"mach": "--mach", "flame-speed": "--uf", "sweep": "--uf-list"}[cfg.mode]
        raise UsageError(f"mode {cfg.mode} needs {flag}")
    others = [m for m, present in given.items() if present and m != cfg.mode]
    if others:
        raise UsageError(f"mode {cfg.mode} conflicts with values given for {', '.join(others)}")
    if cfg.mode == "mach" and not cfg.M_p > 1:
        raise UsageError(f"--mach must exceed 1, got {cfg.M_p}")
    if cfg.mode == "flame-speed" and not cfg.u_f > 0:
        raise UsageError("--uf must be positive")
    if cfg.mode == "sweep":
        if not cfg.u_f_list or any(not v > 0 for v in cfg.u_f_list):
            raise UsageError("--uf-list needs positive flame speeds")
        if cfg.out:
            raise UsageError("--out needs a single solution (mode mach or flame-speed)")
    if not N_MIN <= cfg.N <= N_MAX:
        raise UsageError(f"--n must lie in [{N_MIN}, {N_MAX}]")
    if cfg.sample_time is not None and not cfg.sample_time > 0:
        raise UsageError("--sample-time must be positive")
    if not (cfg.p0 > 0 and cfg.T0 > 0):
        raise UsageError("--p0 and --t0 must be positive")
    if not (cfg.m0 > 1 and cfg.delta > 0 and cfg.epsilon > 0 and cfg.max_iter >= 2):
        raise UsageError("secant parameters need m0 > 1, delta > 0, epsilon > 0, max-iter >= 2")
    if cfg.mixture == "custom":
        missing = [k for k in ("Q", "W_mix") if k not in cfg.custom]
        if missing:
            raise UsageError(f"custom mixture needs config keys: {', '.join(missing)}")


def _setup_logging():
    level = LOG_LEVELS.get(os.environ.get("SPHEREFLAME_LOG", "").lower(), logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def _summary(sol) -> str:
    W1, W2, Wb = sol.W1, sol.W2, sol.Wb
    return (
        f"u_f={sol.u_f:.6g} M_p={sol.M_p:.12g} sigma_p={sol.sigma_p:.6g} sigma_r={sol.sigma_r:.6g}\n"
        f"  W1: rho={W1.rho:.6g} u={W1.u:.6g} p={W1.p:.6g}\n"
        f"  W2: rho={W2.rho:.6g} u={W2.u:.6g} p={W2.p:.6g}\n"
        f"  Wb: rho={Wb.rho:.6g} p={Wb.p:.6g} T={sol.T_b:.6g}"
    )


def run(cfg: RunConfig) -> int:
    model = cfg.model()
    if cfg.mode == "sweep":
        result = sweep_flame_speeds(model, cfg.u_f_list, cfg.N, cfg.solver_config(), workers=cfg.workers)
        for e in result.entries:
            if e.ok:
                print(_summary(e.solution))
            else:
                print(f"u_f={e.u_f:.6g} FAILED: {e.error}", file=sys.stderr)
        if cfg.states_out:
            write_states_table(result.solutions, cfg.states_out)
        return 0 if result.complete else 1

    if cfg.mode == "mach":
        sol = solve_given_mach(model, cfg.M_p, cfg.N, refine=cfg.refine_sigma_r)
    else:
        sol, trace = solve_given_flame_speed(model, cfg.u_f, cfg.N, cfg.solver_config())
        print(f"secant converged in {trace.k_final} iterations")
    print(_summary(sol))
    if cfg.out:
        t = cfg.sample_time if cfg.sample_time is not None else 1.0
        write_profile_csv(sample_solution(sol, t, default_radii(sol, t)), cfg.out)
    if cfg.states_out:
        write_states_table([sol], cfg.states_out)
    return 0


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    if not argv:
        parser.print_usage(sys.stderr)
        return 2
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"sphereflame: error: {exc}", file=sys.stderr)
        return 2
    _setup_logging()
    try:
        return run(cfg)
    except SphereFlameError as exc:
        print(f"sphereflame: solver failure: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"sphereflame: I/O failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
