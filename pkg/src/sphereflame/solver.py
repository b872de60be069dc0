"""Full-solution assembly and the secant inversion of the flame-speed map."""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import ConvergenceError, DomainError, SphereFlameError
from .gas import GasModel, GasState, temperature
from .shocks import PrecursorData, ReactiveShockData, precursor_state, reactive_shock
from .similarity_ode import IntegrationOutcome, integrate_intermediate, refine_sigma_r, state_at

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolverConfig:
    """Secant parameters and guards.

    The defaults are the published ones (M0 = 1.0001, delta = 0.001,
    epsilon = 1e-5 m/s); ``max_iter`` and the sub-sonic clamp are additions.
    """

    m0: float = 1.0001
    delta: float = 0.001
    epsilon: float = 1e-5
    max_iter: int = 100
    mach_clamp: float = 1.0 + 1e-9
    refine_sigma_r: bool = False

    def __post_init__(self):
        if not self.m0 > 1:
            raise DomainError(f"m0 must exceed 1, got {self.m0}")
        if not self.delta > 0:
            raise DomainError("delta must be positive")
        if not self.epsilon > 0:
            raise DomainError("epsilon must be positive")
        if self.max_iter < 2:
            raise DomainError("max_iter must be at least 2")


@dataclass(frozen=True)
class Solution:
    model: GasModel
    M_p: float
    N: int
    prec: PrecursorData
    outcome: IntegrationOutcome
    react: ReactiveShockData

    @property
    def sigma_p(self) -> float:
        return self.prec.sigma_p

    @property
    def sigma_r(self) -> float:
        return self.react.sigma_r

    @property
    def u_f(self) -> float:
        return self.react.u_f

    @property
    def W0(self) -> GasState:
        return self.model.W0

    @property
    def W1(self) -> GasState:
        return self.prec.W1

    @property
    def W2(self) -> GasState:
        return self.react.W2

    @property
    def Wb(self) -> GasState:
        return self.react.Wb

    @property
    def profile(self):
        return self.outcome.profile

    @property
    def T_b(self) -> float:
        return temperature(self.Wb, self.model)


@dataclass
class SecantTrace:
    iterates: list[tuple[float, float]] = field(default_factory=list)
    converged: bool = False
    k_final: int = -1
    clamped: int = 0


def solve_given_mach(model: GasModel, M_p: float, N: int, refine: bool = False) -> Solution:
    """Build the four-state solution for a prescribed precursor Mach number.

    With ``refine`` the reactive shock is placed at the interpolated root of
    the residual instead of the last node where it is positive.
    """
    prec = precursor_state(model, M_p)
    outcome = integrate_intermediate(prec, model, N)
    if refine:
        sigma_r = refine_sigma_r(outcome)
        W2 = state_at(outcome, sigma_r, model)
    else:
        sigma_r, W2 = outcome.sigma_r, outcome.W2
    react = reactive_shock(W2, sigma_r, model)
    return Solution(model=model, M_p=M_p, N=int(N), prec=prec, outcome=outcome, react=react)


def flame_speed_of(solution: Solution) -> float:
    return solution.react.sigma_r - solution.react.W2.u


def solve_given_flame_speed(
    model: GasModel, u_f_target: float, N: int, cfg: SolverConfig | None = None
) -> tuple[Solution, SecantTrace]:
    """Find the precursor Mach number whose solution has flame speed ``u_f_target``.

    Secant iteration on G(M) = u_f(M) - u_f_target started from M0 and
    M0 + delta, stopped once |G| <= epsilon.

    Raises
    ------
    ConvergenceError
        On stagnation (equal G values), a second iterate at or below Mach 1,
        exhausting ``max_iter``, or a failed inner solve. The partial trace is
        attached.
    """
    if not u_f_target > 0:
        raise DomainError(f"flame speed must be positive, got {u_f_target}")
    cfg = cfg or SolverConfig()
    trace = SecantTrace()

    def evaluate(M):
        try:
            sol = solve_given_mach(model, M, N, refine=cfg.refine_sigma_r)
        except SphereFlameError as exc:
            raise ConvergenceError(f"inner solve failed at M={M!r}: {exc}", trace) from exc
        G = flame_speed_of(sol) - u_f_target
        trace.iterates.append((M, G))
        log.info("secant k=%d M=%.12g G=%.6e", len(trace.iterates) - 1, M, G)
        if abs(G) <= cfg.epsilon:
            trace.converged = True
            trace.k_final = len(trace.iterates) - 1
        return sol, G

    M_prev = cfg.m0
    sol, G_prev = evaluate(M_prev)
    if trace.converged:
        return sol, trace
    M = cfg.m0 + cfg.delta
    sol, G = evaluate(M)
    while not trace.converged:
        if len(trace.iterates) > cfg.max_iter:
            raise ConvergenceError(
                f"no convergence after {cfg.max_iter} iterations (last |G|={abs(G):.3e})", trace
            )
        if G == G_prev:
            raise ConvergenceError(f"secant stagnated at M={M!r}", trace)
        M_next = M - (M - M_prev) / (G - G_prev) * G
        if M_next <= 1.0:
            if trace.clamped:
                raise ConvergenceError(
                    f"secant iterate fell to M={M_next!r} <= 1 again after clamping; "
                    f"u_f={u_f_target} is below the reachable flame speeds on this grid",
                    trace,
                )
            log.info("secant iterate M=%.12g <= 1 clamped to %.12g", M_next, cfg.mach_clamp)
            M_next = cfg.mach_clamp
            trace.clamped += 1
        M_prev, G_prev = M, G
        M = M_next
        sol, G = evaluate(M)
    return sol, trace


@dataclass
class SweepEntry:
    u_f: float
    solution: Solution | None = None
    trace: SecantTrace | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.solution is not None


@dataclass
class SweepResult:
    entries: list[SweepEntry]

    @property
    def complete(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def solutions(self) -> list[Solution]:
        return [e.solution for e in self.entries if e.ok]


def _sweep_one(args) -> SweepEntry:
    model, u_f, N, cfg = args
    try:
        sol, trace = solve_given_flame_speed(model, u_f, N, cfg)
    except SphereFlameError as exc:
        return SweepEntry(u_f=u_f, trace=getattr(exc, "trace", None), error=str(exc))
    return SweepEntry(u_f=u_f, solution=sol, trace=trace)


def sweep_flame_speeds(
    model: GasModel,
    u_f_values,
    N: int,
    cfg: SolverConfig | None = None,
    workers: int = 1,
) -> SweepResult:
    """Solve for each flame speed independently; failures are recorded, not raised."""
    u_f_values = [float(v) for v in u_f_values]
    if not u_f_values:
        raise DomainError("flame-speed list is empty")
    for v in u_f_values:
        if not v > 0:
            raise DomainError(f"flame speeds must be positive, got {v}")
    cfg = cfg or SolverConfig()
    jobs = [(model, v, N, cfg) for v in u_f_values]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(_sweep_one, jobs))
    else:
        entries = [_sweep_one(j) for j in jobs]
    for e in entries:
        if not e.ok:
            log.warning("u_f=%g failed: %s", e.u_f, e.error)
    return SweepResult(entries)
