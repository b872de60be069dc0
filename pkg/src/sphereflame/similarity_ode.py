"""Intermediate-zone ODEs in the similarity variable x = r/t.

Between the reactive and precursor shocks the flow is regular and
isentropic, so density and velocity obey two coupled ODEs in x. They are
marched with explicit Euler from x = sigma_p downwards on the uniform grid
x^n = n * sigma_p / N until the reactive-shock residual turns non-positive.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, IntegrationError, NoRootError, SingularityError
from .gas import GasModel, GasState
from .shocks import PrecursorData, residual_terms

log = logging.getLogger(__name__)

#: Relative sonic guard: abort when (u - x)**2 - c**2 >= -SONIC_ETA * c**2.
SONIC_ETA = 1e-10
N_MIN = 10
N_MAX = 10_000_000


@dataclass(frozen=True)
class IntermediateProfile:
    """Nodes of the intermediate zone, ``x`` ascending and ending at sigma_p.

    ``residual`` holds the reactive-shock residual at each node and
    ``sonic_margin`` the value of u + c - x.
    """

    x: np.ndarray
    rho: np.ndarray
    u: np.ndarray
    p: np.ndarray
    s1: float
    sonic_margin: np.ndarray
    residual: np.ndarray

    def __len__(self):
        return len(self.x)


@dataclass(frozen=True)
class IntegrationOutcome:
    profile: IntermediateProfile
    sigma_r: float
    W2: GasState
    n_stop: int
    fr_bracket: tuple[float, float]
    x_stop: float
    stop_state: GasState
    dx: float


def ode_rhs(x: float, rho: float, u: float, model: GasModel, s1: float) -> tuple[float, float]:
    """Return (drho/dx, du/dx) for the isentropic similarity system."""
    if not x > 0:
        raise DomainError(f"similarity coordinate must be positive, got {x}")
    if not rho > 0:
        raise DomainError(f"density must be positive, got {rho}")
    c2 = model.gamma_u * s1 * rho ** (model.gamma_u - 1.0)
    det = (u - x) ** 2 - c2
    if abs(det) <= SONIC_ETA * c2:
        raise SingularityError(f"sonic point at x={x}: (u-x)^2 - c^2 = {det}")
    d = x * det
    return -2.0 * u * (u - x) * rho / d, 2.0 * c2 * u / d


def integrate_intermediate(prec: PrecursorData, model: GasModel, N: int) -> IntegrationOutcome:
    """March the intermediate zone from sigma_p down to the reactive shock.

    Parameters
    ----------
    prec : PrecursorData
        State behind the precursor shock, used as initial condition at
        x = sigma_p.
    model : GasModel
    N : int
        Number of grid intervals on [0, sigma_p].

    Returns
    -------
    IntegrationOutcome
        ``sigma_r`` is the last node x^{n+1} where the residual is still
        positive; ``stop_state`` is the state at x^n where it is not.

    Raises
    ------
    IntegrationError
        The sonic guard tripped before the residual changed sign.
    NoRootError
        The residual is non-positive at sigma_p, or the march reached x = 0.
    """
    N = int(N)
    if not N_MIN <= N <= N_MAX:
        raise DomainError(f"grid count must lie in [{N_MIN}, {N_MAX}], got {N}")
    gu = model.gamma_u
    s1 = prec.s1
    sigma_p = prec.sigma_p
    dx = sigma_p / N

    rho, u = prec.W1.rho, prec.W1.u
    x = sigma_p
    p = s1 * rho**gu
    f = float(residual_terms(x, rho, u, p, model))
    if not f > 0:
        raise NoRootError(f"reactive residual at the precursor shock is {f} <= 0")

    xs, rhos, us, fs = [x], [rho], [u], [f]
    for n in range(N - 1, -1, -1):
        c2 = gu * s1 * rho ** (gu - 1.0)
        det = (u - x) ** 2 - c2
        if det >= -SONIC_ETA * c2:
            h = u + math.sqrt(c2) - x
            raise IntegrationError(
                f"sonic guard tripped at x={x:.9g} (u + c - x = {h:.3e})", x=x, sonic_margin=h
            )
        d = x * det
        rho_n = rho + dx * 2.0 * u * (u - x) / d * rho
        u_n = u - dx * 2.0 * c2 / d * u
        x_n = n * dx
        if rho_n <= 0:
            raise IntegrationError(f"density turned non-positive at x={x_n:.9g}", x=x)
        p_n = s1 * rho_n**gu
        if n == 0:
            break
        if not x_n - u_n > 0:
            raise IntegrationError(
                f"step to x={x_n:.9g} crossed u = x before the residual changed sign; "
                "the grid is too coarse",
                x=x,
                sonic_margin=u + math.sqrt(c2) - x,
            )
        f_n = float(residual_terms(x_n, rho_n, u_n, p_n, model))
        if f_n <= 0:
            profile = _make_profile(xs, rhos, us, fs, s1, model)
            log.debug("reactive shock bracketed in [%g, %g] after %d steps", x_n, x, N - n)
            return IntegrationOutcome(
                profile=profile,
                sigma_r=x,
                W2=GasState(rho, u, p),
                n_stop=n,
                fr_bracket=(f_n, f),
                x_stop=x_n,
                stop_state=GasState(rho_n, u_n, p_n),
                dx=dx,
            )
        rho, u, x, p, f = rho_n, u_n, x_n, p_n, f_n
        xs.append(x)
        rhos.append(rho)
        us.append(u)
        fs.append(f)
    raise NoRootError("reached x = 0 without a sign change of the reactive residual")


def _make_profile(xs, rhos, us, fs, s1, model) -> IntermediateProfile:
    x = np.array(xs[::-1])
    rho = np.array(rhos[::-1])
    u = np.array(us[::-1])
    p = s1 * rho**model.gamma_u
    c = np.sqrt(model.gamma_u * p / rho)
    for arr in (x, rho, u, p):
        arr.flags.writeable = False
    return IntermediateProfile(
        x=x,
        rho=rho,
        u=u,
        p=p,
        s1=s1,
        sonic_margin=u + c - x,
        residual=np.array(fs[::-1]),
    )


def refine_sigma_r(outcome: IntegrationOutcome) -> float:
    """Linear-interpolation root of the residual inside the final bracket."""
    f_lo, f_hi = outcome.fr_bracket
    if f_lo == f_hi or not math.isfinite(f_lo):
        return outcome.sigma_r
    theta = f_hi / (f_hi - f_lo)
    return outcome.sigma_r - theta * (outcome.sigma_r - outcome.x_stop)


def state_at(outcome: IntegrationOutcome, x: float, model: GasModel) -> GasState:
    """Interpolate (rho, u) linearly inside the final bracket; p from the isentrope."""
    lo, hi = outcome.x_stop, outcome.sigma_r
    if not lo <= x <= hi:
        raise DomainError(f"x={x} outside the final bracket [{lo}, {hi}]")
    theta = (hi - x) / (hi - lo)
    a, b = outcome.W2, outcome.stop_state
    rho = a.rho + theta * (b.rho - a.rho)
    u = a.u + theta * (b.u - a.u)
    return GasState(rho, u, outcome.profile.s1 * rho**model.gamma_u)

