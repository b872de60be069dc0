"""Rankine-Hugoniot relations at the precursor and reactive shocks."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, NonphysicalStateError
from .gas import GasModel, GasState, entropy, internal_energy, sound_speed


@dataclass(frozen=True)
class PrecursorData:
    sigma_p: float
    M_p: float
    W1: GasState
    c1: float
    s1: float


@dataclass(frozen=True)
class ReactiveShockData:
    sigma_r: float
    W2: GasState
    Wb: GasState
    u_f: float


def precursor_state(model: GasModel, M_p: float) -> PrecursorData:
    """State behind a 3-shock of Mach number ``M_p`` running into ``model.W0``.

    Raises
    ------
    DomainError
        If ``M_p <= 1`` (the entropy condition needs a supersonic shock).
    """
    if not M_p > 1.0:
        raise DomainError(f"precursor Mach number must exceed 1, got {M_p}")
    g = model.gamma_u
    W0 = model.W0
    sigma_p = M_p * model.c0
    rho1 = (g + 1.0) / (g - 1.0 + 2.0 / M_p**2) * W0.rho
    compression = 1.0 - W0.rho / rho1
    W1 = GasState(
        rho=rho1,
        u=compression * sigma_p,
        p=W0.p + compression * W0.rho * sigma_p**2,
    )
    return PrecursorData(
        sigma_p=sigma_p,
        M_p=M_p,
        W1=W1,
        c1=sound_speed(W1, model),
        s1=entropy(W1, model),
    )


def residual_terms(x, rho, u, p, model: GasModel):
    """Reactive-shock residual on raw values; accepts numpy arrays."""
    gu, gb = model.gamma_u, model.gamma_b
    return (
        0.5 * u * u
        + x * u / (gb - 1.0)
        + (gu / (gu - 1.0) - gb / (gb - 1.0) * (x / (x - u))) * p / rho
        + model.Q
    )


def reactive_residual(x: float, state: GasState, model: GasModel) -> float:
    """Residual F_r whose root in ``x`` locates the reactive shock.

    It vanishes exactly when a burnt state at rest behind a shock of speed
    ``x`` can be joined to ``state`` with the heat ``Q`` released.
    """
    if not state.rho > 0:
        raise DomainError(f"density must be positive, got {state.rho}")
    if not x - state.u > 0:
        raise DomainError(f"need x > u (positive flame speed), got x={x}, u={state.u}")
    return residual_terms(x, state.rho, state.u, state.p, model)


def burnt_state(W2: GasState, sigma_r: float, model: GasModel) -> GasState:
    """Burnt state at rest from mass and momentum jumps across the reactive shock."""
    if not sigma_r > 0:
        raise DomainError(f"reactive shock speed must be positive, got {sigma_r}")
    if not sigma_r > W2.u:
        raise DomainError(f"reactive shock speed {sigma_r} must exceed u2={W2.u}")
    w = sigma_r - W2.u
    rho_b = W2.rho * w / sigma_r
    p_b = W2.p - W2.rho * W2.u * w
    if not (rho_b > 0 and p_b > 0):
        raise NonphysicalStateError(f"burnt state rho={rho_b}, p={p_b} is not physical")
    return GasState(rho=rho_b, u=0.0, p=p_b, burnt=True)


def reactive_energy_residual(W2: GasState, Wb: GasState, sigma_r: float, model: GasModel) -> float:
    """Total-enthalpy balance across the reactive shock, in the shock frame.

    Returns the fresh-side enthalpy 1/2 (sigma_r - u2)**2 + e2 + p2/rho2 minus
    the burnt-side one 1/2 sigma_r**2 + e_b - Q + p_b/rho_b. When ``Wb`` comes
    from :func:`burnt_state` the value equals ``reactive_residual(sigma_r, W2)``
    identically, so this is an independent route to the same root.
    """
    w2 = sigma_r - W2.u
    wb = sigma_r - Wb.u
    fresh = 0.5 * w2 * w2 + internal_energy(W2, model) + W2.p / W2.rho
    burnt = 0.5 * wb * wb + internal_energy(Wb, model) - model.Q + Wb.p / Wb.rho
    return fresh - burnt


def jump_residuals(W2: GasState, Wb: GasState, sigma_r: float) -> tuple[float, float]:
    """Relative mass and momentum flux mismatches across the reactive shock."""
    w2 = sigma_r - W2.u
    wb = sigma_r - Wb.u
    m2, mb = W2.rho * w2, Wb.rho * wb
    i2, ib = W2.rho * w2 * w2 + W2.p, Wb.rho * wb * wb + Wb.p
    return (mb - m2) / abs(m2), (ib - i2) / abs(i2)


def reactive_shock(W2: GasState, sigma_r: float, model: GasModel) -> ReactiveShockData:
    Wb = burnt_state(W2, sigma_r, model)
    return ReactiveShockData(sigma_r=sigma_r, W2=W2, Wb=Wb, u_f=sigma_r - W2.u)


def lax_margin(prec: PrecursorData) -> float:
    """u1 + c1 - sigma_p, positive for an admissible 3-shock."""
    return prec.W1.u + prec.c1 - prec.sigma_p


def mach_from_speed(model: GasModel, sigma_p: float) -> float:
    return sigma_p / model.c0


__all__ = [
    "PrecursorData",
    "ReactiveShockData",
    "precursor_state",
    "reactive_residual",
    "residual_terms",
    "burnt_state",
    "reactive_energy_residual",
    "jump_residuals",
    "reactive_shock",
    "lax_margin",
    "mach_from_speed",
]
