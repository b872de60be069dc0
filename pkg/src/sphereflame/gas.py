"""Ideal-gas thermodynamics and the stoichiometric hydrogen-air mixture."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError

#: Universal gas constant, J/(mol K).
R_UNIVERSAL = 8.314

#: Formation enthalpy of steam, J/kg.
DH_FORMATION_STEAM = 1.3255e7

#: Molar masses, kg/mol.
W_H2 = 0.002
W_O2 = 0.032
W_N2 = 0.028


@dataclass(frozen=True)
class GasState:
    """One fluid state. ``burnt`` selects the burnt-gas constitutive law."""

    rho: float
    u: float
    p: float
    burnt: bool = False


@dataclass(frozen=True)
class GasModel:
    """Thermodynamic and chemical parameters plus the ambient state ``W0``.

    ``W_burnt`` is the molar mass of the combustion products; it only enters
    the temperature of burnt states and defaults to ``W_mix``.
    """

    gamma_u: float
    gamma_b: float
    Q: float
    W_mix: float
    W0: GasState
    R: float = R_UNIVERSAL
    W_burnt: float | None = None
    mass_fractions: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not (self.gamma_u > 1 and self.gamma_b > 1):
            raise DomainError("heat capacity ratios must exceed 1")
        if not self.Q > 0:
            raise DomainError(f"heat of reaction must be positive, got {self.Q}")
        if not self.W_mix > 0:
            raise DomainError("molar mass must be positive")
        if self.W_burnt is not None and not self.W_burnt > 0:
            raise DomainError("burnt molar mass must be positive")
        if self.W0.u != 0 or self.W0.burnt:
            raise DomainError("ambient state must be unburnt and at rest")
        if not (self.W0.rho > 0 and self.W0.p > 0):
            raise DomainError("ambient density and pressure must be positive")

    @property
    def c0(self) -> float:
        return sound_speed(self.W0, self)

    def gamma(self, burnt: bool) -> float:
        return self.gamma_b if burnt else self.gamma_u


def _check_rho(state: GasState):
    if not state.rho > 0:
        raise DomainError(f"density must be positive, got {state.rho}")


def sound_speed(state: GasState, model: GasModel) -> float:
    _check_rho(state)
    if not state.p > 0:
        raise DomainError(f"pressure must be positive, got {state.p}")
    return math.sqrt(model.gamma(state.burnt) * state.p / state.rho)


def entropy(state: GasState, model: GasModel) -> float:
    """Entropy surrogate p / rho**gamma_u, constant across the intermediate zone."""
    _check_rho(state)
    return state.p / state.rho**model.gamma_u


def temperature(state: GasState, model: GasModel) -> float:
    _check_rho(state)
    W = model.W_mix
    if state.burnt and model.W_burnt is not None:
        W = model.W_burnt
    return state.p * W / (state.rho * model.R)


def internal_energy(state: GasState, model: GasModel) -> float:
    _check_rho(state)
    return state.p / ((model.gamma(state.burnt) - 1.0) * state.rho)


def hydrogen_air_mixture(p0: float = 1e5, T0: float = 283.0, gamma: float = 1.4) -> GasModel:
    """Stoichiometric H2-air (air = 1/5 O2, 4/5 N2) with complete 2 H2 + O2 -> 2 H2O.

    Parameters
    ----------
    p0 : float
        Ambient pressure in Pa.
    T0 : float
        Ambient temperature in K.
    gamma : float
        Heat capacity ratio shared by fresh and burnt gas.

    Returns
    -------
    GasModel
        Model with Q = (y_H2 + y_O2) * DH_f(steam) and ambient density from
        the ideal-gas law. The burnt molar mass counts the 6 moles of
        products (2 H2O + 4 N2) formed from 7 moles of fresh mixture.
    """
    if not (p0 > 0 and T0 > 0):
        raise DomainError("p0 and T0 must be positive")
    # per 7 mol of mixture: 2 H2, 1 O2, 4 N2
    W_t = 2 * W_H2 + W_O2 + 4 * W_N2
    y = {"H2": 2 * W_H2 / W_t, "O2": W_O2 / W_t, "N2": 4 * W_N2 / W_t}
    Q = (y["H2"] + y["O2"]) * DH_FORMATION_STEAM
    W_mix = W_t / 7.0
    W_burnt = W_t / 6.0
    rho0 = p0 * W_mix / (R_UNIVERSAL * T0)
    return GasModel(
        gamma_u=gamma,
        gamma_b=gamma,
        Q=Q,
        W_mix=W_mix,
        W0=GasState(rho0, 0.0, p0),
        W_burnt=W_burnt,
        mass_fractions=y,
    )
