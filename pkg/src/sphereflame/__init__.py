"""Self-similar spherical flame solver.

The flow around a flame expanding at constant speed from a point is split
into a burnt core at rest, a regular intermediate zone, and the quiescent
fresh atmosphere, separated by the reactive and precursor shocks.
"""
from .errors import (
    ConvergenceError,
    DomainError,
    IntegrationError,
    NonphysicalStateError,
    NoRootError,
    SingularityError,
    SphereFlameError,
)
from .gas import (
    GasModel,
    GasState,
    entropy,
    hydrogen_air_mixture,
    internal_energy,
    sound_speed,
    temperature,
)
from .shocks import (
    PrecursorData,
    ReactiveShockData,
    burnt_state,
    precursor_state,
    reactive_energy_residual,
    reactive_residual,
)
from .similarity_ode import (
    IntegrationOutcome,
    IntermediateProfile,
    integrate_intermediate,
    ode_rhs,
    refine_sigma_r,
)
from .solver import (
    SecantTrace,
    Solution,
    SolverConfig,
    flame_speed_of,
    solve_given_flame_speed,
    solve_given_mach,
    sweep_flame_speeds,
)

__version__ = "0.1.0"
