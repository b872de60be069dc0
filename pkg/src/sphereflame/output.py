"""Radial sampling of a solution and CSV serialization."""
from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .solver import Solution

PROFILE_COLUMNS = ("r", "rho", "u", "p")
STATES_COLUMNS = (
    "uf", "M_p", "sigma_p", "sigma_r",
    "rho1", "u1", "p1", "rho2", "u2", "p2", "rho_b", "p_b", "T_b",
)


@dataclass(frozen=True)
class RadialProfile:
    r: np.ndarray
    rho: np.ndarray
    u: np.ndarray
    p: np.ndarray

    def rows(self):
        return zip(self.r, self.rho, self.u, self.p)


def sample_solution(solution: Solution, t: float, r_grid) -> RadialProfile:
    """Evaluate the piecewise solution at radii ``r_grid`` and time ``t``.

    Burnt state for r/t < sigma_r, linear interpolation between ODE nodes on
    [sigma_r, sigma_p], ambient state beyond sigma_p.
    """
    if not t > 0:
        raise DomainError(f"sample time must be positive, got {t}")
    r = np.asarray(r_grid, dtype=float)
    if np.any(r < 0):
        raise DomainError("radii must be non-negative")
    x = r / t
    prof = solution.profile
    sr, sp = solution.sigma_r, solution.sigma_p
    Wb, W0 = solution.Wb, solution.W0

    # profile nodes start at the last node with positive residual; when the
    # reactive shock was refined below it, prepend the state at sigma_r
    xs, rhos, us, ps = prof.x, prof.rho, prof.u, prof.p
    if sr < xs[0]:
        W2 = solution.W2
        xs = np.concatenate(([sr], xs))
        rhos = np.concatenate(([W2.rho], rhos))
        us = np.concatenate(([W2.u], us))
        ps = np.concatenate(([W2.p], ps))

    inner = x < sr
    outer = x > sp
    mid = ~(inner | outer)
    rho = np.empty_like(x)
    u = np.empty_like(x)
    p = np.empty_like(x)
    rho[inner], u[inner], p[inner] = Wb.rho, Wb.u, Wb.p
    rho[outer], u[outer], p[outer] = W0.rho, W0.u, W0.p
    rho[mid] = np.interp(x[mid], xs, rhos)
    u[mid] = np.interp(x[mid], xs, us)
    p[mid] = np.interp(x[mid], xs, ps)
    return RadialProfile(r=r, rho=rho, u=u, p=p)


def default_radii(solution: Solution, t: float, count: int = 1001, extent: float = 1.25) -> np.ndarray:
    return np.linspace(0.0, extent * solution.sigma_p * t, count)


def _fmt(v) -> str:
    return format(float(v), ".12g")


def write_profile_csv(table: RadialProfile | None, path) -> None:
    with open(path, "w", newline="", encoding="ascii") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(PROFILE_COLUMNS)
        if table is not None:
            for row in table.rows():
                w.writerow([_fmt(v) for v in row])


def states_row(sol: Solution) -> list[float]:
    W1, W2, Wb = sol.W1, sol.W2, sol.Wb
    return [
        sol.u_f, sol.M_p, sol.sigma_p, sol.sigma_r,
        W1.rho, W1.u, W1.p, W2.rho, W2.u, W2.p, Wb.rho, Wb.p, sol.T_b,
    ]


def write_states_table(solutions, path) -> None:
    with open(path, "w", newline="", encoding="ascii") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(STATES_COLUMNS)
        for sol in solutions:
            w.writerow([_fmt(v) for v in states_row(sol)])


def read_csv(path) -> tuple[list[str], np.ndarray]:
    with open(path, newline="", encoding="ascii") as fh:
        rows = list(csv.reader(fh))
    header, body = rows[0], rows[1:]
    data = np.array([[float(v) for v in row] for row in body]).reshape(len(body), len(header))
    return header, data
