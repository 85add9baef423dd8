"""Discrete energies, the energy ratio, and the relative L2 distance."""

from dataclasses import dataclass, field

import numpy as np

from .coefficients import wave_speed
from .grid import central_diff_field


@dataclass
class EnergyLog:
    """Time series of the discrete energy; times must increase strictly."""

    times: list = field(default_factory=list)
    energies: list = field(default_factory=list)

    def append(self, t, e):
        if self.times and t <= self.times[-1]:
            raise ValueError(f"non-increasing sample time {t}")
        self.times.append(float(t))
        self.energies.append(float(e))

    def ratio(self):
        return energy_ratio(self.energies[-1], self.energies[0])


def energy_vw(st, grid):
    """(dx/2) sum(v^2 + w^2)."""
    return 0.5 * grid.dx * float(np.sum(st.v * st.v + st.w * st.w))


def energy_rs(st, grid):
    """(dx/4) sum(R^2 + S^2); equals energy_vw of the same data since 2(v^2+w^2) = R^2+S^2."""
    return 0.25 * grid.dx * float(np.sum(st.R * st.R + st.S * st.S))


def energy_ham(st, mat, grid):
    """(dx/2) sum(q^2 + c^2(u) (D0 u)^2)."""
    d0u = central_diff_field(st.u, grid)
    c = wave_speed(mat, st.u)
    return 0.5 * grid.dx * float(np.sum(st.q * st.q + c * c * d0u * d0u))


def energy_2d(st, mat, grid):
    """(dx dy / 2) sum(p^2 + alpha v^2 + beta w^2)."""
    q = st.p * st.p + mat.alpha * st.v * st.v + mat.beta * st.w * st.w
    return 0.5 * grid.dx * grid.dy * float(np.sum(q))


def leapfrog_energy(st_n, st_np1, grid):
    """The two-level invariant dx * sum(v^n v^{n+1} + w^n w^{n+1})."""
    return grid.dx * float(np.sum(st_n.v * st_np1.v + st_n.w * st_np1.w))


def energy_ratio(e_final, e_initial):
    if e_initial <= 0:
        raise ValueError("initial energy must be positive")
    return e_final / e_initial


def rel_l2_distance(a, b):
    """200 * ||a - b|| / (||a|| + ||b||); zero when both vectors vanish."""
    a = np.asarray(a, float)
    b = np.asarray(b, float)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
    na = np.linalg.norm(a)
    nb = np.linalg.norm(b)
    if na + nb == 0.0:
        return 0.0
    return 200.0 * np.linalg.norm(a - b) / (na + nb)


def restrict_to_coarse(fine, fine_grid, coarse_grid):
    """Sample a fine-grid function at the coincident nodes of a nested coarse grid."""
    if not (np.isclose(fine_grid.x_min, coarse_grid.x_min)
            and np.isclose(fine_grid.x_max, coarse_grid.x_max)):
        raise ValueError("grids do not share a domain")
    ratio, rem = divmod(fine_grid.n_cells, coarse_grid.n_cells)
    if rem or ratio & (ratio - 1):
        raise ValueError(
            f"resolutions {fine_grid.n_cells}/{coarse_grid.n_cells} are not nested "
            "(need a power-of-two ratio)")
    return np.asarray(fine)[::ratio]
