"""Benchmark problems: Gaussian pulse, explicit traveling wave, 2D trig data."""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .coefficients import Material, wave_speed
from .grid import FIXED_VALUE, PERIODIC, Grid1D, Grid2D


@dataclass(frozen=True)
class Problem1D:
    name: str
    material: Material
    x_min: float
    x_max: float
    boundary: str
    u0: Callable
    u1: Callable
    u0x: Optional[Callable] = None
    exact: Optional[Callable] = None  # exact(t, x)
    edge_values: Optional[tuple] = None

    def grid(self, n_cells):
        return Grid1D(self.x_min, self.x_max, n_cells, self.boundary, self.edge_values)


@dataclass(frozen=True)
class Problem2D:
    name: str
    material: Material
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    u0: Callable
    u1: Callable
    u0x: Optional[Callable] = None
    u0y: Optional[Callable] = None

    def grid(self, nx, ny=None):
        return Grid2D(self.x_min, self.x_max, self.y_min, self.y_max,
                      nx, nx if ny is None else ny)


def gaussian_pulse(alpha=0.5, beta=4.5):
    """Gaussian bump on the angle over [-15, 15], periodic.

    u0 = pi/4 + exp(-x^2) and u1 = -c(u0) u0', i.e. data moving to the right;
    the tails decay to pi/4 far below machine precision, so the periodic
    closure is consistent.
    """
    mat = Material(alpha, beta)

    def u0(x):
        return np.pi / 4.0 + np.exp(-np.asarray(x, float) ** 2)

    def u0x(x):
        x = np.asarray(x, float)
        return -2.0 * x * np.exp(-x * x)

    def u1(x):
        return -wave_speed(mat, u0(x)) * u0x(x)

    return Problem1D("gaussian", mat, -15.0, 15.0, PERIODIC, u0, u1, u0x)


def _tw_profile(xi):
    xi = np.asarray(xi, float)
    scalar = xi.ndim == 0
    xi = np.atleast_1d(xi)
    inside = (xi > 0.0) & (xi < 1.0)
    out = np.where(xi >= 1.0, np.pi, 0.0)
    out[inside] = np.arccos(1.0 - 2.0 * xi[inside])
    return out[0] if scalar else out


def _tw_slope(xi):
    # The closed outer branches win at xi = 0 and xi = 1 exactly; the interior
    # 1/sqrt(xi - xi^2) singularity is evaluated as-is (infinite local energy
    # is intrinsic to this solution).
    xi = np.asarray(xi, float)
    scalar = xi.ndim == 0
    xi = np.atleast_1d(xi)
    out = np.zeros_like(xi)
    inside = (xi > 0.0) & (xi < 1.0)
    x_in = xi[inside]
    out[inside] = 1.0 / np.sqrt(x_in - x_in * x_in)
    return out[0] if scalar else out


def traveling_wave():
    """Rigidly translating profile with speed s = sqrt(alpha), alpha=0.5, beta=1.5.

    The angle ramps from 0 to pi across a unit interval via arccos(1 - 2 xi);
    its slope blows up like 1/sqrt(xi - xi^2) at the edges.  Fixed-value
    boundaries freeze the far-field states 0 (left) and pi (right); the
    computational window [-3, 4] keeps them causally separated from the wave
    for t <= 1.
    """
    mat = Material(0.5, 1.5)
    s = np.sqrt(0.5)

    def u1(x):
        return -s * _tw_slope(x)

    def exact(t, x):
        return _tw_profile(np.asarray(x, float) - s * t)

    return Problem1D("traveling-wave", mat, -3.0, 4.0, FIXED_VALUE,
                     _tw_profile, u1, _tw_slope, exact, edge_values=(0.0, np.pi))


def trig_2d(alpha=0.5, beta=1.5):
    """Doubly periodic trigonometric data on [0, 1]^2."""
    mat = Material(alpha, beta)
    tp = 2.0 * np.pi

    def u0(x, y):
        return 2.0 * np.cos(tp * x) * np.sin(tp * y)

    def u1(x, y):
        return np.sin(tp * (x - y))

    def u0x(x, y):
        return -2.0 * tp * np.sin(tp * x) * np.sin(tp * y)

    def u0y(x, y):
        return 2.0 * tp * np.cos(tp * x) * np.cos(tp * y)

    return Problem2D("trig2d", mat, 0.0, 1.0, 0.0, 1.0, u0, u1, u0x, u0y)


def tw_ode_residual(psi_value, psi_slope, s, mat, k=2.0):
    """Residual psi' * sqrt(|s^2 - c^2(psi)|) - k of the traveling-wave ODE.

    Validation oracle only: for the explicit profile above the product is
    identically 2 on the interior, which pins k.
    """
    c = wave_speed(mat, psi_value)
    return psi_slope * np.sqrt(np.abs(s * s - c * c)) - k
