"""Explicit time steppers over stacked state arrays, with the CFL step rule.

The steppers operate on plain ndarrays (any shape); scheme adapters stack the
named state fields along axis 0.  dt is recomputed from the current state
every step via ``dt_fn`` and the final step is truncated to land exactly on
t_end (and on any requested event times, so observers sample on step
boundaries).

Leap-frog is bootstrapped with one SSPRK3 step.  With per-step CFL sizes the
two-level update generalizes to y_next = y_prev + (dt_prev + dt) * f(y_curr),
which reduces to the classic 2*dt form for constant steps and preserves the
bilinear invariant for any step sequence.
"""

from dataclasses import dataclass

import numpy as np

from ._kernels import wave_speed_max
from .grid import Grid2D


@dataclass(frozen=True)
class StepControl:
    """CFL number and time horizon; theta is restricted to (0, 0.5]."""

    theta: float
    t_end: float
    recompute_each_step: bool = True

    def __post_init__(self):
        if not 0.0 < self.theta <= 0.5:
            raise ValueError(f"theta must lie in (0, 0.5], got {self.theta}")
        if self.t_end < 0:
            raise ValueError("t_end must be nonnegative")


class NonFiniteStateError(RuntimeError):
    """Raised when the integrated state picks up a NaN or Inf."""

    def __init__(self, step, time):
        super().__init__(f"non-finite state after step {step} (t = {time:.6g})")
        self.step = step
        self.time = time


def cfl_dt(grid, mat, u, theta):
    """dt = theta * dx / max_j c(u_j); 2D grids use min(dx, dy)."""
    h = min(grid.dx, grid.dy) if isinstance(grid, Grid2D) else grid.dx
    u = np.ascontiguousarray(np.asarray(u, float).ravel())
    return theta * h / wave_speed_max(u, mat.alpha, mat.beta)


def ssprk2_step(y, rhs, dt):
    y1 = y + dt * rhs(y)
    return 0.5 * y + 0.5 * (y1 + dt * rhs(y1))


def ssprk3_step(y, rhs, dt):
    y1 = y + dt * rhs(y)
    y2 = 0.75 * y + 0.25 * (y1 + dt * rhs(y1))
    return y / 3.0 + (2.0 / 3.0) * (y2 + dt * rhs(y2))


def rk4_step(y, rhs, dt):
    k1 = rhs(y)
    k2 = rhs(y + 0.5 * dt * k1)
    k3 = rhs(y + 0.5 * dt * k2)
    k4 = rhs(y + dt * k3)
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def leapfrog_step(y_prev, y_curr, rhs, dt):
    return y_prev + (2.0 * dt) * rhs(y_curr)


ONE_STEP = {"ssprk2": ssprk2_step, "ssprk3": ssprk3_step, "rk4": rk4_step}
INTEGRATORS = ("ssprk2", "ssprk3", "rk4", "leapfrog")


def integrate(y0, rhs, dt_fn, t_end, method="ssprk3", observer=None, events=(),
              max_steps=None):
    """March y0 to t_end; returns (y, t, n_steps).

    dt_fn(y) supplies the CFL step; steps are truncated to hit each event
    time and t_end exactly.  observer(step, t, y), when given, is called at
    t = 0 and after every step.  Raises NonFiniteStateError as soon as the
    state stops being finite.
    """
    if method not in INTEGRATORS:
        raise ValueError(f"unknown integrator {method!r}")
    y = np.array(y0, dtype=float)
    t = 0.0
    step = 0
    marks = sorted({float(e) for e in events if 0.0 < e < t_end}) + [float(t_end)]
    mark_i = 0
    if observer is not None:
        observer(step, t, y)

    y_prev = None
    dt_prev = 0.0
    while t < t_end and (max_steps is None or step < max_steps):
        dt = float(dt_fn(y))
        if not dt > 0.0:
            raise ValueError(f"nonpositive dt {dt} at t = {t}")
        hit_mark = False
        if mark_i < len(marks) and t + dt >= marks[mark_i]:
            dt = marks[mark_i] - t
            hit_mark = True
        if method == "leapfrog":
            if y_prev is None:
                y_next = ssprk3_step(y, rhs, dt)
            else:
                y_next = y_prev + (dt_prev + dt) * rhs(y)
            y_prev = y
            dt_prev = dt
        else:
            y_next = ONE_STEP[method](y, rhs, dt)
        step += 1
        if hit_mark:
            t = marks[mark_i]
            mark_i += 1
        else:
            t = t + dt
        y = y_next
        if not np.isfinite(y).all():
            raise NonFiniteStateError(step, t)
        if observer is not None:
            observer(step, t, y)
    return y, t, step
