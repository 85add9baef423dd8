"""Semi-discrete spatial operators for the five 1D schemes.

Each right-hand side is a pure function of a state and returns tendencies in
the same container.  Conservative variants keep the discrete energy exactly
constant along the semi-discrete flow; dissipative variants add interface
viscosity scaled by the local maximum wave speed s_{j+1/2} = max(c_j, c_{j+1})
and an overall factor kappa (kappa = 1 is the baseline dissipative scheme).

Fixed-value closure freezes the boundary angle: ghost nodes carry
(u, v, w) = (u_edge, 0, 0), and R = S = 0 for the characteristic variables.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._kernels import ham_dq, rs_rhs, vw_rhs, wave_speed_padded
from .coefficients import wave_speed
from .grid import central_diff_field, with_ghosts

_ZERO = (0.0, 0.0)


class StateVW(NamedTuple):
    """(v, w, u) with v = u_t and w = c(u) u_x."""

    v: np.ndarray
    w: np.ndarray
    u: np.ndarray


class StateRS(NamedTuple):
    """(R, S, u) with R = u_t + c(u) u_x, S = u_t - c(u) u_x."""

    R: np.ndarray
    S: np.ndarray
    u: np.ndarray


class StateHam(NamedTuple):
    """(u, q) for the second-order-form scheme, q = u_t."""

    u: np.ndarray
    q: np.ndarray


@dataclass(frozen=True)
class Viscosity:
    """Scale factor for the interface viscosity; kappa = 1 is the plain dissipative scheme."""

    kappa: float = 1.0

    def __post_init__(self):
        if self.kappa < 0:
            raise ValueError("kappa must be nonnegative")


def _c_padded(u, mat, grid):
    return wave_speed_padded(with_ghosts(u, grid), mat.alpha, mat.beta)


def rhs_vw_conservative(st, mat, grid):
    dv, dw = vw_rhs(with_ghosts(st.v, grid, _ZERO), with_ghosts(st.w, grid, _ZERO),
                    _c_padded(st.u, mat, grid), grid.dx, 0.0)
    return StateVW(dv, dw, st.v)


def rhs_vw_dissipative(st, mat, grid, visc=Viscosity()):
    dv, dw = vw_rhs(with_ghosts(st.v, grid, _ZERO), with_ghosts(st.w, grid, _ZERO),
                    _c_padded(st.u, mat, grid), grid.dx, visc.kappa)
    return StateVW(dv, dw, st.v)


def rhs_rs_conservative(st, mat, grid):
    dR, dS = rs_rhs(with_ghosts(st.R, grid, _ZERO), with_ghosts(st.S, grid, _ZERO),
                    _c_padded(st.u, mat, grid), grid.dx, 0.0)
    return StateRS(dR, dS, 0.5 * (st.R + st.S))


def rhs_rs_dissipative(st, mat, grid, visc=Viscosity()):
    dR, dS = rs_rhs(with_ghosts(st.R, grid, _ZERO), with_ghosts(st.S, grid, _ZERO),
                    _c_padded(st.u, mat, grid), grid.dx, visc.kappa)
    return StateRS(dR, dS, 0.5 * (st.R + st.S))


def rhs_hamiltonian(st, mat, grid):
    # D0 D0 couples nodes two apart, so the closure is two ghost nodes deep.
    dq = ham_dq(with_ghosts(st.u, grid, depth=2), mat.alpha, mat.beta, grid.dx)
    return StateHam(st.q, dq)


def init_vw(u0, u1, mat, grid, u0x=None):
    """Build (v, w, u) from physical data; w uses the analytic u0' when given, else D0 u0."""
    ux = central_diff_field(u0, grid) if u0x is None else np.asarray(u0x)
    return StateVW(np.asarray(u1, float).copy(),
                   wave_speed(mat, u0) * ux,
                   np.asarray(u0, float).copy())


def init_rs(u0, u1, mat, grid, u0x=None):
    """Build (R, S, u) from physical data; R, S = u1 +- c(u0) u0'."""
    ux = central_diff_field(u0, grid) if u0x is None else np.asarray(u0x)
    cux = wave_speed(mat, u0) * ux
    return StateRS(u1 + cux, u1 - cux, np.asarray(u0, float).copy())


def init_ham(u0, u1, grid):
    return StateHam(np.asarray(u0, float).copy(), np.asarray(u1, float).copy())


def vw_from_rs(st):
    """Definitional change of variables v = (R+S)/2, w = (R-S)/2."""
    return StateVW(0.5 * (st.R + st.S), 0.5 * (st.R - st.S), st.u)


def vw_from_ham(st, mat, grid):
    """(v, w) view of the second-order-form state: v = q, w = c(u) D0 u."""
    return StateVW(st.q, wave_speed(mat, st.u) * central_diff_field(st.u, grid), st.u)
