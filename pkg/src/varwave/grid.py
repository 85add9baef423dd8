"""Uniform grids and the interface average/jump/central-difference operators.

Nodes are cell centers indexed 0..n-1; half-integer interfaces are never
stored, operators address them through (side, index) or face arrays.  The
boundary closure is either periodic (index wrap) or fixed_value, where the
grid supplies two constant ghost nodes per side.
"""

from dataclasses import dataclass

import numpy as np

PERIODIC = "periodic"
FIXED_VALUE = "fixed_value"


@dataclass(frozen=True)
class Grid1D:
    """Uniform 1D grid on [x_min, x_max) with n_cells cell-centered nodes.

    For fixed_value closure, ``edge_values = (left, right)`` are the frozen
    field values copied into the ghost nodes on each side.
    """

    x_min: float
    x_max: float
    n_cells: int
    boundary: str = PERIODIC
    edge_values: tuple[float, float] | None = None

    def __post_init__(self):
        if not self.x_max > self.x_min:
            raise ValueError(f"x_max={self.x_max} must exceed x_min={self.x_min}")
        if self.n_cells < 1:
            raise ValueError("n_cells must be >= 1")
        if self.boundary not in (PERIODIC, FIXED_VALUE):
            raise ValueError(f"unknown boundary mode {self.boundary!r}")

    @property
    def dx(self):
        return (self.x_max - self.x_min) / self.n_cells

    def nodes(self):
        return self.x_min + self.dx * np.arange(self.n_cells)


@dataclass(frozen=True)
class Grid2D:
    """Uniform periodic Cartesian grid; node (i, j) at (x_min + i dx, y_min + j dy)."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float
    nx: int
    ny: int
    boundary: str = PERIODIC

    def __post_init__(self):
        if not (self.x_max > self.x_min and self.y_max > self.y_min):
            raise ValueError("degenerate domain")
        if self.nx < 1 or self.ny < 1:
            raise ValueError("nx, ny must be >= 1")
        if self.boundary != PERIODIC:
            raise ValueError("2D grids support periodic closure only")

    @property
    def dx(self):
        return (self.x_max - self.x_min) / self.nx

    @property
    def dy(self):
        return (self.y_max - self.y_min) / self.ny

    def nodes(self):
        x = self.x_min + self.dx * np.arange(self.nx)
        y = self.y_min + self.dy * np.arange(self.ny)
        return np.meshgrid(x, y, indexing="ij")


def with_ghosts(g, grid, edge=None, depth=1):
    """Return g extended by `depth` closure nodes on each side.

    Periodic grids wrap; fixed_value grids fill the constant pair `edge`
    (falling back to grid.edge_values).  Raises if no ghost values are
    available for a fixed_value grid.
    """
    g = np.asarray(g)
    if grid.boundary == PERIODIC:
        if depth <= grid.n_cells:
            return np.concatenate((g[-depth:], g, g[:depth]))
        idx = np.arange(-depth, grid.n_cells + depth) % grid.n_cells
        return g[idx]
    if edge is None:
        edge = grid.edge_values
    if edge is None:
        raise ValueError("fixed_value grid needs ghost values (edge or grid.edge_values)")
    left, right = edge
    return np.concatenate((np.full(depth, left, dtype=g.dtype), g,
                           np.full(depth, right, dtype=g.dtype)))


def _neighbor(g, grid, j, offset, edge):
    k = j + offset
    if 0 <= k < grid.n_cells:
        return g[k]
    if grid.boundary == PERIODIC:
        return g[k % grid.n_cells]
    if edge is None:
        edge = grid.edge_values
    if edge is None:
        raise IndexError(f"index {k} out of range and no ghost values supplied")
    return edge[0] if k < 0 else edge[1]


def iface_avg(g, grid, j, side="plus", edge=None):
    """Average of g across the interface x_{j+1/2} (side plus) or x_{j-1/2}."""
    off = 1 if side == "plus" else -1
    return 0.5 * (g[j] + _neighbor(g, grid, j, off, edge))


def iface_jump(g, grid, j, side="plus", edge=None):
    """Jump g_{j+1} - g_j across x_{j+1/2} (side plus), g_j - g_{j-1} for minus."""
    if side == "plus":
        return _neighbor(g, grid, j, 1, edge) - g[j]
    return g[j] - _neighbor(g, grid, j, -1, edge)


def central_diff(g, grid, j, edge=None):
    """(g_{j+1} - g_{j-1}) / (2 dx) at node j."""
    return (_neighbor(g, grid, j, 1, edge) - _neighbor(g, grid, j, -1, edge)) / (2.0 * grid.dx)


def central_diff_field(g, grid, edge=None):
    """Central difference D0 applied to the whole grid function."""
    gp = with_ghosts(g, grid, edge)
    return (gp[2:] - gp[:-2]) / (2.0 * grid.dx)


# Face arrays: entry k of a face array lives on the interface x_{k-1/2},
# k = 0..n, so node j sees its minus face at k=j and its plus face at k=j+1.

def face_avg(gp):
    """Interface averages of a padded (n+2) array; returns n+1 faces."""
    return 0.5 * (gp[:-1] + gp[1:])


def face_jump(gp):
    """Interface jumps of a padded (n+2) array; returns n+1 faces."""
    return gp[1:] - gp[:-1]


def face_diff(f):
    """Per-node difference F_{j+1/2} - F_{j-1/2} of a face array (n+1 -> n)."""
    return f[1:] - f[:-1]


# 2D operators (periodic only).  axis: 0 = x, 1 = y.

def _roll_m(g, axis):
    return np.roll(g, -1, axis=axis)


def iface_avg_2d(g, axis, i, j, side="plus"):
    n = g.shape[axis]
    off = 1 if side == "plus" else -1
    idx = [i, j]
    idx[axis] = (idx[axis] + off) % n
    return 0.5 * (g[i, j] + g[tuple(idx)])


def iface_jump_2d(g, axis, i, j, side="plus"):
    n = g.shape[axis]
    idx = [i, j]
    if side == "plus":
        idx[axis] = (idx[axis] + 1) % n
        return g[tuple(idx)] - g[i, j]
    idx[axis] = (idx[axis] - 1) % n
    return g[i, j] - g[tuple(idx)]


def face_avg_2d(g, axis):
    """Plus-face averages along axis; entry (i, j) is the face at i+1/2 (or j+1/2)."""
    return 0.5 * (g + _roll_m(g, axis))


def face_jump_2d(g, axis):
    """Plus-face jumps along axis."""
    return _roll_m(g, axis) - g


def face_diff_2d(f, axis):
    """Difference of a plus-face field against its minus neighbor: F_{+1/2} - F_{-1/2}."""
    return f - np.roll(f, 1, axis=axis)
