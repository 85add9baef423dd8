"""Material wave speed c(u) and the trigonometric coefficient fields.

c^2(u) = alpha cos^2 u + beta sin^2 u, so c is bounded between
sqrt(min(alpha, beta)) and sqrt(max(alpha, beta)) and never vanishes.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Material:
    """Elastic constants of the director field; both must be positive."""

    alpha: float
    beta: float

    def __post_init__(self):
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError(f"elastic constants must be positive, got {self.alpha}, {self.beta}")


def wave_speed(mat, u):
    """c(u) = sqrt(alpha cos^2 u + beta sin^2 u), elementwise."""
    s = np.sin(u)
    return np.sqrt(mat.alpha + (mat.beta - mat.alpha) * s * s)


def wave_speed_deriv(mat, u):
    """Exact derivative c'(u) = (beta - alpha) sin u cos u / c(u)."""
    return (mat.beta - mat.alpha) * np.sin(u) * np.cos(u) / wave_speed(mat, u)


def coeff_phi(u):
    """phi(u) = cos u."""
    return np.cos(u)


def coeff_psi(u):
    """psi(u) = sin u."""
    return np.sin(u)


def coeff_b2(mat, u):
    """b^2(u) = alpha sin^2 u + beta cos^2 u (2D formulation check only)."""
    s = np.sin(u)
    return mat.beta + (mat.alpha - mat.beta) * s * s


def coeff_a(mat, u):
    """a(u) = (alpha - beta)/2 * sin(2u) (2D formulation check only)."""
    return 0.5 * (mat.alpha - mat.beta) * np.sin(2.0 * u)
