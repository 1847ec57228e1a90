"""Standardized skewed Student-t distribution (Fernandez-Steel skewing,
Lambert-Laurent standardization).

The unstandardized density glues two rescaled halves of the unit-variance
Student-t ``g(.|nu)`` at zero:

    f0(x) = 2/(xi + 1/xi) * g(xi * x | nu)   for x <  0
    f0(x) = 2/(xi + 1/xi) * g(x / xi | nu)   for x >= 0

``xi > 0`` controls the mass ratio above/below the mode, ``xi = 1`` recovers
the symmetric Student-t. The standardized variate is z = (x - m)/s with m, s
the mean and standard deviation of f0, so the branch point sits at
z = -m/s and every z-density here has zero mean and unit variance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import stats
from scipy.special import gammaln

from .exceptions import InvalidParamsError

__all__ = [
    "SkstParams",
    "StandardizationConstants",
    "standardization_constants",
    "log_density",
    "density",
    "cdf",
    "ppf",
    "sample",
    "neg_prob",
]


@dataclass(frozen=True)
class SkstParams:
    """Skewness ``xi`` (> 0) and tail ``nu`` (> 2, real-valued)."""

    xi: float
    nu: float

    def __post_init__(self):
        if not (np.isfinite(self.xi) and self.xi > 0):
            raise InvalidParamsError(f"xi must be > 0, got {self.xi!r}")
        if not (np.isfinite(self.nu) and self.nu > 2):
            raise InvalidParamsError(f"nu must be > 2, got {self.nu!r}")


@dataclass(frozen=True)
class StandardizationConstants:
    """Mean and standard deviation of the unstandardized skewed density."""

    mean: float
    std: float


def standardization_constants(params: SkstParams) -> StandardizationConstants:
    """Closed-form m and s of the unstandardized skewed Student-t.

    m = Gamma((nu-1)/2) * sqrt(nu-2) / (sqrt(pi) * Gamma(nu/2)) * (xi - 1/xi)
    s = sqrt(xi^2 + 1/xi^2 - 1 - m^2)

    Computed through log-gamma so large nu does not overflow.
    """
    xi, nu = params.xi, params.nu
    ratio = np.exp(gammaln((nu - 1.0) / 2.0) - gammaln(nu / 2.0))
    m = ratio * np.sqrt(nu - 2.0) / np.sqrt(np.pi) * (xi - 1.0 / xi)
    s_sq = xi * xi + 1.0 / (xi * xi) - 1.0 - m * m
    if not (np.isfinite(m) and s_sq > 0):
        raise InvalidParamsError(
            f"standardization failed for xi={xi!r}, nu={nu!r}"
        )
    return StandardizationConstants(mean=float(m), std=float(np.sqrt(s_sq)))


def _std_t_log_pdf(u, nu: float):
    # unit-variance Student-t: g(u) = c * (1 + u^2/(nu-2))^(-(nu+1)/2)
    c = (
        gammaln((nu + 1.0) / 2.0)
        - gammaln(nu / 2.0)
        - 0.5 * np.log(np.pi * (nu - 2.0))
    )
    return c - (nu + 1.0) / 2.0 * np.log1p(u * u / (nu - 2.0))


def _std_t_cdf(u, nu: float):
    scale = np.sqrt(nu / (nu - 2.0))
    return stats.t.cdf(np.asarray(u, dtype=float) * scale, nu)


def _std_t_ppf(p, nu: float):
    scale = np.sqrt((nu - 2.0) / nu)
    return stats.t.ppf(p, nu) * scale


def log_density(z, params: SkstParams):
    """Log density of the standardized skewed Student-t at z.

    For z below the mode -m/s the Student-t argument is xi*(s*z + m); at or
    above it the argument is (s*z + m)/xi. Scalar in, scalar out.
    """
    c = standardization_constants(params)
    xi = params.xi
    z = np.asarray(z, dtype=float)
    x = c.std * z + c.mean
    arg = np.where(x < 0, xi * x, x / xi)
    out = (
        np.log(2.0 / (xi + 1.0 / xi))
        + np.log(c.std)
        + _std_t_log_pdf(arg, params.nu)
    )
    return out if out.ndim else float(out)


def density(z, params: SkstParams):
    return np.exp(log_density(z, params))


def cdf(z, params: SkstParams):
    """Distribution function; exactly 1/(1 + xi^2) at the mode z = -m/s."""
    c = standardization_constants(params)
    xi = params.xi
    xi_sq = xi * xi
    z = np.asarray(z, dtype=float)
    x = c.std * z + c.mean
    below = 2.0 / (1.0 + xi_sq) * _std_t_cdf(xi * x, params.nu)
    above = 1.0 / (1.0 + xi_sq) + 2.0 * xi_sq / (1.0 + xi_sq) * (
        _std_t_cdf(x / xi, params.nu) - 0.5
    )
    out = np.where(x < 0, below, above)
    return out if out.ndim else float(out)


def ppf(u, params: SkstParams):
    """Quantile function (inverse of :func:`cdf`)."""
    c = standardization_constants(params)
    xi = params.xi
    xi_sq = xi * xi
    u = np.asarray(u, dtype=float)
    if np.any((u < 0) | (u > 1)):
        raise ValueError("probabilities must lie in [0, 1]")
    p_mode = 1.0 / (1.0 + xi_sq)
    with np.errstate(invalid="ignore"):
        lower = _std_t_ppf(np.minimum(u * (1.0 + xi_sq) / 2.0, 0.5), params.nu) / xi
        upper = xi * _std_t_ppf(
            np.maximum((u - p_mode) * (1.0 + xi_sq) / (2.0 * xi_sq) + 0.5, 0.5),
            params.nu,
        )
    x = np.where(u < p_mode, lower, upper)
    out = (x - c.mean) / c.std
    return out if out.ndim else float(out)


def sample(rng: np.random.Generator, params: SkstParams, n: int) -> np.ndarray:
    """Draw n standardized variates using the caller-owned generator.

    Two-piece construction: with probability xi^2/(1 + xi^2) the draw is
    xi*|T|, otherwise -|T|/xi, with T a unit-variance Student-t; the result
    is then centred and scaled by the standardization constants. The same
    generator state always yields the same output.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    c = standardization_constants(params)
    xi = params.xi
    u = rng.random(n)
    t = rng.standard_t(params.nu, n) * np.sqrt((params.nu - 2.0) / params.nu)
    a = np.abs(t)
    x = np.where(u < xi * xi / (1.0 + xi * xi), xi * a, -a / xi)
    return (x - c.mean) / c.std


def neg_prob(params: SkstParams) -> float:
    """P(z < 0); equals 1/2 only in the symmetric case."""
    return float(cdf(0.0, params))
