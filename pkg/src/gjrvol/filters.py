"""Mean-equation residual filtering and the GJR(p, q) variance recursion.

The variance recursion is

    sigma2[t] = omega + sum_i beta_i * sigma2[t-i]
                      + sum_j (alpha_j + gamma_j * 1[eps[t-j] < 0]) * eps[t-j]^2

with p lags of sigma2 and q lags of the squared residual. The indicator is
strict: a zero residual counts as non-negative. Admissibility of the
coefficients is deliberately not enforced here (see ``constraints``); the
filter reports the first non-positive variance instead.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import lfilter, lfiltic

from .exceptions import (
    InvalidInitError,
    InvalidMeanSpecError,
    InvalidParamsError,
    NonPositiveVarianceError,
)
from .validation import as_float_1d

__all__ = [
    "MeanSpec",
    "GjrParams",
    "filter_residuals",
    "conditional_variances",
    "variance_path",
    "unconditional_variance",
]

MEAN_KINDS = ("constant", "ar1", "arma11")


@dataclass(frozen=True)
class MeanSpec:
    """Conditional-mean equation: constant, AR(1), or ARMA(1,1)."""

    kind: str = "constant"
    mu: float = 0.0
    phi: float = 0.0
    theta: float = 0.0

    def __post_init__(self):
        if self.kind not in MEAN_KINDS:
            raise InvalidMeanSpecError(f"unknown mean kind {self.kind!r}")
        if not np.isfinite(self.mu):
            raise InvalidMeanSpecError("mu must be finite")
        if self.kind in ("ar1", "arma11") and not (
            np.isfinite(self.phi) and abs(self.phi) < 1
        ):
            raise InvalidMeanSpecError(f"|phi| < 1 required, got {self.phi!r}")
        if self.kind == "arma11" and not (
            np.isfinite(self.theta) and abs(self.theta) < 1
        ):
            raise InvalidMeanSpecError(f"|theta| < 1 required, got {self.theta!r}")


@dataclass(frozen=True)
class GjrParams:
    """GJR variance coefficients: omega, beta (p lags), alpha and gamma (q lags)."""

    omega: float
    alpha: tuple
    beta: tuple = ()
    gamma: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(float(a) for a in np.atleast_1d(self.alpha)))
        object.__setattr__(self, "beta", tuple(float(b) for b in np.atleast_1d(self.beta)) if len(np.atleast_1d(self.beta)) else ())
        gam = self.gamma if self.gamma is not None else (0.0,) * len(self.alpha)
        object.__setattr__(self, "gamma", tuple(float(g) for g in np.atleast_1d(gam)))
        if len(self.alpha) < 1:
            raise InvalidParamsError("at least one alpha lag required (q >= 1)")
        if len(self.gamma) != len(self.alpha):
            raise InvalidParamsError("gamma must have the same length as alpha")
        vals = (self.omega,) + self.alpha + self.beta + self.gamma
        if not all(np.isfinite(v) for v in vals):
            raise InvalidParamsError("all variance coefficients must be finite")

    @property
    def p(self) -> int:
        return len(self.beta)

    @property
    def q(self) -> int:
        return len(self.alpha)


def filter_residuals(returns, mean: MeanSpec) -> np.ndarray:
    """Residuals of the mean equation, presample return and residual = 0.

    eps[t] = r[t] - mu - phi * r[t-1] - theta * eps[t-1]
    """
    r = as_float_1d(returns, "returns", min_len=1)
    core = r - mean.mu
    if mean.kind in ("ar1", "arma11"):
        core[1:] -= mean.phi * r[:-1]
    if mean.kind == "arma11":
        # eps[t] + theta*eps[t-1] = core[t], eps[0-] = 0
        return lfilter([1.0], [1.0, mean.theta], core)
    return core


def unconditional_variance(params: GjrParams, neg_prob: float = 0.5) -> float:
    """omega / (1 - sum(alpha) - sum(beta) - neg_prob * sum(gamma)).

    ``neg_prob`` is P(shock < 0) under the innovation distribution; raises
    when the implied persistence reaches 1 or the value is non-positive.
    """
    den = 1.0 - sum(params.alpha) - sum(params.beta) - neg_prob * sum(params.gamma)
    if den <= 0:
        raise InvalidInitError(
            f"unconditional variance undefined: persistence denominator {den!r} <= 0"
        )
    v = params.omega / den
    if v <= 0:
        raise InvalidInitError(f"unconditional variance {v!r} <= 0")
    return v


def _resolve_init(eps: np.ndarray, params: GjrParams, init, neg_prob: float):
    """Presample values: (sigma2 list p, eps^2 list q, indicator weights q)."""
    p, q = params.p, params.q
    if isinstance(init, str):
        if init == "sample":
            v0 = float(np.var(eps))
        elif init == "unconditional":
            v0 = unconditional_variance(params, neg_prob)
        else:
            raise InvalidInitError(f"unknown init rule {init!r}")
        if v0 < 0 or not np.isfinite(v0):
            raise InvalidInitError(f"presample variance {v0!r} unusable")
        return [v0] * p, [v0] * q, [float(neg_prob)] * q
    try:
        sig0, eps0 = init
    except (TypeError, ValueError):
        raise InvalidInitError(
            "init must be 'sample', 'unconditional', or a (sigma2_0, eps_0) pair"
        ) from None
    sig_pre = [float(v) for v in np.broadcast_to(np.atleast_1d(sig0), (max(p, 1),))][: max(p, 1)]
    eps_pre = [float(v) for v in np.broadcast_to(np.atleast_1d(eps0), (q,))]
    if any(v <= 0 or not np.isfinite(v) for v in sig_pre):
        raise InvalidInitError(f"explicit presample sigma2 must be > 0, got {sig0!r}")
    return sig_pre[:p] if p else [], [e * e for e in eps_pre], [
        1.0 if e < 0 else 0.0 for e in eps_pre
    ]


def variance_path(
    residuals,
    params: GjrParams,
    init="sample",
    neg_prob: float = 0.5,
):
    """Run the recursion; return (sigma2 array, index of first bad value or None).

    Rule-based presamples use the same value for sigma2 and eps^2 and weight
    the asymmetry term by ``neg_prob``; an explicit (sigma2_0, eps_0) pair
    keeps the sign of eps_0.
    """
    eps = as_float_1d(residuals, "residuals", min_len=1)
    sig_pre, e2_pre, w_pre = _resolve_init(eps, params, init, neg_prob)
    T = eps.size
    p, q = params.p, params.q
    e2 = eps * eps
    neg = (eps < 0).astype(float)

    u = np.full(T, params.omega)
    for j in range(1, q + 1):
        a_j, g_j = params.alpha[j - 1], params.gamma[j - 1]
        head = min(j, T)
        for k in range(head):  # lags still inside the presample
            u[k] += (a_j + g_j * w_pre[j - k - 1]) * e2_pre[j - k - 1]
        if T > j:
            u[j:] += (a_j + g_j * neg[: T - j]) * e2[: T - j]

    if p:
        a_poly = np.concatenate(([1.0], -np.asarray(params.beta)))
        zi = lfiltic([1.0], a_poly, sig_pre)
        sig2, _ = lfilter([1.0], a_poly, u, zi=zi)
    else:
        sig2 = u

    bad = ~np.isfinite(sig2) | (sig2 <= 0)
    first_bad = int(np.argmax(bad)) if bad.any() else None
    return sig2, first_bad


def conditional_variances(
    residuals,
    params: GjrParams,
    init="sample",
    neg_prob: float = 0.5,
) -> np.ndarray:
    """Conditional variance series; raises on the first sigma2 <= 0."""
    sig2, first_bad = variance_path(residuals, params, init, neg_prob)
    if first_bad is not None:
        raise NonPositiveVarianceError(first_bad, float(sig2[first_bad]))
    return sig2
