"""Constraint regimes, moment-existence margins, and admissible-region scans.

A regime is a named set of inequalities on the GJR coefficients. The two
competing readings of the sign pattern are kept side by side:

* ``asymmetry``          gamma_1 > 0 on top of all-non-negative coefficients
* ``asymmetry_relaxed``  alpha_j > 0 and alpha_j + gamma_j > 0, gamma free
* ``leverage``           alpha_1 < 0 with alpha_j + gamma_j > 0
* ``non_negative``       the classic all-non-negative set
* ``nelson_cao``         relaxed order-specific conditions for the symmetric
                         (gamma = 0) model at orders (p, q) = (1, 2) or (2, 1)

Strict versus non-strict comparisons follow the definitions verbatim; the
report lists each violated inequality with its evaluated left-hand side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .exceptions import (
    EmptyGridError,
    NuTooSmallError,
    OrderMismatchError,
    UnsupportedOrderError,
)
from .filters import GjrParams

__all__ = [
    "REGIME_NAMES",
    "ConstraintRegime",
    "ConstraintReport",
    "Violation",
    "MomentMargins",
    "regime_check",
    "moment_margins",
    "nelson_cao_garch12",
    "nelson_cao_garch21",
    "RegionTable",
    "admissible_region_scan",
]

REGIME_NAMES = (
    "non_negative",
    "asymmetry",
    "asymmetry_relaxed",
    "leverage",
    "nelson_cao",
)

MOMENT_NAMES = ("second", "fourth_normal", "fourth_student_t")


@dataclass(frozen=True)
class ConstraintRegime:
    """Named inequality set plus optional moment-existence requirements."""

    name: str
    moments: tuple = ()
    nu: float = None

    def __post_init__(self):
        if self.name not in REGIME_NAMES:
            raise ValueError(f"unknown regime {self.name!r}; valid: {REGIME_NAMES}")
        object.__setattr__(self, "moments", tuple(self.moments))
        for m in self.moments:
            if m not in MOMENT_NAMES:
                raise ValueError(f"unknown moment requirement {m!r}")
        if "fourth_student_t" in self.moments and self.nu is None:
            raise ValueError("fourth_student_t requirement needs nu")


@dataclass(frozen=True)
class Violation:
    constraint: str
    value: float
    bound: float


@dataclass(frozen=True)
class ConstraintReport:
    passed: bool
    violations: tuple = ()

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "violations": [
                {"constraint": v.constraint, "value": v.value, "bound": v.bound}
                for v in self.violations
            ],
        }


_OPS = {
    ">": lambda v, b: v > b,
    ">=": lambda v, b: v >= b,
    "<": lambda v, b: v < b,
    "<=": lambda v, b: v <= b,
}


def _report(checks) -> ConstraintReport:
    violations = []
    for name, value, op, bound in checks:
        if not math.isfinite(value):
            violations.append(Violation(name, float(value), float(bound)))
        elif not _OPS[op](value, bound):
            violations.append(Violation(name, float(value), float(bound)))
    return ConstraintReport(passed=not violations, violations=tuple(violations))


def _regime_checks(params: GjrParams, regime: ConstraintRegime):
    om = params.omega
    al, be, ga = params.alpha, params.beta, params.gamma
    name = regime.name
    checks = []
    if name == "non_negative" or name == "asymmetry":
        checks.append(("omega > 0", om, ">", 0.0))
        checks += [(f"alpha[{j+1}] >= 0", al[j], ">=", 0.0) for j in range(len(al))]
        checks += [(f"beta[{i+1}] >= 0", be[i], ">=", 0.0) for i in range(len(be))]
        checks += [(f"gamma[{j+1}] >= 0", ga[j], ">=", 0.0) for j in range(len(ga))]
        if name == "asymmetry":
            checks.append(("gamma[1] > 0", ga[0], ">", 0.0))
    elif name == "asymmetry_relaxed":
        checks.append(("omega > 0", om, ">", 0.0))
        checks += [(f"alpha[{j+1}] > 0", al[j], ">", 0.0) for j in range(len(al))]
        checks += [(f"beta[{i+1}] >= 0", be[i], ">=", 0.0) for i in range(len(be))]
        checks += [
            (f"alpha[{j+1}] + gamma[{j+1}] > 0", al[j] + ga[j], ">", 0.0)
            for j in range(len(al))
        ]
    elif name == "leverage":
        checks.append(("omega > 0", om, ">", 0.0))
        checks.append(("alpha[1] < 0", al[0], "<", 0.0))
        checks += [(f"beta[{i+1}] >= 0", be[i], ">=", 0.0) for i in range(len(be))]
        checks += [
            (f"alpha[{j+1}] + gamma[{j+1}] > 0", al[j] + ga[j], ">", 0.0)
            for j in range(len(al))
        ]
    elif name == "nelson_cao":
        checks += [(f"gamma[{j+1}] == 0", abs(ga[j]), "<=", 0.0) for j in range(len(ga))]
        if params.p == 1 and params.q == 2:
            checks += _nc12_checks(om, al[0], al[1], be[0])
        elif params.p == 2 and params.q == 1:
            checks += _nc21_checks(om, al[0], be[0], be[1])
        else:
            raise OrderMismatchError(
                f"nelson_cao regime covers orders (p,q) in {{(1,2),(2,1)}}, "
                f"got ({params.p},{params.q})"
            )
    return checks


def regime_check(params: GjrParams, regime: ConstraintRegime) -> ConstraintReport:
    """Evaluate every inequality of the regime plus requested moment margins."""
    if isinstance(regime, str):
        regime = ConstraintRegime(regime)
    checks = _regime_checks(params, regime)
    for m in regime.moments:
        if params.p != 1 or params.q != 1:
            raise OrderMismatchError("moment requirements are defined for (p,q)=(1,1)")
        if m == "second":
            mm = moment_margins(params, "normal")
            checks.append(("beta + alpha + gamma/2 < 1", 1.0 - mm.second, "<", 1.0))
        elif m == "fourth_normal":
            mm = moment_margins(params, "normal")
            checks.append(("fourth moment (normal) < 1", 1.0 - mm.fourth, "<", 1.0))
        else:
            mm = moment_margins(params, "student_t", nu=regime.nu)
            checks.append(
                (f"fourth moment (student-t, nu={regime.nu:g}) < 1", 1.0 - mm.fourth, "<", 1.0)
            )
    return _report(checks)


@dataclass(frozen=True)
class MomentMargins:
    """1 minus the left-hand side of each moment condition; > 0 means it holds."""

    second: float
    fourth: float


def moment_margins(params: GjrParams, dist: str = "normal", nu: float = None) -> MomentMargins:
    """Second/fourth moment-existence margins for the (1,1) model.

    second = 1 - (beta + alpha + gamma/2)
    fourth (normal)    uses the kurtosis factor 3
    fourth (student-t) uses s = 3(nu - 2)/(nu - 4), valid for nu >= 5
    """
    if params.p != 1 or params.q != 1:
        raise UnsupportedOrderError(
            f"moment margins defined for (p,q)=(1,1), got ({params.p},{params.q})"
        )
    a, b, g = params.alpha[0], params.beta[0], params.gamma[0]
    second = 1.0 - (b + a + g / 2.0)
    if dist == "normal":
        fourth = 1.0 - (b * b + 2 * b * a + 3 * a * a + b * g + 3 * a * g + 1.5 * g * g)
    elif dist == "student_t":
        if nu is None or not np.isfinite(nu):
            raise NuTooSmallError("student_t margins need a finite nu")
        if nu < 5:
            raise NuTooSmallError(f"fourth-moment condition requires nu >= 5, got {nu!r}")
        s = 3.0 * (nu - 2.0) / (nu - 4.0)
        fourth = 1.0 - (b * b + 2 * b * a + s * a * a + b * g + (2 * a * g + g * g) * s / 2.0)
    else:
        raise ValueError(f"dist must be 'normal' or 'student_t', got {dist!r}")
    return MomentMargins(second=float(second), fourth=float(fourth))


def _require_finite(**kwargs):
    for k, v in kwargs.items():
        if not math.isfinite(float(v)):
            raise ValueError(f"{k} must be finite, got {v!r}")


def _nc12_checks(omega, a1, a2, beta1):
    return [
        ("omega >= 0", omega, ">=", 0.0),
        ("beta >= 0", beta1, ">=", 0.0),
        ("beta < 1", beta1, "<", 1.0),
        ("a1 >= 0", a1, ">=", 0.0),
        ("beta*a1 + a2 >= 0", beta1 * a1 + a2, ">=", 0.0),
    ]


def _nc21_checks(omega, a1, beta1, beta2):
    return [
        ("omega >= 0", omega, ">=", 0.0),
        ("a1 >= 0", a1, ">=", 0.0),
        ("beta1 >= 0", beta1, ">=", 0.0),
        ("beta1 + beta2 < 1", beta1 + beta2, "<", 1.0),
        ("beta1^2 + 4*beta2 >= 0", beta1 * beta1 + 4.0 * beta2, ">=", 0.0),
    ]


def nelson_cao_garch12(omega, a1, a2, beta1) -> ConstraintReport:
    """Relaxed positivity conditions for GARCH(1,2): a2 may be negative."""
    _require_finite(omega=omega, a1=a1, a2=a2, beta1=beta1)
    return _report(_nc12_checks(omega, a1, a2, beta1))


def nelson_cao_garch21(omega, a1, beta1, beta2) -> ConstraintReport:
    """Relaxed positivity conditions for GARCH(2,1): beta2 may be negative."""
    _require_finite(omega=omega, a1=a1, beta1=beta1, beta2=beta2)
    return _report(_nc21_checks(omega, a1, beta1, beta2))


@dataclass
class RegionTable:
    """Flattened grid scan result, ordered lexicographically by (alpha, beta, gamma)."""

    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray
    admissible: np.ndarray

    @property
    def admissible_count(self) -> int:
        return int(self.admissible.sum())

    def write_csv(self, stream) -> None:
        stream.write("alpha,beta,gamma,admissible\n")
        rows = zip(
            self.alpha.tolist(), self.beta.tolist(), self.gamma.tolist(),
            self.admissible.tolist(),
        )
        stream.writelines(
            f"{a:.6g},{b:.6g},{g:.6g},{int(f)}\n" for a, b, g, f in rows
        )


def _axis(spec, name: str) -> np.ndarray:
    try:
        start, stop, step = (float(v) for v in spec)
    except (TypeError, ValueError):
        raise EmptyGridError(f"{name} grid must be (start, stop, step)") from None
    if step <= 0:
        raise EmptyGridError(f"{name} grid step must be > 0, got {step!r}")
    if stop < start:
        raise EmptyGridError(f"{name} grid range is degenerate: {spec!r}")
    n = int(np.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(n)


def admissible_region_scan(
    alpha_grid,
    beta_grid,
    gamma_grid,
    moment: str = "second",
    nu: float = None,
) -> RegionTable:
    """Scan a coefficient grid for admissibility.

    Every grid point is tested against alpha > 0, beta > 0, alpha + gamma > 0,
    and one moment-existence condition: ``second`` (normal second moment),
    ``fourth_normal``, or ``fourth_student_t`` (requires ``nu``). All
    inequalities are strict. Grids are (start, stop, step) with both
    endpoints included when the step lands on them.
    """
    a = _axis(alpha_grid, "alpha")
    b = _axis(beta_grid, "beta")
    g = _axis(gamma_grid, "gamma")
    if not (a.size and b.size and g.size):
        raise EmptyGridError("empty scan grid")
    A, B, G = np.meshgrid(a, b, g, indexing="ij")
    ok = (A > 0) & (B > 0) & (A + G > 0)
    if moment == "second":
        ok &= B + A + G / 2.0 < 1.0
    elif moment == "fourth_normal":
        ok &= B * B + 2 * B * A + 3 * A * A + B * G + 3 * A * G + 1.5 * G * G < 1.0
    elif moment == "fourth_student_t":
        if nu is None:
            raise NuTooSmallError("fourth_student_t scan needs nu")
        if nu < 5:
            raise NuTooSmallError(f"fourth-moment condition requires nu >= 5, got {nu!r}")
        s = 3.0 * (nu - 2.0) / (nu - 4.0)
        ok &= B * B + 2 * B * A + s * A * A + B * G + (2 * A * G + G * G) * s / 2.0 < 1.0
    else:
        raise ValueError(f"unknown moment constraint {moment!r}")
    return RegionTable(
        alpha=A.ravel(), beta=B.ravel(), gamma=G.ravel(), admissible=ok.ravel()
    )
