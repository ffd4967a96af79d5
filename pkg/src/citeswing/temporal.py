"""Power-law decay of theta and epsilon over time.

Both quantities are modelled as ``amplitude * t**(-exponent)`` for t >= 1, so
``amplitude`` is the value at t = 1. Fitting is ordinary least squares on
``(ln t, ln value)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import (
    DomainError,
    DuplicateTime,
    InsufficientData,
    ModelViolation,
    NonPositiveValue,
)
from .indicators import CoreMetrics
from .swing import csf_exact

__all__ = [
    "TimedPoint",
    "PowerLawFit",
    "DifferentialComponents",
    "fit_power_law",
    "eval_model",
    "temporal_rate",
    "dtheta_components",
    "depsilon_components",
]


@dataclass(frozen=True)
class TimedPoint:
    t: float
    value: float

    def __post_init__(self):
        if not self.t >= 1:
            raise DomainError(f"t must be >= 1, got {self.t}")
        if not self.value > 0:
            raise NonPositiveValue(f"value must be > 0, got {self.value} at t={self.t}")


@dataclass(frozen=True)
class PowerLawFit:
    amplitude: float
    exponent: float
    rms_log_residual: float
    n_points: int

    @property
    def model_violation(self) -> bool:
        """True when the fitted exponent is not strictly positive."""
        return not self.exponent > 0


@dataclass(frozen=True)
class DifferentialComponents:
    spatial_term: float
    temporal_term: float
    total: float
    # small-theta variant of the spatial term; None when theta >= 1
    approx_spatial_term: float | None = None


def fit_power_law(series: Iterable[TimedPoint | tuple[float, float]]) -> PowerLawFit:
    points = []
    for p in series:
        if not isinstance(p, TimedPoint):
            t, value = p
            if not value > 0:
                raise NonPositiveValue(f"value must be > 0, got {value} at t={t}")
            p = TimedPoint(float(t), float(value))
        points.append(p)
    if len(points) < 2:
        raise InsufficientData(f"need at least 2 points, got {len(points)}")
    ts = [p.t for p in points]
    if len(set(ts)) != len(ts):
        raise DuplicateTime("time values must be distinct")

    x = np.log(np.array(ts, dtype=float))
    y = np.log(np.array([p.value for p in points], dtype=float))
    # centered closed form: a constant series gives a slope of exactly 0
    xc = x - x.mean()
    yc = y - y.mean()
    slope = float(np.dot(xc, yc) / np.dot(xc, xc))
    intercept = float(y.mean() - slope * x.mean())
    resid = y - (intercept + slope * x)
    return PowerLawFit(
        amplitude=math.exp(intercept),
        exponent=-slope if slope != 0 else 0.0,
        rms_log_residual=float(np.sqrt(np.mean(resid**2))),
        n_points=len(points),
    )


def eval_model(fit: PowerLawFit, t: float) -> float:
    if not t >= 1:
        raise DomainError(f"t must be >= 1, got {t}")
    if t == 1:
        return fit.amplitude
    return fit.amplitude * t ** (-fit.exponent)


def temporal_rate(fit: PowerLawFit, t: float) -> float:
    """Time derivative ``-amplitude * exponent * t**-(exponent + 1)``."""
    if not t >= 1:
        raise DomainError(f"t must be >= 1, got {t}")
    if fit.model_violation:
        raise ModelViolation(f"exponent must be > 0, fitted {fit.exponent}")
    return -fit.amplitude * fit.exponent * t ** (-(fit.exponent + 1.0))


def dtheta_components(core: CoreMetrics, fit_theta: PowerLawFit, t: float) -> DifferentialComponents:
    """Split d(theta) into the epsilon-driven and the time-driven part."""
    spatial = csf_exact(core)
    temporal = temporal_rate(fit_theta, t)
    approx = None
    if core.h * core.h < core.e_sq:
        approx = -math.sqrt(core.e_sq) / core.h
    return DifferentialComponents(spatial, temporal, spatial + temporal, approx)


def depsilon_components(core: CoreMetrics, fit_eps: PowerLawFit, t: float) -> DifferentialComponents:
    """Split d(epsilon); the spatial part is the reciprocal of the swing factor."""
    csf_exact(core)  # same preconditions as the theta side
    spatial = -(core.h * core.e_sq) / (core.d_sq * core.r)
    temporal = temporal_rate(fit_eps, t)
    approx = None
    if core.h * core.h < core.e_sq:
        approx = -core.h / math.sqrt(core.e_sq)
    return DifferentialComponents(spatial, temporal, spatial + temporal, approx)
