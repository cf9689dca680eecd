"""Node fitness samplers and rescaled-weight quantities.

Weights are i.i.d. heavy-tailed with tail exponent alpha in (0,1), drawn
either from the unit Pareto density alpha * w^(-1-alpha) on [1, inf) or from
a positively supported one-sided alpha-stable law whose scale is chosen so
the two distributions share the same tail w^(-alpha). The rescaled total
weight s_n = n^(-1/alpha) * sum(w) and the descending rescaled weights y_k
feed the degree-fraction theory.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np


class WeightSource(Enum):
    PARETO = "pareto"
    STABLE = "stable"


class StableParametrization(Enum):
    """Location convention for the stable law.

    ZERO: location-corrected convention, support infimum at
    delta_location - gamma_scale * tan(pi*alpha/2).
    ONE: shift-free convention; for beta = 1, alpha < 1 the support is
    [delta_location, inf).
    """

    ZERO = "zero"
    ONE = "one"


@dataclass(frozen=True)
class WeightVector:
    values: np.ndarray
    alpha: float
    source: WeightSource

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        object.__setattr__(self, "values", values)
        if values.ndim != 1 or values.size < 1:
            raise ValueError("weights must be a non-empty 1-d array")
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must be in (0,1), got {self.alpha}")
        if not np.all(values > 0):
            raise ValueError("all weights must be positive")
        if self.source is WeightSource.PARETO and not np.all(values >= 1.0):
            raise ValueError("pareto weights must be >= 1")

    @property
    def n(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True)
class RescaledWeights:
    """Rescaled total weight s_n and descending rescaled weights y_k."""

    s_n: float
    y: np.ndarray

    def __post_init__(self):
        y = np.asarray(self.y, dtype=np.float64)
        object.__setattr__(self, "y", y)
        if not self.s_n > 0:
            raise ValueError("s_n must be positive")
        if np.any(np.diff(y) > 0):
            raise ValueError("y must be non-increasing")


@dataclass(frozen=True)
class StableParams:
    alpha: float
    beta: float
    gamma_scale: float
    delta_location: float
    parametrization: StableParametrization

    def support_infimum(self) -> float:
        if self.parametrization is StableParametrization.ONE:
            return self.delta_location
        return self.delta_location - self.gamma_scale * math.tan(math.pi * self.alpha / 2.0)

    def as_zero_parametrization(self) -> "StableParams":
        """Equivalent parameters in the location-corrected convention."""
        if self.parametrization is StableParametrization.ZERO:
            return self
        shift = self.gamma_scale * math.tan(math.pi * self.alpha / 2.0)
        return StableParams(
            alpha=self.alpha,
            beta=self.beta,
            gamma_scale=self.gamma_scale,
            delta_location=self.delta_location + shift,
            parametrization=StableParametrization.ZERO,
        )


def pareto_inverse_transform(u, alpha: float):
    """Map uniforms in (0, 1] to unit-Pareto draws via w = u^(-1/alpha)."""
    return np.asarray(u, dtype=np.float64) ** (-1.0 / alpha)


def sample_pareto(alpha: float, n: int, rng: np.random.Generator) -> WeightVector:
    """n i.i.d. draws from the unit Pareto law with tail exponent alpha."""
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0,1), got {alpha}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    u = 1.0 - rng.random(n)  # uniform on (0, 1]; u = 1 maps to the support edge w = 1
    w = pareto_inverse_transform(u, alpha)
    return WeightVector(values=w, alpha=alpha, source=WeightSource.PARETO)


def stable_scale(alpha: float) -> StableParams:
    """Fully skewed stable parameters whose tail matches the unit Pareto.

    beta = 1 and the support infimum is pinned at zero; the scale solves
    alpha * gamma^alpha * (1 + beta) * c_alpha = alpha with
    c_alpha = Gamma(alpha) * sin(pi*alpha/2) / pi.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0,1), got {alpha}")
    gamma_scale = (math.pi / (2.0 * math.gamma(alpha) * math.sin(math.pi * alpha / 2.0))) ** (1.0 / alpha)
    return StableParams(
        alpha=alpha,
        beta=1.0,
        gamma_scale=gamma_scale,
        delta_location=0.0,
        parametrization=StableParametrization.ONE,
    )


def _standard_positive_stable(alpha: float, n: int, rng: np.random.Generator) -> np.ndarray:
    # Chambers-Mallows-Stuck specialized to beta = 1, alpha < 1: with
    # B = pi/2 and S = cos(pi*alpha/2)^(-1/alpha) the draw is positive.
    half_pi = math.pi / 2.0
    v = rng.uniform(-half_pi, half_pi, size=n)
    e = rng.exponential(1.0, size=n)
    s = math.cos(half_pi * alpha) ** (-1.0 / alpha)
    shifted = alpha * (v + half_pi)
    x = (
        s
        * np.sin(shifted)
        / np.cos(v) ** (1.0 / alpha)
        * (np.cos(v - shifted) / e) ** ((1.0 - alpha) / alpha)
    )
    return x


def sample_one_sided_stable(params: StableParams, n: int, rng: np.random.Generator) -> WeightVector:
    """n i.i.d. draws from the one-sided stable law described by params."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if params.beta != 1.0 or not 0.0 < params.alpha < 1.0:
        raise ValueError("sampler supports beta = 1 and alpha in (0,1) only")
    if params.support_infimum() != 0.0:
        raise ValueError("sampler requires support infimum 0")
    x = _standard_positive_stable(params.alpha, n, rng)
    w = params.gamma_scale * x
    if params.parametrization is StableParametrization.ONE:
        w = w + params.delta_location
    return WeightVector(values=w, alpha=params.alpha, source=WeightSource.STABLE)


def rescaled_quantities(weights: WeightVector) -> RescaledWeights:
    """Rescaled total s_n = n^(-1/alpha) sum(w) and descending y_k."""
    n = weights.n
    delta = float(n) ** (-1.0 / weights.alpha)
    scaled = delta * weights.values
    y = np.sort(scaled)[::-1].copy()
    return RescaledWeights(s_n=float(scaled.sum()), y=y)


def write_weight_csv(weights: WeightVector, path: str | Path) -> None:
    """One-column CSV with header ``w`` at full round-trip precision."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["w"])
        for v in weights.values:
            writer.writerow([repr(float(v))])


def read_weight_csv(path: str | Path, alpha: float, source: WeightSource) -> WeightVector:
    values = np.genfromtxt(path, delimiter=",", skip_header=1, dtype=np.float64)
    return WeightVector(values=np.atleast_1d(values), alpha=alpha, source=source)
