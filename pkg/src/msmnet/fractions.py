"""Degree-0/1 fractions: empirical, exact conditional, and closed-form approximations.

Conditionally on the weights, the expected fraction of isolated nodes is an
exact product formula; the degree-1 fraction is an exact O(n^2) double sum.
Both are approximated by incomplete-gamma expressions in the rescaled total
weight s_n and the ordered rescaled weights y_k. Because s_n never
concentrates, these fractions fluctuate from one weight draw to the next
even in the large-graph limit; ``self_averaging_stats`` quantifies that.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels
from .graph import Graph, delta_n
from .theory import pareto_laplace
from .weights import RescaledWeights, WeightVector


class FractionMethod(Enum):
    EMPIRICAL = "empirical"
    EXACT_CONDITIONAL = "exact"
    GAMMA_APPROX = "approx"


@dataclass(frozen=True)
class DegreeFractions:
    r0: float
    r1: float
    method: FractionMethod

    @property
    def r01(self) -> float:
        return self.r0 + self.r1


def empirical_fractions(graph: Graph) -> DegreeFractions:
    """Realized fractions of degree-0 and degree-1 nodes."""
    deg = graph.degree
    n = graph.n
    return DegreeFractions(
        r0=float(np.count_nonzero(deg == 0)) / n,
        r1=float(np.count_nonzero(deg == 1)) / n,
        method=FractionMethod.EMPIRICAL,
    )


def exact_conditional_r0(weights: WeightVector, delta: float | None = None) -> float:
    """Expected isolated fraction given weights: mean of exp(-delta*w_i*(S-w_i))."""
    if weights.n < 2:
        raise ValueError("exact conditional fractions require n >= 2")
    if delta is None:
        delta = delta_n(weights.n, weights.alpha)
    w = weights.values
    total = w.sum()
    return float(np.mean(np.exp(-delta * w * (total - w))))


def exact_conditional_r1(weights: WeightVector, delta: float | None = None) -> float:
    """Expected degree-1 fraction given weights, exact O(n^2) sum."""
    if weights.n < 2:
        raise ValueError("exact conditional fractions require n >= 2")
    if delta is None:
        delta = delta_n(weights.n, weights.alpha)
    return _kernels.conditional_r1(weights.values, delta)


def exact_conditional_fractions(weights: WeightVector, delta: float | None = None) -> DegreeFractions:
    return DegreeFractions(
        r0=exact_conditional_r0(weights, delta),
        r1=exact_conditional_r1(weights, delta),
        method=FractionMethod.EXACT_CONDITIONAL,
    )


def approx_r0(rescaled: RescaledWeights, alpha: float) -> float:
    """Incomplete-gamma approximation alpha * s_n^alpha * Gamma(-alpha, s_n)."""
    return pareto_laplace(rescaled.s_n, alpha)


def approx_r1(rescaled: RescaledWeights, alpha: float) -> float:
    """Incomplete-gamma approximation of the degree-1 fraction.

    Sums f(s_n - y_k) - f(s_n) over the ordered rescaled weights, where
    f is the Pareto Laplace transform; terms with s_n - y_k <= 0 (possible
    only through floating-point rounding) are skipped with a warning.
    """
    if rescaled.y.size < 2:
        raise ValueError("approx_r1 requires n >= 2")
    s_n = rescaled.s_n
    f_s = pareto_laplace(s_n, alpha)
    total = 0.0
    skipped = 0
    for y_k in rescaled.y:
        rest = s_n - y_k
        if rest <= 0.0:
            skipped += 1
            continue
        total += pareto_laplace(rest, alpha) - f_s
    if skipped:
        warnings.warn(f"approx_r1 skipped {skipped} term(s) with s_n - y_k <= 0")
    return total


def approx_fractions(rescaled: RescaledWeights, alpha: float) -> DegreeFractions:
    """Both approximations, with r0 + r1 clamped into [0, 1] if needed."""
    r0 = approx_r0(rescaled, alpha)
    r1 = approx_r1(rescaled, alpha)
    if r0 + r1 > 1.0:
        warnings.warn(f"approximate r0 + r1 = {r0 + r1:g} clamped to 1")
        r1 = 1.0 - r0
    return DegreeFractions(r0=r0, r1=r1, method=FractionMethod.GAMMA_APPROX)


def self_averaging_stats(samples) -> tuple[float, float, int]:
    """Sample mean, unbiased std, and count across weight redraws.

    Accepts plain reals or DegreeFractions (reduced to r0 + r1).
    """
    values = np.asarray(
        [s.r01 if isinstance(s, DegreeFractions) else float(s) for s in samples],
        dtype=np.float64,
    )
    if values.size < 2:
        raise ValueError("need at least 2 samples")
    return float(values.mean()), float(values.std(ddof=1)), int(values.size)
