"""Real special functions used by the theory layer.

Provides the Euler gamma function, its logarithm, the upper incomplete gamma
function Gamma(s, x) including negative non-integer s in (-1, 0), and the
tail-scale constant tau(alpha) = Gamma(1-alpha)^(-1/alpha).

All functions are pure and deterministic. ``upper_incomplete_gamma`` is
hand-rolled (lower series below x = 1.5, Lentz continued fraction above) so
that the quadrature-based tests remain an independent check of the actual
code path used throughout the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_EPS = 2.220446049250313e-16
_MAX_ITER = 500
# series / continued-fraction split for the positive-parameter kernel
_SPLIT_X = 1.5


@dataclass(frozen=True)
class SpecialValue:
    """A function value together with an a-priori absolute error bound."""

    value: float
    abs_error_estimate: float


def gamma(x: float) -> float:
    """Euler gamma function for x > 0."""
    if not x > 0:
        raise ValueError(f"gamma requires x > 0, got {x}")
    return math.gamma(x)


def log_gamma(x: float) -> float:
    """log Gamma(x) for x > 0."""
    if not x > 0:
        raise ValueError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def tau_alpha(alpha: float) -> float:
    """Tail-scale constant Gamma(1-alpha)^(-1/alpha) for alpha in (0,1)."""
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"tau_alpha requires alpha in (0,1), got {alpha}")
    return math.gamma(1.0 - alpha) ** (-1.0 / alpha)


def _upper_gamma_series(s: float, x: float) -> float:
    # Gamma(s,x) = Gamma(s) - lower(s,x), lower via the standard ascending series
    term = 1.0 / s
    total = term
    for n in range(1, _MAX_ITER):
        term *= x / (s + n)
        total += term
        if abs(term) < _EPS * abs(total):
            break
    else:
        raise ArithmeticError(f"incomplete gamma series did not converge at s={s}, x={x}")
    lower = math.exp(-x + s * math.log(x)) * total
    return math.gamma(s) - lower


def _upper_gamma_cf(s: float, x: float) -> float:
    # modified Lentz evaluation of the continued fraction for Gamma(s,x)
    tiny = 1e-300
    b = x + 1.0 - s
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    else:
        raise ArithmeticError(f"incomplete gamma continued fraction stalled at s={s}, x={x}")
    return math.exp(-x + s * math.log(x)) * h


def _upper_gamma_pos(s: float, x: float) -> float:
    if x < _SPLIT_X or s > x + 1.0:
        return _upper_gamma_series(s, x)
    return _upper_gamma_cf(s, x)


def upper_incomplete_gamma(s: float, x: float) -> float:
    """Upper incomplete gamma Gamma(s, x) = int_x^inf t^(s-1) e^(-t) dt.

    Supported domain: s in (-1, 0) or s > 0, with x > 0. Negative parameters
    are lifted by a single recurrence step,
    Gamma(s, x) = (Gamma(s+1, x) - x^s e^(-x)) / s.
    """
    if not x > 0:
        raise ValueError(f"upper_incomplete_gamma requires x > 0, got {x}")
    if s <= -1.0 or s == 0.0:
        raise ValueError(f"upper_incomplete_gamma requires s in (-1,0) or s > 0, got {s}")
    if s > 0:
        return _upper_gamma_pos(s, x)
    boundary = math.exp(-x + s * math.log(x))
    return (_upper_gamma_pos(s + 1.0, x) - boundary) / s
