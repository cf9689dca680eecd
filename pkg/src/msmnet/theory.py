"""Annealed clustering theory: limiting curve, asymptotics, and identities.

The limiting clustering function at reduced degree a is the double integral

    (alpha^2/a^2) * II g(b x) g(b y) g(x y) (x y)^(-1-alpha) dx dy,

with g(x) = 1 - exp(-x) and b = a^(1/alpha) * tau(alpha). The change of
variables x = e^u, y = e^v absorbs the power-law singularity into an
exponentially decaying integrand on R^2, which nested adaptive quadrature
handles after truncating to a box sized from analytic tail bounds. The
complementary route replaces g(x y) by exp(-x y) and returns one minus that
integral; the two routes agree identically and the complementary one is
preferred for small a where the value is close to 1.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

from scipy.integrate import quad

from .clustering import Convention
from .special_functions import SpecialValue, gamma, tau_alpha, upper_incomplete_gamma

TOL_MIN = 1e-10
TOL_MAX = 1e-3
# route switch: below this a the complementary form is reported
ROUTE_SPLIT_A = 0.1
_QUAD_LIMIT = 200


class QuadratureError(RuntimeError):
    """Quadrature failed to reach the requested tolerance."""

    def __init__(self, message: str, best_estimate: float, error_estimate: float):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate


def _check_tol(tol: float) -> None:
    if not TOL_MIN <= tol <= TOL_MAX:
        raise ValueError(f"tol must lie in [{TOL_MIN}, {TOL_MAX}], got {tol}")


def _g_log(logarg: float) -> float:
    # 1 - exp(-e^logarg), safe for any real logarg
    if logarg > 36.0:
        return 1.0
    return -math.expm1(-math.exp(logarg))


def _box(a: float, alpha: float, tol: float, log_b: float) -> tuple[float, float, float]:
    # truncation box [lo, hi] in log coordinates plus the total tail bound
    hi = (math.log(20.0) - math.log(a) - math.log(tol)) / alpha
    lo = (math.log(a * (1.0 - alpha) * tol / (20.0 * alpha)) - log_b) / (1.0 - alpha)
    if lo >= hi:
        raise ValueError(f"degenerate quadrature box for a={a}, alpha={alpha}, tol={tol}")
    tail_bound = tol / 5.0
    return lo, hi, tail_bound


def _double_quad(a: float, alpha: float, tol: float, complementary: bool) -> tuple[float, float]:
    """Integral (alpha^2/a^2) * II g g K e^(-alpha(u+v)) du dv and its error bound."""
    log_b = math.log(a) / alpha + math.log(tau_alpha(alpha))
    lo, hi, tail_bound = _box(a, alpha, tol, log_b)
    pref = alpha * alpha / (a * a)
    eps_inner = tol * a / alpha / 4.0
    eps_outer = tol * a * a / (alpha * alpha) / 4.0

    if complementary:
        def kernel(s: float) -> float:
            return 0.0 if s > 7.0 else math.exp(-math.exp(s))
    else:
        kernel = _g_log

    inner_cache: dict[float, float] = {}

    def inner(u: float) -> float:
        hit = inner_cache.get(u)
        if hit is not None:
            return hit

        def f(v: float) -> float:
            return _g_log(log_b + v) * kernel(u + v) * math.exp(-alpha * v)

        res = quad(f, lo, hi, epsabs=eps_inner, epsrel=1e-10, limit=_QUAD_LIMIT, full_output=1)
        if len(res) > 3:
            raise QuadratureError(
                f"inner quadrature failed at u={u}: {res[3]}", res[0], res[1]
            )
        inner_cache[u] = res[0]
        return res[0]

    def outer(u: float) -> float:
        return _g_log(log_b + u) * math.exp(-alpha * u) * inner(u)

    res = quad(outer, lo, hi, epsabs=eps_outer, epsrel=1e-10, limit=_QUAD_LIMIT, full_output=1)
    value = pref * res[0]
    # inner budget enters through int g(b e^u) e^(-alpha u) du = a/alpha
    err = tail_bound + (alpha / a) * eps_inner + pref * res[1]
    if len(res) > 3:
        raise QuadratureError(f"outer quadrature failed: {res[3]}", value, err)
    if err > tol:
        raise QuadratureError(
            f"quadrature error estimate {err:g} exceeds requested tol {tol:g}", value, err
        )
    return value, err


def annealed_clustering(a: float, alpha: float, tol: float = 1e-7) -> SpecialValue:
    """Limiting clustering value at reduced degree a, direct double integral."""
    if not a > 0:
        raise ValueError(f"a must be positive, got {a}")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0,1), got {alpha}")
    _check_tol(tol)
    value, err = _double_quad(a, alpha, tol, complementary=False)
    return SpecialValue(value=value, abs_error_estimate=err)


def complementary_form(a: float, alpha: float, tol: float = 1e-7) -> SpecialValue:
    """Same limit computed as one minus the complementary integral."""
    if not a > 0:
        raise ValueError(f"a must be positive, got {a}")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0,1), got {alpha}")
    _check_tol(tol)
    value, err = _double_quad(a, alpha, tol, complementary=True)
    return SpecialValue(value=1.0 - value, abs_error_estimate=err)


def annealed_value(a: float, alpha: float, tol: float = 1e-7) -> SpecialValue:
    """Route policy: complementary form below a = 0.1, direct above."""
    if a < ROUTE_SPLIT_A:
        return complementary_form(a, alpha, tol)
    return annealed_clustering(a, alpha, tol)


def hub_asymptotic(a: float, alpha: float) -> float:
    """Large-degree decay 2*Gamma(1-alpha)*log(a)/a^2, defined for a > 1."""
    if not a > 1:
        raise ValueError(f"hub asymptotic requires a > 1, got {a}")
    return 2.0 * gamma(1.0 - alpha) * math.log(a) / (a * a)


def single_integral_oracle(a: float, alpha: float, tol: float = 1e-9) -> tuple[float, float]:
    """1-d identity check: quadrature of int g(b x) x^(-1-alpha) dx vs a/alpha."""
    if not a > 0:
        raise ValueError(f"a must be positive, got {a}")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0,1), got {alpha}")
    log_b = math.log(a) / alpha + math.log(tau_alpha(alpha))
    closed = a / alpha
    # tails: above X costs X^(-alpha)/alpha * pref-free units; below eps costs
    # b*eps^(1-alpha)/(1-alpha); both sized to tol/10 in units of the value
    hi = (math.log(10.0 * closed) - math.log(alpha) - math.log(tol)) / alpha
    lo = ((math.log(tol * closed * (1.0 - alpha) / 10.0)) - log_b) / (1.0 - alpha)

    def f(u: float) -> float:
        return _g_log(log_b + u) * math.exp(-alpha * u)

    res = quad(f, lo, hi, epsabs=tol * closed / 4.0, epsrel=1e-12, limit=_QUAD_LIMIT, full_output=1)
    if len(res) > 3:
        raise QuadratureError(f"single-integral quadrature failed: {res[3]}", res[0], res[1])
    return res[0], closed


def pareto_laplace(a: float, alpha: float) -> float:
    """Laplace transform of the unit Pareto law: alpha * a^alpha * Gamma(-alpha, a)."""
    if not a > 0:
        raise ValueError(f"a must be positive, got {a}")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0,1), got {alpha}")
    return alpha * a ** alpha * upper_incomplete_gamma(-alpha, a)


def expected_Nk(k: int, n: int, alpha: float) -> float:
    """Predicted count of degree-k nodes, n*alpha*Gamma(1-alpha)/k^2."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return n * alpha * gamma(1.0 - alpha) / (k * k)


def predicted_average_clustering(r01: float, convention: Convention) -> float:
    """Large-n limit of node-averaged clustering: 1, or 1 - r01 with zeros counted."""
    if not 0.0 <= r01 <= 1.0:
        raise ValueError(f"r01 must lie in [0,1], got {r01}")
    if convention is Convention.EXCLUDE_LOW_DEGREE:
        return 1.0
    return 1.0 - r01


@dataclass(frozen=True)
class AnnealedCurve:
    """Evaluated clustering limit on a grid of reduced degrees.

    ``c_hub`` is NaN on grid points with a <= 1 where the hub decay formula
    has no meaning.
    """

    alpha: float
    a: list[float]
    c_bar: list[float]
    c_hub: list[float]
    quad_error: list[float]

    def __post_init__(self):
        if any(x2 <= x1 for x1, x2 in zip(self.a, self.a[1:])):
            raise ValueError("grid must be strictly increasing in a")


def default_curve_grid(n: int, k_min: int, k_max: int, points: int = 60) -> list[float]:
    """Log-spaced reduced-degree grid covering observed degrees of a size-n graph."""
    lo = max(2, k_min) / math.sqrt(n)
    hi = max(k_max, k_min + 1) / math.sqrt(n)
    if hi <= lo:
        hi = lo * 10.0
    ratio = (hi / lo) ** (1.0 / (points - 1))
    return [lo * ratio ** i for i in range(points)]


def annealed_curve(alpha: float, a_values: list[float], tol: float = 1e-7) -> AnnealedCurve:
    """Evaluate the clustering limit over a grid, hub asymptote alongside."""
    a_sorted = sorted(set(float(a) for a in a_values))
    c_bar, c_hub, errs = [], [], []
    for a in a_sorted:
        sv = annealed_value(a, alpha, tol)
        c_bar.append(sv.value)
        errs.append(sv.abs_error_estimate)
        c_hub.append(hub_asymptotic(a, alpha) if a > 1 else math.nan)
    return AnnealedCurve(alpha=alpha, a=a_sorted, c_bar=c_bar, c_hub=c_hub, quad_error=errs)


def write_curve_csv(curve: AnnealedCurve, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["a", "c_bar", "c_hub", "quad_error", "alpha"])
        for a, cb, ch, qe in zip(curve.a, curve.c_bar, curve.c_hub, curve.quad_error):
            writer.writerow([repr(a), repr(cb), repr(ch), repr(qe), repr(curve.alpha)])
