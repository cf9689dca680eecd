"""Sampler and theory evaluator for sparse random graphs with infinite-mean fitness."""

__version__ = "0.1.0"

from .clustering import Convention  # noqa: F401
from .weights import WeightSource, WeightVector  # noqa: F401
