"""Random parameter sets and class members for property runs and ``selfcheck``.

Ranges keep every operator weight positive: with 0 < m < 1, numerator and
denominator parameters below 1 make each factor (1 - p m^k) positive.
"""

from __future__ import annotations

import numpy as np

from .classify import ClassParams, criterion_sum
from .functions import TFunction
from .operators import OperatorParams, OperatorWeights, lambda_weights


def rng_from(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_operator_params(rng: np.random.Generator, max_r: int = 2) -> OperatorParams:
    r = int(rng.integers(0, max_r + 1))
    m = float(rng.uniform(0.1, 0.9))
    c_num = rng.uniform(-1.0, 0.95, size=r + 1)
    b_den = rng.uniform(-1.0, 0.95, size=r)
    s = float(rng.uniform(-1.5, 1.5))
    c = float(rng.uniform(-0.5, 3.0))
    return OperatorParams.create(m, c_num, b_den, s, c)


def random_class_params(rng: np.random.Generator) -> ClassParams:
    delta = float(rng.uniform(0.5, 1.0))
    beta = float(rng.uniform(0.05, 1.0))
    mu = float(rng.uniform(0.0, 0.999 / (2.0 * delta)))
    return ClassParams(mu, beta, delta)


def random_setup(rng: np.random.Generator, min_trunc: int = 2, max_trunc: int = 12):
    """(OperatorParams, OperatorWeights, ClassParams) with a random truncation."""
    trunc = int(rng.integers(min_trunc, max_trunc + 1))
    params = random_operator_params(rng)
    return params, lambda_weights(params, trunc), random_class_params(rng)


def random_direction(rng: np.random.Generator, trunc: int) -> np.ndarray:
    """Nonnegative, sparse-ish, not identically zero coefficient pattern."""
    while True:
        u = rng.exponential(size=trunc - 1)
        u[rng.uniform(size=trunc - 1) < 0.4] = 0.0
        if u.any():
            return u


def scaled_to(u: np.ndarray, w: OperatorWeights, cp: ClassParams, fraction: float) -> TFunction:
    """Rescale ``u`` so the criterion sum equals ``fraction`` times the right-hand side."""
    base = criterion_sum(TFunction(tuple(u)), w, cp)
    return TFunction(tuple(u * (fraction * cp.rhs / base)))


def random_member(rng: np.random.Generator, w: OperatorWeights, cp: ClassParams,
                  trunc: int | None = None) -> TFunction:
    trunc = w.trunc if trunc is None else trunc
    if trunc < 2 or rng.uniform() < 0.02:
        return TFunction((0.0,) * (trunc - 1))
    return scaled_to(random_direction(rng, trunc), w, cp, float(rng.uniform(0.0, 1.0)))


def random_nonmember(rng: np.random.Generator, w: OperatorWeights, cp: ClassParams,
                     low: float = 1.1, high: float = 2.0, trunc: int | None = None) -> TFunction:
    """Criterion sum between ``low`` and ``high`` times the right-hand side."""
    trunc = w.trunc if trunc is None else trunc
    return scaled_to(random_direction(rng, trunc), w, cp, float(rng.uniform(low, high)))
