"""Truncated functions with negative coefficients, f(z) = z - sum_{n=2}^N a_n z^n.

Index convention: ``TFunction.coeffs[k]`` holds a_{k+2}. Every formula in the
package starts at n = 2, so ``coeff(n)`` and ``indices`` do the shift in one
place and nothing else touches raw offsets.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

import numpy as np

from .errors import BadWeights, NegativeCoefficient, TruncationMismatch

WEIGHT_SUM_TOL = 1e-12


@dataclass(frozen=True)
class TFunction:
    coeffs: tuple[float, ...] = ()

    def __post_init__(self):
        coeffs = tuple(float(a) for a in self.coeffs)
        for k, a in enumerate(coeffs):
            if not math.isfinite(a):
                raise ValueError(f"coefficient a_{k + 2} is not finite: {a!r}")
            if a < 0:
                raise NegativeCoefficient(k + 2, a)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def trunc(self) -> int:
        """N, the highest power carried; the identity has N = 1."""
        return len(self.coeffs) + 1

    @property
    def indices(self) -> range:
        return range(2, self.trunc + 1)

    def coeff(self, n: int) -> float:
        if n == 1:
            raise ValueError("a_1 is fixed to 1 and not stored")
        if not 2 <= n <= self.trunc:
            raise IndexError(f"a_{n} outside 2..{self.trunc}")
        return self.coeffs[n - 2]

    def __call__(self, z):
        return evaluate(self, z)

    def to_dict(self) -> dict[str, Any]:
        return {"N": self.trunc, "a": list(self.coeffs)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "TFunction":
        try:
            n = int(data["N"])
            a = list(data.get("a", []))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"not a TFunction document: {data!r}") from exc
        if n < 1:
            raise ValueError(f"N must be >= 1, got {n}")
        if len(a) != n - 1:
            raise ValueError(f"N={n} needs {n - 1} coefficients in 'a', got {len(a)}")
        return cls(tuple(a))

    @classmethod
    def from_json(cls, text: str) -> "TFunction":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        terms = ["z"] + [f"{a!r} z^{n}" for n, a in zip(self.indices, self.coeffs) if a]
        return " - ".join(terms)


def identity(trunc: int = 1) -> TFunction:
    """e(z) = z, optionally carried with zero coefficients up to ``trunc``."""
    return TFunction((0.0,) * (trunc - 1))


def make_t_function(coeffs: Iterable[float]) -> TFunction:
    return TFunction(tuple(coeffs))


def single_term(n: int, a: float) -> TFunction:
    """z - a z^n."""
    coeffs = [0.0] * (n - 1)
    coeffs[n - 2] = a
    return TFunction(tuple(coeffs))


def _horner_tail(coeffs: Sequence[float], z):
    # sum_k coeffs[k] z^k
    acc = 0.0 * z
    for a in reversed(coeffs):
        acc = acc * z + a
    return acc


def evaluate(f: TFunction, z):
    """z - sum a_n z^n; works on scalars and numpy arrays."""
    if not f.coeffs:
        return z + 0.0 * z
    z = np.asarray(z) if isinstance(z, (list, tuple)) else z
    return z - z * z * _horner_tail(f.coeffs, z)


def evaluate_derivative(f: TFunction, z):
    """1 - sum n a_n z^(n-1)."""
    if not f.coeffs:
        return 1.0 + 0.0 * z
    z = np.asarray(z) if isinstance(z, (list, tuple)) else z
    weighted = [n * a for n, a in zip(f.indices, f.coeffs)]
    return 1.0 - z * _horner_tail(weighted, z)


def hadamard(f: TFunction, g: TFunction) -> TFunction:
    """Coefficientwise product, truncated to the shorter operand."""
    return TFunction(tuple(a * b for a, b in zip(f.coeffs, g.coeffs)))


def convex_combination(f1: TFunction, f2: TFunction, w1: float, w2: float) -> TFunction:
    if w1 < 0 or w2 < 0 or abs(w1 + w2 - 1.0) > WEIGHT_SUM_TOL:
        raise BadWeights(f"weights must be nonnegative and sum to 1, got {w1!r}, {w2!r}")
    if f1.trunc != f2.trunc:
        raise TruncationMismatch(f"convex combination of N={f1.trunc} and N={f2.trunc}")
    return TFunction(tuple(w1 * a + w2 * b for a, b in zip(f1.coeffs, f2.coeffs)))


def coefficient_arrays(f: TFunction) -> tuple[np.ndarray, np.ndarray]:
    """(n, a_n) as numpy arrays for n = 2..N."""
    return np.arange(2, f.trunc + 1), np.asarray(f.coeffs, dtype=float)
