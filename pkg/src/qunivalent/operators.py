"""The composed m-hypergeometric / Srivastava-Attiya operator and two integral operators.

For f(z) = z - sum a_n z^n the operator acts coefficientwise,

    (H f)(z) = z - sum_{n>=2} Lambda_n a_n z^n,

    Lambda_n = prod_i (c_i, m)_{n-1} / ((m, m)_{n-1} prod_j (b_j, m)_{n-1})
               * ((1 + c) / (n + c))^s.

All parameters are real. Weights are checked eagerly: every Lambda_n over the
working range must be finite and strictly positive.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any

from .errors import DomainError, NonPositiveWeight, TruncationMismatch
from .functions import TFunction
from .qseries import SeriesParams, check_base


@dataclass(frozen=True)
class OperatorParams:
    m: float
    series: SeriesParams
    s: float = 0.0
    c: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "m", check_base(self.m))
        object.__setattr__(self, "s", float(self.s))
        object.__setattr__(self, "c", float(self.c))
        if not 1.0 + self.c > 0.0:
            raise DomainError(f"need 1 + c > 0 so that (n + c) > 0 for n >= 1, got c={self.c!r}")

    @classmethod
    def create(cls, m: float, c_num, b_den, s: float = 0.0, c: float = 0.0) -> "OperatorParams":
        return cls(m, SeriesParams(tuple(c_num), tuple(b_den)), s, c)

    @classmethod
    def identity(cls, m: float = 0.5) -> "OperatorParams":
        """c_1 = m, t = 1, r = 0, s = 0: every weight is exactly 1."""
        return cls.create(m, (m,), (), 0.0, 0.0)

    def to_dict(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "c_num": list(self.series.numerator),
            "b_den": list(self.series.denominator),
            "s": self.s,
            "c": self.c,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "OperatorParams":
        try:
            return cls.create(data["m"], data["c_num"], data["b_den"], data["s"], data["c"])
        except KeyError as exc:
            raise ValueError(f"operator parameters missing field {exc.args[0]!r}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "OperatorParams":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class OperatorWeights:
    """Lambda_2..Lambda_N; ``weights[k]`` is Lambda_{k+2}."""

    weights: tuple[float, ...]

    def __post_init__(self):
        ws = tuple(float(x) for x in self.weights)
        for k, x in enumerate(ws):
            if not (math.isfinite(x) and x > 0.0):
                raise NonPositiveWeight(k + 2, x)
        object.__setattr__(self, "weights", ws)

    @property
    def trunc(self) -> int:
        return len(self.weights) + 1

    def weight(self, n: int) -> float:
        if not 2 <= n <= self.trunc:
            raise IndexError(f"Lambda_{n} outside 2..{self.trunc}")
        return self.weights[n - 2]

    def scaled(self, n: int, factor: float) -> "OperatorWeights":
        ws = list(self.weights)
        ws[n - 2] *= factor
        return OperatorWeights(tuple(ws))

    @classmethod
    def identity(cls, trunc: int) -> "OperatorWeights":
        return cls((1.0,) * (trunc - 1))


def sa_weight(n: int, s: float, c: float) -> float:
    """Srivastava-Attiya multiplier ((1 + c) / (n + c))^s."""
    num, den = 1.0 + c, n + c
    if num <= 0.0 or den <= 0.0:
        raise DomainError(f"((1+c)/(n+c))^s needs 1+c > 0 and n+c > 0, got c={c!r}, n={n}")
    return (num / den) ** s


def lambda_weights(params: OperatorParams, trunc: int) -> OperatorWeights:
    if trunc < 1:
        raise DomainError(f"trunc must be >= 1, got {trunc}")
    m = params.m
    ratio = 1.0
    mk = 1.0  # m^(k-1) while extending the Pochhammer ratio from k-1 to k
    weights = []
    for n in range(2, trunc + 1):
        num = 1.0
        for ci in params.series.numerator:
            num *= 1.0 - ci * mk
        den = 1.0 - m * mk
        for bj in params.series.denominator:
            den *= 1.0 - bj * mk
        if den == 0.0:
            raise NonPositiveWeight(n, math.inf)
        ratio *= num / den
        mk *= m
        value = ratio * sa_weight(n, params.s, params.c)
        if not (math.isfinite(value) and value > 0.0):
            raise NonPositiveWeight(n, value)
        weights.append(value)
    return OperatorWeights(tuple(weights))


def apply_operator(w: OperatorWeights, f: TFunction) -> TFunction:
    if w.trunc < f.trunc:
        raise TruncationMismatch(f"weights cover N={w.trunc} but function has N={f.trunc}")
    return TFunction(tuple(lam * a for lam, a in zip(w.weights, f.coeffs)))


def bernardi_integral(f: TFunction, q: float) -> TFunction:
    """G(z) = (q+1)/z^q * int_0^z w^(q-1) f(w) dw, i.e. a_n -> (q+1)/(q+n) a_n."""
    if q <= -1:
        raise DomainError(f"Bernardi operator needs q > -1, got {q!r}")
    return TFunction(tuple((q + 1.0) / (q + n) * a for n, a in zip(f.indices, f.coeffs)))


def alpha_integral(f: TFunction, alpha: float) -> TFunction:
    """(1 - alpha) z + alpha int_0^z f(w)/w dw, i.e. a_n -> (alpha/n) a_n."""
    if not 0.0 <= alpha <= 2.0:
        raise DomainError(f"alpha must lie in [0, 2], got {alpha!r}")
    return TFunction(tuple(alpha / n * a for n, a in zip(f.indices, f.coeffs)))
