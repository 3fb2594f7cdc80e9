"""Basic (m-)hypergeometric building blocks.

The base of every q-construct is written ``m`` and restricted to the real
interval ``0 < m < 1``. Series parameters are real as well.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DenominatorZero, DomainError, NonConvergence

DEFAULT_TRUNC = 64
DEFAULT_TAIL_TERMS = 200

# relative size of a term, against the running sum, below which a series stops
_EARLY_STOP = 1e-16
# |1 - b m^k| below this counts as a vanishing denominator factor
_ZERO_FACTOR = 1e-14


def check_base(m: float) -> float:
    m = float(m)
    if not (0.0 < m < 1.0):
        raise DomainError(f"base m must satisfy 0 < m < 1, got {m!r}")
    return m


@dataclass(frozen=True)
class SeriesParams:
    """Numerator parameters c_1..c_t and denominator parameters b_1..b_r, t = r + 1."""

    numerator: tuple[float, ...]
    denominator: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(float(c) for c in self.numerator))
        object.__setattr__(self, "denominator", tuple(float(b) for b in self.denominator))
        if len(self.numerator) != len(self.denominator) + 1:
            raise DomainError(
                f"need t = r + 1 parameters, got t={len(self.numerator)}, "
                f"r={len(self.denominator)}"
            )

    @property
    def t(self) -> int:
        return len(self.numerator)

    @property
    def r(self) -> int:
        return len(self.denominator)


def q_pochhammer(a: float, m: float, n: int) -> float:
    """(a, m)_n = (1 - a)(1 - a m)...(1 - a m^(n-1)), with (a, m)_0 = 1."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    out = 1.0
    for k in range(n):
        out *= 1.0 - a * m**k
    return out


def _log_infinite_product(start_exponent: float, m: float, terms: int, tol: float) -> float:
    """log of prod_{k>=0} (1 - m^(start_exponent + k)), truncated after ``terms`` factors."""
    acc = 0.0
    last = 0.0
    for k in range(terms):
        last = math.log1p(-(m ** (start_exponent + k)))
        acc += last
    if abs(last) > tol:
        raise NonConvergence(
            f"infinite product with m={m} still moving by {abs(last):.3e} "
            f"after {terms} factors"
        )
    return acc


def q_gamma(y: float, m: float, tail_terms: int = DEFAULT_TAIL_TERMS, tol: float = 1e-14) -> float:
    """Standard q-Gamma function.

    Gamma_m(y) = (m; m)_inf (1 - m)^(1 - y) / (m^y; m)_inf, both infinite
    products truncated to ``tail_terms`` factors and accumulated in log space.
    Raises NonConvergence when the last factor kept still changes the product
    by more than ``tol`` (relative).
    """
    m = check_base(m)
    y = float(y)
    if y <= 0.0:
        raise DomainError(f"q_gamma needs y > 0, got {y!r}")
    if tail_terms < 1:
        raise DomainError("tail_terms must be positive")
    log_num = _log_infinite_product(1.0, m, tail_terms, tol)
    log_den = _log_infinite_product(y, m, tail_terms, tol)
    return math.exp(log_num - log_den + (1.0 - y) * math.log1p(-m))


def q_number(y: float, m: float) -> float:
    """[y]_m = (1 - m^y) / (1 - m)."""
    return (1.0 - m**y) / (1.0 - m)


def t_psi_r(params: SeriesParams, m: float, z: complex, trunc: int = DEFAULT_TRUNC) -> complex:
    """Partial sum of the m-hypergeometric series tPsi_r up to z^trunc.

    Stops early once a term drops below 1e-16 of the running sum.
    """
    m = check_base(m)
    if abs(z) >= 1.0:
        raise DomainError(f"series needs |z| < 1, got |z|={abs(z)!r}")
    if trunc < 0:
        raise DomainError("trunc must be nonnegative")
    term = 1.0
    total = 1.0
    mk = 1.0  # m^(n-1) at step n
    for n in range(1, trunc + 1):
        num = 1.0
        for c in params.numerator:
            num *= 1.0 - c * mk
        den = 1.0 - mk * m
        for b in params.denominator:
            factor = 1.0 - b * mk
            if abs(factor) < _ZERO_FACTOR:
                raise DenominatorZero(f"(b={b}, m)_{n} vanishes")
            den *= factor
        term = term * num / den * z
        total = total + term
        mk *= m
        if abs(term) <= _EARLY_STOP * abs(total):
            break
    return total


def m_gauss(c1: float, c2: float, b1: float, m: float, z: complex, trunc: int = DEFAULT_TRUNC) -> complex:
    """The m-Gauss function 2Psi1(c1, c2; b1; m, z)."""
    return t_psi_r(SeriesParams((c1, c2), (b1,)), m, z, trunc)


def hurwitz_lerch_partial(z: complex, s: float, c: float, trunc: int = DEFAULT_TRUNC) -> complex:
    """Phi(z, s, c) truncated: sum_{n=0}^{trunc} z^n / (n + c)^s."""
    if c <= 0:
        raise DomainError(f"Hurwitz-Lerch partial sum needs c > 0, got {c!r}")
    if abs(z) >= 1.0:
        raise DomainError(f"partial sums are only supported for |z| < 1, got |z|={abs(z)!r}")
    total = 0.0
    zn = 1.0
    for n in range(trunc + 1):
        total += zn / (n + c) ** s
        zn *= z
    return total


def de_jonquiere_partial(z: complex, s: float, trunc: int = DEFAULT_TRUNC) -> complex:
    """z * Phi(z, s, 1) truncated, i.e. sum_{n=1}^{trunc+1} z^n / n^s."""
    return z * hurwitz_lerch_partial(z, s, 1.0, trunc)


def pochhammer_ratio(params: SeriesParams, m: float, n: int) -> float:
    """prod (c_i, m)_n / ((m, m)_n prod (b_j, m)_n)."""
    m = check_base(m)
    num = 1.0
    for c in params.numerator:
        num *= q_pochhammer(c, m, n)
    den = q_pochhammer(m, m, n)
    for b in params.denominator:
        den *= q_pochhammer(b, m, n)
    if den == 0.0:
        raise DenominatorZero(f"denominator Pochhammer vanishes at n={n}")
    return num / den


def series_terms(params: SeriesParams, m: float, trunc: int) -> list[float]:
    """The z^n coefficients of tPsi_r for n = 0..trunc (no early stop)."""
    return [pochhammer_ratio(params, m, n) for n in range(trunc + 1)]

