"""Distortion bounds, coefficient neighborhoods and the Hadamard-product parameter bound."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

import numpy as np

from .classify import ClassParams, coefficient_bound, multiplier, theorem1_test
from .errors import DegenerateDenominator, DomainError, TruncationMismatch
from .functions import TFunction, evaluate, single_term
from .operators import OperatorWeights

ORACLE_TOL = 1e-10
PROXIMITY_RADII = tuple(k / 10 for k in range(1, 10))
PROXIMITY_ANGLES = 64
PROXIMITY_GUARD = 1e-9


@dataclass(frozen=True)
class DistortionEnvelope:
    r: float
    value_lo: float
    value_hi: float
    deriv_lo: float
    deriv_hi: float

    def to_dict(self) -> dict[str, float]:
        return asdict(self)

    def csv_row(self) -> tuple[float, ...]:
        return (self.r, self.value_lo, self.value_hi, self.deriv_lo, self.deriv_hi)


CSV_HEADER = ("r", "value_lo", "value_hi", "deriv_lo", "deriv_hi")


def envelopes_to_csv(envelopes: Iterable[DistortionEnvelope]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for env in envelopes:
        writer.writerow([repr(x) for x in env.csv_row()])
    return buf.getvalue()


@dataclass(frozen=True)
class NeighborhoodSpec:
    gamma: float

    def __post_init__(self):
        if not self.gamma >= 0:
            raise DomainError(f"neighborhood radius must be >= 0, got {self.gamma!r}")

    def contains(self, f: TFunction, center: TFunction) -> bool:
        return neighborhood_distance(f, center) <= self.gamma


def _need_coefficients(w: OperatorWeights) -> None:
    if w.trunc < 2:
        raise DomainError("operator weights must cover at least n = 2")


def _weighted_multipliers(w: OperatorWeights, cp: ClassParams) -> np.ndarray:
    return np.array([w.weight(n) * multiplier(n, cp) for n in range(2, w.trunc + 1)])


def sum_bound_index(w: OperatorWeights, cp: ClassParams) -> int:
    """The n minimising Lambda_n * multiplier(n); the distortion bounds are sharp when it is 2."""
    _need_coefficients(w)
    return int(np.argmin(_weighted_multipliers(w, cp))) + 2


def coeff_sum_bound(w: OperatorWeights, cp: ClassParams) -> float:
    """Upper bound on sum a_n over the whole class."""
    _need_coefficients(w)
    return cp.rhs / float(np.min(_weighted_multipliers(w, cp)))


def distortion_envelope(
    r: float, w: OperatorWeights, cp: ClassParams, as_stated: bool = False
) -> DistortionEnvelope:
    """Bounds on |Hf| and |(Hf)'| over |z| = r for every class member f.

    The default scale is Lambda_2 * coeff_sum_bound, which reduces to
    2 beta delta (1-mu) / multiplier(2) whenever n = 2 minimises
    Lambda_n * multiplier(n). ``as_stated=True`` uses
    2 beta delta (1-mu) / (Lambda_2 * multiplier(2)) instead, kept for audit.
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"radius must lie in (0, 1), got {r!r}")
    _need_coefficients(w)
    if as_stated:
        scale = cp.rhs / (w.weight(2) * multiplier(2, cp))
    else:
        scale = w.weight(2) * coeff_sum_bound(w, cp)
    return DistortionEnvelope(
        r=r,
        value_lo=max(r - r * r * scale, 0.0),
        value_hi=r + r * r * scale,
        deriv_lo=max(1.0 - 2.0 * r * scale, 0.0),
        deriv_hi=1.0 + 2.0 * r * scale,
    )


def distortion_sweep(
    w: OperatorWeights, cp: ClassParams, radii: Sequence[float], as_stated: bool = False
) -> list[DistortionEnvelope]:
    return [distortion_envelope(r, w, cp, as_stated) for r in radii]


def neighborhood_distance(f: TFunction, g: TFunction) -> float:
    """sum_n n |a_n - b_n|; both functions must carry the same truncation."""
    if f.trunc != g.trunc:
        raise TruncationMismatch(f"distance between N={f.trunc} and N={g.trunc}")
    return math.fsum(n * abs(a - b) for n, a, b in zip(f.indices, f.coeffs, g.coeffs))


def theorem6_radius(w: OperatorWeights, cp: ClassParams) -> float:
    """Smallest gamma (over the working range) with the whole class inside N_gamma(e)."""
    _need_coefficients(w)
    ns = np.arange(2, w.trunc + 1)
    return cp.rhs * float(np.max(ns / _weighted_multipliers(w, cp)))


def theorem7_zeta(
    gamma: float, w: OperatorWeights, cp: ClassParams, as_stated: bool = False
) -> float:
    """zeta = 1 - (gamma/2) T / (T - 2 beta delta (1-mu)).

    T is min_n Lambda_n * multiplier(n), equal to Lambda_2 * multiplier(2)
    when the minimum sits at n = 2; ``as_stated=True`` always uses n = 2.
    """
    if gamma < 0:
        raise DomainError(f"gamma must be >= 0, got {gamma!r}")
    _need_coefficients(w)
    if as_stated:
        t = w.weight(2) * multiplier(2, cp)
    else:
        t = float(np.min(_weighted_multipliers(w, cp)))
    if t <= cp.rhs:
        raise DegenerateDenominator(f"T = {t!r} does not exceed 2 beta delta (1 - mu) = {cp.rhs!r}")
    return 1.0 - gamma / 2.0 * (t / (t - cp.rhs))


def _disk_points(radii: Sequence[float], angles: int) -> np.ndarray:
    theta = 2.0 * np.pi * (np.arange(angles) / angles)
    return (np.asarray(radii, dtype=float)[:, None] * np.exp(1j * theta)[None, :]).ravel()


def proximity_sup(
    f: TFunction,
    g: TFunction,
    radii: Sequence[float] = PROXIMITY_RADII,
    angles: int = PROXIMITY_ANGLES,
    guard: float = PROXIMITY_GUARD,
) -> float:
    """max |f(z)/g(z) - 1| over a polar grid, skipping points where |g(z)| < guard."""
    z = _disk_points(radii, angles)
    gz = evaluate(g, z)
    keep = np.abs(gz) >= guard
    if not keep.any():
        raise DomainError("every proximity sample tripped the guard")
    return float(np.max(np.abs(evaluate(f, z[keep]) / gz[keep] - 1.0)))


def hadamard_mu2_terms(w: OperatorWeights, cp: ClassParams, trunc: int | None = None) -> list[float]:
    """Per-n thresholds on mu2 for products of two members at mu1 = cp.mu.

    For index n:
        [M^2 Lambda_n - 2bd (1-mu1)^2 (n-1)(1-beta) - (2bd)^2 (1-mu1)^2 n]
        / [M^2 Lambda_n - (2bd)^2 (1-mu1)^2],   M = multiplier(n) at mu1.
    """
    trunc = w.trunc if trunc is None else trunc
    if not 2 <= trunc <= w.trunc:
        raise DomainError(f"trunc must lie in 2..{w.trunc}, got {trunc}")
    k = 2.0 * cp.beta * cp.delta
    one_minus = (1.0 - cp.mu) ** 2
    out = []
    for n in range(2, trunc + 1):
        big = multiplier(n, cp) ** 2 * w.weight(n)
        den = big - k * k * one_minus
        if den <= 0.0:
            raise DegenerateDenominator(f"Hadamard bound denominator is {den!r} at n={n}", n)
        num = big - k * one_minus * (n - 1) * (1.0 - cp.beta) - k * k * one_minus * n
        out.append(num / den)
    return out


def hadamard_mu2(w: OperatorWeights, cp: ClassParams, trunc: int | None = None) -> float:
    """Largest mu2 (capped just below 1/(2 delta)) keeping f*g in the class at mu2.

    The min over n of the per-n thresholds, so the guarantee holds for every
    index at once.
    """
    value = min(hadamard_mu2_terms(w, cp, trunc))
    cap = math.nextafter(cp.mu_sup, 0.0)
    if value < 0.0:
        raise DomainError(f"no admissible mu2: per-n threshold falls to {value!r}")
    return min(value, cap)


def hadamard_mu2_oracle(
    w: OperatorWeights, cp: ClassParams, trunc: int | None = None, tol: float = ORACLE_TOL
) -> float:
    """Bisection on mu2 using the worst single-term products directly.

    For every n the pair a_n = b_n = coefficient_bound(n) at mu1 is multiplied
    and run through the coefficient test at the candidate mu2. Returns NaN if
    no mu2 in [0, 1/(2 delta)) works.
    """
    trunc = w.trunc if trunc is None else trunc
    products = [single_term(n, coefficient_bound(n, w, cp) ** 2) for n in range(2, trunc + 1)]

    def feasible(mu2: float) -> bool:
        cp2 = cp.with_mu(mu2)
        return all(theorem1_test(p, w, cp2, tol=0.0).member for p in products)

    lo, hi = 0.0, math.nextafter(cp.mu_sup, 0.0)
    if feasible(hi):
        return hi
    if not feasible(lo):
        return math.nan
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if feasible(mid):
            lo = mid
        else:
            hi = mid
    return lo
