"""Membership in the class S_m^{s,c}(mu, beta, delta) through the coefficient criterion.

f(z) = z - sum a_n z^n belongs to the class exactly when

    sum_{n>=2} Lambda_n [(n-1)(1-beta) + 2 beta delta (n - mu)] a_n <= 2 beta delta (1 - mu).
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Any

from .errors import BadWeights, DomainError, TruncationMismatch
from .functions import TFunction, single_term
from .operators import OperatorWeights

DEFAULT_TOL = 1e-12
# slack on gamma >= 0 and sum(gamma) = 1 when rebuilding from extreme points
_WEIGHT_TOL = 1e-12


@dataclass(frozen=True)
class ClassParams:
    mu: float
    beta: float
    delta: float

    def __post_init__(self):
        mu, beta, delta = float(self.mu), float(self.beta), float(self.delta)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "delta", delta)
        if not 0.5 <= delta <= 1.0:
            raise DomainError(f"delta must lie in [1/2, 1], got {delta!r}")
        if not 0.0 < beta <= 1.0:
            raise DomainError(f"beta must lie in (0, 1], got {beta!r}")
        if not 0.0 <= mu < 1.0 / (2.0 * delta):
            raise DomainError(f"mu must lie in [0, 1/(2 delta)) = [0, {1 / (2 * delta)}), got {mu!r}")

    @property
    def rhs(self) -> float:
        """2 beta delta (1 - mu), the right-hand side of the criterion."""
        return 2.0 * self.beta * self.delta * (1.0 - self.mu)

    @property
    def mu_sup(self) -> float:
        """Supremum 1/(2 delta) of admissible mu (not itself admissible)."""
        return 1.0 / (2.0 * self.delta)

    def with_mu(self, mu: float) -> "ClassParams":
        return ClassParams(mu, self.beta, self.delta)

    def to_dict(self) -> dict[str, float]:
        return {"mu": self.mu, "beta": self.beta, "delta": self.delta}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ClassParams":
        return cls(data["mu"], data["beta"], data["delta"])

    @classmethod
    def from_json(cls, text: str) -> "ClassParams":
        return cls.from_dict(json.loads(text))


STARLIKE = ClassParams(0.0, 1.0, 1.0)


@dataclass(frozen=True)
class MembershipReport:
    lhs: float
    rhs: float
    margin: float
    member: bool

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class ExtremeDecomposition:
    gamma1: float
    gammas: tuple[float, ...]  # gamma_2..gamma_N

    @property
    def total(self) -> float:
        return self.gamma1 + math.fsum(self.gammas)

    @property
    def is_convex(self) -> bool:
        return self.gamma1 >= -_WEIGHT_TOL and all(g >= -_WEIGHT_TOL for g in self.gammas)


@dataclass(frozen=True)
class InclusionRow:
    n: int
    bound_mu2: float
    bound_mu1: float

    @property
    def ok(self) -> bool:
        return self.bound_mu2 <= self.bound_mu1


@dataclass(frozen=True)
class InclusionEvidence:
    mu1: float
    mu2: float
    rows: tuple[InclusionRow, ...]

    @property
    def holds(self) -> bool:
        return all(row.ok for row in self.rows)


def multiplier(n: int, cp: ClassParams) -> float:
    """(n-1)(1-beta) + 2 beta delta (n - mu)."""
    return (n - 1) * (1.0 - cp.beta) + 2.0 * cp.beta * cp.delta * (n - cp.mu)


def _check_cover(f: TFunction, w: OperatorWeights) -> None:
    if w.trunc < f.trunc:
        raise TruncationMismatch(f"weights cover N={w.trunc} but function has N={f.trunc}")


def criterion_sum(f: TFunction, w: OperatorWeights, cp: ClassParams) -> float:
    _check_cover(f, w)
    return math.fsum(
        lam * multiplier(n, cp) * a for n, lam, a in zip(f.indices, w.weights, f.coeffs)
    )


def theorem1_test(
    f: TFunction, w: OperatorWeights, cp: ClassParams, tol: float = DEFAULT_TOL
) -> MembershipReport:
    """Sharp coefficient test; ``tol`` is relative to the right-hand side."""
    lhs = criterion_sum(f, w, cp)
    rhs = cp.rhs
    return MembershipReport(lhs=lhs, rhs=rhs, margin=rhs - lhs, member=lhs <= rhs + tol * rhs)


def is_member(f: TFunction, w: OperatorWeights, cp: ClassParams, tol: float = DEFAULT_TOL) -> bool:
    return theorem1_test(f, w, cp, tol).member


def coefficient_bound(n: int, w: OperatorWeights, cp: ClassParams) -> float:
    """Largest admissible a_n for a member: 2 beta delta (1-mu) / (multiplier(n) Lambda_n)."""
    return cp.rhs / (multiplier(n, cp) * w.weight(n))


def extremal_function(n: int, w: OperatorWeights, cp: ClassParams) -> TFunction:
    return single_term(n, coefficient_bound(n, w, cp))


def extreme_point_decompose(f: TFunction, w: OperatorWeights, cp: ClassParams) -> ExtremeDecomposition:
    """Weights on {e, f_2, ..., f_N}; a non-member shows up as gamma1 < 0."""
    _check_cover(f, w)
    gammas = tuple(a / coefficient_bound(n, w, cp) for n, a in zip(f.indices, f.coeffs))
    return ExtremeDecomposition(1.0 - math.fsum(gammas), gammas)


def reconstruct_from_extreme_points(
    d: ExtremeDecomposition, w: OperatorWeights, cp: ClassParams
) -> TFunction:
    if abs(d.total - 1.0) > _WEIGHT_TOL:
        raise BadWeights(f"extreme-point weights sum to {d.total!r}, not 1")
    if not d.is_convex:
        raise BadWeights("extreme-point weights must be nonnegative")
    if len(d.gammas) + 1 > w.trunc:
        raise TruncationMismatch(f"{len(d.gammas)} weights but operator covers N={w.trunc}")
    return TFunction(
        tuple(max(g, 0.0) * coefficient_bound(n, w, cp) for n, g in enumerate(d.gammas, start=2))
    )


def inclusion_compare(
    mu1: float, mu2: float, w: OperatorWeights, cp_template: ClassParams
) -> InclusionEvidence:
    """Per-n coefficient bounds at mu2 and mu1; the class at mu2 sits inside the one at mu1."""
    if not 0.0 <= mu1 <= mu2 < cp_template.mu_sup:
        raise DomainError(
            f"need 0 <= mu1 <= mu2 < {cp_template.mu_sup}, got mu1={mu1!r}, mu2={mu2!r}"
        )
    cp1, cp2 = cp_template.with_mu(mu1), cp_template.with_mu(mu2)
    rows = tuple(
        InclusionRow(n, coefficient_bound(n, w, cp2), coefficient_bound(n, w, cp1))
        for n in range(2, w.trunc + 1)
    )
    return InclusionEvidence(mu1, mu2, rows)
