"""Disk-sampling oracle for the defining inequality of the class.

With H = Hf and w = z H'(z) / H(z), a function belongs to the class when

    | (w - 1) / (2 delta (w - mu) - (w - 1)) | < beta

for every z in the unit disk. Here that condition is only ever *sampled* on a
polar grid, independently of the coefficient test in ``classify``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .classify import ClassParams, MembershipReport, theorem1_test
from .errors import AllPointsExcluded, DomainError, GuardTripped
from .functions import TFunction, evaluate, evaluate_derivative
from .operators import OperatorWeights, apply_operator

DEFAULT_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99)
DEFAULT_ANGLES = 64
DEFAULT_GUARD = 1e-9
DEFAULT_SLACK_FACTOR = 5.0

CONSISTENT = "CONSISTENT"
INCONSISTENT = "INCONSISTENT"


@dataclass(frozen=True)
class SampleGrid:
    radii: tuple[float, ...] = DEFAULT_RADII
    angles_per_radius: int = DEFAULT_ANGLES
    guard: float = DEFAULT_GUARD

    def __post_init__(self):
        radii = tuple(float(r) for r in self.radii)
        object.__setattr__(self, "radii", radii)
        if not radii:
            raise DomainError("grid needs at least one radius")
        if any(not 0.0 < r < 1.0 for r in radii):
            raise DomainError(f"radii must lie strictly inside (0, 1), got {radii}")
        if self.angles_per_radius < 4:
            raise DomainError("need at least 4 angles per radius")
        if not self.guard > 0:
            raise DomainError("guard must be positive")

    @property
    def max_radius(self) -> float:
        return max(self.radii)

    def angles(self) -> np.ndarray:
        # k/K first so that refined grids reproduce the coarse angles bit for bit
        k = self.angles_per_radius
        return 2.0 * np.pi * (np.arange(k) / k)


@dataclass(frozen=True)
class SampleReport:
    max_modulus: float
    argmax_z: complex
    excluded_count: int
    beta: float
    satisfied: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "max_modulus": self.max_modulus,
            "argmax_z": [self.argmax_z.real, self.argmax_z.imag],
            "excluded_count": self.excluded_count,
            "beta": self.beta,
            "satisfied": self.satisfied,
        }


@dataclass(frozen=True)
class CrossCheck:
    verdict: str
    membership: MembershipReport
    sample: SampleReport | None
    boundary_modulus: float
    slack: float
    diagnostics: list[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.verdict == CONSISTENT

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "membership": self.membership.to_dict(),
            "sample": None if self.sample is None else self.sample.to_dict(),
            "boundary_modulus": self.boundary_modulus,
            "slack": self.slack,
            "diagnostics": list(self.diagnostics),
        }


def _expression(h, dh, z, cp: ClassParams):
    # (w - 1) / (2 delta (w - mu) - (w - 1)) with numerator and denominator
    # multiplied through by H, which is exact algebra and avoids forming w.
    zdh = z * dh
    num = zdh - h
    den = 2.0 * cp.delta * (zdh - cp.mu * h) - num
    return num, den


def condition_expression(hf_value: complex, hf_deriv: complex, z: complex, cp: ClassParams,
                         guard: float = DEFAULT_GUARD) -> complex:
    if abs(hf_value) < guard:
        raise GuardTripped(f"|Hf(z)| = {abs(hf_value):.3e} below guard at z={z!r}")
    num, den = _expression(hf_value, hf_deriv, z, cp)
    if abs(den / hf_value) < guard:
        raise GuardTripped(f"denominator {abs(den / hf_value):.3e} below guard at z={z!r}")
    return num / den


def _radius_row(hf: TFunction, cp: ClassParams, radius: float, theta: np.ndarray, guard: float):
    z = radius * np.exp(1j * theta)
    h = evaluate(hf, z)
    dh = evaluate_derivative(hf, z)
    num, den = _expression(h, dh, z, cp)
    abs_h = np.abs(h)
    safe_h = np.where(abs_h < guard, 1.0, h)
    keep = (abs_h >= guard) & (np.abs(den / safe_h) >= guard)
    excluded = int(np.count_nonzero(~keep))
    if not keep.any():
        return None, excluded
    modulus = np.where(keep, np.abs(num / np.where(keep, den, 1.0)), -np.inf)
    idx = int(np.argmax(modulus))  # first maximum, i.e. smallest angle
    return (float(modulus[idx]), complex(z[idx]), idx), excluded


def disk_sample_condition(
    f: TFunction,
    w: OperatorWeights,
    cp: ClassParams,
    grid: SampleGrid | None = None,
    workers: int | None = None,
) -> SampleReport:
    """Max over the grid of the class expression for Hf.

    Rows (one per radius) can run on a thread pool; the reduction picks the
    largest modulus and breaks ties on (radius, angle index), so the report
    does not depend on scheduling.
    """
    grid = grid or SampleGrid()
    hf = apply_operator(w, f)
    theta = grid.angles()

    def row(r):
        return _radius_row(hf, cp, r, theta, grid.guard)

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, grid.radii))
    else:
        rows = [row(r) for r in grid.radii]

    best = None
    excluded = 0
    for radius, (hit, skipped) in zip(grid.radii, rows):
        excluded += skipped
        if hit is None:
            continue
        modulus, z, idx = hit
        key = (-modulus, radius, idx)
        if best is None or key < best[0]:
            best = (key, modulus, z)
    if best is None:
        raise AllPointsExcluded(f"all {len(grid.radii) * grid.angles_per_radius} samples excluded")
    _, modulus, z = best
    return SampleReport(modulus, z, excluded, cp.beta, modulus < cp.beta)


def real_axis_modulus(f: TFunction, w: OperatorWeights, cp: ClassParams, r: float,
                      guard: float = DEFAULT_GUARD) -> float:
    """|expression| at the real point z = r; infinite when the guard trips."""
    hf = apply_operator(w, f)
    try:
        value = condition_expression(evaluate(hf, r), evaluate_derivative(hf, r), r, cp, guard)
    except GuardTripped:
        return math.inf
    return abs(value)


def crosscheck(
    f: TFunction,
    w: OperatorWeights,
    cp: ClassParams,
    grid: SampleGrid | None = None,
    tol: float = 1e-9,
    slack_factor: float = DEFAULT_SLACK_FACTOR,
    workers: int | None = None,
) -> CrossCheck:
    """Compare the coefficient verdict with the sampled inequality.

    Members must sample below beta + tol everywhere (hard). For non-members the
    violation lives at the boundary, which the grid never reaches, so the
    check is that either some sample already reaches beta or the real point
    at the largest radius r comes within slack_factor * (1 - r) of beta.
    """
    grid = grid or SampleGrid()
    membership = theorem1_test(f, w, cp)
    diagnostics: list[str] = []
    try:
        sample = disk_sample_condition(f, w, cp, grid, workers)
    except AllPointsExcluded as exc:
        sample = None
        diagnostics.append(str(exc))
    r_max = grid.max_radius
    boundary = real_axis_modulus(f, w, cp, r_max, grid.guard)
    slack = slack_factor * (1.0 - r_max)

    if membership.member:
        ok = sample is not None and sample.max_modulus < cp.beta + tol
        if not ok:
            got = "no samples" if sample is None else f"{sample.max_modulus!r} at z={sample.argmax_z!r}"
            diagnostics.append(f"coefficient test passes but sampled modulus is {got}")
    else:
        sampled_violation = sample is None or sample.max_modulus >= cp.beta
        near_boundary = boundary > cp.beta - slack
        ok = sampled_violation or near_boundary
        if not ok:
            diagnostics.append(
                f"coefficient test fails (margin {membership.margin!r}) but |expr({r_max})| = "
                f"{boundary!r} <= beta - slack = {cp.beta - slack!r}"
            )
    return CrossCheck(CONSISTENT if ok else INCONSISTENT, membership, sample, boundary, slack, diagnostics)


def sample_grid_from(radii: Sequence[float] | None, angles: int | None, guard: float | None = None) -> SampleGrid:
    return SampleGrid(
        tuple(radii) if radii else DEFAULT_RADII,
        angles or DEFAULT_ANGLES,
        DEFAULT_GUARD if guard is None else guard,
    )
