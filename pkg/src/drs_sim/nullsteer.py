"""Analytic yaw selection that drops reflected interference into an array null.

Rotating the surface by alpha shifts both local azimuths (interferer and
receiver) by alpha while leaving elevations fixed.  Each direction-cosine
sum then becomes a pure harmonic in alpha,

    u_x(alpha) = P cos(alpha) - Q sin(alpha) = R cos(alpha + atan2(Q, P)),
    u_y(alpha) = Q cos(alpha) + P sin(alpha) = R cos(alpha - atan2(P, Q)),

with R = sqrt(P^2 + Q^2), so the rotations that zero a row or column factor
numerator can be enumerated in closed form and filtered by the per-step
rotation budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channel import LinkGeometry, RisConfig, psi
from .geometry import AngularCoords, wrap_angle

MODE_ANALYTIC = "analytic-null"
MODE_FALLBACK = "fallback-min"
MODE_NONE = "none"

# Analytic candidates must reach this residual; generically they land many
# orders of magnitude lower and the filter only guards float pathologies.
NULL_RESIDUAL_TOL = 1e-9

_BOUND_SLACK = 1e-12
_FALLBACK_GRID_POINTS = 2001


@dataclass(frozen=True)
class NullSteerInput:
    """Geometry seen from the current pose plus the per-step rotation budget."""

    interferer: AngularCoords
    receiver: AngularCoords
    ris: RisConfig
    alpha_bound: float  # [rad], rotation rate times step duration

    def __post_init__(self) -> None:
        if self.alpha_bound <= 0.0:
            raise ValueError("alpha_bound must be > 0")


@dataclass(frozen=True)
class NullSolution:
    alpha: float
    residual: float  # |array factor| at alpha
    mode: str


def psi_interference(inp: NullSteerInput, alpha: float) -> float:
    """Array factor of the interferer -> receiver reflection after rotating by alpha.

    Identical to the unrotated array factor evaluated with both azimuths
    shifted by alpha; distances play no role here.
    """
    link = LinkGeometry(
        tx=AngularCoords(inp.interferer.theta, inp.interferer.phi + alpha),
        rx=AngularCoords(inp.receiver.theta, inp.receiver.phi + alpha),
        dist_tx=1.0,
        dist_rx=1.0,
    )
    return psi(inp.ris, link)


def harmonic_coefficients(inp: NullSteerInput) -> tuple[float, float]:
    """In-phase and quadrature coefficients (P, Q) of the rotated cosine sums.

    For every alpha:

        sin(t_i) cos(p_i + alpha) + sin(t_r) cos(p_r + alpha) = P cos(alpha) - Q sin(alpha)
        sin(t_i) sin(p_i + alpha) + sin(t_r) sin(p_r + alpha) = Q cos(alpha) + P sin(alpha)
    """
    si = math.sin(inp.interferer.theta)
    sr = math.sin(inp.receiver.theta)
    p = si * math.cos(inp.interferer.phi) + sr * math.cos(inp.receiver.phi)
    q = si * math.sin(inp.interferer.phi) + sr * math.sin(inp.receiver.phi)
    return p, q


def candidate_alphas(inp: NullSteerInput) -> list[float]:
    """All rotations within the budget that zero a row or column factor.

    The row factor vanishes where u_x(alpha) = k * wavelength / (M * dx)
    for a nonzero integer k not divisible by M (multiples of M are grating
    lobes where the factor returns to full magnitude); the column condition
    is the same with (N, dy) and u_y.  Both acos branches are generated per
    admissible k, wrapped, bound-filtered, and residual-checked.  Sorted
    ascending, deduplicated; empty when nothing lands inside the budget.
    """
    p, q = harmonic_coefficients(inp)
    amplitude = math.hypot(p, q)
    if amplitude == 0.0:
        return []
    ris = inp.ris
    conditions = (
        (ris.m_rows, ris.dx, math.atan2(q, p)),
        (ris.n_cols, ris.dy, -math.atan2(p, q)),
    )
    found: list[float] = []
    for count, pitch, phase_shift in conditions:
        null_spacing = ris.wavelength / (count * pitch)
        k_max = math.floor(amplitude / null_spacing)
        for k in range(1, k_max + 1):
            if k % count == 0:
                continue
            for signed_k in (k, -k):
                cos_target = signed_k * null_spacing / amplitude
                branch = math.acos(max(-1.0, min(1.0, cos_target)))
                for alpha_raw in (branch, -branch):
                    alpha = wrap_angle(alpha_raw - phase_shift)
                    if abs(alpha) > inp.alpha_bound + _BOUND_SLACK:
                        continue
                    if abs(psi_interference(inp, alpha)) > NULL_RESIDUAL_TOL:
                        continue
                    found.append(alpha)
    found.sort()
    deduped: list[float] = []
    for alpha in found:
        if not deduped or alpha - deduped[-1] > 1e-12:
            deduped.append(alpha)
    return deduped


def select_rotation(inp: NullSteerInput) -> NullSolution:
    """Pick the per-step rotation: exact null if reachable, else grid minimum.

    Among analytic candidates the smallest |alpha| wins (tie: the more
    negative one) to preserve rotation budget for later steps.  With no
    candidate, a uniform grid over [-bound, bound] is scanned; if that
    cannot improve on alpha = 0 by at least 1e-12 the pose is left alone.
    """
    candidates = candidate_alphas(inp)
    if candidates:
        alpha = min(candidates, key=lambda a: (abs(a), a))
        return NullSolution(alpha, abs(psi_interference(inp, alpha)), MODE_ANALYTIC)

    baseline = abs(psi_interference(inp, 0.0))
    best_alpha, best_residual = 0.0, baseline
    span = 2.0 * inp.alpha_bound / (_FALLBACK_GRID_POINTS - 1)
    for i in range(_FALLBACK_GRID_POINTS):
        alpha = -inp.alpha_bound + i * span
        residual = abs(psi_interference(inp, alpha))
        if residual < best_residual:
            best_alpha, best_residual = alpha, residual
    if baseline - best_residual < 1e-12:
        return NullSolution(0.0, baseline, MODE_NONE)
    return NullSolution(best_alpha, best_residual, MODE_FALLBACK)
