"""Hover-point selection and per-step drone motion toward it.

The best lateral position for the relay is the midpoint between the served
vehicles; the best altitude trades slant range (grows with height) against
element-pattern obliquity loss (shrinks with height).  The altitude cost is
unimodal with a single interior stationary point, so a bracketing scalar
minimizer is sufficient and verifiable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .geometry import Vec3

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0

HEIGHT_TOL = 1e-4  # bracket width for the altitude search [m]


@dataclass(frozen=True)
class WorldBounds:
    """Axis-aligned flight box the drone must stay inside."""

    x_min: float = 0.0
    x_max: float = 500.0
    y_min: float = 0.0
    y_max: float = 5000.0
    z_min: float = 100.0
    z_max: float = 600.0

    def __post_init__(self) -> None:
        for axis in ("x", "y", "z"):
            lo = getattr(self, f"{axis}_min")
            hi = getattr(self, f"{axis}_max")
            if not lo < hi:
                raise ValueError(f"bounds.{axis}_min must be < bounds.{axis}_max")

    def clamp(self, p: Vec3) -> Vec3:
        return Vec3(
            min(max(p.x, self.x_min), self.x_max),
            min(max(p.y, self.y_min), self.y_max),
            min(max(p.z, self.z_min), self.z_max),
        )

    def contains(self, p: Vec3, tol: float = 0.0) -> bool:
        return (
            self.x_min - tol <= p.x <= self.x_max + tol
            and self.y_min - tol <= p.y <= self.y_max + tol
            and self.z_min - tol <= p.z <= self.z_max + tol
        )


@dataclass(frozen=True)
class MotionLimits:
    """Per-step kinematic budgets of the drone and the vehicle speed."""

    v_drone: float = 18.0  # max drone speed [m/s]
    rot_rate: float = 0.1745  # max yaw rate [rad/s]
    time_step: float = 0.5  # planning step [s]
    v_vehicle: float = 15.0  # vehicle speed magnitude [m/s]

    def __post_init__(self) -> None:
        for name in ("v_drone", "rot_rate", "time_step", "v_vehicle"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"limits.{name} must be > 0")
        if self.v_drone < self.v_vehicle:
            raise ValueError("limits.v_drone must be >= limits.v_vehicle")

    @property
    def step_length(self) -> float:
        """Maximum displacement per step [m]."""
        return self.v_drone * self.time_step

    @property
    def yaw_budget(self) -> float:
        """Maximum yaw change per step [rad]."""
        return self.rot_rate * self.time_step


def relay_height_cost(d_2d: float, height: float) -> float:
    """Altitude cost (d_2d^2 + h^2) / cos^6(atan(d_2d / h)).

    Proportional to the reflected link's path loss when hovering at the
    midpoint with both vehicles a horizontal distance d_2d away.
    """
    return (d_2d * d_2d + height * height) / math.cos(math.atan2(d_2d, height)) ** 6


def golden_section_min(
    f: Callable[[float], float], lo: float, hi: float, tol: float = HEIGHT_TOL
) -> float:
    """Minimize a unimodal scalar function over [lo, hi] by golden section.

    Returns the midpoint of the final bracket, within tol of the minimizer.
    """
    if not lo < hi:
        raise ValueError("need lo < hi")
    a, b = lo, hi
    c = b - _INV_GOLDEN * (b - a)
    d = a + _INV_GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_GOLDEN * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def optimal_height(d_2d: float, bounds: WorldBounds) -> float:
    """Altitude in [z_min, z_max] minimizing the relay height cost.

    For d_2d = 0 the cost is strictly increasing in height, so the floor of
    the flight box is returned directly.
    """
    if d_2d < 0.0:
        raise ValueError("d_2d must be >= 0")
    if d_2d == 0.0:
        return bounds.z_min
    return golden_section_min(
        lambda h: relay_height_cost(d_2d, h), bounds.z_min, bounds.z_max
    )


def optimal_location(tx: Vec3, rx: Vec3, bounds: WorldBounds) -> Vec3:
    """Best hover point for relaying between ``tx`` and ``rx``.

    Horizontal position is the midpoint between the vehicles, clamped into
    the flight box; altitude minimizes the height cost for half their
    horizontal separation.
    """
    mid_x = 0.5 * (tx.x + rx.x)
    mid_y = 0.5 * (tx.y + rx.y)
    d_2d = 0.5 * math.hypot(rx.x - tx.x, rx.y - tx.y)
    height = optimal_height(d_2d, bounds)
    return bounds.clamp(Vec3(mid_x, mid_y, height))


def step_towards(
    current: Vec3, target: Vec3, limits: MotionLimits, bounds: WorldBounds
) -> Vec3:
    """One bounded step from ``current`` toward ``target``.

    Moves at most v_drone * time_step along the straight line, snapping to
    the target once it is within reach, then clamps into the flight box.
    Clamping onto the box never lengthens the step (projection onto a
    convex set is non-expansive), so the displacement budget holds.
    """
    offset = target - current
    distance = offset.norm()
    step = limits.step_length
    if distance <= step:
        return bounds.clamp(target)
    return bounds.clamp(current + offset.scaled(step / distance))
