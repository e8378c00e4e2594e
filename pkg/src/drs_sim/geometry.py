"""Coordinate frames and angle bookkeeping for a downward-facing aerial reflector.

World axes: x lateral (across the lanes), y longitudinal (along the lanes),
z up.  The reflecting surface hangs under the drone with its boresight
pointing straight down.  Elevation is measured from boresight, azimuth in
the surface's local horizontal frame, which rotates with the drone's yaw.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi


def wrap_angle(angle: float) -> float:
    """Wrap an angle in radians to (-pi, pi]."""
    r = math.remainder(angle, TWO_PI)
    if r <= -math.pi:
        r += TWO_PI
    return r


@dataclass(frozen=True, slots=True)
class Vec3:
    """Point or displacement in meters: x lateral, y longitudinal, z vertical."""

    x: float
    y: float
    z: float

    def __add__(self, other: Vec3) -> Vec3:
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: Vec3) -> Vec3:
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def scaled(self, factor: float) -> Vec3:
        return Vec3(self.x * factor, self.y * factor, self.z * factor)

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def distance_to(self, other: Vec3) -> float:
        return (other - self).norm()

    def horizontal_distance_to(self, other: Vec3) -> float:
        return math.hypot(other.x - self.x, other.y - self.y)


@dataclass(frozen=True)
class Pose:
    """Drone position plus yaw about the world vertical axis.

    Rotation of the surface is restricted to the horizontal plane, so the
    yaw angle alone fixes its orientation.  Yaw is normalized to (-pi, pi]
    on construction.
    """

    position: Vec3
    yaw: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "yaw", wrap_angle(self.yaw))

    def moved_to(self, position: Vec3) -> Pose:
        return Pose(position, self.yaw)

    def rotated(self, delta_yaw: float) -> Pose:
        return Pose(self.position, wrap_angle(self.yaw + delta_yaw))


@dataclass(frozen=True)
class AngularCoords:
    """Direction of a node as seen from the surface.

    theta: elevation off boresight (straight down), in [0, pi]; any node
    strictly below the drone sits in [0, pi/2).  phi: azimuth in the yawed
    local frame, wrapped to (-pi, pi] on construction.
    """

    theta: float
    phi: float

    def __post_init__(self) -> None:
        if math.isnan(self.theta) or not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must be in [0, pi], got {self.theta}")
        object.__setattr__(self, "phi", wrap_angle(self.phi))


def angles_to(ris: Pose, target: Vec3) -> AngularCoords:
    """Elevation and azimuth of ``target`` relative to the surface at ``ris``.

    theta = atan(d_2d / dh), where d_2d is the horizontal separation and dh
    the height of the surface above the target; phi is the world bearing of
    the target minus the yaw.  A target directly below gets phi = 0 by
    convention (theta = 0 there, so the azimuth carries no information).

    Raises ValueError unless the surface is strictly above the target.
    """
    dh = ris.position.z - target.z
    if dh <= 0.0:
        raise ValueError(
            f"surface must be above the target: surface z={ris.position.z}, target z={target.z}"
        )
    dx = target.x - ris.position.x
    dy = target.y - ris.position.y
    d2d = math.hypot(dx, dy)
    theta = math.atan2(d2d, dh)
    phi = 0.0 if d2d == 0.0 else wrap_angle(math.atan2(dy, dx) - ris.yaw)
    return AngularCoords(theta, phi)


def rotation_between(a: Pose, b: Pose) -> float:
    """Rotation angle between two yaw-only poses, in [0, pi].

    For rotations about a single axis this equals the axis-angle magnitude
    acos((tr(R) - 1) / 2) of the relative rotation matrix, so the wrapped
    yaw difference is the exact rotation angle.
    """
    return abs(wrap_angle(a.yaw - b.yaw))


def step_displacement(a: Vec3, b: Vec3) -> float:
    """Euclidean distance in meters traveled when moving from ``a`` to ``b``."""
    return (b - a).norm()
