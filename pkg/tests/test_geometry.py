import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from drs_sim.geometry import (
    AngularCoords,
    Pose,
    Vec3,
    angles_to,
    rotation_between,
    step_displacement,
    wrap_angle,
)

coords = st.floats(-1e4, 1e4, allow_nan=False, allow_infinity=False)
yaws = st.floats(-10.0, 10.0, allow_nan=False, allow_infinity=False)
heights = st.floats(1e-3, 1e4, allow_nan=False, allow_infinity=False)


class TestWrapAngle:
    def test_half_turn_maps_to_positive_pi(self):
        assert wrap_angle(math.pi) == math.pi
        assert wrap_angle(-math.pi) == math.pi

    @given(st.floats(-1e6, 1e6, allow_nan=False))
    def test_range(self, angle):
        wrapped = wrap_angle(angle)
        assert -math.pi < wrapped <= math.pi

    @given(yaws)
    def test_idempotent(self, angle):
        assert wrap_angle(wrap_angle(angle)) == wrap_angle(angle)


class TestAnglesTo:
    def test_directly_below(self):
        out = angles_to(Pose(Vec3(0, 0, 100), 0.0), Vec3(0, 0, 1.5))
        assert out.theta == 0.0
        assert out.phi == 0.0

    def test_forty_five_degrees(self):
        out = angles_to(Pose(Vec3(0, 0, 100), 0.0), Vec3(98.5, 0, 1.5))
        assert out.theta == pytest.approx(math.pi / 4, abs=1e-12)
        assert out.phi == 0.0

    def test_yaw_subtracts_from_azimuth(self):
        out = angles_to(Pose(Vec3(0, 0, 100), math.pi / 2), Vec3(98.5, 0, 1.5))
        assert out.theta == pytest.approx(math.pi / 4, abs=1e-12)
        assert out.phi == pytest.approx(-math.pi / 2, abs=1e-12)

    def test_rejects_target_at_or_above(self):
        pose = Pose(Vec3(0, 0, 100), 0.0)
        with pytest.raises(ValueError):
            angles_to(pose, Vec3(5, 5, 100))
        with pytest.raises(ValueError):
            angles_to(pose, Vec3(5, 5, 101))

    @given(coords, coords, coords, coords, heights, yaws)
    def test_elevation_in_front_quarter(self, px, py, tx, ty, dh, yaw):
        pose = Pose(Vec3(px, py, 50.0), yaw)
        out = angles_to(pose, Vec3(tx, ty, 50.0 - dh))
        assert 0.0 <= out.theta < math.pi / 2
        assert -math.pi < out.phi <= math.pi

    @given(coords, coords, coords, coords, heights, yaws, yaws)
    def test_yaw_changes_only_azimuth(self, px, py, tx, ty, dh, yaw_a, yaw_b):
        target = Vec3(tx, ty, 50.0 - dh)
        a = angles_to(Pose(Vec3(px, py, 50.0), yaw_a), target)
        b = angles_to(Pose(Vec3(px, py, 50.0), yaw_b), target)
        assert a.theta == b.theta

    @given(
        st.floats(-math.pi, math.pi, allow_nan=False),
        yaws,
        st.floats(1.0, 1e3, allow_nan=False),
    )
    def test_azimuth_round_trip(self, phi0, yaw, radius):
        pose = Pose(Vec3(10.0, -20.0, 300.0), yaw)
        target = Vec3(
            pose.position.x + radius * math.cos(phi0),
            pose.position.y + radius * math.sin(phi0),
            1.5,
        )
        out = angles_to(pose, target)
        expected = wrap_angle(phi0 - yaw)
        # compare as directions to avoid the branch point at +/- pi
        assert abs(wrap_angle(out.phi - expected)) < 1e-9


class TestRotationBetween:
    def test_identical_poses(self):
        pose = Pose(Vec3(1, 2, 100), 0.4)
        assert rotation_between(pose, pose) == 0.0

    def test_small_difference(self):
        a = Pose(Vec3(0, 0, 100), 0.1)
        b = Pose(Vec3(0, 0, 100), 0.0)
        assert rotation_between(a, b) == pytest.approx(0.1, abs=1e-15)

    def test_wraps_across_half_turn(self):
        a = Pose(Vec3(0, 0, 100), math.pi - 0.05)
        b = Pose(Vec3(0, 0, 100), -math.pi + 0.05)
        assert rotation_between(a, b) == pytest.approx(0.1, abs=1e-12)

    @given(yaws, yaws)
    def test_symmetric_and_bounded(self, ya, yb):
        a = Pose(Vec3(0, 0, 100), ya)
        b = Pose(Vec3(0, 0, 100), yb)
        assert rotation_between(a, b) == rotation_between(b, a)
        assert 0.0 <= rotation_between(a, b) <= math.pi


class TestStepDisplacement:
    @pytest.mark.parametrize(
        "a,b,expected",
        [
            (Vec3(0, 0, 0), Vec3(0, 0, 0), 0.0),
            (Vec3(0, 0, 0), Vec3(3, 4, 0), 5.0),
            (Vec3(1, 1, 1), Vec3(1, 1, 10), 9.0),
        ],
    )
    def test_examples(self, a, b, expected):
        assert step_displacement(a, b) == expected

    @given(coords, coords, coords, coords)
    def test_matches_hypot(self, ax, ay, bx, by):
        got = step_displacement(Vec3(ax, ay, 5.0), Vec3(bx, by, 5.0))
        assert got == pytest.approx(math.hypot(bx - ax, by - ay), rel=1e-12, abs=1e-12)


class TestPose:
    def test_yaw_normalized_on_construction(self):
        assert Pose(Vec3(0, 0, 1), 3 * math.pi).yaw == pytest.approx(math.pi)
        assert Pose(Vec3(0, 0, 1), -math.pi).yaw == math.pi

    @given(yaws, yaws)
    def test_rotated_accumulates_and_wraps(self, yaw, delta):
        pose = Pose(Vec3(0, 0, 1), yaw).rotated(delta)
        assert -math.pi < pose.yaw <= math.pi
        assert abs(wrap_angle(pose.yaw - (yaw + delta))) < 1e-9


class TestAngularCoords:
    def test_rejects_bad_elevation(self):
        with pytest.raises(ValueError):
            AngularCoords(-0.1, 0.0)
        with pytest.raises(ValueError):
            AngularCoords(math.pi + 0.1, 0.0)

    def test_wraps_azimuth(self):
        assert AngularCoords(0.5, 2 * math.pi + 0.25).phi == pytest.approx(0.25)
