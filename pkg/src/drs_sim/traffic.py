"""Two-lane highway scenario: arrivals, pairing events, constant-velocity motion.

Lane 0 runs along x = x_min in the +y direction, lane 1 along x = x_max in
the -y direction.  Vehicle arrivals per lane follow an exponential
inter-arrival process; communication events per step are Poisson counts,
and only one vehicle pair is served at a time.  All randomness flows
through one seeded generator in a fixed order (lane 0 arrivals, lane 1
arrivals, event count, pair draws), so a seed fully determines the trace.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import Vec3
from .planner import MotionLimits, WorldBounds
from .rng import SplitMix64

ANTENNA_HEIGHT_MIN = 1.5  # [m]
ANTENNA_HEIGHT_MAX = 2.0  # [m]

INTERFERER_RSU = "rsu"
INTERFERER_VEHICLE = "vehicle"
INTERFERER_NONE = "none"
INTERFERER_KINDS = (INTERFERER_RSU, INTERFERER_VEHICLE, INTERFERER_NONE)


@dataclass
class Vehicle:
    """One vehicle; position.z equals the antenna height, speed is signed by lane."""

    id: int
    lane: int  # 0: x = x_min, travels +y; 1: x = x_max, travels -y
    position: Vec3
    speed: float  # [m/s], positive in lane 0, negative in lane 1
    antenna_height: float


@dataclass
class V2VPair:
    id: int
    tx_id: int
    rx_id: int
    start_step: int
    active: bool = True


@dataclass(frozen=True)
class ScenarioConfig:
    """Scenario shape: rates, geometry, kinematics, interferer, seed."""

    arrival_rate: float = 0.2  # vehicles per second per lane
    v2v_rate: float = 0.02  # pairing events per step
    bounds: WorldBounds = field(default_factory=WorldBounds)
    limits: MotionLimits = field(default_factory=MotionLimits)
    rsu_position: Vec3 = Vec3(250.0, 2500.0, 5.0)
    seed: int = 1
    interferer_kind: str = INTERFERER_RSU

    def __post_init__(self) -> None:
        if self.arrival_rate < 0.0:
            raise ValueError("scenario.arrival_rate must be >= 0")
        if self.v2v_rate < 0.0:
            raise ValueError("scenario.v2v_rate must be >= 0")
        if self.interferer_kind not in INTERFERER_KINDS:
            raise ValueError(
                f"scenario.interferer must be one of {INTERFERER_KINDS}, got {self.interferer_kind!r}"
            )


def next_arrival_delta(rng: SplitMix64, arrival_rate: float) -> float:
    """Seconds until the next arrival on a lane; infinite for rate zero."""
    return rng.expovariate(arrival_rate)


def sample_v2v_events(rng: SplitMix64, v2v_rate: float) -> int:
    """Number of pairing events triggered this step."""
    return rng.poisson(v2v_rate)


def advance_vehicles(
    vehicles: list[Vehicle], pair: V2VPair | None, bounds: WorldBounds, dt: float
) -> tuple[list[Vehicle], V2VPair | None]:
    """Move every vehicle dt seconds along its lane and drop those leaving the segment.

    Vehicle positions are updated in place; the returned list holds the
    survivors.  A pair whose member left the segment is deactivated.
    """
    if dt <= 0.0:
        raise ValueError("dt must be > 0")
    survivors: list[Vehicle] = []
    for vehicle in vehicles:
        y = vehicle.position.y + vehicle.speed * dt
        if bounds.y_min <= y <= bounds.y_max:
            vehicle.position = Vec3(vehicle.position.x, y, vehicle.position.z)
            survivors.append(vehicle)
    if pair is not None and pair.active:
        alive = {v.id for v in survivors}
        if pair.tx_id not in alive or pair.rx_id not in alive:
            pair.active = False
    return survivors, pair


class TrafficModel:
    """Owns the vehicle population, arrival clocks and the single active pair."""

    def __init__(self, config: ScenarioConfig, rng: SplitMix64) -> None:
        self.config = config
        self.rng = rng
        self.vehicles: list[Vehicle] = []
        self.pair: V2VPair | None = None
        self.interferer_id: int | None = None  # designated vehicle, vehicle mode only
        self.pairs_started = 0
        self._next_arrival = [
            next_arrival_delta(rng, config.arrival_rate),
            next_arrival_delta(rng, config.arrival_rate),
        ]
        self._next_vehicle_id = 0

    @property
    def active_pair(self) -> V2VPair | None:
        if self.pair is not None and self.pair.active:
            return self.pair
        return None

    def vehicle_by_id(self, vehicle_id: int) -> Vehicle | None:
        for vehicle in self.vehicles:
            if vehicle.id == vehicle_id:
                return vehicle
        return None

    def advance(self, dt: float) -> None:
        self.vehicles, self.pair = advance_vehicles(
            self.vehicles, self.pair, self.config.bounds, dt
        )

    def spawn_arrivals(self, now: float) -> None:
        """Spawn every vehicle whose arrival time has passed, lane 0 first."""
        bounds = self.config.bounds
        speed = self.config.limits.v_vehicle
        for lane in (0, 1):
            while self._next_arrival[lane] <= now:
                height = self.rng.uniform(ANTENNA_HEIGHT_MIN, ANTENNA_HEIGHT_MAX)
                if lane == 0:
                    position = Vec3(bounds.x_min, bounds.y_min, height)
                    signed_speed = speed
                else:
                    position = Vec3(bounds.x_max, bounds.y_max, height)
                    signed_speed = -speed
                self.vehicles.append(
                    Vehicle(self._next_vehicle_id, lane, position, signed_speed, height)
                )
                self._next_vehicle_id += 1
                self._next_arrival[lane] += next_arrival_delta(
                    self.rng, self.config.arrival_rate
                )

    def maybe_start_pair(self, step_index: int) -> V2VPair | None:
        """Sample this step's pairing events and start a pair when possible.

        Events are discarded while a pair is already being served (one pair
        at a time) or when no opposite-lane partner exists.  The transmitter
        is drawn uniformly over all vehicles; the receiver is its nearest
        opposite-lane neighbor.
        """
        events = sample_v2v_events(self.rng, self.config.v2v_rate)
        if events == 0 or self.active_pair is not None or not self.vehicles:
            return None
        tx = self.vehicles[self.rng.randrange(len(self.vehicles))]
        partners = [v for v in self.vehicles if v.lane != tx.lane]
        if not partners:
            return None
        rx = min(partners, key=lambda v: (abs(v.position.y - tx.position.y), v.id))
        self.pair = V2VPair(self.pairs_started, tx.id, rx.id, step_index)
        self.pairs_started += 1
        self.interferer_id = None
        if self.config.interferer_kind == INTERFERER_VEHICLE:
            bystanders = [v for v in self.vehicles if v.id not in (tx.id, rx.id)]
            if bystanders:
                self.interferer_id = bystanders[self.rng.randrange(len(bystanders))].id
        return self.pair

    def interferer_position(self) -> Vec3 | None:
        """Current interferer location, or None when no interferer exists."""
        kind = self.config.interferer_kind
        if kind == INTERFERER_RSU:
            return self.config.rsu_position
        if kind == INTERFERER_VEHICLE and self.interferer_id is not None:
            vehicle = self.vehicle_by_id(self.interferer_id)
            return vehicle.position if vehicle is not None else None
        return None
