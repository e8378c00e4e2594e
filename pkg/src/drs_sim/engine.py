"""Time-stepped simulation loop tying traffic, planning, yaw control and the link budget.

Each step advances traffic, moves the drone one bounded step toward the
current optimal hover point, optionally rotates the surface to null the
reflected interference, evaluates the served pair's link, and verifies the
kinematic and box constraints.  A constraint violation raises: it indicates
a bug in the controller, not a runtime condition.

The desired hop is beamformed (the element phases track the served pair),
so its array factor stays at unit magnitude regardless of yaw; interference
reflects passively and sees the yaw-dependent array factor.  This is why
rotating to cancel interference never costs desired-link rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable

from .channel import (
    NO_PATH,
    SINR_FORMS,
    SINR_FORM_STANDARD,
    LinkGeometry,
    RadioConfig,
    RisConfig,
    path_loss_far_field,
    psi,
    rate,
    sinr,
)
from .geometry import Pose, Vec3, angles_to, rotation_between, step_displacement
from .nullsteer import NullSteerInput, select_rotation
from .planner import optimal_location, step_towards
from .rng import SplitMix64
from .traffic import ScenarioConfig, TrafficModel, V2VPair, Vehicle

# Mode recorded when no rotation was attempted (control off or no interferer).
MODE_OFF = "off"

DISPLACEMENT_TOL = 1e-9  # [m]
YAW_TOL = 1e-12  # [rad]


class ConstraintViolation(RuntimeError):
    """A per-step kinematic or box constraint was breached (controller bug)."""


@dataclass
class WorldState:
    """Mutable simulation state advanced by run_step."""

    clock: float
    step_index: int
    drs: Pose
    traffic: TrafficModel
    rng: SplitMix64

    @property
    def vehicles(self) -> list[Vehicle]:
        return self.traffic.vehicles

    @property
    def pair(self) -> V2VPair | None:
        return self.traffic.active_pair


@dataclass(frozen=True)
class StepRecord:
    """Per-step metrics while a pair is being served."""

    step_index: int
    time_s: float
    pair_id: int
    cycle_index: int  # steps since the pair started
    tx_pos: Vec3
    rx_pos: Vec3
    drs: Pose
    alpha_applied: float
    null_mode: str
    pl_desired_db: float
    pl_interference_db: float
    sinr_db: float
    rate_bps: float
    control_on: bool


@dataclass(frozen=True)
class SimConfig:
    """Everything one simulation run needs."""

    scenario: ScenarioConfig = field(default_factory=ScenarioConfig)
    radio: RadioConfig = field(default_factory=RadioConfig)
    ris: RisConfig = field(default_factory=RisConfig)
    steps: int = 10000
    orientation_control: bool = True
    sinr_form: str = SINR_FORM_STANDARD

    def __post_init__(self) -> None:
        if self.steps < 1:
            raise ValueError("run.steps must be >= 1")
        if self.sinr_form not in SINR_FORMS:
            raise ValueError(
                f"run.sinr_form must be one of {SINR_FORMS}, got {self.sinr_form!r}"
            )


def initial_state(config: SimConfig, seed: int | None = None) -> WorldState:
    """Fresh world: empty road, drone centered at the flight-box floor, yaw 0."""
    scenario = config.scenario
    if seed is not None:
        scenario = replace(scenario, seed=seed)
    rng = SplitMix64(scenario.seed)
    bounds = scenario.bounds
    start = Vec3(
        0.5 * (bounds.x_min + bounds.x_max),
        0.5 * (bounds.y_min + bounds.y_max),
        bounds.z_min,
    )
    return WorldState(
        clock=0.0,
        step_index=0,
        drs=Pose(start, 0.0),
        traffic=TrafficModel(scenario, rng),
        rng=rng,
    )


def db(linear: float) -> float:
    return 10.0 * math.log10(linear)


def _check_constraints(previous: Pose, current: Pose, config: SimConfig) -> None:
    limits = config.scenario.limits
    bounds = config.scenario.bounds
    moved = step_displacement(previous.position, current.position)
    if moved > limits.step_length + DISPLACEMENT_TOL:
        raise ConstraintViolation(
            f"displacement {moved:.9f} m exceeds budget {limits.step_length} m"
        )
    turned = rotation_between(previous, current)
    if turned > limits.yaw_budget + YAW_TOL:
        raise ConstraintViolation(
            f"yaw change {turned:.15f} rad exceeds budget {limits.yaw_budget} rad"
        )
    if not bounds.contains(current.position):
        raise ConstraintViolation(f"position {current.position} outside flight box")


def run_step(state: WorldState, config: SimConfig) -> StepRecord | None:
    """Advance the world one step in place; return a record while a pair is served.

    Order: (1) vehicles move and leavers despawn, (2) arrivals spawn and a
    pairing event may start service, (3) the drone steps toward the optimal
    hover point, (4) the surface rotates per the null-steering rule, (5) the
    link is evaluated, (6) constraints are checked.
    """
    limits = config.scenario.limits
    previous = state.drs
    state.step_index += 1
    state.clock += limits.time_step

    state.traffic.advance(limits.time_step)
    state.traffic.spawn_arrivals(state.clock)
    state.traffic.maybe_start_pair(state.step_index)

    record = None
    pair = state.traffic.active_pair
    if pair is not None:
        tx = state.traffic.vehicle_by_id(pair.tx_id)
        rx = state.traffic.vehicle_by_id(pair.rx_id)
        assert tx is not None and rx is not None

        target = optimal_location(tx.position, rx.position, config.scenario.bounds)
        pose = previous.moved_to(
            step_towards(previous.position, target, limits, config.scenario.bounds)
        )

        interferer = state.traffic.interferer_position()
        alpha = 0.0
        null_mode = MODE_OFF
        if config.orientation_control and interferer is not None:
            steer = select_rotation(
                NullSteerInput(
                    interferer=angles_to(pose, interferer),
                    receiver=angles_to(pose, rx.position),
                    ris=config.ris,
                    alpha_bound=limits.yaw_budget,
                )
            )
            alpha = steer.alpha
            null_mode = steer.mode
            # Rotating the surface by alpha shifts local azimuths by +alpha,
            # which corresponds to a yaw decrease of alpha.
            pose = pose.rotated(-alpha)
        state.drs = pose

        dist_tx = tx.position.distance_to(pose.position)
        dist_rx = rx.position.distance_to(pose.position)
        desired = LinkGeometry(
            tx=angles_to(pose, tx.position),
            rx=angles_to(pose, rx.position),
            dist_tx=dist_tx,
            dist_rx=dist_rx,
        )
        pl_desired = path_loss_far_field(config.ris, desired, 1.0)

        if interferer is not None:
            hop = LinkGeometry(
                tx=angles_to(pose, interferer),
                rx=desired.rx,
                dist_tx=interferer.distance_to(pose.position),
                dist_rx=dist_rx,
            )
            pl_interference = path_loss_far_field(
                config.ris, hop, psi(config.ris, hop)
            )
        else:
            pl_interference = NO_PATH

        sinr_value = sinr(config.radio, pl_desired, pl_interference, config.sinr_form)
        rate_value = rate(config.radio, sinr_value)
        record = StepRecord(
            step_index=state.step_index,
            time_s=state.clock,
            pair_id=pair.id,
            cycle_index=state.step_index - pair.start_step,
            tx_pos=tx.position,
            rx_pos=rx.position,
            drs=pose,
            alpha_applied=alpha,
            null_mode=null_mode,
            pl_desired_db=db(pl_desired),
            pl_interference_db=db(pl_interference),
            sinr_db=db(sinr_value) if sinr_value > 0.0 else -math.inf,
            rate_bps=rate_value,
            control_on=config.orientation_control,
        )

    _check_constraints(previous, state.drs, config)
    return record


@dataclass(frozen=True)
class RunSummary:
    """Records plus the aggregates the experiment front end consumes."""

    seed: int
    control_on: bool
    sinr_form: str
    steps: int
    records: tuple[StepRecord, ...]
    n_pairs: int
    mean_rate_bps: float | None
    rate_by_cycle: tuple[tuple[int, float, int], ...]  # (cycle, mean rate, samples)


def summarize(config: SimConfig, records: Iterable[StepRecord]) -> RunSummary:
    records = tuple(records)
    by_cycle: dict[int, list[float]] = {}
    for record in records:
        by_cycle.setdefault(record.cycle_index, []).append(record.rate_bps)
    rate_by_cycle = tuple(
        (cycle, math.fsum(rates) / len(rates), len(rates))
        for cycle, rates in sorted(by_cycle.items())
    )
    mean = math.fsum(r.rate_bps for r in records) / len(records) if records else None
    return RunSummary(
        seed=config.scenario.seed,
        control_on=config.orientation_control,
        sinr_form=config.sinr_form,
        steps=config.steps,
        records=records,
        n_pairs=len({r.pair_id for r in records}),
        mean_rate_bps=mean,
        rate_by_cycle=rate_by_cycle,
    )


def run_simulation(config: SimConfig, seed: int | None = None) -> RunSummary:
    """Run the configured number of steps; deterministic for a fixed seed."""
    state = initial_state(config, seed)
    records = []
    for _ in range(config.steps):
        record = run_step(state, config)
        if record is not None:
            records.append(record)
    if seed is not None:
        config = replace(config, scenario=replace(config.scenario, seed=seed))
    return summarize(config, records)


@dataclass(frozen=True)
class PairedRun:
    """Same-seed comparison isolating the orientation-control effect."""

    seed: int
    mean_rate_on: float | None
    mean_rate_off: float | None

    @property
    def improvement_pct(self) -> float | None:
        if not self.mean_rate_on or not self.mean_rate_off:
            return None
        return 100.0 * (self.mean_rate_on - self.mean_rate_off) / self.mean_rate_off


def _paired_worker(args: tuple[SimConfig, int]) -> PairedRun:
    config, seed = args
    on = run_simulation(replace(config, orientation_control=True), seed)
    off = run_simulation(replace(config, orientation_control=False), seed)
    return PairedRun(seed, on.mean_rate_bps, off.mean_rate_bps)


def paired_sweep(
    config: SimConfig, seeds: Iterable[int], jobs: int | None = None
) -> list[PairedRun]:
    """Run control-on and control-off with identical traffic for every seed.

    Both runs of a pair share the seed and therefore the exact traffic
    trace, so the rate difference is attributable to orientation control
    alone.  Seeds run in parallel processes when jobs > 1; results keep the
    input seed order.
    """
    seeds = list(seeds)
    work = [(config, seed) for seed in seeds]
    if jobs is None:
        jobs = min(len(work), _default_jobs())
    if jobs > 1 and len(work) > 1:
        try:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(max_workers=jobs) as pool:
                return list(pool.map(_paired_worker, work))
        except OSError:
            pass  # process pools unavailable; fall through to serial
    return [_paired_worker(item) for item in work]


def _default_jobs() -> int:
    import os

    return max(1, os.cpu_count() or 1)


def aggregate_improvement(runs: Iterable[PairedRun]) -> tuple[float, float, float] | None:
    """Mean rate per mode across runs and the relative improvement percent.

    Runs that produced no served steps are excluded; returns None when
    nothing remains.
    """
    ons = [r.mean_rate_on for r in runs if r.mean_rate_on and r.mean_rate_off]
    offs = [r.mean_rate_off for r in runs if r.mean_rate_on and r.mean_rate_off]
    if not ons:
        return None
    mean_on = math.fsum(ons) / len(ons)
    mean_off = math.fsum(offs) / len(offs)
    return mean_on, mean_off, 100.0 * (mean_on - mean_off) / mean_off
