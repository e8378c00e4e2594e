"""Far-field reflection link budget: array factor, path loss, SINR, rate.

The reflector is an M x N grid of passive elements with pitch (dx, dy).
In the far field the grid's coherent gain toward an (incident, exit) angle
pair collapses to a product of two normalized Dirichlet kernels over the
direction-cosine sums; everything else in the path loss is geometry and
per-element gain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import AngularCoords

# Path-loss value for a hop with no usable path (element pattern zero or a
# perfectly nulled array factor).  Propagates through sinr() as zero power.
NO_PATH = math.inf

SINR_FORM_STANDARD = "standard"
SINR_FORM_PAPER_LITERAL = "paper-literal"
SINR_FORMS = (SINR_FORM_STANDARD, SINR_FORM_PAPER_LITERAL)

# Arguments closer than this to a multiple of pi take the analytic limit of
# the Dirichlet ratio; direct evaluation is accurate well outside it.
_SINGULARITY_SNAP = 1e-8


@dataclass(frozen=True)
class RisConfig:
    """Reflecting-surface geometry and link gains (linear units).

    Defaults: 32 x 32 elements at half-wavelength pitch in the 5.9 GHz ITS
    band, unit gains, unit reflection amplitude.  The resulting far-field
    boundary (~52 m) sits well below the minimum flight altitude.
    """

    m_rows: int = 32
    n_cols: int = 32
    dx: float = 0.0254  # element pitch along local x [m]
    dy: float = 0.0254  # element pitch along local y [m]
    wavelength: float = 0.0508  # carrier wavelength [m]
    gain_tx: float = 1.0
    gain_rx: float = 1.0
    gain_ris: float = 1.0
    amplitude: float = 1.0  # element reflection amplitude, in (0, 1]

    def __post_init__(self) -> None:
        if self.m_rows < 1 or self.n_cols < 1:
            raise ValueError("ris.m_rows and ris.n_cols must be >= 1")
        for name in ("dx", "dy", "wavelength", "gain_tx", "gain_rx", "gain_ris"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"ris.{name} must be > 0")
        if not 0.0 < self.amplitude <= 1.0:
            raise ValueError("ris.amplitude must be in (0, 1]")


@dataclass(frozen=True)
class LinkGeometry:
    """Angles and distances of one transmitter -> surface -> receiver hop."""

    tx: AngularCoords
    rx: AngularCoords
    dist_tx: float  # transmitter-to-surface distance [m]
    dist_rx: float  # surface-to-receiver distance [m]

    def __post_init__(self) -> None:
        if self.dist_tx <= 0.0 or self.dist_rx <= 0.0:
            raise ValueError("link distances must be > 0")


@dataclass(frozen=True)
class RadioConfig:
    """Transmit power, noise floor and the rate-model coefficients."""

    tx_power: float = 0.2  # [W]
    noise_power: float = 1e-13  # [W]
    efficiency: float = 0.8  # link effectiveness, in (0, 1]
    eff_bandwidth: float = 1e7  # [Hz]

    def __post_init__(self) -> None:
        for name in ("tx_power", "noise_power", "efficiency", "eff_bandwidth"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"radio.{name} must be > 0")
        if self.efficiency > 1.0:
            raise ValueError("radio.efficiency must be <= 1")


def radiation_pattern(theta: float) -> float:
    """Per-element power pattern: cos^3(theta) in front, zero behind.

    Raises ValueError outside [0, pi].
    """
    if math.isnan(theta) or not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta must be in [0, pi], got {theta}")
    if theta > math.pi / 2:
        return 0.0
    return math.cos(theta) ** 3


def dirichlet_ratio(count: int, arg: float) -> float:
    """Normalized Dirichlet kernel sin(count * x) / (count * sin(x)).

    Magnitude of the coherent sum of ``count`` equally spaced unit phasors,
    normalized to [-1, 1].  At x = k*pi both numerator and denominator
    vanish; the analytic limit (-1)^(k*(count-1)) is returned there.  Those
    points are the grating lobes: the ratio returns to full magnitude, not
    to zero.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    k = round(arg / math.pi)
    if abs(arg - k * math.pi) < _SINGULARITY_SNAP:
        return -1.0 if (k * (count - 1)) % 2 else 1.0
    return math.sin(count * arg) / (count * math.sin(arg))


def direction_cosine_sums(tx: AngularCoords, rx: AngularCoords) -> tuple[float, float]:
    """Sums of the incident and exit direction cosines along local x and y."""
    ux = math.sin(tx.theta) * math.cos(tx.phi) + math.sin(rx.theta) * math.cos(rx.phi)
    uy = math.sin(tx.theta) * math.sin(tx.phi) + math.sin(rx.theta) * math.sin(rx.phi)
    return ux, uy


def psi(ris: RisConfig, link: LinkGeometry) -> float:
    """Array factor of the element grid for the hop's angle pair, in [-1, 1].

    Product of the row and column Dirichlet ratios evaluated at
    pi * u * pitch / wavelength, where u is the corresponding
    direction-cosine sum.  Unit magnitude is attained when both sums vanish
    (specular geometry).
    """
    ux, uy = direction_cosine_sums(link.tx, link.rx)
    row = dirichlet_ratio(ris.m_rows, math.pi * ux * ris.dx / ris.wavelength)
    col = dirichlet_ratio(ris.n_cols, math.pi * uy * ris.dy / ris.wavelength)
    return row * col


def path_loss_far_field(ris: RisConfig, link: LinkGeometry, psi_value: float) -> float:
    """Far-field path loss of a reflected hop (linear, >= 1 in practice).

        64 pi^3 d_t^2 d_r^2
        -----------------------------------------------------------------
        G_t G_r G M^2 N^2 dx dy lambda^2 F(theta_t) F(theta_r) A^2 |psi|^2

    Returns NO_PATH when either elevation falls behind the surface
    (element pattern zero) or the array factor is exactly nulled.
    """
    f_tx = radiation_pattern(link.tx.theta)
    f_rx = radiation_pattern(link.rx.theta)
    if f_tx == 0.0 or f_rx == 0.0 or psi_value == 0.0:
        return NO_PATH
    numerator = 64.0 * math.pi**3 * link.dist_tx**2 * link.dist_rx**2
    denominator = (
        ris.gain_tx
        * ris.gain_rx
        * ris.gain_ris
        * ris.m_rows**2
        * ris.n_cols**2
        * ris.dx
        * ris.dy
        * ris.wavelength**2
        * f_tx
        * f_rx
        * ris.amplitude**2
        * psi_value**2
    )
    return numerator / denominator


def fraunhofer_distance(ris: RisConfig) -> float:
    """Far-field boundary 2 D^2 / lambda for aperture diagonal D [m]."""
    diagonal = math.hypot(ris.m_rows * ris.dx, ris.n_cols * ris.dy)
    return 2.0 * diagonal * diagonal / ris.wavelength


def sinr(
    radio: RadioConfig,
    pl_desired: float,
    pl_interference: float,
    form: str = SINR_FORM_STANDARD,
) -> float:
    """Signal-to-interference-plus-noise ratio at the served receiver.

    ``standard`` treats P_t / PL as received signal power over noise plus
    received interference power:

        (P_t / PL) / (sigma_N^2 + P_t / PL_I)

    ``paper-literal`` evaluates the alternative algebraic form

        P_t / (PL * sigma_N^2 + P_t / PL_I)

    Both decrease in PL and increase in PL_I; pass NO_PATH for an absent
    interferer (its power contribution becomes zero).
    """
    if pl_desired <= 0.0 or pl_interference <= 0.0:
        raise ValueError("path losses must be > 0")
    interference_power = radio.tx_power / pl_interference
    if form == SINR_FORM_STANDARD:
        return (radio.tx_power / pl_desired) / (radio.noise_power + interference_power)
    if form == SINR_FORM_PAPER_LITERAL:
        return radio.tx_power / (pl_desired * radio.noise_power + interference_power)
    raise ValueError(f"unknown sinr form: {form!r}")


def rate(radio: RadioConfig, sinr_value: float) -> float:
    """Achievable rate in bit/s: efficiency * bandwidth * log2(1 + SINR)."""
    if sinr_value < 0.0:
        raise ValueError("sinr must be >= 0")
    return radio.efficiency * radio.eff_bandwidth * math.log2(1.0 + sinr_value)
