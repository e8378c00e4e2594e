#!/usr/bin/env python3
"""Scan the interference array factor against rotation for one geometry.

Plots |rotated array factor| over a rotation range, prints the analytic
null candidates inside the per-step budget and the controller's selection.
Useful for eyeballing how the rotation budget intersects the null
structure of the element grid.
"""

import argparse
import csv
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from drs_sim.channel import RisConfig
from drs_sim.geometry import AngularCoords
from drs_sim.nullsteer import NullSteerInput, candidate_alphas, psi_interference, select_rotation
from drs_sim.svgplot import line_chart


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--theta-i", type=float, default=math.pi / 4, help="interferer elevation [rad]")
    parser.add_argument("--phi-i", type=float, default=0.0, help="interferer azimuth [rad]")
    parser.add_argument("--theta-r", type=float, default=math.pi / 4, help="receiver elevation [rad]")
    parser.add_argument("--phi-r", type=float, default=math.pi / 2, help="receiver azimuth [rad]")
    parser.add_argument("--bound", type=float, default=0.08725, help="rotation budget [rad]")
    parser.add_argument("--span", type=float, default=0.35, help="half-width of the scan [rad]")
    parser.add_argument("--points", type=int, default=2001, help="scan resolution")
    parser.add_argument("--out", default="results", help="output directory")
    args = parser.parse_args()

    inp = NullSteerInput(
        interferer=AngularCoords(args.theta_i, args.phi_i),
        receiver=AngularCoords(args.theta_r, args.phi_r),
        ris=RisConfig(),
        alpha_bound=args.bound,
    )
    candidates = candidate_alphas(inp)
    solution = select_rotation(inp)
    print(f"candidates within |alpha| <= {args.bound}: {candidates}")
    print(f"selected: alpha={solution.alpha!r} residual={solution.residual:.3e} mode={solution.mode}")

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    step = 2.0 * args.span / (args.points - 1)
    scan = [
        (-args.span + i * step, abs(psi_interference(inp, -args.span + i * step)))
        for i in range(args.points)
    ]
    with open(out / "null_profile.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["alpha_rad", "abs_array_factor"])
        for alpha, magnitude in scan:
            writer.writerow([repr(alpha), repr(magnitude)])

    series = [("|array factor|", scan)]
    if candidates:
        series.append(("candidates", [(a, 0.0) for a in candidates]))
    svg = line_chart(
        series,
        title="Interference array factor vs. rotation",
        xlabel="rotation alpha [rad]",
        ylabel="|array factor|",
    )
    (out / "null_profile.svg").write_text(svg, encoding="utf-8")
    print(f"wrote {out / 'null_profile.csv'} and {out / 'null_profile.svg'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
