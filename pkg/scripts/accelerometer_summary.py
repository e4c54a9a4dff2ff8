#!/usr/bin/env python3
"""Summarize a matter-wave cavity accelerometer and its Airy lineshape.

Prints the locked comb line, scale factor, linewidth, and resolution
for a cavity locked on the drive frequency, then writes the Airy
transmission over a few linewidths so the discrimination slope is
visible.
"""

import argparse
import math
import sys

import numpy as np

from matterwave import (
    ParticleSpecies, Resonator, accel_resolution, accel_scale_factor,
    airy_transmission, effective_length, make_mode, nearest_mode,
    reflectance_for_finesse, resonance_frequency,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mass", type=float, default=1e-25, help="kg")
    ap.add_argument("--omega0-hz", type=float, default=1000.0)
    ap.add_argument("--vv", type=float, default=0.01, help="m/s")
    ap.add_argument("--length", type=float, default=0.01, help="m")
    ap.add_argument("--finesse", type=float, default=100.0)
    ap.add_argument("--points", type=int, default=201)
    ap.add_argument("--output", type=str, default=None)
    args = ap.parse_args()

    mode = make_mode(ParticleSpecies("particle", args.mass),
                     2.0 * math.pi * args.omega0_hz, velocity=args.vv)
    res = Resonator(mode, args.length, reflectance_for_finesse(args.finesse))
    N = nearest_mode(res, mode.omega0)
    kappa = accel_scale_factor(res, N)
    print("locked mode N        = %d" % N, file=sys.stderr)
    print("free spectral range  = %.6g rad/s" % res.fsr, file=sys.stderr)
    print("linewidth            = %.6g rad/s" % res.linewidth, file=sys.stderr)
    print("scale factor kappa   = %.6g rad s/m" % kappa, file=sys.stderr)
    print("resolution a_res     = %.6g m/s^2" % accel_resolution(res),
          file=sys.stderr)
    print("effective length at a_res: %.12g m (unaccelerated %.12g m)"
          % (effective_length(res, accel_resolution(res)),
             mode.n * res.length), file=sys.stderr)

    out = open(args.output, "w") if args.output else sys.stdout
    out.write("omega,detuning_linewidths,T_cav\n")
    center = resonance_frequency(res, N)
    span = 3.0 * res.linewidth
    for w in np.linspace(center - span, center + span, args.points):
        out.write("%.17g,%.17g,%.17g\n"
                  % (w, (w - center) / res.linewidth,
                     airy_transmission(res, float(w))))
    if args.output:
        out.close()


if __name__ == "__main__":
    main()
