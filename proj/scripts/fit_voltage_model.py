# Copyright simonbench contributors.
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0
"""Fit the three free constants of the energy-vs-supply model.

The model (mirrored by the C++ implementation):

    E(v)   = e_dyn * (v/V_NOM)^2  +  e_dyn * leak_ratio * (v/V_NOM) * R(v)
    R(v)   = relative cycle time, alpha-power law above 0.5 V and an
             exponential sub-threshold slope below, continuous at the seam

Fitted so that the curve reaches E(V_NOM) = 0.99 pJ/b at the 0.9 V silicon
operating point and bottoms out at 0.104 pJ/b at 225 mV, the reported
minimum-energy point of the measured design. Run from the repo root:

    python3 scripts/fit_voltage_model.py

and paste the printed constants into include/cost/voltage.hpp and
data/calibration/default.json if the targets ever change.
"""

import math

from scipy.optimize import brentq

V_NOM = 0.9
V_TH = 0.35
V_SPLIT = 0.5
ALPHA = 1.3

E_NOM_TARGET = 0.99  # pJ/b at V_NOM
V_MEP_TARGET = 0.225  # volts
E_MEP_TARGET = 0.104  # pJ/b


def alpha_delay(v):
    return v / (v - V_TH) ** ALPHA


def rel_cycle_time(v, slope):
    at_nom = alpha_delay(V_NOM)
    if v >= V_SPLIT:
        return alpha_delay(v) / at_nom
    seam = alpha_delay(V_SPLIT) / at_nom
    return seam * math.exp((V_SPLIT - v) / slope)


def energy(v, e_dyn, leak_ratio, slope):
    s = v / V_NOM
    return e_dyn * s * s + e_dyn * leak_ratio * s * rel_cycle_time(v, slope)


def fit_for_slope(slope):
    """leak_ratio placing the minimum exactly at V_MEP_TARGET, e_dyn scaling
    the nominal point to E_NOM_TARGET. dE/dv = 0 divides through by e_dyn, so
    the two solves are independent; in the sub-threshold region the
    stationarity condition solves in closed form:

        0 = 2 v / V_NOM^2 + leak_ratio * (R(v)/V_NOM) * (1 - v/slope)
    """
    v = V_MEP_TARGET
    assert slope < v, "minimum only exists for slopes below the target"
    leak_ratio = (2 * v / V_NOM) / (rel_cycle_time(v, slope) * (v / slope - 1))
    e_dyn = E_NOM_TARGET / energy(V_NOM, 1.0, leak_ratio, slope)
    return e_dyn, leak_ratio


def mep_energy(slope):
    e_dyn, leak_ratio = fit_for_slope(slope)
    return energy(V_MEP_TARGET, e_dyn, leak_ratio, slope)


def main():
    # the leakage derivative at the target only changes sign for slopes
    # below V_MEP_TARGET, so the bracket stays under it
    slope = brentq(lambda s: mep_energy(s) - E_MEP_TARGET, 0.01, 0.2, xtol=1e-15)
    e_dyn, leak_ratio = fit_for_slope(slope)

    print(f"subvt_slope_v  = {slope:.9f}")
    print(f"e_dyn_nom      = {e_dyn:.17g}")
    print(f"leak_ratio_nom = {leak_ratio:.17g}")
    print(f"E({V_NOM}) = {energy(V_NOM, e_dyn, leak_ratio, slope):.9f}")

    vs = [0.15 + i * 1e-4 for i in range(int((1.0 - 0.15) / 1e-4) + 1)]
    es = [energy(v, e_dyn, leak_ratio, slope) for v in vs]
    i = min(range(len(es)), key=es.__getitem__)
    print(f"argmin = {vs[i]:.4f} V, E* = {es[i]:.6f} pJ/b, "
          f"E*/E_nom = {es[i] / energy(V_NOM, e_dyn, leak_ratio, slope):.6f}")


if __name__ == "__main__":
    main()
