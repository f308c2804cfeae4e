# -*- coding: utf-8 -*-
"""Defaults, tolerances and factories shared across the other modules of the
qkdleak package
"""

import os
from functools import lru_cache

__author__ = 'qkdleak developers'
__all__ = ['ALPHA', 'Y0', 'E0', 'E_DET', 'MU', 'F_EC', 'ETA_BOB',
           'HERMITIAN_TOL', 'TRACE_TOL', 'PSD_TOL', 'GRAM_TOL',
           'BISECT_XTOL', 'BISECT_MAXITER', 'ZERO_RATE', 'SERIES_TERMS',
           'DELTA_GRID', 'FIG2_TARGET_QBER', 'SWEEP_START', 'SWEEP_STOP',
           'SWEEP_STEP', 'CSV_DIGITS', 'CONFIG_PATH', 'config']

#: Fiber attenuation in dB/km
ALPHA = 0.2

#: Dark-count (vacuum) yield per pulse
Y0 = 1e-5

#: Error probability of a dark count. Dark-count bits are uniformly random
E0 = 0.5

#: Optical misalignment error of Bob's apparatus
E_DET = 0.01

#: Mean photon number of the signal pulses
MU = 0.5

#: Error-correction efficiency factor
F_EC = 1.0

#: Transmittance of Bob's receiver, absorbed into the channel by default
ETA_BOB = 1.0

#: Maximum deviation from hermiticity accepted for density and Gram matrices
HERMITIAN_TOL = 1e-12

#: Maximum deviation of a density matrix trace from one
TRACE_TOL = 1e-12

#: Eigenvalues in ``[-PSD_TOL, 0]`` count as numerical noise and are clamped
PSD_TOL = 1e-10

#: Tolerance used when comparing reconstructed Gram matrices
GRAM_TOL = 1e-10

#: Absolute x-tolerance of the binary entropy inversion
BISECT_XTOL = 1e-15

#: Iteration cap of the binary entropy inversion
BISECT_MAXITER = 200

#: Rates below this value count as zero key
ZERO_RATE = 1e-12

#: Number of Poisson terms used by series cross-checks
SERIES_TERMS = 50

#: Default basis-imbalance grid of the fig1/fig2 presets
DELTA_GRID = (0.001, 0.005, 0.01, 0.05)

#: Observed QBER the cloner is tuned to in the fig2 preset
FIG2_TARGET_QBER = 0.02

#: Default distance sweep in km
SWEEP_START = 0.0
SWEEP_STOP = 200.0
SWEEP_STEP = 1.0

#: Significant digits written to CSV output
CSV_DIGITS = 12

#: Default path of the scenario file read by the command line front end
CONFIG_PATH = os.path.join(os.path.expanduser('~'), '.qkdleak.cfg')


@lru_cache(maxsize=None)
def config():
    """Scenario configuration built from the module level defaults.

    Cached, so every caller sees the same instance.
    """
    from qkdleak.config import ScenarioConfig
    from qkdleak.decoy import ChannelParams

    return ScenarioConfig().update(
        channel=ChannelParams(alpha=ALPHA, eta_bob=ETA_BOB, y0=Y0, e0=E0,
                              e_det=E_DET, mu=MU, f=F_EC),
        start=SWEEP_START,
        stop=SWEEP_STOP,
        step=SWEEP_STEP,
    )
