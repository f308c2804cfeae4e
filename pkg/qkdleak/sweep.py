# -*- coding: utf-8 -*-
"""Distance sweeps of the key rate, CSV output and the scenario presets that
regenerate the published figures as data
"""

import csv
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import NamedTuple, Optional

import numpy as np

from qkdleak.config import ScenarioConfig
from qkdleak.core import (CSV_DIGITS, DELTA_GRID, FIG2_TARGET_QBER, MU,
                          ZERO_RATE)
from qkdleak.decoy import key_rate_decoy, key_rate_gllp
from qkdleak.effective_error import attack_pipeline
from qkdleak.errors import (InvalidInputException, OutputException,
                            QKDLeakException, SweepException,
                            UnknownColumnException)
from qkdleak.sidechannel import imbalance_from_visibility

__author__ = 'qkdleak developers'
__all__ = ['SweepRow', 'COLUMNS', 'RATE_COLUMNS', 'PRESETS', 'FIG3_COLUMNS',
           'sweep_lengths', 'run_sweep', 'zero_key_distance', 'emit_csv',
           'read_csv', 'fig3_table', 'preset', 'scenario_path']

logger = logging.getLogger(__name__)


class SweepRow(NamedTuple):
    length: float
    rate_reference: float
    rate_effective_error: Optional[float]
    rate_gllp: Optional[float]
    q_bob: float
    q_bob_delta: float
    chi: float
    chi_delta: float
    e1: float
    e_mu: float


#: CSV header of a sweep
COLUMNS = SweepRow._fields

#: Columns :func:`zero_key_distance` accepts
RATE_COLUMNS = ('rate_reference', 'rate_effective_error', 'rate_gllp')

#: CSV header of the visibility table
FIG3_COLUMNS = ('visibility', 'delta')

#: Names of the built-in scenarios
PRESETS = ('fig1', 'fig2', 'fig3')

#: Number of visibility points of the fig3 preset
FIG3_POINTS = 50


def sweep_lengths(config):
    """Link lengths from ``sweep.start`` to ``sweep.stop`` inclusive"""
    count = int(math.floor((config.stop - config.start) / config.step + 1e-9))
    return [config.start + i * config.step for i in range(count + 1)]


def run_sweep(config):
    """Evaluate the configured scenario at every sweep length.

    The attack does not depend on the link, so it is evaluated once; the
    rates of independent lengths run on ``run.workers`` threads. Rows are
    returned in ascending length.
    """
    config.validate()
    gram = config.sidechannel_gram()
    setting = config.cloner_setting()
    effective = attack_pipeline(setting, gram, config.average_bases)
    delta = config.imbalance()
    q_emu = effective.q_bob_delta if config.conservative_emu else effective.q_bob
    with_efer = config.method in ('efer', 'both')
    with_gllp = config.method in ('gllp', 'both')
    logger.info('Sweep %s: eta=%.6f q_bob=%.6g q_bob_delta=%.6g delta=%.6g',
                config.name or 'scenario', setting.eta, effective.q_bob,
                effective.q_bob_delta, delta)

    def row(length):
        p = config.channel.at(length)
        try:
            reference = key_rate_decoy(p)
            efer = key_rate_decoy(p, effective.q_bob_delta, q_emu) if with_efer else None
            gllp = key_rate_gllp(p, delta, effective.q_bob, effective.q_bob) \
                if with_gllp else None
        except QKDLeakException as e:
            raise SweepException(length, str(e))
        point = efer or gllp
        logger.debug('L=%g reference=%.6g efer=%s gllp=%s', length, reference.rate,
                     efer and efer.rate, gllp and gllp.rate)
        return SweepRow(
            length=length,
            rate_reference=reference.rate,
            rate_effective_error=efer.rate if efer else None,
            rate_gllp=gllp.rate if gllp else None,
            q_bob=effective.q_bob,
            q_bob_delta=effective.q_bob_delta,
            chi=effective.chi,
            chi_delta=effective.chi_delta,
            e1=point.e1,
            e_mu=point.e_mu,
        )

    lengths = sweep_lengths(config)
    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as executor:
            return list(executor.map(row, lengths))
    return [row(length) for length in lengths]


def zero_key_distance(rows, column):
    """Shortest length at which *column* drops below ``ZERO_RATE``,
    interpolated linearly between the bracketing rows.

    :return: distance in km, or `None` if the rate never vanishes
    """
    if column not in RATE_COLUMNS:
        raise UnknownColumnException(column)
    if not rows:
        raise InvalidInputException('no sweep rows')

    previous = None
    for row in rows:
        rate = getattr(row, column)
        if rate is None:
            raise InvalidInputException(f'column {column} was not computed')
        if rate < ZERO_RATE:
            if previous is None:
                return row.length
            prev_rate = getattr(previous, column)
            fraction = (prev_rate - ZERO_RATE) / (prev_rate - rate)
            return previous.length + fraction * (row.length - previous.length)
        previous = row
    return None


def _format(value):
    if value is None:
        return ''
    return format(value, f'.{CSV_DIGITS}g')


def emit_csv(rows, path, header=COLUMNS):
    """Write *rows* as CSV to *path*, empty cells for missing values"""
    try:
        with open(path, 'w', newline='') as csv_file:
            writer = csv.writer(csv_file, lineterminator='\n')
            writer.writerow(header)
            for row in rows:
                writer.writerow([_format(value) for value in row])
    except OSError as e:
        raise OutputException(f'{path}: {e.strerror or e}')
    logger.info('Wrote %s', path)


def read_csv(path):
    """Parse a sweep written by :func:`emit_csv`"""
    with open(path, newline='') as csv_file:
        return [SweepRow(**{k: float(v) if v != '' else None for k, v in line.items()})
                for line in csv.DictReader(csv_file)]


def fig3_table(mu=MU, grid=None):
    """Basis imbalance against HOM visibility for pulses of mean photon
    number *mu*

    :param grid: visibilities, by default ``FIG3_POINTS`` points on [0, 0.5]
    """
    if grid is None:
        grid = np.linspace(0.0, 0.5, FIG3_POINTS)
    return [(float(v), imbalance_from_visibility(float(v), mu)) for v in grid]


def preset(name, channel=None):
    """Scenarios of a built-in preset, one per imbalance of ``DELTA_GRID``.

    ``fig1`` attacks the side channel only, ``fig2`` adds a cloner tuned to
    ``FIG2_TARGET_QBER``.
    """
    if name not in ('fig1', 'fig2'):
        raise InvalidInputException(f'no sweep preset named {name!r}')
    scenarios = []
    for delta in DELTA_GRID:
        config = ScenarioConfig(delta=delta, name=f'delta{delta:g}')
        if name == 'fig2':
            config.update(cloner_eta='optimal', target_qber=FIG2_TARGET_QBER)
        if channel is not None:
            config.channel = channel
        scenarios.append(config.validate())
    return scenarios


def scenario_path(path, name):
    """``fig1.csv`` -> ``fig1_delta0.01.csv`` for the scenario *name*"""
    path = Path(path)
    return path.with_name(f'{path.stem}_{name}{path.suffix or ".csv"}')
