# -*- coding: utf-8 -*-
"""Asymptotic decoy-state BB84 channel model and key rates.

Yields use the additive dark-count model ``Y_n = Y_0 + eta_n``, for which
the closed forms of the gain and QBER below are exact. Eavesdropping errors
are folded into the optical error ``e_det`` of Bob's apparatus.
"""

import logging
import math
import numbers
from dataclasses import dataclass, fields, replace
from typing import NamedTuple

from qkdleak.core import ALPHA, E0, E_DET, ETA_BOB, F_EC, MU, Y0
from qkdleak.errors import DegenerateChannelException, InvalidInputException
from qkdleak.qmath import binary_entropy

__author__ = 'qkdleak developers'
__all__ = ['ChannelParams', 'RatePoint', 'transmittance', 'eta_n', 'yield_n',
           'error_n', 'gain_qmu', 'qber_emu', 'single_photon_gain',
           'single_photon_error', 'key_rate_decoy', 'gllp_e1prime',
           'key_rate_gllp']

logger = logging.getLogger(__name__)

_PROBABILITIES = ('eta_bob', 'y0', 'e0', 'e_det')


@dataclass(frozen=True)
class ChannelParams:
    """Fiber link and detector configuration.

    :param alpha: fiber loss in dB/km
    :param length: link length in km
    :param eta_bob: transmittance of Bob's receiver
    :param y0: dark-count yield
    :param e0: error probability of a dark count
    :param e_det: optical misalignment error
    :param mu: mean photon number of the signal pulses
    :param f: error-correction efficiency factor
    """
    alpha: float = ALPHA
    length: float = 0.0
    eta_bob: float = ETA_BOB
    y0: float = Y0
    e0: float = E0
    e_det: float = E_DET
    mu: float = MU
    f: float = F_EC

    def __post_init__(self):
        for field in fields(self):
            value = getattr(self, field.name)
            if not isinstance(value, numbers.Real) or math.isnan(value):
                raise InvalidInputException(f'{field.name} = {value!r} is not a number')
        for name in _PROBABILITIES:
            if not 0 <= getattr(self, name) <= 1:
                raise InvalidInputException(f'{name} = {getattr(self, name)!r} outside [0, 1]')
        if self.alpha < 0:
            raise InvalidInputException(f'alpha = {self.alpha!r} is negative')
        if self.length < 0:
            raise InvalidInputException(f'length = {self.length!r} is negative')
        if self.mu <= 0:
            raise InvalidInputException(f'mu = {self.mu!r} must be positive')
        if self.f < 1:
            raise InvalidInputException(f'f = {self.f!r} must be at least 1')

    def at(self, length):
        """Copy of these parameters for a link of *length* km"""
        return replace(self, length=length)


class RatePoint(NamedTuple):
    length: float
    q_mu: float
    e_mu: float
    y1: float
    e1: float
    rate: float


def _check_attack(q):
    if not 0 <= q <= 0.5:
        raise InvalidInputException(f'attack error {q!r} outside [0, 0.5]')


def transmittance(p):
    """Overall transmittance ``10^(-alpha L / 10) eta_Bob``"""
    return 10 ** (-p.alpha * p.length / 10) * p.eta_bob


def eta_n(eta, n):
    """Probability that at least one of *n* photons is detected"""
    if n < 0:
        raise InvalidInputException(f'photon number {n!r} is negative')
    return 1 - (1 - eta) ** n


def yield_n(p, n):
    """Detection probability given an *n*-photon pulse"""
    return min(p.y0 + eta_n(transmittance(p), n), 1.0)


def error_n(p, n, q_attack=0.0):
    """Error rate of *n*-photon pulses, with *q_attack* added to the optical
    error
    """
    _check_attack(q_attack)
    return (p.e0 * p.y0 + (p.e_det + q_attack) * eta_n(transmittance(p), n)) / \
        yield_n(p, n)


def _detected(p):
    # 1 - exp(-eta mu)
    return -math.expm1(-transmittance(p) * p.mu)


def gain_qmu(p):
    """Detection probability of a signal pulse, ``Y_0 + 1 - exp(-eta mu)``"""
    return p.y0 + _detected(p)


def qber_emu(p, q_attack=0.0):
    """QBER of the signal pulses with the attack error *q_attack*"""
    _check_attack(q_attack)
    return (p.e0 * p.y0 + (p.e_det + q_attack) * _detected(p)) / gain_qmu(p)


def single_photon_gain(p):
    """``Q_1 = mu exp(-mu) Y_1``"""
    return p.mu * math.exp(-p.mu) * yield_n(p, 1)


def single_photon_error(p, q_attack=0.0):
    """Single-photon error rate with the attack error *q_attack*"""
    _check_attack(q_attack)
    y1 = yield_n(p, 1)
    if y1 == 0:
        raise DegenerateChannelException(f'L = {p.length!r} km')
    return (p.e0 * p.y0 + (p.e_det + q_attack) * transmittance(p)) / y1


def _rate_point(p, e1, e_mu):
    q_mu = gain_qmu(p)
    y1 = yield_n(p, 1)
    if e1 >= 0.5:
        rate = 0.0
    else:
        q1 = single_photon_gain(p)
        rate = max(0.0, (q1 * (1 - binary_entropy(e1)) -
                         p.f * q_mu * binary_entropy(min(e_mu, 0.5))) / 2)
    return RatePoint(length=p.length, q_mu=q_mu, e_mu=e_mu, y1=y1, e1=e1,
                     rate=rate)


def key_rate_decoy(p, q_attack_e1=0.0, q_attack_emu=0.0):
    """Secret key rate per pulse.

    :param q_attack_e1: attack error entering the single-photon error, the
        effective error when a side channel is present
    :param q_attack_emu: attack error entering the observed QBER
    """
    return _rate_point(p, single_photon_error(p, q_attack_e1),
                       qber_emu(p, q_attack_emu))


def gllp_e1prime(e1, delta, y1):
    """Single-photon phase error bound of the quantum-coin argument for a
    basis imbalance *delta*, saturating at 0.5.

    The imbalance is inflated to ``delta / y1`` since Eve may replace the
    lossy channel by a lossless one.
    """
    if not 0 <= e1 <= 0.5:
        raise InvalidInputException(f'e1 = {e1!r} outside [0, 0.5]')
    if not 0 <= delta <= 0.5:
        raise InvalidInputException(f'delta = {delta!r} outside [0, 0.5]')
    if not 0 < y1 <= 1:
        raise InvalidInputException(f'y1 = {y1!r} outside (0, 1]')
    d = min(delta / y1, 0.5)
    if d == 0.5:
        logger.debug('Inflated imbalance saturated for delta=%g y1=%g', delta, y1)
    e1_prime = e1 + 4 * (1 - d) * d * (1 - 2 * e1) + \
        4 * (1 - 2 * d) * math.sqrt(d * (1 - d) * e1 * (1 - e1))
    return min(max(e1_prime, 0.0), 0.5)


def key_rate_gllp(p, delta, q_attack_e1=0.0, q_attack_emu=0.0):
    """Secret key rate per pulse with the side channel handled by the
    quantum-coin imbalance *delta* instead of an explicit attack
    """
    e1 = single_photon_error(p, q_attack_e1)
    e1_prime = 0.5 if e1 >= 0.5 else gllp_e1prime(e1, delta, yield_n(p, 1))
    return _rate_point(p, e1_prime, qber_emu(p, q_attack_emu))
