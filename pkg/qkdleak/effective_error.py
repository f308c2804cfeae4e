# -*- coding: utf-8 -*-
"""Effective error: the extra information a side channel hands to Eve,
``chi_delta - chi``, re-expressed as a larger error rate on Bob's side so
that the usual security analysis can consume it.

The asymptotic rate is written two ways::

    1 - h2(q_bob) - chi_delta = 1 - h2(q_bob_delta) - chi

and solved for ``q_bob_delta``.
"""

import logging
import math
from typing import NamedTuple, Optional

from scipy import optimize

from qkdleak.attack import ClonerSetting, run_attack
from qkdleak.core import PSD_TOL
from qkdleak.errors import InvalidInputException, LeakageOrderException
from qkdleak.qmath import binary_entropy, inv_binary_entropy
from qkdleak.sidechannel import embed_states

__author__ = 'qkdleak developers'
__all__ = ['EffectiveErrorResult', 'effective_qber', 'attack_pipeline',
           'critical_setting']

logger = logging.getLogger(__name__)


class EffectiveErrorResult(NamedTuple):
    q_bob: float
    q_bob_delta: float
    #: may be negative, floored only when the key rate is reported
    r_delta: float
    chi: Optional[float] = None
    chi_delta: Optional[float] = None
    eta: Optional[float] = None


def effective_qber(q_bob, chi, chi_delta):
    """Bob's effective error given the plain (*chi*) and side channel
    (*chi_delta*) Holevo values of Eve.

    When ``h2(q_bob) + chi_delta - chi`` exceeds one the equation has no
    solution; the protocol is fully compromised and the effective error
    saturates at 0.5.
    """
    if not 0 <= q_bob <= 0.5:
        raise InvalidInputException(f'QBER {q_bob!r} outside [0, 0.5]')
    if chi < 0:
        raise InvalidInputException(f'Holevo value {chi!r} is negative')
    if chi_delta < chi - PSD_TOL:
        raise LeakageOrderException(f'chi_delta={chi_delta!r} < chi={chi!r}')

    h_bob = binary_entropy(q_bob)
    excess = chi_delta - chi
    if excess <= 0:
        q_bob_delta = q_bob
    elif h_bob + excess >= 1:
        logger.warning('Effective error saturated: h2(Q)+chi_delta-chi = %.6f',
                       h_bob + excess)
        q_bob_delta = 0.5
    else:
        q_bob_delta = max(inv_binary_entropy(h_bob + excess), q_bob)
    return EffectiveErrorResult(
        q_bob=q_bob,
        q_bob_delta=q_bob_delta,
        r_delta=1 - h_bob - chi_delta,
        chi=chi,
        chi_delta=chi_delta,
    )


def attack_pipeline(setting, gram=None, average_bases=False):
    """Effective error of a cloner attack combined with a joint measurement
    of the side channel described by *gram*.

    :param setting: :class:`~qkdleak.attack.ClonerSetting`
    :param gram: :class:`~qkdleak.sidechannel.SideChannelGram`, `None` for
        no side channel
    :param average_bases: see :func:`~qkdleak.attack.run_attack`
    """
    states = embed_states(gram) if gram is not None else None
    attack = run_attack(setting, states, average_bases=average_bases)
    q_bob = min(max(attack.q_bob, 0.0), 0.5)
    result = effective_qber(q_bob, attack.chi, attack.chi_delta)
    return result._replace(eta=setting.eta)


def critical_setting(gram=None, average_bases=False):
    """Strongest cloner that still leaves a non-negative asymptotic rate,
    the root of ``1 - h2(q_bob) - chi_delta`` in the cloning angle.

    Without a side channel the root sits at a QBER of about 0.11.
    """
    def rate(eta):
        return attack_pipeline(ClonerSetting(eta), gram, average_bases).r_delta

    upper = math.pi / 2
    if rate(0.0) <= 0:
        logger.info('Side channel alone leaves no key, critical angle is 0')
        return ClonerSetting(0.0)
    if rate(upper) >= 0:
        return ClonerSetting(upper)
    return ClonerSetting(optimize.brentq(rate, 0.0, upper, xtol=1e-12))
