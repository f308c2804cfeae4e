# -*- coding: utf-8 -*-
"""Collective attack on the operational degree of freedom: the optimal
phase-covariant cloner, Bob's resulting QBER, Eve's ancilla states and the
Holevo bounds on her information with and without the side channel.

Every joint state is ordered Bob (B) x Eve (E) x Eve (E').
"""

import logging
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from qkdleak.errors import (DimensionMismatchException, InvalidInputException,
                            NotUnitaryException)
from qkdleak.qmath import (density_matrix, expectation, is_unitary, ket2dm,
                           kron, partial_trace, state_vector, vn_entropy)

__author__ = 'qkdleak developers'
__all__ = ['ClonerSetting', 'AttackResult', 'basis_state', 'eta_for_qber',
           'cloner_isometry', 'cloner_images', 'clone', 'bob_qber',
           'eve_states', 'holevo', 'holevo_with_sidechannel', 'run_attack',
           'entangling_attack']

logger = logging.getLogger(__name__)

#: Subsystem dimensions of the cloner output
CLONER_DIMS = (2, 2, 2)

_SQRT_HALF = math.sqrt(0.5)

_BASIS_STATES = {
    ('Z', 0): (1, 0),
    ('Z', 1): (0, 1),
    ('X', 0): (_SQRT_HALF, _SQRT_HALF),
    ('X', 1): (_SQRT_HALF, -_SQRT_HALF),
    ('Y', 0): (_SQRT_HALF, 1j * _SQRT_HALF),
    ('Y', 1): (_SQRT_HALF, -1j * _SQRT_HALF),
}


def basis_state(bit, basis):
    """Qubit state encoding *bit* in *basis* (``'X'``, ``'Y'`` or ``'Z'``)"""
    try:
        return np.array(_BASIS_STATES[(basis, int(bit))], dtype=complex)
    except KeyError:
        raise InvalidInputException(f'no state for bit {bit!r} in basis {basis!r}')


@dataclass(frozen=True)
class ClonerSetting:
    """Cloning angle eta in [0, pi/2]. Zero leaves the signal untouched, pi/2
    hands Eve a perfect copy
    """
    eta: float

    def __post_init__(self):
        if not 0 <= self.eta <= math.pi / 2:
            raise InvalidInputException(f'cloning angle {self.eta!r} outside [0, pi/2]')

    @classmethod
    def from_qber(cls, q):
        """Setting that causes the QBER *q* on Bob's side"""
        return cls(eta_for_qber(q))


class AttackResult(NamedTuple):
    eta: float
    q_bob: float
    chi: float
    chi_delta: float


def eta_for_qber(q):
    """Invert ``q = (1 - cos(eta)) / 2``"""
    if not 0 <= q <= 0.5:
        raise InvalidInputException(f'QBER {q!r} outside [0, 0.5]')
    return math.acos(1 - 2 * q)


def cloner_isometry(setting):
    """The 8x2 isometry whose columns are the images of |0_z> and |1_z>"""
    c, s = math.cos(setting.eta), math.sin(setting.eta)
    isometry = np.zeros((8, 2), dtype=complex)
    # |b e e'> sits at index 4b + 2e + e'
    isometry[[0, 3, 5], 0] = 1, c, s
    isometry[[4, 2, 7], 1] = c, s, 1
    return isometry * _SQRT_HALF


def cloner_images(setting):
    """Images of |0_z>|0_z>|0_z> and |1_z>|0_z>|0_z> under the cloner"""
    isometry = cloner_isometry(setting)
    return isometry[:, 0], isometry[:, 1]


def clone(psi, setting):
    """Apply the cloner to the qubit state *psi*"""
    psi = state_vector(psi)
    if psi.shape != (2,):
        raise DimensionMismatchException(f'cloner input must be a qubit, got {psi.shape}')
    return cloner_isometry(setting) @ psi


def bob_qber(setting):
    """Error rate Bob observes on equatorial signals.

    Bob's share of the cloned |0_x> is projected on |1_x>.
    """
    rho_bob = partial_trace(ket2dm(clone(basis_state(0, 'X'), setting)),
                            CLONER_DIMS, {0})
    return expectation(rho_bob, ket2dm(basis_state(1, 'X')))


def eve_states(setting, bit, basis):
    """Eve's two-qubit ancilla state after cloning the letter (*bit*, *basis*)"""
    output = clone(basis_state(bit, basis), setting)
    return partial_trace(ket2dm(output), CLONER_DIMS, {1, 2})


def holevo(rho0, rho1):
    """Holevo value in bits of the equiprobable ensemble {rho0, rho1}"""
    rho0, rho1 = density_matrix(rho0), density_matrix(rho1)
    if rho0.shape != rho1.shape:
        raise DimensionMismatchException(f'{rho0.shape} vs {rho1.shape}')
    chi = vn_entropy((rho0 + rho1) / 2) - (vn_entropy(rho0) + vn_entropy(rho1)) / 2
    return max(chi, 0.0)


def holevo_with_sidechannel(rho0, rho1, sc, basis='X'):
    """Holevo value of Eve's joint ensemble ``rho_i (x) |i_basis><i_basis|``,
    the cloner ancilla together with the side channel state of the letter
    """
    s0, s1 = sc.pair(basis)
    return holevo(kron(rho0, ket2dm(s0)), kron(rho1, ket2dm(s1)))


def run_attack(setting, states=None, average_bases=False):
    """Evaluate the cloner against the side channel *states*.

    :param setting: :class:`ClonerSetting` of the cloner
    :param states: :class:`~qkdleak.sidechannel.SideChannelStates`, or
        `None` for a source without side channel
    :param average_bases: average the Holevo values of the X and Y bases
        instead of using the X basis only
    """
    bases = ('X', 'Y') if average_bases else ('X',)
    chis, chi_deltas = [], []
    for basis in bases:
        rho0 = eve_states(setting, 0, basis)
        rho1 = eve_states(setting, 1, basis)
        chi = holevo(rho0, rho1)
        chis.append(chi)
        if states is None:
            chi_deltas.append(chi)
        else:
            chi_deltas.append(holevo_with_sidechannel(rho0, rho1, states, basis))

    result = AttackResult(eta=setting.eta, q_bob=bob_qber(setting),
                          chi=float(np.mean(chis)),
                          chi_delta=float(np.mean(chi_deltas)))
    logger.debug('attack eta=%.6f: %s', setting.eta, result)
    return result


def entangling_attack(psi0, v, p):
    """Attack that entangles the signal with a two-level probe,
    ``sqrt(1-p)|psi0>|0_E> + sqrt(p) V|psi0>|1_E>``.

    :return: the joint signal-probe state and Bob's reduced state
        ``(1-p)|psi0><psi0| + p V|psi0><psi0|V^dagger``
    """
    psi0 = state_vector(psi0)
    v = np.asarray(v, dtype=complex)
    if v.shape != (psi0.size, psi0.size):
        raise DimensionMismatchException(f'{v.shape} vs state of dim {psi0.size}')
    if not is_unitary(v):
        raise NotUnitaryException('attack map')
    if not 0 <= p <= 1:
        raise InvalidInputException(f'attack strength {p!r} outside [0, 1]')
    joint = math.sqrt(1 - p) * kron(psi0, basis_state(0, 'Z')) + \
        math.sqrt(p) * kron(v @ psi0, basis_state(1, 'Z'))
    return joint, partial_trace(ket2dm(joint), [psi0.size, 2], {0})
