# -*- coding: utf-8 -*-
"""Passive light-source side channel: four generally nonorthogonal states of
a non-operational degree of freedom, one per letter of the BB84 alphabet,
described by their Gram matrix.
"""

import logging
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy import linalg

from qkdleak.core import GRAM_TOL, HERMITIAN_TOL, PSD_TOL
from qkdleak.errors import (DimensionMismatchException, InvalidInputException,
                            NotHermitianException, NotPositiveException,
                            VisibilityDomainException)
from qkdleak.qmath import as_matrix, density_matrix, is_hermitian

__author__ = 'qkdleak developers'
__all__ = ['LETTERS', 'SideChannelGram', 'SideChannelStates', 'embed_states',
           'imbalance_from_gram', 'imbalance_uniform', 'hom_visibility',
           'imbalance_from_visibility', 'clamp_imbalance']

logger = logging.getLogger(__name__)

#: Order of the side channel states in a Gram matrix
LETTERS = ('0X', '1X', '0Y', '1Y')


def clamp_imbalance(delta):
    """Clamp a basis imbalance to [0, 0.5]"""
    return min(max(float(delta), 0.0), 0.5)


@dataclass(frozen=True, eq=False)
class SideChannelGram:
    """Inner products <i|j> of the side channel states in :data:`LETTERS`
    order
    """
    matrix: np.ndarray

    def __post_init__(self):
        g = as_matrix(self.matrix)
        if g.shape != (4, 4):
            raise DimensionMismatchException(f'Gram matrix must be 4x4, got {g.shape}')
        if not is_hermitian(g):
            raise NotHermitianException('Gram matrix')
        if not np.allclose(np.diag(g), 1, rtol=0, atol=HERMITIAN_TOL):
            raise InvalidInputException(
                f'Gram matrix diagonal must be 1, got {np.diag(g).real}')
        min_eigenvalue = float(linalg.eigvalsh(g)[0])
        if min_eigenvalue < -PSD_TOL:
            raise NotPositiveException(
                f'Gram matrix minimum eigenvalue {min_eigenvalue:.3e}',
                min_eigenvalue=min_eigenvalue)
        object.__setattr__(self, 'matrix', g)

    @classmethod
    def uniform(cls, s):
        """All six off-diagonal overlaps equal to *s*"""
        if not 0 <= s <= 1:
            raise InvalidInputException(f'overlap {s!r} outside [0, 1]')
        return cls(np.full((4, 4), s, dtype=complex) + (1 - s) * np.eye(4))

    @classmethod
    def from_imbalance(cls, delta):
        """Uniform Gram matrix whose basis imbalance is *delta*"""
        if not 0 <= delta <= 0.5:
            raise InvalidInputException(f'imbalance {delta!r} outside [0, 0.5]')
        return cls.uniform(1 - 2 * delta)

    @classmethod
    def from_pairs(cls, pairs):
        """Build from 16 ``(real, imaginary)`` pairs in row-major order"""
        pairs = list(pairs)
        if len(pairs) != 16:
            raise DimensionMismatchException(f'expected 16 entries, got {len(pairs)}')
        return cls(as_matrix([complex(re, im) for re, im in pairs], 4, 4))

    def overlap(self, a, b):
        """Inner product <a|b> for letters such as ``'0X'`` and ``'1Y'``"""
        return complex(self.matrix[LETTERS.index(a), LETTERS.index(b)])


class SideChannelStates(NamedTuple):
    zero_x: np.ndarray
    one_x: np.ndarray
    zero_y: np.ndarray
    one_y: np.ndarray

    def gram(self):
        """Gram matrix ``<s_i|s_j>`` of the four vectors"""
        s = np.vstack(self)
        return s.conj() @ s.T

    def pair(self, basis):
        """The bit 0 and bit 1 side channel states of *basis* (``'X'`` or ``'Y'``)"""
        if basis == 'X':
            return self.zero_x, self.one_x
        if basis == 'Y':
            return self.zero_y, self.one_y
        raise InvalidInputException(f'unknown basis {basis!r}')


def embed_states(gram):
    """Realize the side channel as four concrete 4-dimensional vectors whose
    pairwise inner products reproduce *gram*.

    Rows of a Cholesky factor ``G = L L^dagger`` (conjugated) are such
    vectors. Rank-deficient Gram matrices, e.g. identical states, fall back
    to an eigen-factorization.
    """
    g = gram.matrix
    try:
        factor = linalg.cholesky(g, lower=True)
    except linalg.LinAlgError:
        logger.debug('Gram matrix is singular, factorizing via eigh')
        values, vectors = linalg.eigh(g)
        factor = vectors * np.sqrt(np.clip(values, 0.0, None))
    states = SideChannelStates(*(row.conj() for row in factor))
    if not np.allclose(states.gram(), g, rtol=0, atol=GRAM_TOL):
        raise NotPositiveException('Gram matrix could not be embedded')
    return states


def imbalance_from_gram(gram):
    """Basis imbalance of the quantum coin,
    ``(4 - Re[sum of the four X/Y cross overlaps]) / 8``, clamped to [0, 0.5]
    """
    cross = sum(gram.overlap(x, y) for x in ('0X', '1X') for y in ('0Y', '1Y'))
    return clamp_imbalance((4 - cross.real) / 8)


def imbalance_uniform(s):
    """Basis imbalance ``(1 - s) / 2`` of a uniform overlap *s*"""
    if not 0 <= s <= 1:
        raise InvalidInputException(f'overlap {s!r} outside [0, 1]')
    return (1 - s) / 2


def hom_visibility(rho1, rho2):
    """Hong-Ou-Mandel visibility ``Tr[rho1 rho2]`` of two photons"""
    rho1, rho2 = density_matrix(rho1), density_matrix(rho2)
    if rho1.shape != rho2.shape:
        raise DimensionMismatchException(f'{rho1.shape} vs {rho2.shape}')
    return float(np.einsum('ij,ji->', rho1, rho2).real)


def imbalance_from_visibility(v, mu):
    """Upper bound on the basis imbalance of weak coherent pulses with mean
    photon number *mu* whose HOM visibility is *v*, taken with equality and
    clamped to [0, 0.5].

    The bound is defined for ``0 <= v <= 0.5`` only.
    """
    if v < 0:
        raise InvalidInputException(f'visibility {v!r} is negative')
    if mu <= 0:
        raise InvalidInputException(f'mean photon number {mu!r} must be positive')
    if v > 0.5:
        raise VisibilityDomainException(
            f'v = {v!r} gives exp(mu (sqrt(2v) - 1)) > 1, outside arccos range')
    t = math.exp(mu * (math.sqrt(2 * v) - 1))
    angle = 2 * math.acos((1 + t) / 2) + math.acos(t)
    return clamp_imbalance((1 - math.cos(angle)) / 2)
