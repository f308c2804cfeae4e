# -*- coding: utf-8 -*-
"""Dense complex linear algebra and entropy kernel for the small Hilbert
spaces (dimension at most 16) used by the attack model.

Matrices and state vectors are plain :class:`numpy.ndarray` objects of
``complex128``; the constructors below validate them.
"""

import math
from functools import reduce

import numpy as np
from scipy import linalg, optimize, special

from qkdleak.core import (BISECT_MAXITER, BISECT_XTOL, HERMITIAN_TOL,
                          PSD_TOL, TRACE_TOL)
from qkdleak.errors import (DimensionMismatchException, InvalidInputException,
                            NotHermitianException, NotPositiveException,
                            NotUnitaryException)

__author__ = 'qkdleak developers'
__all__ = ['ComplexMatrix', 'StateVector', 'DensityMatrix', 'as_matrix',
           'state_vector', 'density_matrix', 'ket2dm', 'is_hermitian',
           'is_unitary', 'kron', 'partial_trace', 'eigenvalues',
           'vn_entropy', 'binary_entropy', 'inv_binary_entropy',
           'expectation', 'effective_povm']

ComplexMatrix = np.ndarray
StateVector = np.ndarray
DensityMatrix = np.ndarray

_LN2 = math.log(2)


def as_matrix(entries, rows=None, cols=None):
    """Build a complex matrix from nested sequences or from a flat row-major
    sequence of ``rows * cols`` entries
    """
    m = np.asarray(entries, dtype=complex)
    if rows is not None or cols is not None:
        if rows is None or cols is None or m.size != rows * cols:
            raise DimensionMismatchException(
                f'{m.size} entries cannot fill a {rows}x{cols} matrix')
        m = m.reshape(rows, cols)
    if m.ndim != 2:
        raise DimensionMismatchException(f'expected a matrix, got shape {m.shape}')
    return m


def state_vector(amplitudes, normalize=False):
    """Build a unit-norm state vector.

    :param amplitudes: complex amplitudes
    :param normalize: rescale instead of rejecting a non-normalized input
    """
    psi = np.asarray(amplitudes, dtype=complex).reshape(-1)
    norm = np.linalg.norm(psi)
    if norm == 0:
        raise InvalidInputException('zero vector is not a state')
    if normalize:
        return psi / norm
    if abs(norm ** 2 - 1) > HERMITIAN_TOL:
        raise InvalidInputException(f'squared norm {norm ** 2!r} differs from 1')
    return psi


def ket2dm(psi):
    """Projector onto the state vector *psi*"""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    return np.outer(psi, psi.conj())


def is_hermitian(m, tol=HERMITIAN_TOL):
    m = np.asarray(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and \
        np.allclose(m, m.conj().T, rtol=0, atol=tol)


def is_unitary(m, tol=1e-10):
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return np.allclose(m.conj().T @ m, np.eye(m.shape[0]), rtol=0, atol=tol)


def eigenvalues(m):
    """Ascending eigenvalues of a Hermitian matrix, with noise in
    ``[-PSD_TOL, 0]`` clamped to zero.

    :raises NotHermitianException: if *m* is not Hermitian
    :raises NotPositiveException: if an eigenvalue is below ``-PSD_TOL``
    """
    if not is_hermitian(m):
        raise NotHermitianException()
    values = linalg.eigvalsh(m)
    if values[0] < -PSD_TOL:
        raise NotPositiveException(f'minimum eigenvalue {values[0]:.3e}',
                                   min_eigenvalue=float(values[0]))
    return np.clip(values, 0.0, None)


def density_matrix(m):
    """Validate *m* as a density matrix: Hermitian, unit trace and positive
    semidefinite
    """
    rho = as_matrix(m)
    eigenvalues(rho)
    trace = np.trace(rho).real
    if abs(trace - 1) > TRACE_TOL:
        raise InvalidInputException(f'trace {trace!r} differs from 1')
    return rho


def kron(a, b):
    """Tensor product of two matrices (or vectors)"""
    return np.kron(a, b)


def partial_trace(rho, dims, keep):
    """Reduced state of *rho* on the subsystems listed in *keep*.

    :param rho: density matrix on the product space of *dims*
    :param dims: dimension of every subsystem, in tensor order
    :param keep: indices of the subsystems to keep; the result keeps their
        tensor order
    """
    rho = density_matrix(rho)
    dims = [int(d) for d in dims]
    if reduce(lambda x, y: x * y, dims, 1) != rho.shape[0]:
        raise DimensionMismatchException(
            f'subsystem dims {dims} do not match a {rho.shape[0]}-dim state')
    keep = set(keep)
    if not keep <= set(range(len(dims))):
        raise DimensionMismatchException(f'no subsystems {sorted(keep)} in {dims}')

    n = len(dims)
    reduced = rho.reshape(dims + dims)
    for index in sorted(set(range(len(dims))) - keep, reverse=True):
        reduced = np.trace(reduced, axis1=index, axis2=index + n)
        n -= 1
    kept = int(np.prod([dims[i] for i in sorted(keep)]))
    return reduced.reshape(kept, kept)


def vn_entropy(rho):
    """Von Neumann entropy in bits, ``-sum(l * log2(l))`` over the eigenvalues
    of *rho* with ``0 log 0 = 0``
    """
    values = eigenvalues(density_matrix(rho))
    return float(np.sum(special.entr(values)) / _LN2)


def binary_entropy(q):
    """Binary Shannon entropy h2(q) in bits"""
    if not 0 <= q <= 1:
        raise InvalidInputException(f'probability {q!r} outside [0, 1]')
    if q == 0 or q == 1:
        return 0.0
    return float((special.entr(q) + special.entr(1 - q)) / _LN2)


def inv_binary_entropy(y):
    """The unique q in [0, 0.5] with h2(q) = y, found by bisection"""
    if not 0 <= y <= 1:
        raise InvalidInputException(f'entropy {y!r} outside [0, 1]')
    if y == 0:
        return 0.0
    if y == 1:
        return 0.5
    return optimize.bisect(lambda q: binary_entropy(q) - y, 0.0, 0.5,
                           xtol=BISECT_XTOL, maxiter=BISECT_MAXITER)


def expectation(rho, m):
    """Expectation value Tr[rho M] of the Hermitian observable *m*"""
    rho, m = as_matrix(rho), as_matrix(m)
    if rho.shape != m.shape:
        raise DimensionMismatchException(f'{rho.shape} vs {m.shape}')
    if not is_hermitian(m):
        raise NotHermitianException('observable')
    return float(np.einsum('ij,ji->', rho, m).real)


def effective_povm(m, v, eta):
    """Measurement operator that folds a state error into the device:
    ``(1 - eta) M + eta V^dagger M V``.

    Measuring a state ``(1 - eta)|psi><psi| + eta V|psi><psi|V^dagger`` with
    *m* gives the same statistics as measuring ``|psi><psi|`` with the
    returned operator.
    """
    m, v = as_matrix(m), as_matrix(v)
    if m.shape != v.shape:
        raise DimensionMismatchException(f'{m.shape} vs {v.shape}')
    if not is_hermitian(m):
        raise NotHermitianException('measurement operator')
    if not is_unitary(v):
        raise NotUnitaryException()
    if not 0 <= eta <= 1:
        raise InvalidInputException(f'eta {eta!r} outside [0, 1]')
    return (1 - eta) * m + eta * (v.conj().T @ m @ v)
