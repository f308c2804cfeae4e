# -*- coding: utf-8 -*-
"""unit tests to define behavior of custom exception types"""
import pytest

from qkdleak.errors import (ConfigException, DegenerateChannelException,
                            DimensionMismatchException, InvalidInputException,
                            LeakageOrderException, NotHermitianException,
                            NotPositiveException, NotUnitaryException,
                            OutputException, QKDLeakException, SweepException,
                            UnknownColumnException, VisibilityDomainException)


def test_qkdleak_exception():
    exc = QKDLeakException()
    assert exc.exit_code is None
    assert exc.message is None
    assert exc.details is None


def test_invalid_input_exception():
    exc = InvalidInputException()
    assert exc.exit_code == 2
    assert exc.message == 'Invalid input'
    assert str(exc) == exc.message


def test_details_appended():
    exc = InvalidInputException('q = 0.7')
    assert str(exc) == 'Invalid input: q = 0.7'


@pytest.mark.parametrize('cls, code, message', [
    (DimensionMismatchException, 3, 'Dimension mismatch'),
    (NotHermitianException, 4, 'Matrix is not Hermitian'),
    (NotPositiveException, 5, 'Matrix is not positive semidefinite'),
    (NotUnitaryException, 6, 'Matrix is not unitary'),
    (VisibilityDomainException, 7,
     'Visibility outside the domain of the imbalance bound (v <= 0.5)'),
    (LeakageOrderException, 8,
     'Side channel Holevo value must not be smaller than the plain one'),
    (DegenerateChannelException, 9,
     'Degenerate channel - single-photon yield is zero'),
])
def test_numerical_exceptions(cls, code, message):
    exc = cls()
    assert isinstance(exc, InvalidInputException)
    assert exc.exit_code == code
    assert exc.message == message
    assert str(exc) == message


def test_not_positive_carries_eigenvalue():
    exc = NotPositiveException('Gram matrix', min_eigenvalue=-0.25)
    assert exc.min_eigenvalue == -0.25
    assert str(exc) == 'Matrix is not positive semidefinite: Gram matrix'


def test_config_exception():
    exc = ConfigException('sweep.step', '-1 must be positive')
    assert exc.exit_code == 10
    assert exc.field == 'sweep.step'
    assert str(exc) == 'Invalid configuration [sweep.step]: -1 must be positive'


def test_sweep_exception():
    exc = SweepException(12.5, 'boom')
    assert exc.exit_code == 11
    assert exc.length == 12.5
    assert str(exc) == 'Sweep failed at L = 12.5 km: boom'


def test_unknown_column_exception():
    exc = UnknownColumnException('rate_foo')
    assert exc.exit_code == 12
    assert str(exc) == 'Unknown column: rate_foo'


def test_output_exception():
    exc = OutputException()
    assert exc.exit_code == 13
    assert exc.message == 'Unable to write output'
    assert not isinstance(exc, InvalidInputException)
