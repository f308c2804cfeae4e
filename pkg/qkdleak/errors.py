# -*- coding: utf-8 -*-
"""All qkdleak related errors. Every rejected input raises a subclass of
:class:`QKDLeakException`; the command line front end turns them into a
message and a nonzero exit code.
"""

__author__ = 'qkdleak developers'
__all__ = [
    # Base Exception
    'QKDLeakException',

    # Rejected numerical inputs
    'InvalidInputException',
    'DimensionMismatchException',
    'NotHermitianException',
    'NotPositiveException',
    'NotUnitaryException',
    'VisibilityDomainException',
    'LeakageOrderException',
    'DegenerateChannelException',

    # Front end errors
    'ConfigException',
    'SweepException',
    'UnknownColumnException',
    'OutputException',
]


class QKDLeakException(Exception):
    """Base Exception type for qkdleak module"""

    exit_code = message = None

    def __init__(self, details=None):
        super().__init__(details)
        self.details = details

    def __str__(self):
        if self.details:
            return f'{self.message}: {self.details}'
        return self.message


class InvalidInputException(QKDLeakException):
    """Raised when an argument lies outside its documented range"""

    exit_code = 2
    message = 'Invalid input'


class DimensionMismatchException(InvalidInputException):
    """Raised when operand dimensions are incompatible"""

    exit_code = 3
    message = 'Dimension mismatch'


class NotHermitianException(InvalidInputException):
    """Raised when a matrix is expected to be Hermitian but is not"""

    exit_code = 4
    message = 'Matrix is not Hermitian'


class NotPositiveException(InvalidInputException):
    """Raised when a matrix is expected to be positive semidefinite"""

    exit_code = 5
    message = 'Matrix is not positive semidefinite'

    def __init__(self, details=None, min_eigenvalue=None):
        super().__init__(details)
        self.min_eigenvalue = min_eigenvalue


class NotUnitaryException(InvalidInputException):
    """Raised when a matrix is expected to be unitary but is not"""

    exit_code = 6
    message = 'Matrix is not unitary'


class VisibilityDomainException(InvalidInputException):
    """Raised when the visibility to imbalance mapping leaves its domain"""

    exit_code = 7
    message = 'Visibility outside the domain of the imbalance bound (v <= 0.5)'


class LeakageOrderException(InvalidInputException):
    """Raised when the side channel Holevo value is below the plain one"""

    exit_code = 8
    message = 'Side channel Holevo value must not be smaller than the plain one'


class DegenerateChannelException(InvalidInputException):
    """Raised when the single-photon yield vanishes"""

    exit_code = 9
    message = 'Degenerate channel - single-photon yield is zero'


class ConfigException(QKDLeakException):
    """Raised when a scenario configuration field is invalid"""

    exit_code = 10
    message = 'Invalid configuration'

    def __init__(self, field, details=None):
        super().__init__(details)
        self.field = field

    def __str__(self):
        return f'{self.message} [{self.field}]: {self.details}'


class SweepException(QKDLeakException):
    """Raised when a sweep point fails numerically"""

    exit_code = 11
    message = 'Sweep failed'

    def __init__(self, length, details=None):
        super().__init__(details)
        self.length = length

    def __str__(self):
        return f'{self.message} at L = {self.length:g} km: {self.details}'


class UnknownColumnException(QKDLeakException):
    """Raised when a sweep column name is not known"""

    exit_code = 12
    message = 'Unknown column'


class OutputException(QKDLeakException):
    """Raised when results cannot be written"""

    exit_code = 13
    message = 'Unable to write output'
