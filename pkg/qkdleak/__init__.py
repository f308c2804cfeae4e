# -*- coding: utf-8 -*-
"""Secret-key rates for decoy-state BB84 with a passive source side channel"""

try:
    from qkdleak.core import *  # NOQA
except ImportError:
    pass

from .__version__ import __version__

__author__ = 'qkdleak developers'
