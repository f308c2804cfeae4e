"""Scenario configuration for distance sweeps"""

__author__ = 'qkdleak developers'

import configparser
import logging
import math
from dataclasses import dataclass, field, replace
from typing import Optional, Union

import numpy as np

from qkdleak.core import SWEEP_START, SWEEP_STEP, SWEEP_STOP
from qkdleak.decoy import ChannelParams
from qkdleak.errors import ConfigException, QKDLeakException
from qkdleak.sidechannel import (SideChannelGram, imbalance_from_gram,
                                 imbalance_from_visibility)

logger = logging.getLogger(__name__)

#: Accepted values of the ``method`` key
METHODS = ('efer', 'gllp', 'both')

#: Mutually exclusive side channel descriptions
SIDECHANNEL_MODELS = ('overlap', 'delta', 'gram', 'visibility')

_SECTION = 'scenario'


def _parse_bool(value):
    if isinstance(value, bool):
        return value
    try:
        return configparser.ConfigParser.BOOLEAN_STATES[str(value).strip().lower()]
    except KeyError:
        raise ValueError(f'not a boolean: {value!r}')


def _parse_eta(value):
    if isinstance(value, str) and value.strip().lower() == 'optimal':
        return 'optimal'
    return float(value)


def _parse_method(value):
    value = str(value).strip().lower()
    if value not in METHODS:
        raise ValueError(f'expected one of {", ".join(METHODS)}')
    return value


def _parse_gram(value):
    if isinstance(value, SideChannelGram):
        return value
    pairs = []
    for item in str(value).split(','):
        re, _, im = item.strip().partition(':')
        pairs.append((float(re), float(im or 0)))
    return SideChannelGram.from_pairs(pairs)


def _format_gram(gram):
    return ', '.join(f'{float(z.real)!r}:{float(z.imag)!r}'
                     for z in gram.matrix.reshape(-1))


def _optional(parse):
    def inner(value):
        if value is None or (isinstance(value, str) and not value.strip()):
            return None
        return parse(value)
    return inner


#: Dotted configuration key -> (attribute, parser). ``channel.*`` keys are
#: fields of :class:`~qkdleak.decoy.ChannelParams`
KEYS = {
    'channel.alpha': ('alpha', float),
    'channel.eta_bob': ('eta_bob', float),
    'channel.y0': ('y0', float),
    'channel.e0': ('e0', float),
    'channel.e_det': ('e_det', float),
    'channel.mu': ('mu', float),
    'channel.f': ('f', float),
    'cloner.eta': ('cloner_eta', _parse_eta),
    'cloner.target_qber': ('target_qber', _optional(float)),
    'cloner.average_bases': ('average_bases', _parse_bool),
    'sidechannel.overlap': ('overlap', _optional(float)),
    'sidechannel.delta': ('delta', _optional(float)),
    'sidechannel.gram': ('gram', _optional(_parse_gram)),
    'sidechannel.visibility': ('visibility', _optional(float)),
    'sidechannel.visibility_mu': ('visibility_mu', _optional(float)),
    'method': ('method', _parse_method),
    'decoy.conservative_emu': ('conservative_emu', _parse_bool),
    'sweep.start': ('start', float),
    'sweep.stop': ('stop', float),
    'sweep.step': ('step', float),
    'run.workers': ('workers', int),
    'output': ('output', _optional(str)),
}


@dataclass
class ScenarioConfig:
    channel: ChannelParams = field(default_factory=ChannelParams)
    cloner_eta: Union[float, str] = 0.0
    target_qber: Optional[float] = None
    average_bases: bool = False
    overlap: Optional[float] = None
    delta: Optional[float] = None
    gram: Optional[SideChannelGram] = None
    visibility: Optional[float] = None
    visibility_mu: Optional[float] = None
    method: str = 'both'
    conservative_emu: bool = False
    start: float = SWEEP_START
    stop: float = SWEEP_STOP
    step: float = SWEEP_STEP
    workers: int = 1
    output: Optional[str] = None
    name: Optional[str] = None

    def get(self, key, default=None):
        """Value of the dotted configuration *key*"""
        if key not in KEYS:
            return default
        attribute, _ = KEYS[key]
        if key.startswith('channel.'):
            return getattr(self.channel, attribute)
        return getattr(self, attribute)

    def set(self, key, value):
        """Parse *value* and assign it to the dotted configuration *key*

        :raises ConfigException: for unknown keys and unparsable values
        """
        if key not in KEYS:
            raise ConfigException(key, 'unknown key')
        attribute, parse = KEYS[key]
        try:
            value = parse(value)
            if key.startswith('channel.'):
                self.channel = replace(self.channel, **{attribute: value})
            else:
                setattr(self, attribute, value)
        except (ValueError, TypeError, QKDLeakException) as e:
            raise ConfigException(key, str(e))

    def update(self, **kwargs):
        for name, value in kwargs.items():
            self.__setattr__(name, value)

        return self

    def all(self):
        """All dotted keys with their current values"""
        return {key: self.get(key) for key in KEYS}

    def load(self, config_path):
        """Read the dotted ``key = value`` file at *config_path*; keys not
        present keep their current value
        """
        parser = configparser.ConfigParser(interpolation=None)
        try:
            with open(config_path) as config_file:
                parser.read_string(f'[{_SECTION}]\n' + config_file.read(),
                                   source=str(config_path))
        except OSError as e:
            raise ConfigException(str(config_path), e.strerror or str(e))
        except configparser.Error as e:
            raise ConfigException(str(config_path), str(e))

        for key, value in parser.items(_SECTION):
            self.set(key, value)
        logger.debug('Loaded scenario from %s', config_path)

        return self.validate()

    def store(self, config_path):
        """Write every key to *config_path* in the format :meth:`load` reads"""
        lines = []
        for key, value in self.all().items():
            if value is None:
                continue
            if key == 'sidechannel.gram':
                value = _format_gram(value)
            elif isinstance(value, (float, np.floating)):
                value = repr(float(value))
            lines.append(f'{key} = {value}')
        with open(config_path, 'w') as config_file:
            config_file.write('\n'.join(lines) + '\n')

    def validate(self):
        """Check cross-field constraints

        :raises ConfigException: naming the offending dotted key
        """
        models = [m for m in SIDECHANNEL_MODELS if getattr(self, m) is not None]
        if len(models) > 1:
            raise ConfigException('sidechannel', f'choose one of {", ".join(models)}')
        if self.method not in METHODS:
            raise ConfigException('method', f'expected one of {", ".join(METHODS)}')
        if not self.step > 0:
            raise ConfigException('sweep.step', f'{self.step!r} must be positive')
        if self.start < 0:
            raise ConfigException('sweep.start', f'{self.start!r} is negative')
        if self.start > self.stop:
            raise ConfigException('sweep.start', f'{self.start!r} exceeds sweep.stop')
        if self.workers < 1:
            raise ConfigException('run.workers', f'{self.workers!r} must be at least 1')
        if self.cloner_eta != 'optimal' and not 0 <= self.cloner_eta <= math.pi / 2:
            raise ConfigException('cloner.eta', f'{self.cloner_eta!r} outside [0, pi/2]')
        if self.target_qber is not None and not 0 <= self.target_qber <= 0.5:
            raise ConfigException('cloner.target_qber',
                                  f'{self.target_qber!r} outside [0, 0.5]')
        if models:
            try:
                self.sidechannel_gram()
            except QKDLeakException as e:
                raise ConfigException(f'sidechannel.{models[0]}', str(e))

        return self

    def sidechannel_gram(self):
        """Gram matrix of the configured side channel, `None` without one"""
        if self.gram is not None:
            return self.gram
        if self.overlap is not None:
            return SideChannelGram.uniform(self.overlap)
        if self.delta is not None:
            return SideChannelGram.from_imbalance(self.delta)
        if self.visibility is not None:
            mu = self.visibility_mu if self.visibility_mu is not None else self.channel.mu
            return SideChannelGram.from_imbalance(
                imbalance_from_visibility(self.visibility, mu))
        return None

    def imbalance(self):
        """Basis imbalance of the configured side channel"""
        gram = self.sidechannel_gram()
        return 0.0 if gram is None else imbalance_from_gram(gram)

    def cloner_setting(self):
        """Resolve ``cloner.eta``, including the ``optimal`` choice"""
        from qkdleak.attack import ClonerSetting
        from qkdleak.effective_error import critical_setting

        if self.cloner_eta != 'optimal':
            return ClonerSetting(self.cloner_eta)
        if self.target_qber is not None:
            return ClonerSetting.from_qber(self.target_qber)
        setting = critical_setting(self.sidechannel_gram(), self.average_bases)
        logger.info('Optimal cloning angle %.6f rad', setting.eta)
        return setting
