# -*- coding: utf-8 -*-
"""tests for the qkdleak.effective_error module"""
import logging
import math

import numpy as np
import pytest

from qkdleak.attack import ClonerSetting
from qkdleak.effective_error import (attack_pipeline, critical_setting,
                                     effective_qber)
from qkdleak.errors import InvalidInputException, LeakageOrderException
from qkdleak.qmath import binary_entropy
from qkdleak.sidechannel import SideChannelGram


def test_no_excess_keeps_qber():
    result = effective_qber(0.03, 0.2, 0.2)
    assert result.q_bob_delta == 0.03
    assert result.r_delta == pytest.approx(1 - binary_entropy(0.03) - 0.2)


def test_rate_identity():
    """1 - h2(Q) - chi_delta == 1 - h2(Q_delta) - chi"""
    result = effective_qber(0.02, 0.14, 0.3)
    assert result.q_bob_delta > 0.02
    assert 1 - binary_entropy(0.02) - 0.3 == \
        pytest.approx(1 - binary_entropy(result.q_bob_delta) - 0.14, abs=1e-12)


def test_effective_qber_is_monotone():
    previous = 0.0
    for excess in (0.0, 0.05, 0.1, 0.4, 0.8):
        q_delta = effective_qber(0.01, 0.1, 0.1 + excess).q_bob_delta
        assert q_delta >= previous
        previous = q_delta


def test_saturation(caplog):
    with caplog.at_level(logging.WARNING, logger='qkdleak.effective_error'):
        result = effective_qber(0.0, 0.0, 1.0)
    assert result.q_bob_delta == 0.5
    assert result.r_delta == pytest.approx(0)
    assert 'saturated' in caplog.text


def test_effective_qber_validation():
    with pytest.raises(InvalidInputException):
        effective_qber(0.6, 0.1, 0.2)
    with pytest.raises(InvalidInputException):
        effective_qber(0.1, -0.1, 0.2)
    with pytest.raises(LeakageOrderException):
        effective_qber(0.1, 0.3, 0.2)


def test_pipeline_without_sidechannel():
    result = attack_pipeline(ClonerSetting(0.5))
    assert result.q_bob == pytest.approx((1 - math.cos(0.5)) / 2)
    assert result.q_bob_delta == result.q_bob
    assert result.eta == 0.5


def test_pipeline_identical_sidechannel():
    """S = 1 hands Eve nothing: the effective error is the plain one"""
    for eta in (0.0, 0.3, 1.0):
        plain = attack_pipeline(ClonerSetting(eta))
        leaky = attack_pipeline(ClonerSetting(eta), SideChannelGram.uniform(1.0))
        assert leaky.q_bob_delta == pytest.approx(plain.q_bob_delta, abs=1e-12)


@pytest.mark.parametrize('delta', [0.001, 0.01, 0.05])
def test_sidechannel_only(delta):
    """Without cloning the effective error equals the basis imbalance"""
    result = attack_pipeline(ClonerSetting(0.0), SideChannelGram.from_imbalance(delta))
    assert result.q_bob == pytest.approx(0, abs=1e-12)
    assert result.chi_delta == pytest.approx(binary_entropy(delta), abs=1e-9)
    assert result.q_bob_delta == pytest.approx(delta, abs=1e-9)


def test_orthogonal_sidechannel_saturates():
    result = attack_pipeline(ClonerSetting(0.0), SideChannelGram.uniform(0.0))
    assert result.chi_delta == pytest.approx(1)
    assert result.q_bob_delta == pytest.approx(0.5, abs=1e-6)


def test_critical_setting_without_sidechannel():
    setting = critical_setting()
    q = (1 - math.cos(setting.eta)) / 2
    assert q == pytest.approx(0.110028, abs=1e-5)


def test_critical_setting_with_sidechannel():
    plain = critical_setting()
    leaky = critical_setting(SideChannelGram.from_imbalance(0.01))
    assert 0 < leaky.eta < plain.eta
    assert attack_pipeline(leaky, SideChannelGram.from_imbalance(0.01)).r_delta == \
        pytest.approx(0, abs=1e-9)
    assert critical_setting(SideChannelGram.uniform(0.0)).eta == pytest.approx(0, abs=1e-6)


def test_rate_identity_over_attack_grid():
    """Both ways of writing the rate agree for cloner and side channel"""
    for eta in np.linspace(0, math.pi / 2, 20):
        for s in np.linspace(0, 1, 20):
            result = attack_pipeline(ClonerSetting(float(eta)),
                                     SideChannelGram.uniform(float(s)))
            if result.q_bob_delta >= 0.5 - 1e-9:
                continue
            assert 1 - binary_entropy(result.q_bob) - result.chi_delta == \
                pytest.approx(1 - binary_entropy(result.q_bob_delta) - result.chi,
                              abs=1e-9)


def test_effective_error_falls_with_overlap():
    setting = ClonerSetting(0.4)
    q_delta = [attack_pipeline(setting, SideChannelGram.uniform(float(s))).q_bob_delta
               for s in np.linspace(0, 1, 11)]
    assert all(b <= a + 1e-12 for a, b in zip(q_delta, q_delta[1:]))


def test_effective_error_grows_with_cloning():
    gram = SideChannelGram.uniform(0.9)
    q_delta = [attack_pipeline(ClonerSetting(float(eta)), gram).q_bob_delta
               for eta in np.linspace(0, math.pi / 2, 20)]
    assert all(b >= a - 1e-12 for a, b in zip(q_delta, q_delta[1:]))
