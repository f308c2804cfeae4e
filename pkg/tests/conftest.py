# -*- coding: utf-8 -*-
import numpy as np
import pytest
from scipy.stats import unitary_group

from qkdleak import core

SEED = 20240501


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


def random_density_matrix(dim, rng):
    """Mixed state with random spectrum in a Haar random eigenbasis"""
    u = unitary_group.rvs(dim, random_state=rng)
    weights = rng.random(dim)
    weights /= weights.sum()
    return (u * weights) @ u.conj().T


def random_state(dim, rng):
    psi = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return psi / np.linalg.norm(psi)


@pytest.fixture(autouse=True)
def no_user_config(tmp_path, monkeypatch):
    # never pick up a scenario file from the home directory
    monkeypatch.setattr(core, 'CONFIG_PATH', str(tmp_path / 'missing.cfg'))
