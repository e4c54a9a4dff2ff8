import math

import pytest

from matterwave import ParticleSpecies, make_mode

OMEGA0 = 2.0 * math.pi * 1000.0


@pytest.fixture
def species():
    return ParticleSpecies("testium", 1.0e-25)


@pytest.fixture
def std_mode(species):
    # the worked-example mode: m = 1e-25 kg, omega0 = 2*pi*1 kHz, v_v = 1 cm/s
    return make_mode(species, OMEGA0, velocity=0.01)
