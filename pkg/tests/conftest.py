import numpy as np
import pytest

from psusyent import AlphaProfile


def random_explicit_profile(rng, p, alpha_p_min=0.2):
    """Random real profile with alpha_p bounded away from zero."""
    alphas = rng.uniform(-2.0, 2.0, size=p + 1)
    alphas[p] = rng.uniform(alpha_p_min, 2.0) * rng.choice([-1.0, 1.0])
    return AlphaProfile.explicit(alphas)


def random_z(rng, z_max):
    return rng.uniform(0.0, z_max) * np.exp(2j * np.pi * rng.uniform())


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
