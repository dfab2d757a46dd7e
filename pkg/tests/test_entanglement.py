import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from psusyent import (
    AlphaProfile,
    NoRealSolutionError,
    TruncationError,
    ab_terms,
    build_state,
    concurrence_closed_form,
    concurrence_optimal,
    concurrence_pure,
    concurrence_schmidt_oracle,
    concurrence_wootters,
    density_from_amplitudes,
    entanglement_of_formation,
    exact_maximal_profile,
    one_minus_c_squared,
)

from conftest import random_explicit_profile, random_z

TWO_SQRT2_OVER_3 = 0.9428090415820634  # 2*sqrt(2)/3
BELL = np.array([1.0, 0.0, 0.0, 1.0]) / math.sqrt(2.0)


# ---------------------------------------------------------------- closed form


def test_closed_form_zero_iff_alpha_p_zero(rng):
    assert concurrence_closed_form(2, 1.3, AlphaProfile.explicit([1.0, 0.4, 0.0])).value == 0.0
    for _ in range(15):
        p = int(rng.integers(1, 6))
        z = random_z(rng, 3.0)
        alphas = rng.uniform(-2, 2, p + 1)
        alphas[p] = 0.0
        if np.all(alphas == 0.0):
            alphas[0] = 1.0
        assert concurrence_closed_form(p, z, AlphaProfile.explicit(alphas)).value == 0.0
        assert concurrence_closed_form(p, z, random_explicit_profile(rng, p)).value > 0.0


@pytest.mark.parametrize("z", [0.0, 0.9, 2.1 - 0.7j])
@pytest.mark.parametrize("scale", [1.0, -0.6])
def test_closed_form_susy_bell_is_maximal(z, scale):
    profile = AlphaProfile.explicit([scale, scale])
    assert abs(concurrence_closed_form(1, z, profile).value - 1.0) < 1e-12


def test_closed_form_p2_optimal_at_origin():
    result = concurrence_closed_form(2, 0.0, AlphaProfile.optimal_constant(2))
    assert abs(result.value - TWO_SQRT2_OVER_3) < 1e-12
    state = build_state(2, 0.0, AlphaProfile.optimal_constant(2))
    assert abs(concurrence_schmidt_oracle(state) - TWO_SQRT2_OVER_3) < 1e-10


def test_closed_form_result_fields():
    result = concurrence_closed_form(1, 0.5, AlphaProfile.explicit([1.0, 1.0]))
    assert result.route == "closed-form"
    assert result.lambdas is None
    assert abs(result.eof - math.log(2.0)) < 1e-12


# ---------------------------------------------------------------- pure amplitudes


def test_pure_concurrence_examples():
    assert abs(concurrence_pure(BELL) - 1.0) < 1e-14
    assert concurrence_pure([1.0, 0.0, 0.0, 0.0]) == 0.0
    assert abs(concurrence_pure([0.6, 0.0, 0.0, 0.8]) - 0.96) < 1e-14


def test_pure_concurrence_rejects_unnormalized():
    with pytest.raises(ValueError):
        concurrence_pure([1.0, 0.0, 0.0, 1.0])


# ---------------------------------------------------------------- Wootters 4x4


def test_wootters_bell_projector():
    result = concurrence_wootters(density_from_amplitudes(BELL))
    assert abs(result.value - 1.0) < 1e-10
    assert result.lambdas[0] == pytest.approx(1.0, abs=1e-10)
    assert result.lambdas[1:] == (0.0, 0.0, 0.0)


def test_wootters_maximally_mixed():
    result = concurrence_wootters(np.eye(4) / 4.0)
    assert result.value == 0.0
    assert_allclose(result.lambdas, [0.25] * 4, atol=1e-12)


def test_wootters_werner_state():
    w = 0.8
    rho = w * np.outer(BELL, BELL) + (1 - w) * np.eye(4) / 4.0
    result = concurrence_wootters(rho)
    assert abs(result.value - (3 * w - 1) / 2.0) < 1e-10
    assert result.lambdas == tuple(sorted(result.lambdas, reverse=True))


def test_wootters_rejects_invalid_density():
    bad_trace = np.eye(4) / 2.0
    with pytest.raises(ValueError):
        concurrence_wootters(bad_trace)
    non_hermitian = np.eye(4) / 4.0 + 0j
    non_hermitian[0, 1] = 0.1
    with pytest.raises(ValueError):
        concurrence_wootters(non_hermitian)
    non_psd = np.diag([0.6, 0.6, -0.1, -0.1])
    with pytest.raises(ValueError):
        concurrence_wootters(non_psd)
    with pytest.raises(ValueError):
        concurrence_wootters(np.eye(3) / 3.0)


# ---------------------------------------------------------------- Schmidt oracle


def test_schmidt_oracle_bell_and_product():
    bell_state = build_state(1, 0.9, AlphaProfile.explicit([1.0, 1.0]))
    assert abs(concurrence_schmidt_oracle(bell_state) - 1.0) < 1e-10
    product = build_state(2, 1.1, AlphaProfile.explicit([0.7, -0.3, 0.0]))
    assert concurrence_schmidt_oracle(product) < 1e-10


def test_schmidt_oracle_matches_closed_form(rng):
    profile = random_explicit_profile(rng, 3)
    state = build_state(3, 1.7, profile)
    closed = concurrence_closed_form(3, 1.7, profile).value
    assert abs(concurrence_schmidt_oracle(state) - closed) < 1e-8


def test_schmidt_oracle_flags_bad_truncation():
    state = build_state(1, 2.5, AlphaProfile.explicit([1.0, 1.0]), n_max=8, tail_tol=None)
    with pytest.raises(TruncationError):
        concurrence_schmidt_oracle(state)


# ---------------------------------------------------------------- route agreement


def test_four_routes_agree(rng):
    for _ in range(30):
        p = int(rng.integers(1, 6))
        z = random_z(rng, 3.0)
        profile = random_explicit_profile(rng, p)
        state = build_state(p, z, profile)
        values = [
            concurrence_closed_form(p, z, profile).value,
            concurrence_pure(state.qubit_amps),
            concurrence_wootters(density_from_amplitudes(state.qubit_amps)).value,
            concurrence_schmidt_oracle(state),
        ]
        assert max(values) - min(values) < 1e-8


# ---------------------------------------------------------------- maximality analysis


def test_ab_terms_and_am_gm_bound(rng):
    for _ in range(20):
        p = int(rng.integers(1, 7))
        z_abs = rng.uniform(0.0, 3.0)
        profile = random_explicit_profile(rng, p)
        terms = ab_terms(p, z_abs, profile)
        assert terms.a_term >= 0.0 and terms.b_term >= 0.0
        assert 2 * terms.a_term * terms.b_term <= terms.a_term**2 + terms.b_term**2 + 1e-15
        assert concurrence_closed_form(p, z_abs, profile).value <= 1.0


def test_one_minus_c_squared_examples():
    assert one_minus_c_squared(1, 1.7, AlphaProfile.optimal_constant(1)) == 0.0
    # p=2, optimal, |z|=2: (0.5-1)^2 / (1.5 + 2*4)^2 = 0.25/90.25
    value = one_minus_c_squared(2, 2.0, AlphaProfile.optimal_constant(2))
    assert abs(value - 0.25 / 90.25) < 1e-15
    c = concurrence_optimal(2, 2.0)
    assert abs(value - (1.0 - c * c)) < 1e-12


def test_one_minus_c_squared_matches_general_ratio(rng):
    # on alpha_0 = alpha_p/p profiles the ratio reduces to ((A^2-B^2)/(A^2+B^2))^2
    for p in (2, 3, 5):
        alphas = rng.uniform(-1.5, 1.5, p + 1)
        alphas[p] = 1.2
        alphas[0] = alphas[p] / p
        profile = AlphaProfile.explicit(alphas)
        z_abs = rng.uniform(0.1, 2.5)
        terms = ab_terms(p, z_abs, profile)
        expected = ((terms.a_term**2 - terms.b_term**2) / (terms.a_term**2 + terms.b_term**2)) ** 2
        assert abs(one_minus_c_squared(p, z_abs, profile) - expected) < 1e-14
        c = concurrence_closed_form(p, z_abs, profile).value
        assert abs(one_minus_c_squared(p, z_abs, profile) - (1 - c * c)) < 1e-12


def test_one_minus_c_squared_enforces_precondition():
    with pytest.raises(ValueError):
        one_minus_c_squared(2, 1.0, AlphaProfile.explicit([1.0, 1.0, 1.0]))


def test_concurrence_optimal_values():
    for z_abs in (0.0, 0.5, 2.0, 4.5):
        assert concurrence_optimal(1, z_abs) == 1.0
    assert abs(concurrence_optimal(2, 0.0) - TWO_SQRT2_OVER_3) < 1e-12
    # frozen from exact arithmetic: 1 - C = 3.287851477985737e-4 at p=2, |z|=3
    assert abs((1.0 - concurrence_optimal(2, 3.0)) - 3.287851477985737e-4) < 1e-12


def test_concurrence_optimal_matches_closed_form():
    for p in (1, 2, 3, 6):
        profile = AlphaProfile.optimal_constant(p)
        for z_abs in (0.0, 0.8, 2.2):
            closed = concurrence_closed_form(p, z_abs, profile).value
            assert abs(concurrence_optimal(p, z_abs) - closed) < 1e-12


def test_concurrence_optimal_nondecreasing_in_z():
    grid = np.arange(0.0, 5.0 + 1e-12, 0.01)
    for p in range(2, 7):
        values = np.array([concurrence_optimal(p, z) for z in grid])
        assert np.all(np.diff(values) >= 0.0)


@pytest.mark.parametrize("p,m,z", [(2, 1, 1.0), (3, 1, 1.5), (3, 2, 1.5), (4, 2, 2.0)])
def test_exact_maximal_profile_reaches_one(p, m, z):
    profile = exact_maximal_profile(p, z, m)
    assert abs(concurrence_closed_form(p, z, profile).value - 1.0) < 1e-10
    state = build_state(p, z, profile)
    assert abs(concurrence_schmidt_oracle(state) - 1.0) < 1e-10


def test_exact_maximal_profile_errors():
    with pytest.raises(NoRealSolutionError):
        exact_maximal_profile(2, 1e-4, 1)  # bracket -> -1/2 as z -> 0
    with pytest.raises(NoRealSolutionError):
        exact_maximal_profile(3, 0.0, 1)
    with pytest.raises(ValueError):
        exact_maximal_profile(2, 1.0, 2)  # m out of range


def test_concurrence_phase_invariance(rng):
    for p in (1, 3):
        profile = random_explicit_profile(rng, p)
        for theta in (0.3, 1.1, 2.9):
            z = 1.3 * np.exp(1j * theta)
            a = concurrence_closed_form(p, z, profile).value
            b = concurrence_closed_form(p, 1.3, profile).value
            assert abs(a - b) < 1e-12


# ---------------------------------------------------------------- EoF


def test_eof_endpoints():
    assert entanglement_of_formation(0.0) == 0.0
    assert abs(entanglement_of_formation(1.0) - math.log(2.0)) < 1e-12


def test_eof_value_at_096():
    # H(0.64) with natural logs, frozen from 50-digit evaluation
    assert abs(entanglement_of_formation(0.96) - 0.6534181947937018) < 1e-12


def test_eof_strictly_increasing():
    grid = np.linspace(0.0, 1.0, 1001)
    values = np.array([entanglement_of_formation(c) for c in grid])
    assert np.all(np.diff(values) > 0.0)


def test_eof_domain_errors():
    with pytest.raises(ValueError):
        entanglement_of_formation(-0.01)
    with pytest.raises(ValueError):
        entanglement_of_formation(1.01)
    # values inside the 1e-12 tolerance band are clamped, not rejected
    assert entanglement_of_formation(1.0 + 5e-13) == pytest.approx(math.log(2.0))
