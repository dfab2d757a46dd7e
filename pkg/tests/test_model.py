import numpy as np
import pytest
from numpy.testing import assert_allclose

from psusyent import (
    AlphaProfile,
    build_annihilator,
    build_boson,
    build_hamiltonian,
    build_parafermi,
    build_state,
    degeneracy_profile,
    flat_index,
    split_index,
    verify_eigenstate,
)

from conftest import random_explicit_profile


def test_flat_index_roundtrip():
    p = 3
    for n_b in range(5):
        for n_f in range(p + 1):
            assert split_index(flat_index(n_b, n_f, p), p) == (n_b, n_f)
    with pytest.raises(ValueError):
        flat_index(0, p + 1, p)


def test_hamiltonian_p1_spectrum():
    h = build_hamiltonian(1.0, 1, 3)
    evals = np.sort(np.linalg.eigvalsh(h.matrix))
    assert_allclose(evals, [0, 1, 1, 2, 2, 3], atol=1e-12)


def test_hamiltonian_ground_energy_p2():
    h = build_hamiltonian(1.0, 2, 8)
    profile = degeneracy_profile(h)
    energy, mult = profile[0]
    assert abs(energy + 0.5) < 1e-12
    assert mult == 1


def test_hamiltonian_linear_in_omega():
    h1 = build_hamiltonian(1.0, 3, 8)
    h2 = build_hamiltonian(2.0, 3, 8)
    assert_allclose(h2.matrix, 2.0 * h1.matrix, atol=1e-12)


def test_hamiltonian_matches_enumerated_diagonal():
    omega, p, n_max = 0.7, 3, 9
    h = build_hamiltonian(omega, p, n_max)
    assert np.max(np.abs(h.matrix - h.matrix.conj().T)) == 0.0
    expected = np.empty(n_max * (p + 1))
    for n_b in range(n_max):
        for n_f in range(p + 1):
            m = p / 2.0 - n_f
            expected[flat_index(n_b, n_f, p)] = omega * (n_b + 0.5 - m)
    assert_allclose(np.diag(h.matrix).real, expected, atol=1e-12)
    assert np.max(np.abs(np.diag(h.matrix).imag)) == 0.0


@pytest.mark.parametrize("omega,p,n_max", [(0.0, 1, 8), (-1.0, 1, 8), (1.0, 3, 4)])
def test_hamiltonian_invalid_arguments(omega, p, n_max):
    with pytest.raises(ValueError):
        build_hamiltonian(omega, p, n_max)


@pytest.mark.parametrize(
    "p,prefix",
    [(1, [1, 2, 2, 2, 2]), (2, [1, 2, 3, 3, 3]), (3, [1, 2, 3, 4, 4, 4])],
)
def test_degeneracy_profiles(p, prefix):
    h = build_hamiltonian(1.0, p, 2 * p + 8)
    mults = [mult for _, mult in degeneracy_profile(h)]
    assert mults[: len(prefix)] == prefix
    # constant p+1 plateau away from the truncation boundary
    plateau_end = h.n_max - p - 1
    assert all(m == p + 1 for m in mults[p:plateau_end])


def test_degeneracy_requires_wide_truncation():
    h = build_hamiltonian(1.0, 3, 6)
    with pytest.raises(ValueError):
        degeneracy_profile(h)


def test_annihilator_p1_structure():
    n_max = 6
    a_op = build_annihilator(1, n_max)
    boson = build_boson(n_max)
    pf = build_parafermi(1)
    expected = np.kron(boson.a, np.eye(2)) + np.kron(np.eye(n_max), pf.b_dag)
    assert_allclose(a_op.matrix, expected, atol=1e-14)


def test_annihilator_p2_second_term():
    n_max = 6
    a_op = build_annihilator(2, n_max)
    boson = build_boson(n_max)
    pf = build_parafermi(2)
    bdag_sq = np.linalg.matrix_power(pf.b_dag, 2)
    # (b†)^2 sends |n_f = 2> to 2 |n_f = 0>: single entry p! = 2
    expected_bdag_sq = np.zeros((3, 3))
    expected_bdag_sq[0, 2] = 2.0
    assert_allclose(bdag_sq, expected_bdag_sq, atol=1e-14)
    second = a_op.matrix - np.kron(boson.a, np.eye(3))
    assert_allclose(second, np.kron(boson.a_dag / 2.0, bdag_sq), atol=1e-14)


def test_eigenstate_at_z_zero():
    profile = AlphaProfile.explicit([0.3, -1.1, 0.9])
    state = build_state(2, 0.0, profile)
    a_op = build_annihilator(2, state.n_max)
    assert verify_eigenstate(a_op, state.full_vector, 0.0) < 1e-12


@pytest.mark.parametrize(
    "p,z",
    [(1, 1.0 + 0.5j), (2, 2.0 - 1.0j), (3, 2.0), (4, 0.5 - 2.5j)],
)
def test_eigenstate_residual_small(p, z, rng):
    profile = random_explicit_profile(rng, p)
    state = build_state(p, z, profile)
    a_op = build_annihilator(p, state.n_max)
    assert verify_eigenstate(a_op, state.full_vector, z) < 1e-8


def test_eigenstate_optimal_profile_p3():
    state = build_state(3, 2.0, AlphaProfile.optimal_constant(3))
    a_op = build_annihilator(3, state.n_max)
    assert verify_eigenstate(a_op, state.full_vector, 2.0) < 1e-8


def test_annihilator_lowers_energy_by_omega(rng):
    # [H, A] v = -omega A v on vectors supported away from the truncation top
    omega, n_max = 1.3, 16
    for p in (1, 2, 3):
        h = build_hamiltonian(omega, p, n_max)
        a_op = build_annihilator(p, n_max)
        v = np.zeros(n_max * (p + 1), dtype=complex)
        safe = (n_max - p - 1) * (p + 1)
        v[:safe] = rng.normal(size=safe) + 1j * rng.normal(size=safe)
        v /= np.linalg.norm(v)
        av = a_op.matrix @ v
        residual = h.matrix @ av - a_op.matrix @ (h.matrix @ v) + omega * av
        assert np.linalg.norm(residual) < 1e-12 * n_max


def test_residual_decreases_with_truncation():
    profile = AlphaProfile.explicit([1.0, -0.7, 0.4])
    residuals = []
    for n_max in (12, 18, 24):
        state = build_state(2, 1.5, profile, n_max=n_max, tail_tol=None)
        vec = state.full_vector / np.linalg.norm(state.full_vector)
        residuals.append(verify_eigenstate(build_annihilator(2, n_max), vec, 1.5))
    assert residuals[0] > residuals[1] > residuals[2]


def test_verify_eigenstate_input_validation():
    a_op = build_annihilator(1, 8)
    with pytest.raises(ValueError):
        verify_eigenstate(a_op, np.zeros(5), 0.0)
    with pytest.raises(ValueError):
        verify_eigenstate(a_op, np.ones(16), 0.0)  # not normalized


@pytest.mark.parametrize("p,n_max", [(1, 2), (3, 4)])
def test_annihilator_invalid_dimensions(p, n_max):
    with pytest.raises(ValueError):
        build_annihilator(p, n_max)
