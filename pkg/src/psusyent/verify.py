"""Self-verification suites wrapping the library invariants for the CLI."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .algebra import (
    build_boson,
    build_parafermi,
    check_algebra,
    coherent_vector,
    default_n_max,
    derivative_coherent_vector,
    float_factorial,
)
from .coherent import AlphaProfile, beta_coefficients, build_state, qubit_bases
from .entanglement import (
    concurrence_closed_form,
    concurrence_pure,
    concurrence_schmidt_oracle,
    concurrence_wootters,
    density_from_amplitudes,
    entanglement_of_formation,
)
from .model import build_annihilator, build_hamiltonian, degeneracy_profile, verify_eigenstate

__all__ = ["RunReport", "run_all", "SUITES"]

_Z_SAMPLES = (0.7, 1.0 + 0.5j, 2.0 - 1.0j, 0.0 + 2.4j, 3.0)


@dataclass(frozen=True)
class RunReport:
    """Outcome of one verification suite."""

    name: str
    passed: int
    failed: int
    max_residual: float
    wall_time: float

    @property
    def ok(self) -> bool:
        return self.failed == 0


class _Collector:
    def __init__(self, tol: float):
        self.tol = tol
        self.passed = 0
        self.failed = 0
        self.max_residual = 0.0

    def check(self, residual: float) -> None:
        self.max_residual = max(self.max_residual, residual)
        if residual <= self.tol:
            self.passed += 1
        else:
            self.failed += 1

    def report(self, name: str, t0: float) -> RunReport:
        return RunReport(name, self.passed, self.failed, self.max_residual, time.perf_counter() - t0)


def _random_profile(rng: np.random.Generator, p: int) -> AlphaProfile:
    alphas = rng.uniform(-2.0, 2.0, size=p + 1)
    # keep alpha_p away from zero so every branch of the state is populated
    alphas[p] = rng.uniform(0.2, 2.0) * rng.choice([-1.0, 1.0])
    return AlphaProfile.explicit(alphas)


def suite_parafermi_algebra(p_max: int, tol: float, rng) -> RunReport:
    t0 = time.perf_counter()
    col = _Collector(tol)
    for p in range(1, p_max + 1):
        report = check_algebra(build_parafermi(p), tol)
        for residual in report.residuals.values():
            col.check(residual)
    return col.report("parafermi-algebra", t0)


def suite_boson_truncation(p_max: int, tol: float, rng) -> RunReport:
    t0 = time.perf_counter()
    col = _Collector(tol)
    for n_max in (2, 8, 32):
        ops = build_boson(n_max)
        comm = ops.a @ ops.a_dag - ops.a_dag @ ops.a
        block = comm[: n_max - 1, : n_max - 1] - np.eye(n_max - 1)
        col.check(float(np.max(np.abs(block))))
        col.check(float(np.max(np.abs(ops.a_dag @ ops.a - ops.number_op))))
    return col.report("boson-truncation", t0)


def suite_coherent_identities(p_max: int, tol: float, rng) -> RunReport:
    t0 = time.perf_counter()
    col = _Collector(tol)
    for z in _Z_SAMPLES:
        for p in range(1, min(p_max, 4) + 1):
            n_max = default_n_max(z, p)
            coh = coherent_vector(z, n_max)
            dcoh = derivative_coherent_vector(z, p, n_max)
            expz2 = math.exp(abs(z) ** 2)
            col.check(abs(np.vdot(coh, coh) - expz2) / expz2)
            overlap = np.vdot(coh, dcoh)
            col.check(abs(overlap - np.conj(z) ** p * expz2) / expz2)
            closed = sum(
                float_factorial(p) ** 2
                / (float_factorial(n) ** 2 * float_factorial(p - n))
                * abs(z) ** (2 * n)
                for n in range(p + 1)
            ) * expz2
            col.check(abs(np.vdot(dcoh, dcoh) - closed) / closed)
    return col.report("coherent-identities", t0)


def suite_spectrum_degeneracy(p_max: int, tol: float, rng) -> RunReport:
    t0 = time.perf_counter()
    col = _Collector(tol)
    for p in range(1, min(p_max, 4) + 1):
        n_max = 2 * p + 8
        h = build_hamiltonian(1.0, p, n_max)
        profile = degeneracy_profile(h)
        expected = [n + 1 for n in range(p)] + [p + 1] * (n_max - 2 * p)
        observed = [mult for _, mult in profile[: len(expected)]]
        col.check(0.0 if observed == expected else 1.0)
        energies = np.array([e for e, _ in profile[: len(expected)]])
        target = np.arange(len(expected)) + 0.5 - p / 2.0
        col.check(float(np.max(np.abs(energies - target))))
    return col.report("spectrum-degeneracy", t0)


def suite_eigenstate_property(p_max: int, tol: float, rng) -> RunReport:
    t0 = time.perf_counter()
    col = _Collector(tol)
    for _ in range(20):
        p = int(rng.integers(1, min(p_max, 4) + 1))
        z = rng.uniform(0, 3.0) * np.exp(2j * np.pi * rng.uniform())
        profile = _random_profile(rng, p)
        state = build_state(p, z, profile)
        a_op = build_annihilator(p, state.n_max)
        col.check(verify_eigenstate(a_op, state.full_vector, z))
    return col.report("eigenstate-property", t0)


def suite_state_consistency(p_max: int, tol: float, rng) -> RunReport:
    t0 = time.perf_counter()
    col = _Collector(tol)
    for _ in range(15):
        p = int(rng.integers(1, min(p_max, 5) + 1))
        z = rng.uniform(0, 2.5) * np.exp(2j * np.pi * rng.uniform())
        profile = _random_profile(rng, p)
        state = build_state(p, z, profile)
        col.check(abs(np.linalg.norm(state.full_vector) - 1.0))
        col.check(abs(state.qubit_amps[1]))

        beta = beta_coefficients(p, z, profile, state.n_max - 1)
        from_beta = np.zeros_like(state.full_vector)
        for k in range(p + 1):
            for n in range(k, state.n_max - 1 + 1):
                from_beta[(n - k) * (p + 1) + k] += beta[k, n]
        col.check(float(np.linalg.norm(from_beta - state.full_vector)))

        bases = qubit_bases(p, z, profile, state.n_max)
        a00, a01, a10, a11 = state.qubit_amps
        recon = (
            a00 * np.kron(bases.b0, bases.f0)
            + a01 * np.kron(bases.b0, bases.f1)
            + a10 * np.kron(bases.b1, bases.f0)
            + a11 * np.kron(bases.b1, bases.f1)
        )
        col.check(float(np.linalg.norm(recon - state.full_vector)))
    return col.report("state-consistency", t0)


def suite_concurrence_routes(p_max: int, tol: float, rng) -> RunReport:
    t0 = time.perf_counter()
    col = _Collector(tol)
    for _ in range(25):
        p = int(rng.integers(1, min(p_max, 5) + 1))
        z = rng.uniform(0, 3.0) * np.exp(2j * np.pi * rng.uniform())
        profile = _random_profile(rng, p)
        state = build_state(p, z, profile)
        values = [
            concurrence_closed_form(p, z, profile).value,
            concurrence_pure(state.qubit_amps),
            concurrence_wootters(density_from_amplitudes(state.qubit_amps)).value,
            concurrence_schmidt_oracle(state),
        ]
        col.check(max(values) - min(values))
    return col.report("concurrence-routes", t0)


def suite_eof_curve(p_max: int, tol: float, rng) -> RunReport:
    t0 = time.perf_counter()
    col = _Collector(tol)
    col.check(abs(entanglement_of_formation(0.0)))
    col.check(abs(entanglement_of_formation(1.0) - math.log(2.0)))
    grid = np.linspace(0.0, 1.0, 1001)
    values = np.array([entanglement_of_formation(c) for c in grid])
    col.check(max(0.0, float(np.max(values[:-1] - values[1:]))))
    return col.report("eof-curve", t0)


SUITES = (
    suite_parafermi_algebra,
    suite_boson_truncation,
    suite_coherent_identities,
    suite_spectrum_degeneracy,
    suite_eigenstate_property,
    suite_state_consistency,
    suite_concurrence_routes,
    suite_eof_curve,
)


def run_all(p_max: int, tol: float, seed: int = 20260810) -> list[RunReport]:
    """Run every suite with a fixed seed; one report per suite."""
    rng = np.random.default_rng(seed)
    return [suite(p_max, tol, rng) for suite in SUITES]
