"""Concurrence of the coherent states by four independent routes, plus EoF.

Routes:

* ``closed-form``: C = 2AB / (A^2 + B^2 + defect) evaluated directly from
  the coefficient profile.
* ``pure-amplitude``: C = 2 |a00 a11 - a01 a10| from the two-qubit
  amplitudes.
* ``wootters-4x4``: the mixed-state recipe (sqrt-eigenvalues of rho
  rho~) applied to the 4x4 projector in the logical-qubit frame; kept as a
  verification oracle.
* ``schmidt-oracle``: partial trace of the full tensor vector over the
  boson space, C = sqrt(2 (1 - Tr rho_f^2)); exact because the state has
  Schmidt rank <= 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import float_factorial
from .coherent import AlphaProfile, PsusyCoherentState, branch_weights
from .errors import TruncationError

__all__ = [
    "ABTerms",
    "ConcurrenceResult",
    "ROUTE_CLOSED_FORM",
    "ROUTE_PURE",
    "ROUTE_WOOTTERS",
    "ROUTE_SCHMIDT",
    "ab_terms",
    "concurrence_closed_form",
    "concurrence_pure",
    "concurrence_wootters",
    "concurrence_schmidt_oracle",
    "density_from_amplitudes",
    "one_minus_c_squared",
    "concurrence_optimal",
    "exact_maximal_profile",
    "entanglement_of_formation",
]

ROUTE_CLOSED_FORM = "closed-form"
ROUTE_PURE = "pure-amplitude"
ROUTE_WOOTTERS = "wootters-4x4"
ROUTE_SCHMIDT = "schmidt-oracle"

# Eigenvalues of rho*rho~ below this fraction of the spectral scale are
# treated as exact zero; without the clamp the final square root turns
# 1e-16 noise into 1e-8 errors.  Relative to the scale so that genuinely
# small concurrences are not zeroed out.
_EIGENVALUE_DUST = 1e-12

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_SY_SY = np.kron(_SIGMA_Y, _SIGMA_Y)


@dataclass(frozen=True)
class ABTerms:
    """The two branch amplitudes A and B entering the closed form."""

    a_term: float
    b_term: float


@dataclass(frozen=True)
class ConcurrenceResult:
    value: float
    route: str
    eof: float
    lambdas: tuple[float, float, float, float] | None = None


def _clip_unit(value: float, what: str) -> float:
    if value < -1e-10 or value > 1.0 + 1e-10:
        raise ValueError(f"{what} = {value!r} outside [0, 1] beyond tolerance")
    return min(max(value, 0.0), 1.0)


def _check_order(p: int, profile: AlphaProfile) -> None:
    if p != profile.p:
        raise ValueError(f"order mismatch: p={p} but profile.p={profile.p}")


def ab_terms(p: int, z_abs: float, profile: AlphaProfile) -> ABTerms:
    """A = sqrt(sum alpha_{p-n}^2 |z|^(2n)), B = |alpha_p|/p * sqrt(weight sum)."""
    _check_order(p, profile)
    a_sq, b_sq, _ = branch_weights(p, float(z_abs), profile.coefficients(float(z_abs)))
    return ABTerms(math.sqrt(a_sq), math.sqrt(b_sq))


def _result(value: float, route: str, lambdas=None) -> ConcurrenceResult:
    value = _clip_unit(value, "concurrence")
    return ConcurrenceResult(value, route, entanglement_of_formation(value), lambdas)


def concurrence_closed_form(
    p: int, z: complex, profile: AlphaProfile
) -> ConcurrenceResult:
    """C = 2AB / (A^2 + B^2 + (alpha_0 - alpha_p/p)^2 |z|^(2p)).

    Zero exactly when alpha_p = 0 (then B = 0 and the state is a product).
    """
    _check_order(p, profile)
    z_abs = abs(complex(z))
    alphas = profile.coefficients(z_abs)
    if alphas[p] == 0.0:
        return _result(0.0, ROUTE_CLOSED_FORM)
    a_sq, b_sq, defect = branch_weights(p, z_abs, alphas)
    value = 2.0 * math.sqrt(a_sq) * math.sqrt(b_sq) / (a_sq + b_sq + defect)
    return _result(value, ROUTE_CLOSED_FORM)


def concurrence_pure(amps) -> float:
    """C = 2 |a00 a11 - a01 a10| for normalized pure-state amplitudes."""
    a00, a01, a10, a11 = (complex(a) for a in amps)
    norm_sq = abs(a00) ** 2 + abs(a01) ** 2 + abs(a10) ** 2 + abs(a11) ** 2
    if abs(norm_sq - 1.0) > 1e-8:
        raise ValueError(f"amplitudes are not normalized: sum |a|^2 = {norm_sq:.8g}")
    return _clip_unit(2.0 * abs(a00 * a11 - a01 * a10), "concurrence")


def density_from_amplitudes(amps) -> np.ndarray:
    """Pure-state projector in the ordered basis {|00>, |01>, |10>, |11>}."""
    vec = np.asarray(amps, dtype=complex).reshape(4)
    return np.outer(vec, vec.conj())


def _validate_density(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"density matrix must be 4x4, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > 1e-10:
        raise ValueError("density matrix is not Hermitian within 1e-10")
    if abs(np.trace(rho).real - 1.0) > 1e-10 or abs(np.trace(rho).imag) > 1e-10:
        raise ValueError("density matrix trace differs from 1 beyond 1e-10")
    if np.min(np.linalg.eigvalsh(rho)) < -1e-10:
        raise ValueError("density matrix is not positive semidefinite within 1e-10")
    return rho


def concurrence_wootters(rho: np.ndarray) -> ConcurrenceResult:
    """Mixed-state concurrence via the spin-flipped product rho * rho~.

    rho~ = (sigma_y x sigma_y) rho* (sigma_y x sigma_y); the lambdas are the
    decreasingly sorted square roots of the eigenvalues of rho rho~ and
    C = max(0, l1 - l2 - l3 - l4).  Eigenvalues within 1e-12 of zero
    relative to the spectral scale are clamped before the square root.
    """
    rho = _validate_density(rho)
    rho_tilde = _SY_SY @ rho.conj() @ _SY_SY
    evals = np.real(np.linalg.eigvals(rho @ rho_tilde))
    dust = _EIGENVALUE_DUST * max(float(np.max(np.abs(evals))), 1e-300)
    evals[np.abs(evals) < dust] = 0.0
    if np.min(evals) < 0.0:
        raise ValueError(
            f"rho*rho~ has a negative eigenvalue {np.min(evals):.3e} beyond dust tolerance"
        )
    lams = np.sort(np.sqrt(evals))[::-1]
    value = max(0.0, float(lams[0] - lams[1] - lams[2] - lams[3]))
    return _result(value, ROUTE_WOOTTERS, lambdas=tuple(float(x) for x in lams))


def concurrence_schmidt_oracle(state: PsusyCoherentState) -> float:
    """Concurrence from the partial trace over the boson space.

    Evaluates sqrt(2 (1 - Tr rho_f^2)) for the trace-normalized reduced
    parafermion density matrix rho_f, valid because a01 = 0 forces Schmidt
    rank <= 2.  The quantity is computed through the Schmidt spectrum
    (singular values of the reshaped amplitude matrix, whose squares are
    the eigenvalues of rho_f) as 2 sqrt(sum_{i<j} mu_i mu_j): singular
    values carry linear rounding error, so product states come out at
    ~1e-16 instead of the sqrt(eps) floor of a direct purity evaluation.
    Independent of every closed-form expression used by the other routes.
    """
    psi = state.full_vector.reshape(state.n_max, state.p + 1)
    mu = np.linalg.svd(psi, compute_uv=False) ** 2
    trace = float(np.sum(mu))  # = Tr rho_f = ||psi||^2
    if abs(trace - 1.0) > 1e-8:
        raise TruncationError(
            f"reduced density trace {trace:.10g} differs from 1 beyond 1e-8; "
            "increase n_max"
        )
    mu = mu / trace
    pairwise = 0.0
    for i in range(len(mu)):
        for j in range(i + 1, len(mu)):
            pairwise += mu[i] * mu[j]
    return _clip_unit(2.0 * math.sqrt(pairwise), "concurrence")


def one_minus_c_squared(p: int, z_abs: float, profile: AlphaProfile) -> float:
    """((A^2 - B^2) / (A^2 + B^2))^2, defined on profiles with alpha_0 = alpha_p/p.

    This is the quantity whose minimization drives the choice of the
    optimal-constant family; the precondition is enforced, not substituted.
    """
    _check_order(p, profile)
    alphas = profile.coefficients(float(z_abs))
    if abs(alphas[0] - alphas[p] / p) > 1e-12 * max(1.0, abs(alphas[p])):
        raise ValueError(
            f"profile must satisfy alpha_0 = alpha_p/p, got alpha_0={alphas[0]!r}, "
            f"alpha_p/p={alphas[p] / p!r}"
        )
    a_sq, b_sq, _ = branch_weights(p, float(z_abs), alphas)
    return ((a_sq - b_sq) / (a_sq + b_sq)) ** 2


def concurrence_optimal(p: int, z_abs: float) -> float:
    """Concurrence of the optimal-constant family, directly in closed form.

    C = sqrt(1 - (p!/p^2 - 1)^2 / ((p!/p^2 + 1)
            + 2 sum_{n=1..p-1} (p!)^2 |z|^(2n) / (p^2 (n!)^2 (p-n)!))^2),
    identically 1 for p = 1 and increasing in |z| toward 1 for p >= 2.
    """
    if p < 1:
        raise ValueError(f"order p must be >= 1, got {p}")
    fp = float_factorial(p)
    series = sum(
        fp**2 * float(z_abs) ** (2 * n) / (p**2 * float_factorial(n) ** 2 * float_factorial(p - n))
        for n in range(1, p)
    )
    ratio = (fp / p**2 - 1.0) / (fp / p**2 + 1.0 + 2.0 * series)
    return math.sqrt(max(0.0, 1.0 - ratio * ratio))


def exact_maximal_profile(
    p: int, z: complex, m: int, alpha_p: float = 1.0
) -> AlphaProfile:
    """The z-dependent profile that makes the concurrence exactly 1 at z.

    All coefficients follow the optimal-constant rule except index p - m,
    fixed by alpha_{p-m}^2 |z|^(2m) = alpha_p^2 [(p!/p^2 - 1)
    + (p!)^2 |z|^(2m) / (p^2 (m!)^2 (p-m)!)].  Raises NoRealSolutionError
    when the bracket is negative (small |z| with p <= 3) or z = 0.
    """
    profile = AlphaProfile.z_dependent_exact(p, m, alpha_p)
    profile.coefficients(abs(complex(z)))  # validate solvability at this z
    return profile


def _binary_entropy(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log(x) - (1.0 - x) * math.log(1.0 - x)


def entanglement_of_formation(c: float) -> float:
    """EoF of a two-qubit state with concurrence c, in natural-log units.

    H(1/2 + sqrt(1 - c^2)/2) with H the natural-log binary entropy, so the
    maximum is ln 2, not 1 bit.  Strictly increasing in c on (0, 1).
    """
    if c < -1e-12 or c > 1.0 + 1e-12:
        raise ValueError(f"concurrence {c!r} outside [0, 1]")
    c = min(max(c, 0.0), 1.0)
    return _binary_entropy(0.5 + 0.5 * math.sqrt(max(0.0, 1.0 - c * c)))
