"""Coherent eigenstates of the PSUSY annihilator and their two-qubit reduction.

A state is parameterized by the order p, the complex eigenvalue z and a real
coefficient profile alpha_0..alpha_p.  It can be assembled three equivalent
ways: from the recursion coefficients beta_{k,n}, from the closed form

    |Z> = Q [ (alpha_0 conj(z)^p |z> - alpha_p/p |z^(p)>) |0>_f
              + |z> sum_{k=1..p} alpha_k z^(p-k) |k>_f ],

or from the two logical-qubit amplitudes (a00, a01, a10, a11) in the
orthonormal bases returned by :func:`qubit_bases`.  a01 vanishes
identically, which is what makes the two-qubit reduction exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import (
    DEFAULT_TAIL_TOL,
    coherent_vector,
    default_n_max,
    derivative_coherent_vector,
    float_factorial,
)
from .errors import DegenerateProfileError, NoRealSolutionError

__all__ = [
    "AlphaProfile",
    "PsusyCoherentState",
    "QubitBases",
    "beta_coefficients",
    "normalization_q",
    "build_state",
    "qubit_bases",
    "qubit_amplitudes",
]

KIND_EXPLICIT = "explicit"
KIND_OPTIMAL = "optimal-constant"
KIND_Z_EXACT = "z-dependent-exact"
_KINDS = (KIND_EXPLICIT, KIND_OPTIMAL, KIND_Z_EXACT)

_JSON_FIELDS = {
    KIND_EXPLICIT: {"p", "kind", "alphas"},
    KIND_OPTIMAL: {"p", "kind", "alpha_p"},
    KIND_Z_EXACT: {"p", "kind", "alpha_p", "m"},
}


def _optimal_alphas(p: int, alpha_p: float) -> np.ndarray:
    """alpha_0 = alpha_p/p and alpha_k = p! alpha_p / (p (p-k)! sqrt(k!))."""
    alphas = np.empty(p + 1)
    alphas[0] = alpha_p / p
    fp = float_factorial(p)
    for k in range(1, p):
        alphas[k] = fp * alpha_p / (p * float_factorial(p - k) * math.sqrt(float_factorial(k)))
    alphas[p] = alpha_p
    return alphas


@dataclass(frozen=True)
class AlphaProfile:
    """Real coefficient profile alpha_0..alpha_p selecting one coherent state.

    Three kinds are supported:

    * ``explicit``: the coefficients are given directly (``alphas``).
    * ``optimal-constant``: the constant family alpha_0 = alpha_p/p,
      alpha_k = p! alpha_p / (p (p-k)! sqrt(k!)), which maximizes the
      z-independent part of the concurrence.
    * ``z-dependent-exact``: as optimal-constant except at index p - m,
      where alpha_{p-m}^2 |z|^(2m) = alpha_p^2 [(p!/p^2 - 1)
      + (p!)^2 |z|^(2m) / (p^2 (m!)^2 (p-m)!)].  The positive root is
      taken; concurrence depends only on the square.  The rule has no real
      solution when the bracket is negative (possible for p <= 3 at small
      |z|) or at z = 0.
    """

    p: int
    kind: str
    alphas: tuple[float, ...] | None = None
    alpha_p: float | None = None
    m: int | None = None

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or self.p < 1:
            raise ValueError(f"order p must be a positive integer, got {self.p!r}")
        if self.kind not in _KINDS:
            raise ValueError(f"unknown profile kind {self.kind!r}; expected one of {_KINDS}")
        if self.kind == KIND_EXPLICIT:
            if self.alphas is None or self.alpha_p is not None or self.m is not None:
                raise ValueError("explicit profiles take 'alphas' only")
            if len(self.alphas) != self.p + 1:
                raise ValueError(
                    f"explicit profile needs p+1={self.p + 1} coefficients, got {len(self.alphas)}"
                )
            arr = np.asarray(self.alphas, dtype=float)
            if not np.all(np.isfinite(arr)):
                raise ValueError("profile coefficients must be finite")
            if np.all(arr == 0.0):
                raise DegenerateProfileError("all alpha_k are zero")
            object.__setattr__(self, "alphas", tuple(float(x) for x in arr))
        else:
            if self.alphas is not None:
                raise ValueError(f"{self.kind} profiles take 'alpha_p', not 'alphas'")
            if self.alpha_p is None or not np.isfinite(self.alpha_p):
                raise ValueError(f"{self.kind} profile needs a finite alpha_p")
            if self.alpha_p == 0.0:
                raise DegenerateProfileError("alpha_p = 0 makes every coefficient zero")
            if self.kind == KIND_Z_EXACT:
                if self.m is None or not 1 <= self.m <= self.p - 1:
                    raise ValueError(
                        f"exceptional index m must satisfy 1 <= m <= p-1, got {self.m!r}"
                    )
            elif self.m is not None:
                raise ValueError("'m' is only meaningful for z-dependent-exact profiles")

    @classmethod
    def explicit(cls, alphas) -> "AlphaProfile":
        return cls(p=len(alphas) - 1, kind=KIND_EXPLICIT, alphas=tuple(alphas))

    @classmethod
    def optimal_constant(cls, p: int, alpha_p: float = 1.0) -> "AlphaProfile":
        return cls(p=p, kind=KIND_OPTIMAL, alpha_p=float(alpha_p))

    @classmethod
    def z_dependent_exact(cls, p: int, m: int, alpha_p: float = 1.0) -> "AlphaProfile":
        return cls(p=p, kind=KIND_Z_EXACT, alpha_p=float(alpha_p), m=int(m))

    def coefficients(self, z_abs: float) -> np.ndarray:
        """Materialize alpha_0..alpha_p; z-dependent kinds resolve at |z|."""
        if self.kind == KIND_EXPLICIT:
            return np.asarray(self.alphas, dtype=float)
        alphas = _optimal_alphas(self.p, self.alpha_p)
        if self.kind == KIND_OPTIMAL:
            return alphas
        p, m = self.p, self.m
        if z_abs == 0.0:
            raise NoRealSolutionError(
                f"z-dependent-exact profile (p={p}, m={m}) is undefined at z = 0"
            )
        fp = float_factorial(p)
        bracket = (fp / p**2 - 1.0) + fp**2 * z_abs ** (2 * m) / (
            p**2 * float_factorial(m) ** 2 * float_factorial(p - m)
        )
        if bracket < 0.0:
            raise NoRealSolutionError(
                f"no real alpha_{p - m} for p={p}, m={m}, |z|={z_abs:.4g}: "
                f"bracket {bracket:.4g} < 0"
            )
        alphas[p - m] = abs(self.alpha_p) * math.sqrt(bracket) / z_abs**m
        return alphas

    def to_dict(self) -> dict:
        """JSON-ready dict; the field set depends on the kind."""
        if self.kind == KIND_EXPLICIT:
            return {"p": self.p, "kind": self.kind, "alphas": list(self.alphas)}
        out = {"p": self.p, "kind": self.kind, "alpha_p": self.alpha_p}
        if self.kind == KIND_Z_EXACT:
            out["m"] = self.m
        return out

    @classmethod
    def from_dict(cls, obj: dict) -> "AlphaProfile":
        """Parse a profile from its JSON object form; unknown fields rejected."""
        if not isinstance(obj, dict):
            raise ValueError(f"profile must be a JSON object, got {type(obj).__name__}")
        kind = obj.get("kind")
        if kind not in _KINDS:
            raise ValueError(f"unknown profile kind {kind!r}; expected one of {_KINDS}")
        expected = _JSON_FIELDS[kind]
        if set(obj) != expected:
            raise ValueError(
                f"profile of kind {kind!r} must have exactly fields {sorted(expected)}, "
                f"got {sorted(obj)}"
            )
        p = obj["p"]
        if not isinstance(p, int) or isinstance(p, bool):
            raise ValueError(f"'p' must be an integer, got {p!r}")
        if kind == KIND_EXPLICIT:
            alphas = obj["alphas"]
            if not isinstance(alphas, list) or not all(
                isinstance(x, (int, float)) and not isinstance(x, bool) for x in alphas
            ):
                raise ValueError("'alphas' must be a list of numbers")
            return cls(p=p, kind=kind, alphas=tuple(float(x) for x in alphas))
        alpha_p = obj["alpha_p"]
        if not isinstance(alpha_p, (int, float)) or isinstance(alpha_p, bool):
            raise ValueError(f"'alpha_p' must be a number, got {alpha_p!r}")
        if kind == KIND_OPTIMAL:
            return cls(p=p, kind=kind, alpha_p=float(alpha_p))
        m = obj["m"]
        if not isinstance(m, int) or isinstance(m, bool):
            raise ValueError(f"'m' must be an integer, got {m!r}")
        return cls(p=p, kind=kind, alpha_p=float(alpha_p), m=m)


def _check_order(p: int, profile: AlphaProfile) -> None:
    if p != profile.p:
        raise ValueError(f"order mismatch: p={p} but profile.p={profile.p}")


def bosonic_weight_sum(p: int, z_abs: float) -> float:
    """sum_{n=0..p-1} (p!)^2 |z|^(2n) / ((n!)^2 (p-n)!), always >= p!."""
    fp = float_factorial(p)
    total = 0.0
    for n in range(p):
        total += fp**2 * z_abs ** (2 * n) / (
            float_factorial(n) ** 2 * float_factorial(p - n)
        )
    return total


def branch_weights(p: int, z_abs: float, alphas: np.ndarray) -> tuple[float, float, float]:
    """The three positive weights whose sum is exp(-|z|^2)/Q^2.

    Returns (A^2, B^2, defect) with
    A^2 = sum alpha_{p-n}^2 |z|^(2n),
    B^2 = (alpha_p/p)^2 * bosonic_weight_sum, and
    defect = (alpha_0 - alpha_p/p)^2 |z|^(2p).
    """
    z2n = z_abs ** (2 * np.arange(p, dtype=float))
    a_sq = float(np.sum(alphas[p - np.arange(p)] ** 2 * z2n))
    b_sq = (alphas[p] / p) ** 2 * bosonic_weight_sum(p, z_abs)
    defect = (alphas[0] - alphas[p] / p) ** 2 * z_abs ** (2 * p)
    return a_sq, b_sq, defect


def normalization_q(p: int, z_abs: float, profile: AlphaProfile) -> float:
    """Normalization factor Q(|z|) of the coherent state.

    Q = exp(-|z|^2/2) / sqrt(A^2 + B^2 + defect); raises when the
    denominator vanishes (e.g. alpha_p = 0 at z = 0).
    """
    _check_order(p, profile)
    alphas = profile.coefficients(z_abs)
    denom = sum(branch_weights(p, z_abs, alphas))
    if denom <= 0.0:
        raise DegenerateProfileError(
            f"normalization denominator vanishes at |z|={z_abs:.4g} for this profile"
        )
    return math.exp(-0.5 * z_abs * z_abs) / math.sqrt(denom)


def beta_coefficients(
    p: int, z: complex, profile: AlphaProfile, n_cut: int
) -> np.ndarray:
    """Expansion coefficients beta_{k,n} of |Z> over |n-k>_b |k>_f.

    Returns a (p+1) x (n_cut+1) array, row k holding beta_{k,n}.  Seeds are
    beta_{0,0} = alpha_0 Q conj(z)^p and beta_{k,k} = alpha_k Q z^(p-k);
    the towers follow beta_{k,n} = z^(n-k)/sqrt((n-k)!) beta_{k,k} for
    k >= 1 and
    beta_{0,n} = -sqrt(n!)/(p (n-p)!) z^(n-p) beta_{p,p}
                 + z^n/sqrt(n!) beta_{0,0},
    the first term vanishing for n < p (reciprocal factorial convention).
    """
    _check_order(p, profile)
    if n_cut < p:
        raise ValueError(f"n_cut={n_cut} must be at least p={p}")
    z = complex(z)
    alphas = profile.coefficients(abs(z))
    q = normalization_q(p, abs(z), profile)

    coh = coherent_vector(z, n_cut + 1)
    beta = np.zeros((p + 1, n_cut + 1), dtype=complex)
    beta_pp = alphas[p] * q
    beta[0] = alphas[0] * q * np.conj(z) ** p * coh
    beta[0] -= (beta_pp / p) * derivative_coherent_vector(z, p, n_cut + 1)
    for k in range(1, p + 1):
        beta[k, k:] = alphas[k] * q * z ** (p - k) * coh[: n_cut + 1 - k]
    return beta


@dataclass(frozen=True)
class PsusyCoherentState:
    """A normalized coherent eigenstate and its two-qubit amplitudes."""

    p: int
    z: complex
    profile: AlphaProfile
    q_norm: float
    n_max: int
    full_vector: np.ndarray
    qubit_amps: tuple[complex, complex, complex, complex]


def build_state(
    p: int,
    z: complex,
    profile: AlphaProfile,
    n_max: int | None = None,
    tail_tol: float | None = DEFAULT_TAIL_TOL,
) -> PsusyCoherentState:
    """Assemble the closed-form coherent state on the truncated tensor space.

    ``n_max`` defaults to the truncation rule of :func:`default_n_max`; the
    tail bound is enforced unless ``tail_tol`` is None (useful only for
    convergence studies).
    """
    _check_order(p, profile)
    z = complex(z)
    if n_max is None:
        n_max = default_n_max(z, p)
    alphas = profile.coefficients(abs(z))
    q = normalization_q(p, abs(z), profile)

    coh = coherent_vector(z, n_max, tail_tol=tail_tol)
    dcoh = derivative_coherent_vector(z, p, n_max)
    columns = np.zeros((n_max, p + 1), dtype=complex)
    columns[:, 0] = alphas[0] * np.conj(z) ** p * coh - (alphas[p] / p) * dcoh
    for k in range(1, p + 1):
        columns[:, k] = alphas[k] * z ** (p - k) * coh
    full = q * columns.reshape(-1)
    full.setflags(write=False)
    amps = qubit_amplitudes(p, z, profile)
    return PsusyCoherentState(int(p), z, profile, q, int(n_max), full, amps)


def qubit_amplitudes(
    p: int, z: complex, profile: AlphaProfile
) -> tuple[complex, complex, complex, complex]:
    """Two-qubit amplitudes (a00, a01, a10, a11) of the coherent state.

    a00 = (alpha_p/p) sqrt(bosonic_weight_sum) / sqrt(D),
    a01 = 0,
    a10 = conj(z)^p (alpha_0 - alpha_p/p) / sqrt(D),
    a11 = A / sqrt(D),
    with D = A^2 + B^2 + defect (so Q exp(|z|^2/2) = 1/sqrt(D) cancels all
    exponentials).  a00 keeps the sign of alpha_p so that the amplitudes
    reconstruct the tensor state exactly; its magnitude is B/sqrt(D).
    """
    _check_order(p, profile)
    z = complex(z)
    alphas = profile.coefficients(abs(z))
    weights = branch_weights(p, abs(z), alphas)
    denom = sum(weights)
    if denom <= 0.0:
        raise DegenerateProfileError(
            f"normalization denominator vanishes at |z|={abs(z):.4g} for this profile"
        )
    inv = 1.0 / math.sqrt(denom)
    a00 = complex((alphas[p] / p) * math.sqrt(bosonic_weight_sum(p, abs(z))) * inv)
    a10 = np.conj(z) ** p * (alphas[0] - alphas[p] / p) * inv
    a11 = complex(math.sqrt(weights[0]) * inv)
    return (a00, 0j, complex(a10), a11)


@dataclass(frozen=True)
class QubitBases:
    """Orthonormal logical-qubit bases: b0/b1 bosonic, f0/f1 parafermionic."""

    b0: np.ndarray
    b1: np.ndarray
    f0: np.ndarray
    f1: np.ndarray


def qubit_bases(
    p: int, z: complex, profile: AlphaProfile, n_max: int | None = None
) -> QubitBases:
    """Build the orthonormal two-dimensional bases occupied by the state.

    b1 is the normalized coherent vector, b0 the normalized component of
    conj(z)^p |z> - |z^(p)> (orthogonal to b1 by the inner-product
    identities), f0 the parafermion vacuum and f1 the normalized
    sum_{k>=1} alpha_k z^(p-k) |k>_f.  Needs some alpha_{k>=1} nonzero at
    this z, otherwise the state is a product with |0>_f and f1 is undefined.
    """
    _check_order(p, profile)
    z = complex(z)
    if n_max is None:
        n_max = default_n_max(z, p)
    alphas = profile.coefficients(abs(z))

    f1_raw = np.zeros(p + 1, dtype=complex)
    f1_raw[1:] = alphas[1:] * z ** (p - np.arange(1, p + 1))
    f1_norm_sq = float(np.sum(alphas[1:] ** 2 * abs(z) ** (2 * (p - np.arange(1, p + 1)))))
    if f1_norm_sq <= 0.0:
        raise DegenerateProfileError(
            "all of alpha_1..alpha_p vanish at this z: the state is a product "
            "with the parafermion vacuum and the f1 basis vector is undefined"
        )

    gauss = math.exp(-0.5 * abs(z) ** 2)
    coh = coherent_vector(z, n_max)
    dcoh = derivative_coherent_vector(z, p, n_max)
    b1 = gauss * coh
    b0 = gauss * (np.conj(z) ** p * coh - dcoh) / math.sqrt(bosonic_weight_sum(p, abs(z)))
    f0 = np.zeros(p + 1, dtype=complex)
    f0[0] = 1.0
    f1 = f1_raw / math.sqrt(f1_norm_sq)
    for arr in (b0, b1, f0, f1):
        arr.setflags(write=False)
    return QubitBases(b0, b1, f0, f1)
