"""Parafermi and truncated-boson operator matrices, coherent vectors.

Conventions used throughout the package:

* Parafermi operators of order p live on a (p+1)-dimensional Fock space.
  Basis vector ``e_k`` (0-based) is the state with k parafermions, which is
  the spin projection m = p/2 - k of the spin-p/2 representation.
* Matrix elements follow the 1-based convention
  ``b[alpha, beta] = C_beta * delta(alpha, beta+1)`` with
  ``C_beta = sqrt(beta * (p - beta + 1))``; storage is 0-based, so the
  annihilator ``b`` carries ``C_{k+1}`` at ``[k+1, k]``.  ``b`` raises the
  parafermion number (lowers m), ``b_dag`` lowers it.
* Bosonic operators are truncated to occupation numbers ``0 .. n_max-1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import TruncationError

__all__ = [
    "ParafermiOps",
    "BosonOps",
    "AlgebraReport",
    "build_parafermi",
    "check_algebra",
    "build_boson",
    "coherent_vector",
    "derivative_coherent_vector",
    "default_n_max",
    "coherent_tail",
    "required_n_max",
    "float_factorial",
]

#: Default bound on the dropped Poisson tail sum_{n >= n_max} |z|^{2n} / n!.
DEFAULT_TAIL_TOL = 1e-14


def float_factorial(n: int) -> float:
    """n! as a float; exact-integer conversion below 171, lgamma beyond."""
    if n < 0:
        raise ValueError(f"factorial of negative {n}")
    if n <= 170:
        return float(math.factorial(n))
    return math.exp(math.lgamma(n + 1))


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class ParafermiOps:
    """Order-p parafermi matrices b, b† and the spin projection J3.

    ``b_dag`` doubles as the SU(2) raising operator J+ and ``b`` as J-.
    """

    p: int
    b: np.ndarray
    b_dag: np.ndarray
    j3: np.ndarray

    @property
    def j_plus(self) -> np.ndarray:
        return self.b_dag

    @property
    def j_minus(self) -> np.ndarray:
        return self.b


@dataclass(frozen=True)
class BosonOps:
    """Truncated bosonic annihilation/creation and number operators."""

    n_max: int
    a: np.ndarray
    a_dag: np.ndarray
    number_op: np.ndarray


def build_parafermi(p: int) -> ParafermiOps:
    """Build the (p+1)x(p+1) parafermi matrices of order p.

    The annihilator has subdiagonal entries C_beta = sqrt(beta*(p-beta+1)),
    beta = 1..p, so b^(p+1) vanishes identically and
    J3 = [b†, b]/2 = diag(p/2, p/2-1, ..., -p/2).
    """
    if not isinstance(p, (int, np.integer)) or p < 1:
        raise ValueError(f"parafermion order must be a positive integer, got {p!r}")
    beta = np.arange(1, p + 1, dtype=float)
    c = np.sqrt(beta * (p - beta + 1.0))
    b = np.diag(c, -1).astype(complex)
    b_dag = b.conj().T.copy()
    j3 = np.diag(p / 2.0 - np.arange(p + 1, dtype=float)).astype(complex)
    return ParafermiOps(int(p), _readonly(b), _readonly(b_dag), _readonly(j3))


@dataclass(frozen=True)
class AlgebraReport:
    """Scale-normalized residuals of the defining operator relations."""

    residuals: dict[str, float]
    tol: float

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol


def _rel_residual(lhs: np.ndarray, rhs: np.ndarray) -> float:
    # Normalized by the relation's own scale: entries of high matrix powers
    # grow like p!, so raw absolute residuals are meaningless across p.
    scale = max(1.0, float(np.max(np.abs(rhs))))
    return float(np.max(np.abs(lhs - rhs))) / scale


def check_algebra(ops: ParafermiOps, tol: float = 1e-12) -> AlgebraReport:
    """Report residuals of the six defining relations of the order-p algebra.

    Checked relations: nilpotency b^(p+1) = 0 (and its adjoint), the double
    commutators [[b†,b],b] = -2b and [[b†,b],b†] = 2b†, the degree-p
    multilinear identity
    ``sum_k b^(p-k) b† b^k = p(p+1)(p+2)/6 * b^(p-1)``,
    and the SU(2) relations [J+,J-] = 2 J3, [J3,J±] = ±J±.

    Residuals are max-norms divided by max(1, max-norm of the right side);
    the caller decides pass/fail against ``tol``.
    """
    p, b, bd, j3 = ops.p, ops.b, ops.b_dag, ops.j3
    zero = np.zeros_like(b)
    comm = bd @ b - b @ bd

    powers = [np.eye(p + 1, dtype=complex)]
    for _ in range(p + 1):
        powers.append(powers[-1] @ b)
    multilinear = sum(powers[p - k] @ bd @ powers[k] for k in range(p + 1))

    residuals = {
        "nilpotency": max(
            _rel_residual(powers[p + 1], zero),
            _rel_residual(np.linalg.matrix_power(bd, p + 1), zero),
        ),
        "double_commutator_b": _rel_residual(comm @ b - b @ comm, -2.0 * b),
        "double_commutator_b_dag": _rel_residual(comm @ bd - bd @ comm, 2.0 * bd),
        "multilinear": _rel_residual(
            multilinear, (p * (p + 1) * (p + 2) / 6.0) * powers[p - 1]
        ),
        "su2_ladder": _rel_residual(bd @ b - b @ bd, 2.0 * j3),
        "su2_j3": max(
            _rel_residual(j3 @ bd - bd @ j3, bd),
            _rel_residual(j3 @ b - b @ j3, -b),
        ),
    }
    return AlgebraReport(residuals, tol)


def build_boson(n_max: int) -> BosonOps:
    """Truncated harmonic-oscillator ladder operators on n_max levels.

    ``a`` carries sqrt(n) on the superdiagonal; the canonical commutator
    [a, a†] = 1 holds exactly on the span of |0> .. |n_max - 2>.
    """
    if not isinstance(n_max, (int, np.integer)) or n_max < 2:
        raise ValueError(f"boson truncation must be an integer >= 2, got {n_max!r}")
    a = np.diag(np.sqrt(np.arange(1, n_max, dtype=float)), 1).astype(complex)
    a_dag = a.conj().T.copy()
    number = np.diag(np.arange(n_max, dtype=float)).astype(complex)
    return BosonOps(int(n_max), _readonly(a), _readonly(a_dag), _readonly(number))


def default_n_max(z: complex, p: int) -> int:
    """Default boson truncation: max(32, ceil(|z|^2 + 10|z| + p + 20)).

    Keeps the dropped Poisson tail below 1e-14 for |z| <= 5, which in turn
    holds every inner-product identity used downstream to 1e-10 or better.
    """
    zabs = abs(z)
    return max(32, math.ceil(zabs * zabs + 10.0 * zabs + p + 20))


def coherent_tail(z_abs: float, n_max: int) -> float:
    """Dropped weight sum_{n >= n_max} |z|^{2n} / n! of a coherent vector."""
    lam = z_abs * z_abs
    if lam == 0.0:
        return 0.0
    # log of the leading term; the ratio test bounds the remainder.
    log_term = n_max * math.log(lam) - math.lgamma(n_max + 1)
    if log_term < -700.0:
        return 0.0
    term = math.exp(log_term)
    total = 0.0
    n = n_max
    while term > total * 1e-18 + 1e-300:
        total += term
        n += 1
        term *= lam / n
    return total


def required_n_max(z_abs: float, tail_tol: float) -> int:
    """Smallest truncation whose dropped tail is below ``tail_tol``."""
    n = 2
    while coherent_tail(z_abs, n) >= tail_tol:
        n += 1
    return n


def _check_tail(z: complex, n_max: int, tail_tol: float | None) -> None:
    if tail_tol is None:
        return
    tail = coherent_tail(abs(z), n_max)
    if tail >= tail_tol:
        raise TruncationError(
            f"truncation n_max={n_max} leaves tail {tail:.3e} >= {tail_tol:.1e} "
            f"at |z|={abs(z):.4g}; need n_max >= {required_n_max(abs(z), tail_tol)}",
            required_n_max=required_n_max(abs(z), tail_tol),
        )


def coherent_vector(z: complex, n_max: int, tail_tol: float | None = None) -> np.ndarray:
    """Unnormalized coherent vector with amplitudes z^n / sqrt(n!).

    Its squared norm is exp(|z|^2) up to the dropped tail.  When
    ``tail_tol`` is given, the truncation is checked against the Poisson
    tail bound and a TruncationError carrying the required n_max is raised
    on failure.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    _check_tail(z, n_max, tail_tol)
    amps = np.empty(n_max, dtype=complex)
    amps[0] = 1.0
    if n_max > 1:
        amps[1:] = np.cumprod(z / np.sqrt(np.arange(1, n_max, dtype=float)))
    return amps


def derivative_coherent_vector(
    z: complex, p: int, n_max: int, tail_tol: float | None = None
) -> np.ndarray:
    """p-th holomorphic derivative of the coherent vector.

    Amplitudes are sqrt(n!)/(n-p)! * z^(n-p) for n >= p and zero below;
    equivalently the n = m+p amplitude is the coherent amplitude at m times
    sqrt((m+1)(m+2)...(m+p)).
    """
    if p < 0:
        raise ValueError(f"derivative order must be >= 0, got {p}")
    if n_max <= p:
        raise ValueError(f"n_max={n_max} must exceed derivative order p={p}")
    _check_tail(z, n_max, tail_tol)
    base = coherent_vector(z, n_max - p)
    m = np.arange(n_max - p, dtype=float)
    rising = np.ones_like(m)
    for j in range(1, p + 1):
        rising *= m + j
    out = np.zeros(n_max, dtype=complex)
    out[p:] = base * np.sqrt(rising)
    return out
