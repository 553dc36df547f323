"""Perturbative onset engine: purity derivatives, durability, exposure.

For a product initial state rho_A (x) rho_B evolving under H = A (x) B, the
first time derivative of every subsystem n-purity vanishes at t = 0, and the
second derivative of the order-n entropy of A is

    Hdd_n(A) = 2 n (Delta B)^2 D_{n,A} / (n - 1),

where the n-durability

    D_{n,A} = -Tr[rho_A^{n-1} [A, rho_A] A] / gamma_{n,A}
            = -(1/gamma_n) sum_{ij} lam_j^{n-1} (lam_i - lam_j) |a_ij|^2

is nonnegative for integer n >= 1 and reduces to the variance (Delta A)^2
for pure states.  The n-exposure E_{n,A} = (Delta A)^2 - D_{n,A} then sets
the leading change of the n-coherent information of the direct channel,

    delta I_n^d = -(n t^2 / (n-1)) (Delta B)^2 E_{n,A}    (B pure),

so positive exposure means the direct channel loses coherent information at
onset.  The n -> 1 limit is finite only for full-rank rho_A; the
epsilon-regularized form and the trace-term scans below map out how it
diverges when eigenvalues approach zero.

Eigenbasis sums use the convention 0^p := 0 for p > 0 and 0^0 := 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionError,
    InvalidArgumentError,
    NumericalFailure,
    RankDeficientStateError,
)
from .qmat import (
    _pow_clamped,
    as_matrix,
    check_hermitian,
    check_square,
    clamp_spectrum,
    hermitian_eig,
)

#: min eigenvalue below this disqualifies the analytic n -> 1 formula.
FULL_RANK_TOL = 1e-8
#: purity underflow guard for regularized denominators.
PURITY_UNDERFLOW = 1e-300


@dataclass(frozen=True)
class ProductHamiltonian:
    """Interaction of the form op_a (x) op_b."""

    op_a: np.ndarray
    op_b: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "op_a", check_hermitian(self.op_a))
        object.__setattr__(self, "op_b", check_hermitian(self.op_b))

    def terms(self) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
        return ((self.op_a, self.op_b),)

    def full(self) -> np.ndarray:
        return np.kron(self.op_a, self.op_b)


@dataclass(frozen=True)
class GeneralHamiltonian:
    """Sum of product terms sum_j op_a[j] (x) op_b[j]; includes free terms."""

    term_list: tuple[tuple[np.ndarray, np.ndarray], ...]

    def __post_init__(self):
        if not self.term_list:
            raise InvalidArgumentError("Hamiltonian needs at least one term")
        checked = tuple(
            (check_hermitian(a), check_hermitian(b)) for a, b in self.term_list
        )
        da = {a.shape[0] for a, _ in checked}
        db = {b.shape[0] for _, b in checked}
        if len(da) != 1 or len(db) != 1:
            raise DimensionError(f"inconsistent term dimensions: A {da}, B {db}")
        object.__setattr__(self, "term_list", checked)

    def terms(self) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
        return self.term_list

    def full(self) -> np.ndarray:
        return sum(np.kron(a, b) for a, b in self.term_list)


def hamiltonian_terms(h) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Accept ProductHamiltonian or GeneralHamiltonian."""
    if isinstance(h, (ProductHamiltonian, GeneralHamiltonian)):
        return h.terms()
    raise InvalidArgumentError(f"not a Hamiltonian: {type(h).__name__}")


def variance(rho, a) -> float:
    """(Delta A)^2 = Tr[rho A^2] - (Tr[rho A])^2."""
    r = as_matrix(rho)
    op = as_matrix(a)
    if check_square(r) != check_square(op):
        raise DimensionError(f"dimension mismatch {r.shape} vs {op.shape}")
    mean = np.trace(r @ op).real
    sq = np.trace(r @ op @ op).real
    return float(sq - mean * mean)


def op_in_eigenbasis(rho, a) -> tuple[np.ndarray, np.ndarray]:
    """Clamped spectrum of rho (ascending) and a_ij = <lam_i| A |lam_j>."""
    r = as_matrix(rho)
    op = as_matrix(a)
    if check_square(r) != check_square(op):
        raise DimensionError(f"dimension mismatch {r.shape} vs {op.shape}")
    eig = hermitian_eig(r)
    lam = clamp_spectrum(eig.eigenvalues)
    u = eig.eigenvectors
    return lam, u.conj().T @ op @ u


def _eigsum_trace_term(lam: np.ndarray, a_eig: np.ndarray, exponent: float) -> float:
    """sum_{ij} lam_j^exponent (lam_i - lam_j) |a_ij|^2 with the clamp rule."""
    w = _pow_clamped(lam, exponent)
    absq = np.abs(a_eig) ** 2
    diff = lam[:, None] - lam[None, :]
    return float((w[None, :] * diff * absq).sum())


def durability(rho, a, n: float) -> float:
    """n-durability D_{n,A}; n real > 1, or the integer n = 1 edge (D = 0)."""
    if n < 1:
        raise InvalidArgumentError(f"durability requires n >= 1, got {n}")
    lam, a_eig = op_in_eigenbasis(rho, a)
    gamma = _pow_clamped(lam, n).sum()
    if gamma < PURITY_UNDERFLOW:
        raise NumericalFailure(f"n-purity underflow: gamma_{n} = {gamma!r}")
    return -_eigsum_trace_term(lam, a_eig, n - 1.0) / gamma


def exposure(rho, a, n: float) -> float:
    """n-exposure E_{n,A} = (Delta A)^2 - D_{n,A}; may be negative."""
    return variance(rho, a) - durability(rho, a, n)


def renyi_second_derivative(rho_a, rho_b, h: ProductHamiltonian, n: float) -> float:
    """Hdd_n(A)|_0 = 2 n (Delta B)^2 D_{n,A} / (n - 1) for H = A (x) B."""
    if not n > 1 + 1e-9:
        raise InvalidArgumentError(f"requires n > 1, got {n}")
    var_b = variance(rho_b, h.op_b)
    d_na = durability(rho_a, h.op_a, n)
    return 2.0 * n * var_b * d_na / (n - 1.0)


def is_pure(rho, atol: float = 1e-10) -> bool:
    lam = clamp_spectrum(hermitian_eig(rho).eigenvalues)
    return bool(lam.max(initial=0.0) >= 1.0 - atol)


def delta_coherent_info(rho_a, rho_b, h: ProductHamiltonian, n: float, t: float) -> float:
    """Leading change delta I_n^d = -(n t^2/(n-1)) (Delta B)^2 E_{n,A}.

    Requires rho_B pure; the impure-environment regime is out of scope.
    """
    if not n > 1 + 1e-9:
        raise InvalidArgumentError(f"requires n > 1, got {n}")
    if not is_pure(rho_b):
        raise InvalidArgumentError("rho_B must be pure (largest eigenvalue >= 1 - 1e-10)")
    var_b = variance(rho_b, h.op_b)
    e_na = exposure(rho_a, h.op_a, n)
    return -(n * t * t / (n - 1.0)) * var_b * e_na


def delta_coefficient(rho_a, rho_b, h: ProductHamiltonian, n: float) -> float:
    """delta I_n^d / t^2 for the configuration (rho_B pure)."""
    return delta_coherent_info(rho_a, rho_b, h, n, 1.0)


def purity_derivatives_general(rho_a, rho_b, h, n: int, which: str) -> tuple[float, float]:
    """(gamma_dot(0), gamma_ddot(0)) of the n-purity of subsystem 'a' or 'b'.

    The Hamiltonian may contain any number of product terms, including free
    ones A (x) I and I (x) B; neither derivative sees the free terms.  The
    first derivative is evaluated from its analytic form (a commutator trace
    that cancels by cyclicity, so the returned value is roundoff-sized), the
    second from the double sum over term pairs.
    """
    if int(n) != n or n < 2:
        raise InvalidArgumentError(f"requires integer n >= 2, got {n}")
    n = int(n)
    terms = hamiltonian_terms(h)
    ra = as_matrix(rho_a)
    rb = as_matrix(rho_b)
    da, db = check_square(ra), check_square(rb)
    if terms[0][0].shape[0] != da or terms[0][1].shape[0] != db:
        raise DimensionError("Hamiltonian terms do not match the state dimensions")

    if which.lower() == "a":
        rho_kept, rho_other = ra, rb
        kept_ops = [a for a, _ in terms]
        other_ops = [b for _, b in terms]
    elif which.lower() == "b":
        rho_kept, rho_other = rb, ra
        kept_ops = [b for _, b in terms]
        other_ops = [a for a, _ in terms]
    else:
        raise InvalidArgumentError(f"which must be 'a' or 'b', got {which!r}")

    rk_pow = np.linalg.matrix_power(rho_kept, n - 1)

    # gamma_dot(0) = i n sum_j Tr[O_j rho_other] Tr[rk^{n-1} [K_j, rho_kept]]
    gdot = 0.0 + 0.0j
    for kj, oj in zip(kept_ops, other_ops):
        c = np.trace(oj @ rho_other)
        gdot += c * np.trace(rk_pow @ (kj @ rho_kept - rho_kept @ kj))
    gdot *= 1j * n

    # gamma_ddot(0): double sum over ordered term pairs (j, k).
    m = len(terms)
    t_other = [np.trace(o @ rho_other) for o in other_ops]
    gddot = 0.0 + 0.0j
    for j in range(m):
        kj = kept_ops[j]
        comm_j = kj @ rho_kept - rho_kept @ kj
        rk_kj = rho_kept @ kj
        for k in range(m):
            kk = kept_ops[k]
            first = t_other[j] * t_other[k] * np.trace(rk_pow @ comm_j @ kk)
            pair = np.trace(other_ops[j] @ other_ops[k] @ rho_other)
            second = pair * np.trace(rk_pow @ (rk_kj @ kk - kk @ rk_kj))
            gddot += first + second
    gddot *= -2.0 * n

    return float(gdot.real), float(gddot.real)


def epsilon_second_derivative(rho_a, variance_b: float, a, eps: float) -> float:
    """Hdd_{1+eps}(A)|_0 = -2(1+eps)(Delta B)^2 Tr[rho^eps [A,rho] A]/(eps gamma_{1+eps})."""
    if not (0.0 < eps < 1.0):
        raise InvalidArgumentError(f"eps must lie in (0, 1), got {eps}")
    lam, a_eig = op_in_eigenbasis(rho_a, a)
    gamma = _pow_clamped(lam, 1.0 + eps).sum()
    if gamma < PURITY_UNDERFLOW:
        raise NumericalFailure(f"gamma_(1+eps) underflow: {gamma!r}")
    trace_term = _eigsum_trace_term(lam, a_eig, eps)
    return -2.0 * (1.0 + eps) * variance_b * trace_term / (eps * gamma)


def vn_second_derivative_fullrank(rho, a, variance_b: float) -> float:
    """Analytic n -> 1 limit, valid only for full-rank states:

    Sdd(A)|_0 = -2 (Delta B)^2 sum_{ij} log(lam_j)(lam_i - lam_j)|a_ij|^2.
    """
    lam, a_eig = op_in_eigenbasis(rho, a)
    if lam.min() < FULL_RANK_TOL:
        raise RankDeficientStateError(
            f"min eigenvalue {lam.min():.3e} < {FULL_RANK_TOL:g}; "
            "use epsilon_second_derivative or an index n > 1"
        )
    absq = np.abs(a_eig) ** 2
    diff = lam[:, None] - lam[None, :]
    total = (np.log(lam)[None, :] * diff * absq).sum()
    return float(-2.0 * variance_b * total)


@dataclass(frozen=True)
class TraceTermPoint:
    """One row of the regularization scan."""

    lambda_min: float
    eps: float
    raw: float
    regularized: float


def qutrit_spectrum_slice(num: int = 101, lambda1_max: float = 0.5) -> list[np.ndarray]:
    """Qutrit spectra (0.5, lam1, 0.5 - lam1) for lam1 on a uniform grid."""
    out = []
    for l1 in np.linspace(0.0, lambda1_max, num):
        out.append(np.array([0.5, l1, 0.5 - l1]))
    return out


def trace_term_scan(spectra, eps_grid, a=None) -> list[TraceTermPoint]:
    """Raw and regularized trace terms over spectra x eps.

    raw = sum_{ij} lam_j^eps (lam_i - lam_j) |a_ij|^2, with |a_ij| := 1 when
    no operator is given; regularized = (1 + eps)/eps * raw.  The matrix
    elements of an explicit operator are taken in the basis in which the
    spectra are written (the states are diagonal there).
    """
    rows = []
    for lam in spectra:
        v = clamp_spectrum(np.asarray(lam, dtype=float))
        if a is None:
            absq = np.ones((v.size, v.size))
        else:
            op = check_hermitian(a)
            if op.shape[0] != v.size:
                raise DimensionError("operator does not match spectrum dimension")
            absq = np.abs(op) ** 2
        for eps in eps_grid:
            w = _pow_clamped(v, float(eps))
            diff = v[:, None] - v[None, :]
            raw = float((w[None, :] * diff * absq).sum())
            rows.append(
                TraceTermPoint(
                    lambda_min=float(v.min()),
                    eps=float(eps),
                    raw=raw,
                    regularized=(1.0 + eps) / eps * raw,
                )
            )
    return rows


@dataclass(frozen=True)
class OnsetReport:
    """All leading-order onset quantities for one (rho_A, rho_B, A (x) B, n)."""

    n: float
    variance_a: float
    variance_b: float
    durability_a: float
    exposure_a: float
    hdd_a: float
    delta_coefficient: float  # delta I_n^d / t^2; nan when rho_B is impure
    op_in_eigenbasis: np.ndarray


def onset_report(rho_a, rho_b, h: ProductHamiltonian, n: float) -> OnsetReport:
    """Assemble the full onset report for a product-Hamiltonian configuration."""
    if not n > 1 + 1e-9:
        raise InvalidArgumentError(f"requires n > 1, got {n}")
    var_a = variance(rho_a, h.op_a)
    var_b = variance(rho_b, h.op_b)
    lam, a_eig = op_in_eigenbasis(rho_a, h.op_a)
    gamma = _pow_clamped(lam, n).sum()
    dur = -_eigsum_trace_term(lam, a_eig, n - 1.0) / gamma
    expo = var_a - dur
    hdd = 2.0 * n * var_b * dur / (n - 1.0)
    if is_pure(rho_b):
        delta = -(n / (n - 1.0)) * var_b * expo
    else:
        delta = float("nan")
    return OnsetReport(
        n=float(n),
        variance_a=var_a,
        variance_b=var_b,
        durability_a=dur,
        exposure_a=expo,
        hdd_a=hdd,
        delta_coefficient=delta,
        op_in_eigenbasis=a_eig,
    )
