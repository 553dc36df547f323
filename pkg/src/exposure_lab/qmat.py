"""Dense complex matrix core for small quantum systems.

Everything downstream (entropies, onset derivatives, channel evolution)
reduces to a handful of operations on dense complex matrices: Kronecker
products, partial traces, Hermitian eigendecompositions, fractional matrix
powers of density matrices, commutators, and exact unitary evolution
rho(t) = exp(+itH) rho exp(-itH).

Dimensions stay small (<= ~100 after bosonic truncation), so all paths are
dense and eigendecomposition-based.  All functions are pure; arrays are
treated as immutable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionError,
    InvalidArgumentError,
    InvalidOperatorError,
    InvalidStateError,
    NumericalFailure,
)

# Hermiticity is relative to the largest entry; the clamp window separates
# roundoff negatives (tolerated, zeroed) from genuinely invalid spectra.
HERMITICITY_RTOL = 1e-12
EIG_CLAMP_NEGATIVE = -1e-10
EIG_CLAMP_ZERO = 1e-12
TRACE_ATOL = 1e-10


def as_matrix(m) -> np.ndarray:
    """Coerce to a 2-D complex ndarray with finite entries."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got ndim={a.ndim}")
    if not np.all(np.isfinite(a)):
        raise InvalidArgumentError("matrix contains non-finite entries")
    return a


def check_square(m: np.ndarray) -> int:
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"matrix is not square: shape {m.shape}")
    return m.shape[0]


def check_hermitian(m, rtol: float = HERMITICITY_RTOL) -> np.ndarray:
    """Validate ||M - M^dag||_max <= rtol * ||M||_max and return M."""
    a = as_matrix(m)
    check_square(a)
    scale = max(np.abs(a).max(), 1.0)
    dev = np.abs(a - a.conj().T).max()
    if dev > rtol * scale:
        raise InvalidOperatorError(
            f"matrix is not Hermitian: max deviation {dev:.3e} (scale {scale:.3e})"
        )
    return a


def clamp_spectrum(vals: np.ndarray) -> np.ndarray:
    """Zero out roundoff-level eigenvalues; reject genuine negatives.

    Values in [-1e-10, 1e-12] are set to 0; anything below -1e-10 means the
    input was not a valid state and raises.
    """
    v = np.asarray(vals, dtype=float)
    if v.size and v.min() < EIG_CLAMP_NEGATIVE:
        raise InvalidStateError(
            f"spectrum has eigenvalue {v.min():.3e} below {EIG_CLAMP_NEGATIVE:g}"
        )
    out = v.copy()
    out[out < EIG_CLAMP_ZERO] = 0.0
    return out


def check_density(rho, atol: float = TRACE_ATOL) -> np.ndarray:
    """Validate a density matrix: Hermitian, unit trace, spectrum >= -1e-10."""
    try:
        a = check_hermitian(rho)
    except InvalidOperatorError as exc:
        raise InvalidStateError(str(exc)) from exc
    tr = np.trace(a).real
    if abs(tr - 1.0) > atol:
        raise InvalidStateError(f"trace {tr!r} is not 1 within {atol:g}")
    clamp_spectrum(np.linalg.eigvalsh(a))
    return a


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues (ascending) and eigenvector columns of a Hermitian matrix."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_eig(h) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix, ascending eigenvalues."""
    a = check_hermitian(h)
    try:
        vals, vecs = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails here
        raise NumericalFailure(f"eigendecomposition failed: {exc}") from exc
    return EigenDecomposition(vals, vecs)


def tensor_product(m1, m2) -> np.ndarray:
    """Kronecker product; first factor indexes the outer blocks."""
    return np.kron(as_matrix(m1), as_matrix(m2))


def partial_trace(m, dim_a: int, dim_b: int, keep: str) -> np.ndarray:
    """Trace out one tensor factor of a (dim_a*dim_b)-square matrix.

    keep='a' returns the dim_a reduction, keep='b' the dim_b one.
    """
    a = as_matrix(m)
    d = check_square(a)
    if dim_a <= 0 or dim_b <= 0 or d != dim_a * dim_b:
        raise DimensionError(
            f"matrix of dim {d} does not factor as {dim_a} x {dim_b}"
        )
    which = keep.lower()
    r = a.reshape(dim_a, dim_b, dim_a, dim_b)
    if which == "a":
        return np.einsum("ikjk->ij", r)
    if which == "b":
        return np.einsum("kikj->ij", r)
    raise InvalidArgumentError(f"keep must be 'a' or 'b', got {keep!r}")


def _pow_clamped(vals: np.ndarray, p: float) -> np.ndarray:
    """Eigenvalue power with the 0^p := 0 (p > 0) and 0^0 := 1 conventions."""
    v = clamp_spectrum(vals)
    if p == 0.0:
        return np.ones_like(v)
    out = np.zeros_like(v)
    pos = v > 0
    out[pos] = v[pos] ** p
    return out


def matrix_power(rho, p: float) -> np.ndarray:
    """rho^p via eigendecomposition, with sub-1e-12 eigenvalues clamped to 0."""
    if p < 0:
        raise InvalidArgumentError(f"matrix_power requires p >= 0, got {p}")
    eig = hermitian_eig(rho)
    lam = _pow_clamped(eig.eigenvalues, p)
    u = eig.eigenvectors
    return (u * lam) @ u.conj().T


def commutator(x, y) -> np.ndarray:
    """[X, Y] = XY - YX for equal square dimensions."""
    a, b = as_matrix(x), as_matrix(y)
    if check_square(a) != check_square(b):
        raise DimensionError(f"dimension mismatch {a.shape} vs {b.shape}")
    return a @ b - b @ a


def evolve(rho0, h, t: float) -> np.ndarray:
    """Exact evolution exp(+itH) rho0 exp(-itH) via eigendecomposition of H."""
    r0 = as_matrix(rho0)
    eig = hermitian_eig(h)
    if r0.shape[0] != eig.eigenvalues.shape[0] or r0.shape[0] != r0.shape[1]:
        raise DimensionError(
            f"state shape {r0.shape} does not match Hamiltonian dim {eig.eigenvalues.shape[0]}"
        )
    u = eig.eigenvectors
    phase = np.exp(1j * t * eig.eigenvalues)
    ut = (u * phase) @ u.conj().T
    return ut @ r0 @ ut.conj().T
