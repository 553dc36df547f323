"""Exact channel evolution and the light-matter (UDW) closed forms.

The perturbative onset results are verified here against exact dynamics:

* a phase-filter closed form for rho_A(t) when H = A (x) B acts on a product
  state (both operators diagonalized once, every t is then O(d^2));
* a full tripartite simulation ancilla (x) A (x) B, with the ancilla
  purifying A and B starting pure, recording order-n entropies of every
  reduction and the n-coherent informations of the direct and complementary
  channels;
* the qubit + single-field-mode model with H = sigma_z (x) (a + a^dag) from
  the vacuum, whose qubit coherences decay exactly as exp(-2 t^2) (coupling
  absorbed into t), together with closed-form eigenvalue derivatives and the
  closed-form Hdd_n / n-exposure;
* a truncated-Fock oracle for the same model, used as an independent check
  on the closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionError,
    InvalidArgumentError,
    InvalidStateError,
    TruncationError,
)
from .onset import GeneralHamiltonian, ProductHamiltonian, hamiltonian_terms
from .qmat import (
    as_matrix,
    check_density,
    check_square,
    clamp_spectrum,
    hermitian_eig,
    partial_trace,
    tensor_product,
)
from .renyi import RenyiIndex, as_index, entropy_from_spectrum

SIGMA_Z = np.diag([1.0, -1.0]).astype(complex)


# ---------------------------------------------------------------------------
# exact product-Hamiltonian channel (phase-filter closed form)

def product_channel_state(rho_a, rho_b, h: ProductHamiltonian, t: float) -> np.ndarray:
    """rho_A(t) for H = A (x) B on rho_A (x) rho_B, in A's original basis.

    In the eigenbases of A and B the filtered matrix elements are
        rho_A(t)_ij = rho_A,ij * sum_k exp(i t b_k (a_i - a_j)) p_k,
    with p_k the diagonal of rho_B in the B eigenbasis.
    """
    ra = as_matrix(rho_a)
    rb = as_matrix(rho_b)
    eig_a = hermitian_eig(h.op_a)
    eig_b = hermitian_eig(h.op_b)
    if ra.shape[0] != eig_a.eigenvalues.size or rb.shape[0] != eig_b.eigenvalues.size:
        raise DimensionError("state dimensions do not match the Hamiltonian factors")
    ua, ub = eig_a.eigenvectors, eig_b.eigenvectors
    a_vals, b_vals = eig_a.eigenvalues, eig_b.eigenvalues

    ra_eig = ua.conj().T @ ra @ ua
    p_k = np.diag(ub.conj().T @ rb @ ub).real
    diff = a_vals[:, None] - a_vals[None, :]
    phases = np.exp(1j * t * np.multiply.outer(diff, b_vals))  # (i, j, k)
    filt = phases @ p_k
    return ua @ (ra_eig * filt) @ ua.conj().T


# ---------------------------------------------------------------------------
# purification and the tripartite channel simulation

def _fixed_phase(vec: np.ndarray) -> np.ndarray:
    """Rotate a vector's global phase so its largest component is real > 0."""
    k = int(np.argmax(np.abs(vec)))
    ph = vec[k]
    if abs(ph) == 0.0:
        return vec
    return vec * (abs(ph) / ph)


def purify(rho_a) -> np.ndarray:
    """|psi> = sum_i sqrt(lam_i) |i>_ancilla |lam_i>_A on H_anc (x) H_A.

    Eigenvalues are taken descending and eigenvector phases are fixed
    deterministically, so the same state always purifies to the same vector.
    """
    ra = check_density(rho_a)
    d = ra.shape[0]
    eig = hermitian_eig(ra)
    lam = clamp_spectrum(eig.eigenvalues)
    order = np.argsort(lam)[::-1]
    psi = np.zeros(d * d, dtype=complex)
    for slot, idx in enumerate(order):
        if lam[idx] == 0.0:
            continue
        v = _fixed_phase(eig.eigenvectors[:, idx])
        psi[slot * d : (slot + 1) * d] = np.sqrt(lam[idx]) * v
    return psi


@dataclass(frozen=True)
class TripartiteState:
    """Pure state on H_anc (x) H_A (x) H_B with the ancilla purifying A."""

    dims: tuple[int, int, int]
    vector: np.ndarray

    def __post_init__(self):
        d_anc, d_a, d_b = self.dims
        if d_anc != d_a:
            raise DimensionError("purification register must match dim(A)")
        if self.vector.size != d_anc * d_a * d_b:
            raise DimensionError("vector length does not match dims")
        norm = np.linalg.norm(self.vector)
        if abs(norm - 1.0) > 1e-10:
            raise InvalidStateError(f"vector norm {norm!r} is not 1")


def pure_vector(rho, atol: float = 1e-10) -> np.ndarray:
    """Extract the state vector of a pure density matrix (phase fixed)."""
    r = check_density(rho)
    eig = hermitian_eig(r)
    lam = clamp_spectrum(eig.eigenvalues)
    if lam.max() < 1.0 - atol:
        raise InvalidArgumentError(
            f"state is not pure: largest eigenvalue {lam.max()!r}"
        )
    return _fixed_phase(eig.eigenvectors[:, int(np.argmax(lam))])


def tripartite_state(rho_a, psi_b) -> TripartiteState:
    """Initial |psi>_(anc A) (x) |psi_B> for the channel setup."""
    ra = as_matrix(rho_a)
    d_a = check_square(ra)
    vb = pure_vector(psi_b)
    vec = np.kron(purify(ra), vb)
    return TripartiteState(dims=(d_a, d_a, vb.size), vector=vec)


@dataclass(frozen=True)
class TimeSeriesPoint:
    """Entropies and coherent informations at one time sample."""

    t: float
    h_a: float
    h_b: float
    h_b_anc: float
    h_a_anc: float
    i_direct: float
    i_complementary: float
    spectrum_a: np.ndarray  # descending


@dataclass(frozen=True)
class TimeSeries:
    """Exact-evolution record over a time grid at a fixed entropy index."""

    index: RenyiIndex
    points: list[TimeSeriesPoint]


def _reduction_spectra(tensor: np.ndarray):
    """Spectra of the A, B, B+anc and A+anc reductions of a pure state."""
    d_anc, d_a, d_b = tensor.shape
    rho_a = np.einsum("iak,ibk->ab", tensor, tensor.conj())
    rho_b = np.einsum("iaj,iak->jk", tensor, tensor.conj())
    rho_b_anc = np.einsum("iak,jal->ikjl", tensor, tensor.conj()).reshape(
        d_anc * d_b, d_anc * d_b
    )
    rho_a_anc = np.einsum("iak,jbk->iajb", tensor, tensor.conj()).reshape(
        d_anc * d_a, d_anc * d_a
    )
    return tuple(
        clamp_spectrum(np.linalg.eigvalsh(r))
        for r in (rho_a, rho_b, rho_b_anc, rho_a_anc)
    )


def coherent_info_timeseries(rho_a, psi_b, h, n, t_grid) -> TimeSeries:
    """Evolve the tripartite setup and record entropies over t_grid.

    The ancilla is untouched: U(t) = I (x) exp(+i t H_AB).  At every sample
    the direct and complementary n-coherent informations are
    I^d = H_n(A') - H_n(B') and I^c = -I^d.
    """
    index = as_index(n)
    state = tripartite_state(rho_a, psi_b)
    d_anc, d_a, d_b = state.dims
    h_ab = h.full() if isinstance(h, (ProductHamiltonian, GeneralHamiltonian)) else as_matrix(h)
    if h_ab.shape[0] != d_a * d_b:
        raise DimensionError("Hamiltonian does not act on H_A (x) H_B")
    eig = hermitian_eig(h_ab)
    psi_mat = state.vector.reshape(d_anc, d_a * d_b)

    points = []
    for t in t_grid:
        u = (eig.eigenvectors * np.exp(1j * float(t) * eig.eigenvalues)) @ (
            eig.eigenvectors.conj().T
        )
        tensor = (psi_mat @ u.T).reshape(d_anc, d_a, d_b)
        lam_a, lam_b, lam_b_anc, lam_a_anc = _reduction_spectra(tensor)
        h_a = entropy_from_spectrum(lam_a, index)
        h_b = entropy_from_spectrum(lam_b, index)
        points.append(
            TimeSeriesPoint(
                t=float(t),
                h_a=h_a,
                h_b=h_b,
                h_b_anc=entropy_from_spectrum(lam_b_anc, index),
                h_a_anc=entropy_from_spectrum(lam_a_anc, index),
                i_direct=h_a - h_b,
                i_complementary=h_b - h_a,
                spectrum_a=np.sort(lam_a)[::-1],
            )
        )
    return TimeSeries(index=index, points=points)


# ---------------------------------------------------------------------------
# UDW qubit + single mode: closed forms

@dataclass(frozen=True)
class UdwQubitParams:
    """Initial qubit state delta |z+><z+| + alpha |z+><z-| + h.c. + (1-delta)|z-><z-|."""

    delta: float
    alpha: complex

    def __post_init__(self):
        if not (0.0 <= self.delta <= 1.0):
            raise InvalidStateError(f"delta must lie in [0, 1], got {self.delta}")
        bound = self.delta - self.delta**2
        if abs(self.alpha) ** 2 > bound + 1e-12:
            raise InvalidStateError(
                f"|alpha|^2 = {abs(self.alpha)**2!r} exceeds delta - delta^2 = {bound!r}"
            )

    @classmethod
    def from_bloch(cls, a_x: float, a_y: float, a_z: float) -> "UdwQubitParams":
        """delta = (1 + a_z)/2, alpha = (a_x - i a_y)/2."""
        if a_x * a_x + a_y * a_y + a_z * a_z > 1.0 + 1e-12:
            raise InvalidStateError("Bloch vector longer than 1")
        return cls(delta=(1.0 + a_z) / 2.0, alpha=(a_x - 1j * a_y) / 2.0)

    def to_bloch(self) -> tuple[float, float, float]:
        return (
            2.0 * self.alpha.real,
            -2.0 * self.alpha.imag,
            2.0 * self.delta - 1.0,
        )

    def matrix(self) -> np.ndarray:
        return np.array(
            [[self.delta, self.alpha], [np.conj(self.alpha), 1.0 - self.delta]],
            dtype=complex,
        )


def udw_qubit_state(p: UdwQubitParams, t: float) -> np.ndarray:
    """Exact qubit state: diagonal frozen, coherences damped by exp(-2 t^2)."""
    damp = np.exp(-2.0 * t * t)
    return np.array(
        [
            [p.delta, p.alpha * damp],
            [np.conj(p.alpha) * damp, 1.0 - p.delta],
        ],
        dtype=complex,
    )


@dataclass(frozen=True)
class UdwEigenRecord:
    """lambda_+/-(t) of the UDW qubit with first and second derivatives."""

    t: float
    lambda_plus: float
    lambda_minus: float
    d_lambda: tuple[float, float]
    dd_lambda: tuple[float, float]


DEGENERATE_GAP = 1e-12


def udw_eigen(p: UdwQubitParams, t: float) -> UdwEigenRecord:
    """Closed-form eigenvalues and derivatives of the evolving qubit state.

    At the maximally mixed point the spectrum is degenerate and all
    derivatives vanish identically (that point only occurs at alpha = 0).
    """
    a2 = abs(p.alpha) ** 2
    damp = np.exp(-4.0 * t * t)
    g = 1.0 - 4.0 * (p.delta - p.delta**2 - a2 * damp)
    g = max(g, 0.0)
    r = np.sqrt(g)
    lam_p = (1.0 + r) / 2.0
    lam_m = (1.0 - r) / 2.0
    if r < DEGENERATE_GAP:
        return UdwEigenRecord(t, lam_p, lam_m, (0.0, 0.0), (0.0, 0.0))
    d_mag = 8.0 * a2 * t * damp / r
    dd_mag = 8.0 * a2 * damp * (1.0 - 8.0 * t * t) / r + 128.0 * a2 * a2 * t * t * damp**2 / g**1.5
    return UdwEigenRecord(
        t=float(t),
        lambda_plus=lam_p,
        lambda_minus=lam_m,
        d_lambda=(-d_mag, d_mag),
        dd_lambda=(-dd_mag, dd_mag),
    )


def udw_closed_forms(p: UdwQubitParams, n: float) -> tuple[float, float]:
    """(Hdd_n, E_n) of the qubit from the t = 0 eigenvalues lambda_+/-.

    Hdd_n = -8 n |alpha|^2 (lm^(n-1) - lp^(n-1))
            / ((n-1)(lp - lm)(lm^n + lp^n)),
    E_n   = 4(delta - delta^2)
            + 4 |alpha|^2 (lm^(n-1) - lp^(n-1)) / ((lp - lm)(lm^n + lp^n)).
    """
    if not n > 1 + 1e-9:
        raise InvalidArgumentError(f"requires n > 1, got {n}")
    rec = udw_eigen(p, 0.0)
    lp, lm = rec.lambda_plus, rec.lambda_minus
    base = 4.0 * (p.delta - p.delta**2)
    if lp - lm < DEGENERATE_GAP:
        return 0.0, base
    a2 = abs(p.alpha) ** 2
    num = lm ** (n - 1.0) - lp ** (n - 1.0)
    den = (lp - lm) * (lm**n + lp**n)
    hdd = -8.0 * n * a2 * num / ((n - 1.0) * den)
    expo = base + 4.0 * a2 * num / den
    return float(hdd), float(expo)


# ---------------------------------------------------------------------------
# truncated-Fock oracle

@dataclass(frozen=True)
class FockTruncation:
    """First `levels` Fock states of the mode, with the annihilation matrix."""

    levels: int
    annihilation: np.ndarray


def fock_truncation(levels: int) -> FockTruncation:
    if levels < 2:
        raise InvalidArgumentError(f"need at least 2 Fock levels, got {levels}")
    a = np.zeros((levels, levels), dtype=complex)
    for k in range(1, levels):
        a[k - 1, k] = np.sqrt(k)
    return FockTruncation(levels=levels, annihilation=a)


def _fock_evolved_qubit(p: UdwQubitParams, trunc: FockTruncation, t: float) -> np.ndarray:
    n = trunc.levels
    x = trunc.annihilation + trunc.annihilation.conj().T
    h = tensor_product(SIGMA_Z, x)
    vac = np.zeros((n, n), dtype=complex)
    vac[0, 0] = 1.0
    rho0 = tensor_product(p.matrix(), vac)
    eig = hermitian_eig(h)
    u = (eig.eigenvectors * np.exp(1j * t * eig.eigenvalues)) @ eig.eigenvectors.conj().T
    rho_t = u @ rho0 @ u.conj().T
    return partial_trace(rho_t, 2, n, keep="a")


CONVERGENCE_MARGIN = 10


def fock_udw_oracle(
    p: UdwQubitParams, trunc: FockTruncation, t: float, check_convergence: bool = True
) -> np.ndarray:
    """Qubit reduction of the dense sigma_z (x) (a + a^dag) evolution.

    Displacements grow like 2t, so the default 40 levels comfortably cover
    t <= 1; the result is compared against a (levels + 10) run and a
    disagreement above 1e-6 raises TruncationError.
    """
    out = _fock_evolved_qubit(p, trunc, t)
    if check_convergence:
        bigger = fock_truncation(trunc.levels + CONVERGENCE_MARGIN)
        ref = _fock_evolved_qubit(p, bigger, t)
        dev = np.abs(out - ref).max()
        if dev > 1e-6:
            raise TruncationError(
                f"Fock truncation not converged at N={trunc.levels}: "
                f"N vs N+{CONVERGENCE_MARGIN} deviation {dev:.3e}"
            )
    return out


# ---------------------------------------------------------------------------
# UDW exact time series (the qubit entropy evolution, including n -> 1)

def udw_entropy_timeseries(p: UdwQubitParams, n, t_grid) -> TimeSeries:
    """Exact entropy/coherent-information series for the UDW setup.

    The ancilla purifying the qubit never interacts, and the interaction is
    diagonal in the sigma_z factor, so the qubit+ancilla state evolves in
    closed form: matrix elements between opposite sigma_z sectors pick up
    exp(-2 t^2), everything else is frozen.  The field entropy equals the
    qubit+ancilla entropy (the tripartite state is pure), which gives the
    coherent informations without any mode truncation.
    """
    index = as_index(n)
    rho_q = p.matrix()
    psi = purify(rho_q)  # ancilla (x) qubit, dim 4
    rho_anc_q = np.outer(psi, psi.conj())
    s = np.array([1.0, -1.0])
    sz_of_index = np.tile(s, 2)  # qubit slot is the inner factor
    gap = sz_of_index[:, None] - sz_of_index[None, :]

    points = []
    for t in t_grid:
        tt = float(t)
        damp = np.exp(-(tt * tt) * (gap**2) / 2.0)
        rho_t = rho_anc_q * damp
        lam_anc_q = clamp_spectrum(np.linalg.eigvalsh(rho_t))
        rho_qt = udw_qubit_state(p, tt)
        lam_q = clamp_spectrum(np.linalg.eigvalsh(rho_qt))
        h_a = entropy_from_spectrum(lam_q, index)
        h_b = entropy_from_spectrum(lam_anc_q, index)
        points.append(
            TimeSeriesPoint(
                t=tt,
                h_a=h_a,
                h_b=h_b,
                h_b_anc=h_a,
                h_a_anc=h_b,
                i_direct=h_a - h_b,
                i_complementary=h_b - h_a,
                spectrum_a=np.sort(lam_q)[::-1],
            )
        )
    return TimeSeries(index=index, points=points)
