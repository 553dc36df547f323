"""Renyi entropy family, purities, and spectrum reconstruction.

The order-n Renyi entropy H_n = log(Tr rho^n)/(1-n) (natural log throughout)
tends to the von Neumann entropy S = -Tr rho log rho as n -> 1.  The limit
is kept as a distinct index kind rather than n = 1 + tiny, because the
entropy itself is fine at n ~ 1 while its onset derivatives are not, and
conflating the two invites exactly that trap.

Knowing the integer purities gamma_k = Tr rho^k for k = 1..d determines the
spectrum: Newton's identities convert the power sums into elementary
symmetric polynomials, whose characteristic polynomial has the eigenvalues
as roots.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InconsistentPuritiesError, InvalidArgumentError
from .qmat import _pow_clamped, clamp_spectrum, hermitian_eig

#: |n - 1| below this is rejected for real indices; use the limit kind instead.
INDEX_ONE_GAP = 1e-9


@dataclass(frozen=True)
class RenyiIndex:
    """Entropy order: a real n > 0 with |n-1| > 1e-9, or the n -> 1 limit."""

    n: float | None = None  # None marks the von Neumann limit

    def __post_init__(self):
        if self.n is not None:
            if not (self.n > 0):
                raise InvalidArgumentError(f"Renyi index must be > 0, got {self.n}")
            if abs(self.n - 1.0) <= INDEX_ONE_GAP:
                raise InvalidArgumentError(
                    "index too close to 1; use the von Neumann limit kind"
                )

    @property
    def is_von_neumann(self) -> bool:
        return self.n is None


VON_NEUMANN = RenyiIndex(None)


def as_index(idx) -> RenyiIndex:
    """Accept a RenyiIndex, a float n, or the string 'vn'."""
    if isinstance(idx, RenyiIndex):
        return idx
    if isinstance(idx, str):
        if idx.lower() in ("vn", "von-neumann", "von_neumann"):
            return VON_NEUMANN
        return RenyiIndex(float(idx))
    return RenyiIndex(float(idx))


def spectrum_of(rho) -> np.ndarray:
    """Clamped eigenvalues of a state, ascending."""
    return clamp_spectrum(hermitian_eig(rho).eigenvalues)


def n_purity(rho, n: float) -> float:
    """gamma_n = Tr rho^n via the eigenvalue map with the clamp rule."""
    if not n > 0:
        raise InvalidArgumentError(f"n-purity requires n > 0, got {n}")
    lam = spectrum_of(rho)
    return float(_pow_clamped(lam, n).sum())


def von_neumann(rho) -> float:
    """S = -sum lam_i log lam_i with 0 log 0 := 0."""
    lam = spectrum_of(rho)
    pos = lam > 0
    return float(-(lam[pos] * np.log(lam[pos])).sum())


def renyi_entropy(rho, idx) -> float:
    """H_n(rho) for a real index, or S(rho) for the von Neumann limit."""
    index = as_index(idx)
    if index.is_von_neumann:
        return von_neumann(rho)
    n = index.n
    return float(np.log(n_purity(rho, n)) / (1.0 - n))


def entropy_from_spectrum(lam, idx) -> float:
    """Entropy of an explicit spectrum; used where eigenvalues are known."""
    index = as_index(idx)
    v = np.asarray(lam, dtype=float)
    pos = v > 0
    if index.is_von_neumann:
        return float(-(v[pos] * np.log(v[pos])).sum())
    n = index.n
    return float(np.log((v[pos] ** n).sum()) / (1.0 - n))


def purities_from_spectrum(lam, d: int | None = None) -> np.ndarray:
    """Power sums gamma_k = sum lam^k for k = 1..d."""
    v = np.asarray(lam, dtype=float)
    if d is None:
        d = v.size
    return np.array([(v**k).sum() for k in range(1, d + 1)])


def spectrum_from_purities(gammas, d: int) -> np.ndarray:
    """Recover the spectrum (descending) from integer purities gamma_1..gamma_d.

    Newton's identities give the elementary symmetric polynomials
        k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} gamma_i,
    and the eigenvalues are the roots of
        x^d - e_1 x^{d-1} + e_2 x^{d-2} - ... + (-1)^d e_d,
    found as companion-matrix eigenvalues.  Roots must be real within 1e-6
    and inside [0, 1] within 1e-6; they are then clamped and renormalized.
    """
    g = np.asarray(gammas, dtype=float)
    if g.size != d:
        raise InvalidArgumentError(f"need purities 1..{d}, got {g.size} values")
    if abs(g[0] - 1.0) > 1e-10:
        raise InconsistentPuritiesError(f"gamma_1 = {g[0]!r} must be 1")
    for k in range(2, d + 1):
        lo = d ** (1 - k) - 1e-9
        if not (lo <= g[k - 1] <= 1 + 1e-9):
            raise InconsistentPuritiesError(
                f"gamma_{k} = {g[k-1]!r} outside [1/d^{k-1}, 1]"
            )

    e = np.zeros(d + 1)
    e[0] = 1.0
    for k in range(1, d + 1):
        acc = 0.0
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * g[i - 1]
        e[k] = acc / k

    coeffs = [(-1) ** k * e[k] for k in range(d + 1)]  # x^d ... constant
    roots = np.roots(coeffs)

    if np.abs(roots.imag).max(initial=0.0) > 1e-6:
        raise InconsistentPuritiesError(
            f"complex roots (max imag {np.abs(roots.imag).max():.3e}); "
            "purities are not consistent with any spectrum"
        )
    real = roots.real
    if real.min() < -1e-6 or real.max() > 1 + 1e-6:
        raise InconsistentPuritiesError(
            f"roots outside [0, 1]: min {real.min():.3e}, max {real.max():.3e}"
        )
    lam = np.clip(real, 0.0, 1.0)
    total = lam.sum()
    if abs(total - 1.0) > 1e-8:
        raise InconsistentPuritiesError(f"clamped roots sum to {total!r}, not 1")
    lam = lam / total
    return np.sort(lam)[::-1]


@dataclass(frozen=True)
class BoundsReport:
    """H_1 vs the lower bounds H_2 and 2 H_2 - H_3."""

    h1: float
    h2: float
    h3: float
    bound1_ok: bool
    bound2_ok: bool


def renyi_bounds_check(rho, slack: float = -1e-10) -> BoundsReport:
    """Check H_1 >= H_2 and H_1 >= 2 H_2 - H_3 (slack tolerance on both)."""
    lam = spectrum_of(rho)
    h1 = entropy_from_spectrum(lam, VON_NEUMANN)
    h2 = entropy_from_spectrum(lam, 2.0)
    h3 = entropy_from_spectrum(lam, 3.0)
    return BoundsReport(
        h1=h1,
        h2=h2,
        h3=h3,
        bound1_ok=bool(h1 - h2 >= slack),
        bound2_ok=bool(h1 - (2 * h2 - h3) >= slack),
    )
