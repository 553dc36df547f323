"""Seeded random states, operators and spectra for property checks.

All randomized verification commands use the counter-based Philox4x32-10
generator, so a (seed, command) pair pins the entire sequence and verdicts
are reproducible run to run.
"""

from __future__ import annotations

import numpy as np


def generator(seed: int) -> np.random.Generator:
    """Philox-backed generator; counter-based, documented for reproducibility."""
    return np.random.Generator(np.random.Philox(seed))


def random_hermitian(rng: np.random.Generator, dim: int, unit_norm: bool = False) -> np.ndarray:
    """GUE-style Hermitian matrix; optionally rescaled to spectral norm 1."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    h = (g + g.conj().T) / 2.0
    if unit_norm:
        h = h / np.abs(np.linalg.eigvalsh(h)).max()
    return h


def random_density(rng: np.random.Generator, dim: int, mix: float = 0.0) -> np.ndarray:
    """Ginibre-induced random state, optionally mixed with I/d for full rank.

    mix = 0 gives the raw Ginibre state; mix in (0, 1) returns
    (1 - mix) rho + mix I/d, which bounds the spectrum away from zero.
    """
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    rho = rho / np.trace(rho).real
    if mix:
        rho = (1.0 - mix) * rho + mix * np.eye(dim) / dim
    return rho


def random_pure_density(rng: np.random.Generator, dim: int) -> np.ndarray:
    """|psi><psi| for a Haar-ish random unit vector."""
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    v = v / np.linalg.norm(v)
    return np.outer(v, v.conj())


def random_spectrum(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Random probability vector, descending."""
    x = rng.dirichlet(np.ones(dim))
    return np.sort(x)[::-1]
