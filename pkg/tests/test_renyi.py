import numpy as np
import pytest

from exposure_lab import qmat, renyi
from exposure_lab.errors import InconsistentPuritiesError, InvalidArgumentError
from exposure_lab.sampling import random_density, random_pure_density, random_spectrum


def newton_oracle_purities(spectrum, d):
    """Independent power sums, straight from the spectrum."""
    return [sum(x**k for x in spectrum) for k in range(1, d + 1)]


class TestIndex:
    def test_real_index_bounds(self):
        renyi.RenyiIndex(2.0)
        with pytest.raises(InvalidArgumentError):
            renyi.RenyiIndex(0.0)
        with pytest.raises(InvalidArgumentError):
            renyi.RenyiIndex(1.0 + 1e-12)

    def test_as_index(self):
        assert renyi.as_index("vn").is_von_neumann
        assert renyi.as_index(2).n == 2.0
        assert renyi.as_index(renyi.VON_NEUMANN).is_von_neumann


class TestPurity:
    def test_pure(self, rng):
        rho = random_pure_density(rng, 4)
        for n in (0.5, 1.7, 2.0, 5.0):
            assert abs(renyi.n_purity(rho, n) - 1.0) < 1e-12

    def test_maximally_mixed(self):
        assert abs(renyi.n_purity(np.eye(2) / 2, 2.0) - 0.5) < 1e-15

    def test_power_sum(self):
        assert abs(renyi.n_purity(np.diag([0.75, 0.25]), 2.0) - 0.625) < 1e-15


class TestEntropy:
    def test_pure_is_zero(self, rng):
        rho = random_pure_density(rng, 3)
        for idx in (2.0, 3.0, 0.5, renyi.VON_NEUMANN):
            assert abs(renyi.renyi_entropy(rho, idx)) < 1e-12

    def test_maximally_mixed(self):
        assert abs(renyi.renyi_entropy(np.eye(2) / 2, 2.0) - np.log(2)) < 1e-14
        assert abs(renyi.von_neumann(np.eye(2) / 2) - np.log(2)) < 1e-14

    def test_two_level_values(self):
        rho = np.diag([0.75, 0.25])
        assert abs(renyi.renyi_entropy(rho, 2.0) + np.log(0.625)) < 1e-14
        expected_vn = -(0.75 * np.log(0.75) + 0.25 * np.log(0.25))
        assert abs(renyi.von_neumann(rho) - expected_vn) < 1e-14

    def test_von_neumann_limit(self, rng):
        for _ in range(10):
            rho = random_density(rng, 4, mix=0.3)
            s = renyi.von_neumann(rho)
            for n in (1 + 1e-6, 1 - 1e-6):
                assert abs(renyi.renyi_entropy(rho, n) - s) < 1e-4

    def test_monotone_in_n(self, rng):
        for _ in range(20):
            rho = random_density(rng, int(rng.integers(2, 6)))
            vals = [renyi.renyi_entropy(rho, idx) for idx in (renyi.VON_NEUMANN, 2.0, 3.0, 4.0)]
            assert all(a >= b - 1e-12 for a, b in zip(vals, vals[1:]))

    def test_pure_bipartite_reductions_agree(self, rng):
        # the two reductions of a pure state share their nonzero spectrum
        da, db = 2, 3
        v = rng.normal(size=da * db) + 1j * rng.normal(size=da * db)
        v /= np.linalg.norm(v)
        rho = np.outer(v, v.conj())
        ra = qmat.partial_trace(rho, da, db, "a")
        rb = qmat.partial_trace(rho, da, db, "b")
        for idx in (1.5, 2.0, 3.0, 7.0, renyi.VON_NEUMANN):
            assert abs(renyi.renyi_entropy(ra, idx) - renyi.renyi_entropy(rb, idx)) < 1e-9


class TestSpectrumFromPurities:
    def test_worked_case(self):
        # oracle: the expected spectrum reproduces the given power sums
        assert np.allclose(newton_oracle_purities([0.5, 0.3, 0.2], 3), [1, 0.38, 0.16])
        lam = renyi.spectrum_from_purities([1.0, 0.38, 0.16], 3)
        assert np.abs(lam - [0.5, 0.3, 0.2]).max() < 1e-10

    def test_pure(self):
        lam = renyi.spectrum_from_purities([1.0, 1.0, 1.0], 3)
        assert np.abs(lam - [1.0, 0.0, 0.0]).max() < 1e-8

    def test_maximally_mixed(self):
        lam = renyi.spectrum_from_purities([1.0, 0.5], 2)
        assert np.abs(lam - [0.5, 0.5]).max() < 1e-10

    def test_roundtrip(self, rng):
        for _ in range(100):
            d = int(rng.integers(2, 6))
            spec = random_spectrum(rng, d)
            lam = renyi.spectrum_from_purities(newton_oracle_purities(spec, d), d)
            assert np.abs(lam - spec).max() < 1e-8

    def test_inconsistent(self):
        with pytest.raises(InconsistentPuritiesError):
            renyi.spectrum_from_purities([1.0, 2.0], 2)
        with pytest.raises(InconsistentPuritiesError):
            renyi.spectrum_from_purities([0.7, 0.5], 2)


class TestBounds:
    def test_pure_equalities(self, rng):
        rep = renyi.renyi_bounds_check(random_pure_density(rng, 3))
        assert rep.bound1_ok and rep.bound2_ok
        assert abs(rep.h1) < 1e-12 and abs(rep.h2) < 1e-12 and abs(rep.h3) < 1e-12

    def test_maximally_mixed_equalities(self):
        rep = renyi.renyi_bounds_check(np.eye(2) / 2)
        assert abs(rep.h1 - np.log(2)) < 1e-12
        assert abs(rep.h2 - np.log(2)) < 1e-12
        assert rep.bound1_ok and rep.bound2_ok

    def test_random_sweep(self, rng):
        for _ in range(500):
            rho = random_density(rng, int(rng.integers(2, 6)))
            rep = renyi.renyi_bounds_check(rho)
            assert rep.bound1_ok and rep.bound2_ok
