import numpy as np
import pytest

from exposure_lab.sampling import generator


@pytest.fixture
def rng():
    return generator(20260810)


def brute_partial_trace(m, dim_a, dim_b, keep):
    """Index-loop partial trace, independent of the library implementation."""
    m = np.asarray(m, complex)
    if keep == "a":
        out = np.zeros((dim_a, dim_a), complex)
        for i in range(dim_a):
            for j in range(dim_a):
                for k in range(dim_b):
                    out[i, j] += m[i * dim_b + k, j * dim_b + k]
    else:
        out = np.zeros((dim_b, dim_b), complex)
        for i in range(dim_b):
            for j in range(dim_b):
                for k in range(dim_a):
                    out[i, j] += m[k * dim_b + i, k * dim_b + j]
    return out
