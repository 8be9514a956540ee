import numpy as np
import pytest

from elastic_dtw import distances


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile every jitted kernel once so timed tests measure math only."""
    a = np.array([0.0, 1.0, 2.0])
    b = np.array([1.0, 0.0, 2.0])
    distances.sqed(a, b)
    distances.dtw(a, b)
    distances.cdtw(a, b, 1)
    distances.wdtw(a, b, 0.1)
    distances.adtw(a, b, 0.5)
    distances.distance_ea(distances.DistanceSpec.dtw(), a, b, 1.0)


@pytest.fixture
def toy_series():
    """Three equal-length unit series with one dip each, a step apart."""
    s = np.array([1.0, 1.0, -1.0, 1.0, 1.0, 1.0])
    t = np.array([1.0, 1.0, 1.0, -1.0, 1.0, 1.0])
    u = np.array([1.0, 1.0, 1.0, 1.0, -1.0, 1.0])
    return s, t, u
