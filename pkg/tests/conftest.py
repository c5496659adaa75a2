import numpy as np
import pytest

from peakmerge.dataset import PointSet, pairwise_distance


@pytest.fixture
def line_points():
    """Five collinear points at x = 0, 1, 2, 3, 10."""
    return PointSet(points=np.array([[0.0], [1.0], [2.0], [3.0], [10.0]]))


@pytest.fixture
def line_dm(line_points):
    return pairwise_distance(line_points)


def dumbbell_pointset():
    """Two tight 5-point blobs separated by a wide gap along x."""
    blob = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0], [0.5, 0.5]])
    points = np.vstack([blob, blob + [10.0, 0.0]])
    return PointSet(points=points, truth_labels=np.array([0] * 5 + [1] * 5))


@pytest.fixture
def dumbbell():
    return dumbbell_pointset()


@pytest.fixture
def dumbbell_dm(dumbbell):
    return pairwise_distance(dumbbell)


def random_pointset(rng, n=None, dim=2):
    if n is None:
        n = int(rng.integers(5, 60))
    return PointSet(points=rng.uniform(-10, 10, size=(n, dim)))
