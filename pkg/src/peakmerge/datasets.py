"""Deterministic synthetic benchmark datasets.

The classic 2D clustering benchmarks these mirror are not redistributable
inside this repository, so we generate fixed-seed stand-ins with the same
point counts, cluster counts, and qualitative structure (unbalanced
crescent densities, blobs enclosed by an arc, many dense blobs). Every
generator is seeded and pure, so the files written by `peakmerge synth`
are reproducible byte for byte.
"""

import numpy as np

from .dataset import PointSet


def _arc(rng, count, center, radius, angle_range, radial_sigma, tangential_jitter=0.0):
    angles = rng.uniform(angle_range[0], angle_range[1], size=count)
    if tangential_jitter:
        angles += rng.normal(0.0, tangential_jitter, size=count)
    radii = radius + rng.normal(0.0, radial_sigma, size=count)
    return np.column_stack(
        [center[0] + radii * np.cos(angles), center[1] + radii * np.sin(angles)]
    )


def make_unbalanced_moons(seed: int = 7) -> PointSet:
    """373 points, 2 crescents: one dense and tight, one sparse and wide.

    The dense crescent has several local density maxima, so a plain
    two-center density-peak run keeps failing until the cutoff grows
    large enough to see each crescent as one hump.
    """
    rng = np.random.default_rng(seed)
    angles = np.clip(rng.normal(np.pi * 1.5, np.pi * 0.28, 276), np.pi * 1.05, np.pi * 1.95)
    radii = 11.0 + rng.normal(0.0, 0.55, 276)
    dense = np.column_stack([18.0 + radii * np.cos(angles), 16.0 + radii * np.sin(angles)])
    sparse = _arc(rng, 97, center=(24.0, 20.0), radius=8.0,
                  angle_range=(np.pi * 0.10, np.pi * 0.90), radial_sigma=1.0)
    points = np.vstack([dense, sparse])
    labels = np.concatenate([np.zeros(276, dtype=np.int64), np.ones(97, dtype=np.int64)])
    return PointSet(points=points, truth_labels=labels)


def make_arc_and_blobs(seed: int = 11) -> PointSet:
    """300 points, 3 clusters: two blobs enclosed by a surrounding arc."""
    rng = np.random.default_rng(seed)
    blob_a = rng.normal((-5.5, 0.0), 1.1, size=(110, 2))
    blob_b = rng.normal((5.5, 0.0), 1.1, size=(110, 2))
    arc = _arc(rng, 80, center=(0.0, -1.0), radius=13.0,
               angle_range=(np.pi * 0.05, np.pi * 0.95), radial_sigma=0.45)
    points = np.vstack([blob_a, blob_b, arc])
    labels = np.concatenate(
        [np.zeros(110, dtype=np.int64), np.ones(110, dtype=np.int64), np.full(80, 2, dtype=np.int64)]
    )
    return PointSet(points=points, truth_labels=labels)


def _blob_field(rng, specs):
    chunks = []
    labels = []
    for cid, (count, center, sigma, stretch, angle) in enumerate(specs):
        pts = rng.normal(0.0, 1.0, size=(count, 2))
        pts[:, 0] *= sigma * stretch
        pts[:, 1] *= sigma
        rot = np.array([[np.cos(angle), -np.sin(angle)], [np.sin(angle), np.cos(angle)]])
        pts = pts @ rot.T + np.asarray(center)
        chunks.append(pts)
        labels.append(np.full(count, cid, dtype=np.int64))
    return PointSet(points=np.vstack(chunks), truth_labels=np.concatenate(labels))


def make_blob_field_6(seed: int = 23) -> PointSet:
    """8000 points in 6 elongated blobs of varied density and orientation."""
    rng = np.random.default_rng(seed)
    specs = [
        (1800, (0.0, 0.0), 2.2, 3.0, 0.3),
        (1600, (30.0, 5.0), 1.6, 2.0, -0.8),
        (1500, (10.0, 28.0), 2.8, 1.5, 1.2),
        (1300, (-25.0, 18.0), 1.2, 4.0, 0.0),
        (1000, (-18.0, -22.0), 2.0, 1.0, 0.0),
        (800, (32.0, -20.0), 1.5, 2.5, 0.9),
    ]
    return _blob_field(rng, specs)


def make_blob_field_9(seed: int = 29) -> PointSet:
    """10000 points in 9 blobs of varied density and orientation."""
    rng = np.random.default_rng(seed)
    specs = [
        (1700, (0.0, 0.0), 2.0, 2.5, 0.2),
        (1500, (28.0, 8.0), 1.5, 2.0, -0.6),
        (1400, (8.0, 30.0), 2.4, 1.2, 1.0),
        (1200, (-24.0, 20.0), 1.2, 3.5, 0.1),
        (1100, (-20.0, -20.0), 1.8, 1.0, 0.0),
        (900, (30.0, -22.0), 1.4, 2.0, 0.8),
        (800, (55.0, -2.0), 1.8, 1.5, -0.3),
        (750, (-48.0, 0.0), 1.3, 2.2, 1.4),
        (650, (12.0, -34.0), 1.1, 1.8, -1.1),
    ]
    return _blob_field(rng, specs)


GENERATORS = {
    "moons": make_unbalanced_moons,
    "arcblobs": make_arc_and_blobs,
    "blobs6": make_blob_field_6,
    "blobs9": make_blob_field_9,
}


def write_csv(ps: PointSet, path) -> None:
    """Write points (and labels as the trailing column) as comma-separated text."""
    cols = [ps.points]
    # 17 significant digits round-trips float64 exactly, so loading the
    # file reproduces the in-memory points bit-for-bit
    fmt = ["%.17g"] * ps.dim
    if ps.truth_labels is not None:
        cols.append(ps.truth_labels[:, None].astype(np.float64))
        fmt.append("%d")
    np.savetxt(path, np.hstack(cols), fmt=fmt, delimiter=",")
