"""Clustering quality metrics against ground truth."""

import json
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment


def contingency_table(pred: np.ndarray, truth: np.ndarray) -> np.ndarray:
    """Counts[i][j] = points with predicted id i and truth id j (ids densified)."""
    pred = np.asarray(pred)
    truth = np.asarray(truth)
    if pred.shape != truth.shape:
        raise ValueError("label vectors must have equal length")
    _, pi = np.unique(pred, return_inverse=True)
    _, ti = np.unique(truth, return_inverse=True)
    table = np.zeros((pi.max() + 1, ti.max() + 1), dtype=np.int64)
    np.add.at(table, (pi, ti), 1)
    return table


def best_match_accuracy(pred: np.ndarray, truth: np.ndarray) -> float:
    """Fraction of points matched under the best cluster-id permutation."""
    table = contingency_table(pred, truth)
    rows, cols = linear_sum_assignment(table, maximize=True)
    return float(table[rows, cols].sum()) / float(table.sum())


def adjusted_rand_index(pred: np.ndarray, truth: np.ndarray) -> float:
    """ARI from the contingency table (chance-corrected pair agreement)."""
    table = contingency_table(pred, truth)
    n = table.sum()

    def comb2(x):
        return x * (x - 1) / 2.0

    sum_cells = comb2(table).sum()
    sum_rows = comb2(table.sum(axis=1)).sum()
    sum_cols = comb2(table.sum(axis=0)).sum()
    expected = sum_rows * sum_cols / comb2(n)
    max_index = (sum_rows + sum_cols) / 2.0
    if max_index == expected:
        return 1.0
    return float((sum_cells - expected) / (max_index - expected))


@dataclass(frozen=True)
class EvalReport:
    accuracy: float
    ari: float
    clusters_found: int
    clusters_expected: int
    confusion: list[list[int]]

    def to_json(self) -> str:
        return json.dumps(
            {
                "accuracy": self.accuracy,
                "ari": self.ari,
                "clusters_found": self.clusters_found,
                "clusters_expected": self.clusters_expected,
                "confusion": self.confusion,
            }
        )


def evaluate_labels(pred: np.ndarray, truth: np.ndarray) -> EvalReport:
    table = contingency_table(pred, truth)
    return EvalReport(
        accuracy=best_match_accuracy(pred, truth),
        ari=adjusted_rand_index(pred, truth),
        clusters_found=int(table.shape[0]),
        clusters_expected=int(table.shape[1]),
        confusion=table.tolist(),
    )
