"""Paired-comparison rating model: incidence matrix and ridge estimation.

Each comparison record (i, j, r) is one observation with expectation
v_i - v_j. The ridge estimate (lambda*I + X^T X)^{-1} X^T r reuses the
regularized-Laplacian machinery: X^T X is the Laplacian of the comparison
multigraph and X^T r collects each item's net comparison results.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .graph import _components


@dataclass
class ComparisonSet:
    n_items: int
    records: list

    def __post_init__(self):
        if not self.records:
            raise ValueError("at least one comparison is required")
        for i, j, _ in self.records:
            if i == j:
                raise ValueError("item compared with itself: %d" % i)
            if not (0 <= i < self.n_items and 0 <= j < self.n_items):
                raise ValueError("item id out of range in record (%d, %d)" % (i, j))

    def is_connected(self) -> bool:
        edges = [(i, j, 1.0) for i, j, _ in self.records]
        return len(_components(self.n_items, edges)) == 1


def load_comparisons(source) -> ComparisonSet:
    """Parse "i j r" lines; '#' starts a comment."""
    if isinstance(source, (str, bytes)) or hasattr(source, "__fspath__"):
        with open(source, "r", encoding="utf-8") as fh:
            return load_comparisons(fh)
    records = []
    max_item = -1
    for lineno, raw in enumerate(source, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError("line %d: expected 'i j r'" % lineno)
        i, j, r = int(parts[0]), int(parts[1]), float(parts[2])
        records.append((i, j, r))
        max_item = max(max_item, i, j)
    if not records:
        raise ValueError("empty comparison file")
    return ComparisonSet(n_items=max_item + 1, records=records)


def incidence_matrix(c: ComparisonSet) -> np.ndarray:
    """M x N design matrix: row k has +1 at i, -1 at j for record (i, j, r)."""
    x = np.zeros((len(c.records), c.n_items))
    for row, (i, j, _) in enumerate(c.records):
        x[row, i] = 1.0
        x[row, j] = -1.0
    return x


def comparison_laplacian(c: ComparisonSet) -> np.ndarray:
    """X^T X without materializing X: Laplacian whose (i, j) off-diagonal is
    minus the number of comparisons between i and j."""
    l = np.zeros((c.n_items, c.n_items))
    for i, j, _ in c.records:
        l[i, i] += 1.0
        l[j, j] += 1.0
        l[i, j] -= 1.0
        l[j, i] -= 1.0
    return l


def net_results(c: ComparisonSet) -> np.ndarray:
    """s = X^T r: per-item sum of wins minus losses."""
    s = np.zeros(c.n_items)
    for i, j, r in c.records:
        s[i] += r
        s[j] -= r
    return s


def ridge_estimate(c: ComparisonSet, lam: float) -> np.ndarray:
    """Ridge estimate (lambda*I + X^T X)^{-1} X^T r of the item values.

    Equals the regularized-Laplacian kernel at beta = 1/lambda applied to
    beta * X^T r. A disconnected comparison multigraph leaves the values
    identifiable only per component; a warning is emitted and the estimate
    is still returned (lambda keeps the system nonsingular).
    """
    if lam <= 0:
        raise ValueError("ridge parameter lambda must be positive")
    if not c.is_connected():
        warnings.warn(
            "comparison multigraph is disconnected; item values are only "
            "comparable within a connected component",
            stacklevel=2,
        )
    l = comparison_laplacian(c)
    s = net_results(c)
    op = lam * np.eye(c.n_items) + l
    return scipy.linalg.cho_solve(scipy.linalg.cho_factor(op), s)


def bayes_beta(sigma1_sq: float, sigma2_sq: float) -> float:
    """Regularization strength sigma1^2 / sigma2^2 that makes the ridge
    estimator the best linear predictor under the Bayesian reading of the
    comparison model."""
    if sigma1_sq <= 0 or sigma2_sq <= 0:
        raise ValueError("variances must be positive")
    return sigma1_sq / sigma2_sq
