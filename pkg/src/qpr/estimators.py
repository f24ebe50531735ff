"""Scikit-learn style estimators wrapping the two rankers.

Both estimators fit on a graph - a DiGraph, a square adjacency matrix, or
an iterable of (u, v) arc pairs - and expose the learned rank vector as
fitted attributes, mirroring how graph models elsewhere in the ecosystem
behave (fit once, then read attributes).
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator

from . import classical, oqw
from .diagnostics import rank_vertices
from .graph import DiGraph


def as_digraph(X) -> DiGraph:
    """Coerce estimator input into a DiGraph.

    Accepts a DiGraph (returned as-is), a square array-like adjacency
    matrix (nonzero entry [u, v] means an arc u -> v; the diagonal must be
    zero), or an iterable of (u, v) pairs.
    """
    if isinstance(X, DiGraph):
        return X
    arr = np.asarray(X)
    if arr.ndim == 2 and arr.shape[0] == arr.shape[1] and arr.shape[0] > 2:
        return _from_adjacency(arr)
    if arr.ndim == 2 and arr.shape[1] == 2 and np.issubdtype(arr.dtype, np.integer):
        arcs = [(int(u), int(v)) for u, v in arr]
        return DiGraph(1 + max(max(u, v) for u, v in arcs), arcs)
    if arr.ndim == 2 and arr.shape[0] == arr.shape[1]:
        # ambiguous small square: treat as adjacency
        return _from_adjacency(arr)
    raise ValueError(
        "X must be a DiGraph, a square adjacency matrix, or an (m, 2) arc list")


def _from_adjacency(arr: np.ndarray) -> DiGraph:
    if np.any(np.asarray(arr).diagonal() != 0):
        raise ValueError("adjacency matrix must have a zero diagonal (no self-loops)")
    us, vs = np.nonzero(arr)
    return DiGraph(arr.shape[0], zip(us.tolist(), vs.tolist()))


class _RankerMixin:
    def _finalize(self, scores: np.ndarray, steps: int):
        self.scores_ = scores
        self.ranking_ = rank_vertices(scores)
        self.n_iter_ = steps
        return self

    def fit_predict(self, X, y=None) -> np.ndarray:
        """Fit on the graph and return the per-vertex score vector."""
        return self.fit(X, y).scores_


class ClassicalPageRank(BaseEstimator, _RankerMixin):
    """Google PageRank as an estimator.

    Parameters mirror the functional API: damping factor alpha, Euclidean
    stopping tolerance epsilon, and the iteration budget.  After fit the
    scores are in ``scores_``, the 1-based ranking in ``ranking_`` and the
    iteration count in ``n_iter_``.
    """

    def __init__(self, alpha: float = classical.DEFAULT_ALPHA,
                 epsilon: float = classical.DEFAULT_EPSILON,
                 max_steps: int = classical.DEFAULT_MAX_ITERS):
        self.alpha = alpha
        self.epsilon = epsilon
        self.max_steps = max_steps

    def fit(self, X, y=None):
        g = as_digraph(X)
        scores, iters = classical.pagerank(g, self.alpha, self.epsilon,
                                           self.max_steps)
        return self._finalize(scores, iters)


class QuantumPageRank(BaseEstimator, _RankerMixin):
    """Open-quantum-walk PageRank as an estimator.

    Same interface as ClassicalPageRank; ``n_iter_`` is the number of walk
    steps until the probability vector stabilized.
    """

    def __init__(self, alpha: float = oqw.DEFAULT_ALPHA,
                 epsilon: float = oqw.DEFAULT_EPSILON,
                 max_steps: int = oqw.DEFAULT_MAX_STEPS):
        self.alpha = alpha
        self.epsilon = epsilon
        self.max_steps = max_steps

    def fit(self, X, y=None):
        g = as_digraph(X)
        result = oqw.run(g, oqw.WalkParams(self.alpha, self.epsilon,
                                           self.max_steps))
        self.converged_ = result.converged
        return self._finalize(result.probabilities, result.steps)
