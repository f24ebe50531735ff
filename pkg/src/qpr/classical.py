"""Classical Google PageRank by dense power iteration.

Row-vector convention: the rank vector left-multiplies the Google matrix,
x' = x G.  Dangling rows of the hyperlink matrix are uniformized
(stochasticity adjustment) and the whole matrix is damped towards the
uniform rank-one matrix (primitivity adjustment).
"""

from __future__ import annotations

import numpy as np

from .errors import NotConvergedError
from .graph import DiGraph

DEFAULT_ALPHA = 0.85
DEFAULT_EPSILON = 1e-4
DEFAULT_MAX_ITERS = 10000


def hyperlink_matrix(g: DiGraph) -> np.ndarray:
    """Row-substochastic hyperlink matrix H; dangling rows are all zero."""
    h = np.zeros((g.n, g.n))
    for u in range(g.n):
        targets = g.out_adj[u]
        if targets:
            h[u, list(targets)] = 1.0 / len(targets)
    return h


def google_matrix(g: DiGraph, alpha: float = DEFAULT_ALPHA) -> np.ndarray:
    """Row-stochastic Google matrix alpha*S + (1-alpha)/n * J."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    n = g.n
    s = hyperlink_matrix(g)
    for v in g.dangling():
        s[v, :] = 1.0 / n
    return alpha * s + (1.0 - alpha) / n


def pagerank(g: DiGraph, alpha: float = DEFAULT_ALPHA,
             epsilon: float = DEFAULT_EPSILON,
             max_iters: int = DEFAULT_MAX_ITERS) -> tuple[np.ndarray, int]:
    """Power-iterate the Google matrix from the uniform vector.

    Stops when the Euclidean distance between consecutive iterates drops
    below epsilon; returns (rank vector, iterations used).  Raises
    NotConvergedError (carrying the last iterate) if the budget runs out.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if max_iters < 1:
        raise ValueError("max_iters must be at least 1")
    matrix = google_matrix(g, alpha)
    x = np.full(g.n, 1.0 / g.n)
    for k in range(1, max_iters + 1):
        x_next = x @ matrix
        if float(np.linalg.norm(x_next - x)) < epsilon:
            return x_next, k
        x = x_next
    raise NotConvergedError(
        f"pagerank did not converge in {max_iters} iterations",
        last=x, steps=max_iters)
