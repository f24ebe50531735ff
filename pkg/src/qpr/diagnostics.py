"""Rankings, rank correlation, and the damping-factor sweep diagnostics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import classical, linalg, oqw
from .errors import NotConvergedError
from .graph import DiGraph

#: decimal places kept when turning scores into ranks; values closer than
#: this are deliberate ties (e.g. symmetric vertices) and fall back to the
#: deterministic by-id tie-break instead of ranking on round-off noise
RANK_DECIMALS = 12


@dataclass
class RankingComparison:
    """Classical-vs-quantum ranking comparison on one graph."""

    tau: float
    rank_a: np.ndarray
    rank_b: np.ndarray
    top_k_a: list[int]
    top_k_b: list[int]
    pagerank: np.ndarray
    qpagerank: np.ndarray
    pagerank_iterations: int
    walk_steps: int


@dataclass
class AlphaSweepRecord:
    """One damping value: steps to converge plus final-vs-average state
    fidelity and trace distance.  Metric fields are None when the walk ran
    out of steps at this alpha."""

    alpha: float
    steps: int
    fidelity: float | None
    trace_distance: float | None
    converged: bool = True


def rank_vertices(values, decimals: int = RANK_DECIMALS) -> np.ndarray:
    """Ranks 1..n with rank 1 for the largest value.

    Values are rounded to `decimals` places first so that symmetric
    vertices compare equal; exact ties then break by ascending vertex id.
    """
    scores = np.round(np.asarray(values, dtype=float), decimals)
    n = scores.shape[0]
    order = np.lexsort((np.arange(n), -scores))
    ranks = np.empty(n, dtype=np.int64)
    ranks[order] = np.arange(1, n + 1)
    return ranks


def top_k(values, k: int = 5) -> list[int]:
    """Vertex ids of the k best-ranked entries, best first."""
    ranks = rank_vertices(values)
    order = np.argsort(ranks, kind="stable")
    return [int(v) for v in order[: min(k, len(ranks))]]


def _check_permutation(ranks: np.ndarray, name: str) -> np.ndarray:
    r = np.asarray(ranks, dtype=np.int64)
    if r.ndim != 1:
        raise ValueError(f"{name} must be a 1-d rank vector")
    if not np.array_equal(np.sort(r), np.arange(1, r.shape[0] + 1)):
        raise ValueError(f"{name} is not a permutation of 1..{r.shape[0]}")
    return r


def kendall_tau(rank_a, rank_b) -> float:
    """Kendall rank correlation (tau-a) between two tie-free rankings:
    (concordant - discordant) pairs over n(n-1)/2."""
    a = _check_permutation(rank_a, "rank_a")
    b = _check_permutation(rank_b, "rank_b")
    if a.shape != b.shape:
        raise ValueError("rank vectors differ in length")
    n = a.shape[0]
    if n < 2:
        return 1.0
    sign_a = np.sign(a[:, None] - a[None, :])
    sign_b = np.sign(b[:, None] - b[None, :])
    # each unordered pair counted twice in the full outer product
    total = int(np.sum(sign_a * sign_b)) // 2
    return total / (n * (n - 1) / 2)


def compare(g: DiGraph, alpha: float = oqw.DEFAULT_ALPHA,
            epsilon: float = oqw.DEFAULT_EPSILON,
            max_steps: int = oqw.DEFAULT_MAX_STEPS) -> RankingComparison:
    """Run classical PageRank and the quantum walk with the same
    (alpha, epsilon) and correlate the resulting rankings."""
    pr, iters = classical.pagerank(g, alpha, epsilon, max_iters=max_steps)
    walk = oqw.run(g, oqw.WalkParams(alpha, epsilon, max_steps))
    rank_pr = rank_vertices(pr)
    rank_q = rank_vertices(walk.probabilities)
    return RankingComparison(
        tau=kendall_tau(rank_pr, rank_q),
        rank_a=rank_pr, rank_b=rank_q,
        top_k_a=top_k(pr), top_k_b=top_k(walk.probabilities),
        pagerank=pr, qpagerank=walk.probabilities,
        pagerank_iterations=iters, walk_steps=walk.steps)


def average_state(history: Sequence[oqw.WalkState]) -> oqw.WalkState:
    """Blockwise arithmetic mean of a state trajectory."""
    if len(history) == 0:
        raise ValueError("cannot average an empty history")
    shape = history[0].blocks.shape
    acc = np.zeros(shape, dtype=np.complex128)
    for state in history:
        if state.blocks.shape != shape:
            raise ValueError("history contains states of different shapes")
        acc += state.blocks
    return oqw.WalkState(acc / len(history))


def alpha_sweep(g: DiGraph, alphas: Sequence[float],
                epsilon: float = oqw.DEFAULT_EPSILON,
                max_steps: int = oqw.DEFAULT_MAX_STEPS) -> list[AlphaSweepRecord]:
    """For each alpha, run the walk and compare its final state against the
    trajectory average via fidelity and trace distance.

    The trajectory mean is accumulated in a streaming fashion, so the sweep
    never holds more than two full states.  Non-convergence at one alpha
    yields a record with empty metrics; the sweep continues.
    """
    records = []
    for alpha in sorted(alphas):
        try:
            result = oqw.run(g, oqw.WalkParams(alpha, epsilon, max_steps),
                             track_average=True)
        except NotConvergedError as exc:
            records.append(AlphaSweepRecord(
                alpha=alpha, steps=exc.steps, fidelity=None,
                trace_distance=None, converged=False))
            continue
        records.append(AlphaSweepRecord(
            alpha=alpha, steps=result.steps,
            fidelity=linalg.fidelity_blocks(result.average_state, result.final_state),
            trace_distance=linalg.trace_distance_blocks(result.average_state,
                                                        result.final_state)))
    return records


def default_alpha_grid() -> list[float]:
    """0.05 to 0.95 in steps of 0.05, plus the customary 0.85."""
    grid = [round(0.05 * k, 2) for k in range(1, 20)]
    return sorted(set(grid) | {0.85})
