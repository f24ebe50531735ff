"""Discrete-time open quantum walk with damping, and its rank fixed point.

The walker's state is block-diagonal: one n-by-n Hermitian PSD coin block
per vertex, total trace 1.  One step conjugates each source block by the
coin attached to each of its out-arcs (a phase-scaled cyclic shift, so a
conjugation costs O(n^2) instead of a dense product), keeps an identity
self-coin, and mixes in the uniform teleportation average.  The per-vertex
occupation probability is the trace of the block; the walk's rank vector is
the limit of those traces.

Two independent cross-checks of the same dynamics live here as well: the
induced Markov matrix that the traces obey exactly, and a literal
full-space channel built from Kronecker products (small n only).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import NotConvergedError, StateCorruptionError
from .graph import DiGraph

DEFAULT_ALPHA = 0.85
DEFAULT_EPSILON = 1e-4
DEFAULT_MAX_STEPS = 10000

#: traces with a larger imaginary part than this indicate a corrupted state
IMAG_TRACE_TOL = 1e-9


@dataclass(frozen=True)
class WalkParams:
    """Damping factor, stopping tolerance and step budget for a walk."""

    alpha: float = DEFAULT_ALPHA
    epsilon: float = DEFAULT_EPSILON
    max_steps: int = DEFAULT_MAX_STEPS

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {self.alpha}")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.max_steps < 1:
            raise ValueError("max_steps must be at least 1")


@dataclass
class WalkState:
    """n coin blocks of dimension n, stacked as a (n, n, n) complex array."""

    blocks: np.ndarray

    def __post_init__(self):
        blocks = np.asarray(self.blocks, dtype=np.complex128)
        if blocks.ndim != 3 or blocks.shape[0] != blocks.shape[1] or \
                blocks.shape[1] != blocks.shape[2]:
            raise ValueError(f"expected (n, n, n) blocks, got shape {blocks.shape}")
        self.blocks = blocks

    @property
    def n(self) -> int:
        return self.blocks.shape[0]

    def copy(self) -> "WalkState":
        return WalkState(self.blocks.copy())


@dataclass
class WalkResult:
    """Outcome of a walk: final rank vector plus recorded trajectory data."""

    probabilities: np.ndarray
    steps: int
    converged: bool
    prob_history: list = field(repr=False)
    final_state: WalkState = field(repr=False)
    states: list | None = field(default=None, repr=False)
    average_state: WalkState | None = field(default=None, repr=False)


def weyl(n: int, r: int, s: int) -> np.ndarray:
    """Generalized-Pauli unitary: row i carries phase exp(2*pi*i*r/n) into
    column (i + s) mod n."""
    if not (0 <= r < n and 0 <= s < n):
        raise ValueError(f"weyl indices must be in 0..{n - 1}, got r={r}, s={s}")
    u = np.zeros((n, n), dtype=np.complex128)
    rows = np.arange(n)
    u[rows, (rows + s) % n] = _phase_vector(n, r)
    return u


@lru_cache(maxsize=None)
def _phase_cache(n: int, r: int) -> np.ndarray:
    w = np.exp(2j * np.pi * r * np.arange(n) / n)
    w.setflags(write=False)
    return w


def _phase_vector(n: int, r: int) -> np.ndarray:
    return _phase_cache(n, r)


def _conjugate_by_weyl(rho: np.ndarray, n: int, r: int, s: int) -> np.ndarray:
    # (U rho U+)[i, j] = w[i] * conj(w[j]) * rho[(i+s) % n, (j+s) % n]
    shifted = np.roll(rho, (-s, -s), axis=(0, 1))
    w = _phase_vector(n, r)
    return (w[:, None] * w.conj()[None, :]) * shifted


def coin_set(g: DiGraph, v: int) -> list[tuple[int, np.ndarray]]:
    """Coins attached to vertex v as (target, matrix) pairs.

    One scaled Weyl unitary per out-arc plus a scaled identity self-coin;
    a dangling vertex keeps only the unscaled identity.  The set is
    complete: sum of C+C equals the identity.
    """
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} outside range 0..{g.n - 1}")
    n = g.n
    d = g.out_degree(v)
    if d == 0:
        return [(v, np.eye(n, dtype=np.complex128))]
    scale = 1.0 / np.sqrt(d + 1)
    coins = [(u, scale * weyl(n, v, u)) for u in g.out_adj[v]]
    coins.append((v, scale * np.eye(n, dtype=np.complex128)))
    return coins


def initial_state(n: int) -> WalkState:
    """Every block I_n / n^2: total trace 1, uniform occupation 1/n."""
    if n < 1:
        raise ValueError("need at least one vertex")
    blocks = np.zeros((n, n, n), dtype=np.complex128)
    idx = np.arange(n)
    blocks[:, idx, idx] = 1.0 / (n * n)
    return WalkState(blocks)


def probabilities(state: WalkState) -> np.ndarray:
    """Per-vertex occupation: real part of each block trace."""
    traces = np.trace(state.blocks, axis1=1, axis2=2)
    worst = float(np.max(np.abs(traces.imag))) if traces.size else 0.0
    if worst > IMAG_TRACE_TOL:
        raise StateCorruptionError(
            f"block traces have imaginary residue {worst:.3e}")
    return traces.real.copy()


def step(state: WalkState, g: DiGraph, alpha: float = DEFAULT_ALPHA) -> WalkState:
    """One damped evolution step.

    New block at u: alpha times the coin-conjugated blocks of u's
    in-neighbours and of u itself, plus (1-alpha)/n times the sum of all
    blocks.  Within a block, contributions accumulate in fixed order:
    in-neighbours ascending, then the self term, then teleportation.
    """
    if state.n != g.n:
        raise ValueError(f"state has {state.n} blocks but graph has {g.n} vertices")
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    n = g.n
    blocks = state.blocks
    degs = [g.out_degree(v) for v in range(n)]
    teleport = ((1.0 - alpha) / n) * blocks.sum(axis=0)
    out = np.empty_like(blocks)
    for u in range(n):
        acc = np.zeros((n, n), dtype=np.complex128)
        for v in g.in_adj[u]:
            acc += (alpha / (degs[v] + 1)) * _conjugate_by_weyl(blocks[v], n, v, u)
        acc += (alpha / (degs[u] + 1)) * blocks[u]
        acc += teleport
        out[u] = acc
    return WalkState(out)


def run(g: DiGraph, params: WalkParams | None = None, *,
        record_states: bool = False, track_average: bool = False) -> WalkResult:
    """Iterate the walk from the uniform initial state until the Euclidean
    distance between consecutive probability vectors drops below epsilon.

    Probability vectors for every step are always recorded.  Full states
    are kept only with record_states=True (n^3 complex numbers per step);
    track_average=True maintains the running blockwise mean of all states
    visited so far without storing them.

    Raises NotConvergedError when max_steps is exhausted; the exception
    carries the last iterate and the partial WalkResult.
    """
    if params is None:
        params = WalkParams()
    state = initial_state(g.n)
    probs = probabilities(state)
    prob_history = [probs]
    states = [state] if record_states else None
    avg_blocks = state.blocks.copy() if track_average else None

    for t in range(1, params.max_steps + 1):
        state = step(state, g, params.alpha)
        new_probs = probabilities(state)
        prob_history.append(new_probs)
        if record_states:
            states.append(state)
        if track_average:
            avg_blocks += state.blocks
        converged = float(np.linalg.norm(new_probs - probs)) < params.epsilon
        probs = new_probs
        if converged:
            average = WalkState(avg_blocks / (t + 1)) if track_average else None
            return WalkResult(probabilities=probs, steps=t, converged=True,
                              prob_history=prob_history, final_state=state,
                              states=states, average_state=average)

    average = (WalkState(avg_blocks / (params.max_steps + 1))
               if track_average else None)
    partial = WalkResult(probabilities=probs, steps=params.max_steps,
                         converged=False, prob_history=prob_history,
                         final_state=state, states=states, average_state=average)
    raise NotConvergedError(
        f"walk did not converge in {params.max_steps} steps",
        last=probs, steps=params.max_steps, result=partial)


def induced_markov_matrix(g: DiGraph, alpha: float = DEFAULT_ALPHA) -> np.ndarray:
    """Column-stochastic matrix governing the block traces exactly.

    Because every coin satisfies C+C = I/(d+1), traces obey the closed
    recursion p' = M p with M[u, v] = alpha/(d_v + 1) for v in B(u) or
    v = u, plus (1-alpha)/n everywhere.  This is the classical shadow of
    the walk and an independent oracle for it.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    n = g.n
    m = np.full((n, n), (1.0 - alpha) / n)
    for v in range(n):
        share = alpha / (g.out_degree(v) + 1)
        m[v, v] += share
        for u in g.out_adj[v]:
            m[u, v] += share
    return m


FULL_SPACE_MAX_N = 6


def full_space_step(state: WalkState, g: DiGraph,
                    alpha: float = DEFAULT_ALPHA) -> WalkState:
    """Oracle step on the explicit n^2-dimensional space (n <= 6 only).

    Assembles the literal Kraus channel - coin (x) shift operators for the
    graph part, uniform restart operators for the damping part - applies it
    to the full block-diagonal density matrix, and re-extracts the blocks.
    Must agree entrywise with step().
    """
    n = g.n
    if n > FULL_SPACE_MAX_N:
        raise ValueError(f"full-space oracle is limited to n <= {FULL_SPACE_MAX_N}")
    if state.n != n:
        raise ValueError("state/graph size mismatch")
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")

    eye = np.eye(n, dtype=np.complex128)
    basis = [eye[:, [v]] for v in range(n)]  # column kets

    big = np.zeros((n * n, n * n), dtype=np.complex128)
    for v in range(n):
        big += np.kron(state.blocks[v], basis[v] @ basis[v].conj().T)

    walk_part = np.zeros_like(big)
    for v in range(n):
        for target, coin in coin_set(g, v):
            shift = basis[target] @ basis[v].conj().T
            k = np.kron(coin, shift)
            walk_part += k @ big @ k.conj().T

    damp_part = np.zeros_like(big)
    for u in range(n):
        for v in range(n):
            d = np.kron(eye, basis[u] @ basis[v].conj().T) / np.sqrt(n)
            damp_part += d @ big @ d.conj().T

    new_big = alpha * walk_part + (1.0 - alpha) * damp_part
    reshaped = new_big.reshape(n, n, n, n)  # axes: coin-row, pos-row, coin-col, pos-col
    blocks = np.stack([reshaped[:, u, :, u] for u in range(n)])
    return WalkState(blocks)
