"""Shared fixtures: the seeded random-graph corpus and state helpers."""

from __future__ import annotations

import numpy as np
import pytest

from qpr import generate
from qpr.oqw import WalkState

# 20 seeded random graphs spanning all random families.  Sizes are kept
# moderate so the full property suite stays fast.
RANDOM_CORPUS = (
    ("erdos_renyi", {"n": 30, "p": 0.10}, 1),
    ("erdos_renyi", {"n": 50, "p": 0.07}, 2),
    ("erdos_renyi", {"n": 40, "p": 0.15}, 3),
    ("erdos_renyi", {"n": 25, "p": 0.20}, 19),
    ("watts_strogatz", {"n": 30, "k": 4, "beta": 0.3}, 4),
    ("watts_strogatz", {"n": 40, "k": 6, "beta": 0.2}, 5),
    ("watts_strogatz", {"n": 26, "k": 4, "beta": 0.5}, 20),
    ("barabasi_albert", {"n": 40, "m": 3}, 6),
    ("barabasi_albert", {"n": 60, "m": 2}, 7),
    ("scale_free_directed", {"n": 40}, 8),
    ("scale_free_directed", {"n": 60}, 9),
    ("scale_free_directed", {"n": 30}, 10),
    ("gn", {"n": 40}, 11),
    ("gn", {"n": 60}, 12),
    ("gnr", {"n": 40, "p": 0.5}, 13),
    ("gnr", {"n": 50, "p": 0.3}, 14),
    ("gnc", {"n": 40}, 15),
    ("gnc", {"n": 50}, 16),
    ("random_k_out", {"n": 30, "k": 3}, 17),
    ("random_k_out", {"n": 40, "k": 2}, 18),
)


@pytest.fixture(scope="session")
def random_corpus():
    return [generate(name, params, seed) for name, params, seed in RANDOM_CORPUS]


def random_walk_state(n: int, rng: np.random.Generator) -> WalkState:
    """A generic valid walk state: random PSD blocks with total trace 1."""
    blocks = np.empty((n, n, n), dtype=np.complex128)
    for v in range(n):
        a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        blocks[v] = a @ a.conj().T
    blocks /= np.trace(blocks, axis1=1, axis2=2).real.sum()
    return WalkState(blocks)


def random_hermitian(n: int, rng: np.random.Generator) -> np.ndarray:
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2
