import numpy as np
import pytest

from qpr.classical import pagerank
from qpr.errors import NotConvergedError, StateCorruptionError
from qpr.graph import DiGraph, generate
from qpr.oqw import (WalkParams, WalkState, coin_set, full_space_step,
                     induced_markov_matrix, initial_state, probabilities, run,
                     step, weyl)

from conftest import random_walk_state


def small_digraphs():
    """All oracle-scale graphs: 50 seeded random digraphs plus the
    deterministic families, every one with at most 4 vertices."""
    graphs = []
    rng = np.random.default_rng(2024)
    while len(graphs) < 50:
        n = int(rng.integers(2, 5))
        arcs = [(u, v) for u in range(n) for v in range(n)
                if u != v and rng.random() < 0.45]
        graphs.append(DiGraph(n, arcs))
    graphs += [generate("path", {"n": k}) for k in (2, 3, 4)]
    graphs += [generate("cycle", {"n": k}) for k in (3, 4)]
    graphs += [generate("complete", {"n": k}) for k in (2, 3, 4)]
    return graphs


SMALL_DIGRAPHS = small_digraphs()


class TestWeyl:
    def test_zero_indices_give_identity(self):
        for n in (1, 2, 5):
            assert np.array_equal(weyl(n, 0, 0), np.eye(n))

    def test_pure_shift(self):
        assert np.allclose(weyl(2, 0, 1), [[0, 1], [1, 0]])

    def test_pure_phase(self):
        assert np.allclose(weyl(2, 1, 0), np.diag([1, -1]))

    def test_unitary(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            n = int(rng.integers(2, 9))
            r, s = int(rng.integers(n)), int(rng.integers(n))
            u = weyl(n, r, s)
            assert np.max(np.abs(u.conj().T @ u - np.eye(n))) < 1e-12

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            weyl(3, 3, 0)
        with pytest.raises(ValueError):
            weyl(3, 0, -1)


class TestCoinSet:
    def test_dangling_vertex_keeps_identity(self):
        g = DiGraph(3, [(0, 1)])
        coins = coin_set(g, 1)
        assert len(coins) == 1
        target, matrix = coins[0]
        assert target == 1
        assert np.array_equal(matrix, np.eye(3))

    def test_degree_two_scaling(self):
        g = DiGraph(3, [(0, 1), (0, 2)])
        coins = coin_set(g, 0)
        assert [t for t, _ in coins] == [1, 2, 0]
        for _, matrix in coins:
            # scaled unitary: C+C = I/3
            assert np.allclose(matrix.conj().T @ matrix, np.eye(3) / 3)

    def test_completeness_on_random_graph(self):
        g = generate("erdos_renyi", {"n": 8, "p": 0.35}, seed=5)
        for v in range(g.n):
            total = sum(c.conj().T @ c for _, c in coin_set(g, v))
            assert np.max(np.abs(total - np.eye(g.n))) < 1e-12

    def test_rejects_bad_vertex(self):
        with pytest.raises(ValueError):
            coin_set(generate("path", {"n": 3}), 5)


class TestInitialState:
    def test_single_vertex(self):
        state = initial_state(1)
        assert np.array_equal(state.blocks, [[[1.0]]])

    def test_four_vertices(self):
        state = initial_state(4)
        for block in state.blocks:
            assert np.array_equal(block, np.eye(4) / 16)
        assert probabilities(state).sum() == pytest.approx(1.0, abs=1e-15)

    def test_uniform_occupation(self):
        assert np.allclose(probabilities(initial_state(7)), 1 / 7)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            initial_state(0)


class TestProbabilities:
    def test_single_vertex_graph(self):
        assert probabilities(initial_state(1)) == pytest.approx([1.0])

    def test_corrupted_state_detected(self):
        blocks = initial_state(2).blocks.copy()
        blocks[0, 0, 0] += 1e-6j
        with pytest.raises(StateCorruptionError):
            probabilities(WalkState(blocks))


class TestStep:
    def test_single_vertex_fixed_point(self):
        g = DiGraph(1)
        state = initial_state(1)
        for _ in range(5):
            state = step(state, g, 0.85)
            assert probabilities(state) == pytest.approx([1.0], abs=1e-15)

    def test_directed_two_path_hand_values(self):
        # one arc 0->1, alpha 0.85, from the uniform initial state:
        # rho_0' = (alpha/8 + 0.15/4) I,  rho_1' = (3 alpha/8 + 0.15/4) I
        g = DiGraph(2, [(0, 1)])
        state = step(initial_state(2), g, 0.85)
        assert np.allclose(state.blocks[0], 0.14375 * np.eye(2), atol=1e-15)
        assert np.allclose(state.blocks[1], 0.35625 * np.eye(2), atol=1e-15)
        assert np.allclose(probabilities(state), [0.2875, 0.7125], atol=1e-15)

    def test_complete_graph_stays_uniform(self):
        g = generate("complete", {"n": 20})
        state = initial_state(20)
        for _ in range(5):
            state = step(state, g, 0.85)
            assert np.max(np.abs(probabilities(state) - 0.05)) < 1e-12

    def test_trace_preserved_from_random_states(self, random_corpus):
        rng = np.random.default_rng(7)
        for g in random_corpus[:5]:
            state = random_walk_state(g.n, rng)
            before = probabilities(state).sum()
            after = probabilities(step(state, g, 0.85)).sum()
            assert abs(after - before) < 1e-12

    def test_blocks_stay_hermitian_psd(self, random_corpus):
        rng = np.random.default_rng(8)
        g = random_corpus[0]
        state = random_walk_state(g.n, rng)
        for _ in range(3):
            state = step(state, g, 0.85)
            herm = np.max(np.abs(state.blocks - state.blocks.conj().transpose(0, 2, 1)))
            assert herm <= 1e-12
            assert np.linalg.eigvalsh(state.blocks).min() >= -1e-10

    def test_rejects_mismatched_sizes(self):
        with pytest.raises(ValueError):
            step(initial_state(3), generate("path", {"n": 4}), 0.85)

    def test_rejects_bad_alpha(self):
        with pytest.raises(ValueError):
            step(initial_state(2), DiGraph(2, [(0, 1)]), 1.5)


class TestFullSpaceOracle:
    @pytest.mark.parametrize("graph_index", range(len(SMALL_DIGRAPHS)))
    def test_reduced_equals_full(self, graph_index):
        g = SMALL_DIGRAPHS[graph_index]
        rng = np.random.default_rng(graph_index)
        # from the canonical start and from a generic random state
        for state in (initial_state(g.n), random_walk_state(g.n, rng)):
            for _ in range(2):
                fast = step(state, g, 0.85)
                slow = full_space_step(state, g, 0.85)
                assert np.max(np.abs(fast.blocks - slow.blocks)) < 1e-12
                state = fast

    def test_kraus_completeness(self):
        g = DiGraph(3, [(0, 1), (1, 2), (2, 0), (0, 2)])
        n = g.n
        eye = np.eye(n, dtype=complex)
        total = np.zeros((n * n, n * n), dtype=complex)
        for v in range(n):
            for target, coin in coin_set(g, v):
                shift = np.outer(eye[target], eye[v])
                k = np.kron(coin, shift)
                total += 0.85 * (k.conj().T @ k)
        for u in range(n):
            for v in range(n):
                d = np.kron(eye, np.outer(eye[u], eye[v])) / np.sqrt(n)
                total += 0.15 * (d.conj().T @ d)
        assert np.max(np.abs(total - np.eye(n * n))) < 1e-12

    def test_rejects_large_graphs(self):
        g = generate("path", {"n": 7})
        with pytest.raises(ValueError, match="n <= 6"):
            full_space_step(initial_state(7), g, 0.85)


class TestInducedMarkovMatrix:
    def test_alpha_zero_uniform(self):
        m = induced_markov_matrix(generate("path", {"n": 4}), 0.0)
        assert np.allclose(m, 0.25)

    def test_columns_stochastic(self, random_corpus):
        for g in random_corpus:
            m = induced_markov_matrix(g, 0.85)
            assert np.max(np.abs(m.sum(axis=0) - 1.0)) < 1e-12

    def test_trace_closure_oracle(self, random_corpus):
        # block traces must follow the classical recursion p' = M p exactly
        for g in random_corpus[:10]:
            m = induced_markov_matrix(g, 0.85)
            state = initial_state(g.n)
            predicted = probabilities(state)
            for _ in range(20):
                state = step(state, g, 0.85)
                predicted = m @ predicted
                assert np.max(np.abs(probabilities(state) - predicted)) < 1e-12


class TestRun:
    def test_path_sixty_golden(self):
        result = run(generate("path", {"n": 60}), WalkParams(0.85, 1e-4))
        q = result.probabilities
        assert q[0] == pytest.approx(0.0135, abs=5e-4)
        assert q[1] == pytest.approx(0.0185, abs=5e-4)
        assert q[30] == pytest.approx(0.0167, abs=5e-4)
        assert result.converged and result.steps == 7

    def test_star_golden(self):
        result = run(generate("star", {"n": 61}), WalkParams(0.85, 1e-4))
        assert result.probabilities[0] == pytest.approx(0.3029, abs=5e-4)
        assert result.probabilities[1] == pytest.approx(0.0116, abs=5e-4)

    def test_directed_tree_layers_golden(self):
        result = run(generate("directed_balanced_tree_out", {"r": 3, "h": 4}),
                     WalkParams(0.85, 1e-4))
        q = result.probabilities
        layer_reps = [q[0], q[1], q[4], q[13], q[40]]
        expected = [0.0016, 0.0020, 0.0021, 0.0022, 0.0113]
        assert layer_reps == pytest.approx(expected, abs=5e-4)

    def test_history_bookkeeping(self):
        result = run(generate("path", {"n": 8}), WalkParams(0.85, 1e-4),
                     record_states=True, track_average=True)
        assert len(result.prob_history) == result.steps + 1
        assert len(result.states) == result.steps + 1
        assert np.allclose(result.prob_history[0], 1 / 8)
        assert np.array_equal(result.states[-1].blocks, result.final_state.blocks)
        mean = sum(s.blocks for s in result.states) / len(result.states)
        assert np.max(np.abs(result.average_state.blocks - mean)) < 1e-15

    def test_states_not_recorded_by_default(self):
        result = run(generate("path", {"n": 5}))
        assert result.states is None and result.average_state is None

    def test_stopping_criterion_met(self):
        result = run(generate("gnc", {"n": 30}, seed=2), WalkParams(0.85, 1e-4))
        last, prev = result.prob_history[-1], result.prob_history[-2]
        assert np.linalg.norm(last - prev) < 1e-4

    def test_non_convergence_signal(self):
        with pytest.raises(NotConvergedError) as err:
            run(generate("path", {"n": 60}), WalkParams(0.85, 1e-4, max_steps=2))
        assert err.value.steps == 2
        assert err.value.result.converged is False
        assert len(err.value.result.prob_history) == 3

    def test_alpha_one_complete_graph_converges(self):
        result = run(generate("complete", {"n": 5}), WalkParams(1.0, 1e-4))
        assert result.converged
        assert np.allclose(result.probabilities, 0.2, atol=1e-12)

    def test_uniform_fixed_point_matches_classical(self):
        for name, n in (("cycle", 9), ("complete", 8)):
            g = generate(name, {"n": n})
            quantum = run(g, WalkParams(0.85, 1e-4)).probabilities
            classical, _ = pagerank(g, 0.85, 1e-4)
            assert np.max(np.abs(quantum - 1 / n)) < 1e-9
            assert np.max(np.abs(quantum - classical)) < 1e-9


class TestSymmetryAndEquivariance:
    def test_orbit_symmetry(self):
        cases = [
            ("star", {"n": 31}, [list(range(1, 31))]),
            ("wheel", {"n": 21}, [list(range(1, 21))]),
            ("cycle", {"n": 12}, [list(range(12))]),
            ("complete", {"n": 9}, [list(range(9))]),
        ]
        for name, params, orbits in cases:
            q = run(generate(name, params), WalkParams(0.85, 1e-4)).probabilities
            for orbit in orbits:
                values = q[orbit]
                assert values.max() - values.min() < 1e-9

    def test_relabel_equivariance(self):
        g = generate("erdos_renyi", {"n": 15, "p": 0.2}, seed=11)
        rng = np.random.default_rng(3)
        base = run(g, WalkParams(0.85, 1e-4)).probabilities
        for _ in range(3):
            perm = rng.permutation(g.n)
            relabeled = DiGraph(g.n, [(perm[u], perm[v]) for u, v in g.arcs()])
            moved = run(relabeled, WalkParams(0.85, 1e-4)).probabilities
            assert np.max(np.abs(moved[perm] - base)) < 1e-12


class TestWalkParams:
    def test_defaults(self):
        params = WalkParams()
        assert params.alpha == 0.85
        assert params.epsilon == 1e-4
        assert params.max_steps == 10000

    def test_validation(self):
        with pytest.raises(ValueError):
            WalkParams(alpha=-0.1)
        with pytest.raises(ValueError):
            WalkParams(epsilon=0.0)
        with pytest.raises(ValueError):
            WalkParams(max_steps=0)
