"""Directed-graph model, edge-list ingestion, and graph generators.

Graphs are simple (no self-loops, no parallel arcs) and unweighted, with
vertices labeled 0..n-1.  Undirected graphs are represented as symmetric
digraphs: each undirected edge is a pair of opposite arcs.

The random families are generated by the standard published constructions,
but driven by the repo's SplitMix64 generator so that a fixed
(family, params, seed) triple yields the same edge set on every platform
and library version.
"""

from __future__ import annotations

from importlib import resources
from typing import Iterable

from ._rng import SplitMix64


class EdgeListParseError(ValueError):
    """Malformed edge-list input; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DiGraph:
    """Immutable simple directed graph with indexed out/in adjacency."""

    __slots__ = ("n", "out_adj", "in_adj")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        outs: list[set[int]] = [set() for _ in range(n)]
        ins: list[set[int]] = [set() for _ in range(n)]
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not allowed")
            outs[u].add(v)  # parallel arcs collapse silently
            ins[v].add(u)
        self.n = n
        self.out_adj = tuple(tuple(sorted(s)) for s in outs)
        self.in_adj = tuple(tuple(sorted(s)) for s in ins)

    @property
    def num_arcs(self) -> int:
        return sum(len(a) for a in self.out_adj)

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_adj[v])

    def arcs(self):
        """All arcs (u, v), sorted by source then target."""
        for u, targets in enumerate(self.out_adj):
            for v in targets:
                yield (u, v)

    def dangling(self) -> list[int]:
        """Vertices with no outgoing arcs."""
        return [v for v in range(self.n) if not self.out_adj[v]]

    def has_arc(self, u: int, v: int) -> bool:
        return v in self.out_adj[u]

    def is_symmetric(self) -> bool:
        return self.out_adj == self.in_adj

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiGraph):
            return NotImplemented
        return self.n == other.n and self.out_adj == other.out_adj

    def __hash__(self):
        return hash((self.n, self.out_adj))

    def __repr__(self) -> str:
        return f"DiGraph(n={self.n}, arcs={self.num_arcs})"


def symmetrize(g: DiGraph) -> DiGraph:
    """Add the reverse of every arc; idempotent."""
    arcs = []
    for u, v in g.arcs():
        arcs.append((u, v))
        arcs.append((v, u))
    return DiGraph(g.n, arcs)


def from_edge_list(text) -> DiGraph:
    """Parse an edge list into a DiGraph.

    Format: UTF-8 text, one arc "<u> <v>" per line (space or tab
    separated), an optional first line "n <N>" fixing the vertex count,
    lines starting with "#" ignored.  Without a header the vertex count is
    1 + the largest id seen.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    declared_n: int | None = None
    arcs: list[tuple[int, int]] = []
    saw_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if not saw_content and fields[0] == "n":
            if len(fields) != 2:
                raise EdgeListParseError("header must be 'n <count>'", lineno)
            try:
                declared_n = int(fields[1])
            except ValueError:
                raise EdgeListParseError(f"bad vertex count {fields[1]!r}", lineno) from None
            if declared_n < 1:
                raise EdgeListParseError("vertex count must be positive", lineno)
            saw_content = True
            continue
        saw_content = True
        if len(fields) != 2:
            raise EdgeListParseError(f"expected '<u> <v>', got {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer vertex id in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise EdgeListParseError(f"negative vertex id in {line!r}", lineno)
        if u == v:
            raise EdgeListParseError(f"self-loop at vertex {u}", lineno)
        arcs.append((u, v))
    if declared_n is None:
        if not arcs:
            raise EdgeListParseError("empty edge list and no 'n <count>' header")
        declared_n = 1 + max(max(u, v) for u, v in arcs)
    for u, v in arcs:
        if u >= declared_n or v >= declared_n:
            raise EdgeListParseError(
                f"arc ({u}, {v}) exceeds declared vertex count {declared_n}")
    return DiGraph(declared_n, arcs)


def layers_from_root(g: DiGraph, root: int) -> list[int]:
    """BFS distance of every vertex from root, ignoring arc direction."""
    if not (0 <= root < g.n):
        raise ValueError(f"root {root} outside vertex range")
    layer = [-1] * g.n
    layer[root] = 0
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for u in g.out_adj[v] + g.in_adj[v]:
                if layer[u] < 0:
                    layer[u] = layer[v] + 1
                    nxt.append(u)
        frontier = nxt
    if any(d < 0 for d in layer):
        missing = [v for v, d in enumerate(layer) if d < 0]
        raise ValueError(f"vertices unreachable from root {root}: {missing[:5]}")
    return layer


# ---------------------------------------------------------------------------
# deterministic families


def _undirected(n: int, edges: Iterable[tuple[int, int]]) -> DiGraph:
    arcs = []
    for u, v in edges:
        arcs.append((u, v))
        arcs.append((v, u))
    return DiGraph(n, arcs)


def _path(n: int) -> DiGraph:
    return _undirected(n, ((i, i + 1) for i in range(n - 1)))


def _cycle(n: int) -> DiGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return _undirected(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n: int) -> DiGraph:
    return _undirected(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def _star(n: int) -> DiGraph:
    if n < 2:
        raise ValueError("a star needs at least 2 vertices")
    return _undirected(n, ((0, v) for v in range(1, n)))


def _wheel(n: int) -> DiGraph:
    if n < 4:
        raise ValueError("a wheel needs at least 4 vertices")
    edges = [(0, v) for v in range(1, n)]
    edges += [(v, v + 1 if v < n - 1 else 1) for v in range(1, n)]
    return _undirected(n, edges)


def _tree_edges(r: int, h: int):
    """Parent->child edges of the complete r-ary tree of height h, BFS order."""
    if r < 2 or h < 1:
        raise ValueError("balanced tree needs branching >= 2 and height >= 1")
    n = (r ** (h + 1) - 1) // (r - 1)
    internal = (r ** h - 1) // (r - 1)
    edges = [(i, c) for i in range(internal) for c in range(r * i + 1, r * i + r + 1)]
    return n, edges


def _balanced_tree(r: int, h: int) -> DiGraph:
    n, edges = _tree_edges(r, h)
    return _undirected(n, edges)


def _directed_balanced_tree_out(r: int, h: int) -> DiGraph:
    n, edges = _tree_edges(r, h)
    return DiGraph(n, edges)


#: Zachary's karate club: the canonical 34-vertex, 78-edge social network.
KARATE_EDGES: tuple[tuple[int, int], ...] = (
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7), (0, 8), (0, 10),
    (0, 11), (0, 12), (0, 13), (0, 17), (0, 19), (0, 21), (0, 31), (1, 2),
    (1, 3), (1, 7), (1, 13), (1, 17), (1, 19), (1, 21), (1, 30), (2, 3),
    (2, 7), (2, 8), (2, 9), (2, 13), (2, 27), (2, 28), (2, 32), (3, 7),
    (3, 12), (3, 13), (4, 6), (4, 10), (5, 6), (5, 10), (5, 16), (6, 16),
    (8, 30), (8, 32), (8, 33), (9, 33), (13, 33), (14, 32), (14, 33),
    (15, 32), (15, 33), (18, 32), (18, 33), (19, 33), (20, 32), (20, 33),
    (22, 32), (22, 33), (23, 25), (23, 27), (23, 29), (23, 32), (23, 33),
    (24, 25), (24, 27), (24, 31), (25, 31), (26, 29), (26, 33), (27, 33),
    (28, 31), (28, 33), (29, 32), (29, 33), (30, 32), (30, 33), (31, 32),
    (31, 33), (32, 33),
)


def _karate() -> DiGraph:
    return _undirected(34, KARATE_EDGES)


def _paparo7() -> DiGraph:
    text = resources.files("qpr.data").joinpath("paparo7.txt").read_text("utf-8")
    return from_edge_list(text)


# ---------------------------------------------------------------------------
# seeded random families


def _erdos_renyi(n: int, p: float, rng: SplitMix64) -> DiGraph:
    """Directed G(n, p): one coin per ordered pair, lexicographic order."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must be in [0, 1]")
    arcs = [(u, v) for u in range(n) for v in range(n)
            if u != v and rng.random() < p]
    return DiGraph(n, arcs)


def _watts_strogatz(n: int, k: int, beta: float, rng: SplitMix64) -> DiGraph:
    """Ring lattice with k nearest neighbours, each edge rewired with prob beta."""
    if k < 2 or k % 2 != 0:
        raise ValueError("watts_strogatz needs an even k >= 2")
    if k >= n:
        raise ValueError("watts_strogatz needs k < n")
    if not 0.0 <= beta <= 1.0:
        raise ValueError("rewiring probability must be in [0, 1]")
    edges = {frozenset((u, (u + j) % n)) for j in range(1, k // 2 + 1) for u in range(n)}
    for j in range(1, k // 2 + 1):
        for u in range(n):
            old = frozenset((u, (u + j) % n))
            if rng.random() < beta and old in edges:
                neighbours = {w for e in edges if u in e for w in e} - {u}
                if len(neighbours) >= n - 1:
                    continue  # u already adjacent to everyone else
                while True:
                    w = rng.randrange(n)
                    if w != u and frozenset((u, w)) not in edges:
                        break
                edges.remove(old)
                edges.add(frozenset((u, w)))
    return _undirected(n, (tuple(sorted(e)) for e in edges))


def _barabasi_albert(n: int, m: int, rng: SplitMix64) -> DiGraph:
    """Preferential attachment via the repeated-nodes urn."""
    if m < 1 or m >= n:
        raise ValueError("barabasi_albert needs 1 <= m < n")
    edges: list[tuple[int, int]] = []
    targets = list(range(m))
    urn: list[int] = []
    for source in range(m, n):
        edges.extend((source, t) for t in targets)
        urn.extend(targets)
        urn.extend([source] * m)
        targets = rng.sample_distinct(urn, m)
    return _undirected(n, edges)


def _weighted_pick(weights: list[float], rng: SplitMix64) -> int:
    total = sum(weights)
    x = rng.random() * total
    acc = 0.0
    for i, w in enumerate(weights):
        acc += w
        if x < acc:
            return i
    return len(weights) - 1


def _scale_free_directed(n: int, alpha: float, beta: float, gamma: float,
                         delta_in: float, delta_out: float,
                         rng: SplitMix64) -> DiGraph:
    """Directed scale-free growth: grow by in/out preferential attachment.

    Three event types with probabilities alpha/beta/gamma: new source to
    in-preferred target, arc between existing vertices, new target from
    out-preferred source.  Starts from a directed 3-cycle; self-loops and
    duplicate arcs produced by the process are dropped.
    """
    if abs(alpha + beta + gamma - 1.0) > 1e-12:
        raise ValueError("alpha + beta + gamma must sum to 1")
    if n < 3:
        raise ValueError("scale_free_directed needs n >= 3")
    arcs = [(0, 1), (1, 2), (2, 0)]
    indeg = {0: 1, 1: 1, 2: 1}
    outdeg = {0: 1, 1: 1, 2: 1}
    nodes = 3

    def pick_in() -> int:
        return _weighted_pick([indeg[v] + delta_in for v in range(nodes)], rng)

    def pick_out() -> int:
        return _weighted_pick([outdeg[v] + delta_out for v in range(nodes)], rng)

    while nodes < n:
        r = rng.random()
        if r < alpha:
            w = pick_in()
            v = nodes
            nodes += 1
            indeg[v] = outdeg[v] = 0
        elif r < alpha + beta:
            v = pick_out()
            w = pick_in()
        else:
            v = pick_out()
            w = nodes
            nodes += 1
            indeg[w] = outdeg[w] = 0
        if v != w:
            arcs.append((v, w))
            outdeg[v] += 1
            indeg[w] += 1
    return DiGraph(n, arcs)


def _gn(n: int, rng: SplitMix64) -> DiGraph:
    """Growing network: each new vertex points at one earlier vertex,
    chosen with probability proportional to (in-degree + 1)."""
    if n < 1:
        raise ValueError("gn needs n >= 1")
    arcs = []
    indeg = [0] * n
    for source in range(1, n):
        weights = [indeg[t] + 1 for t in range(source)]
        target = _weighted_pick(weights, rng)
        arcs.append((source, target))
        indeg[target] += 1
    return DiGraph(n, arcs)


def _gnr(n: int, p: float, rng: SplitMix64) -> DiGraph:
    """Growing network with redirection: uniform target, redirected to the
    target's own successor with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("redirection probability must be in [0, 1]")
    arcs = []
    successor: dict[int, int] = {}
    for source in range(1, n):
        target = rng.randrange(source)
        if rng.random() < p and target in successor:
            target = successor[target]
        arcs.append((source, target))
        successor[source] = target
    return DiGraph(n, arcs)


def _gnc(n: int, rng: SplitMix64) -> DiGraph:
    """Growing network with copying: a new vertex points at a uniform
    earlier vertex and at everything that vertex points at."""
    arcs = []
    out: list[list[int]] = [[] for _ in range(n)]
    for source in range(1, n):
        target = rng.randrange(source)
        new_targets = [target] + out[target]
        for t in new_targets:
            arcs.append((source, t))
        out[source] = sorted(set(new_targets))
    return DiGraph(n, arcs)


def _random_k_out(n: int, k: int, rng: SplitMix64) -> DiGraph:
    """Each vertex gets k distinct uniform out-neighbours (never itself)."""
    if k < 1 or k > n - 1:
        raise ValueError("random_k_out needs 1 <= k <= n - 1")
    arcs = []
    for u in range(n):
        others = [v for v in range(n) if v != u]
        arcs.extend((u, v) for v in rng.sample_distinct(others, k))
    return DiGraph(n, arcs)


# ---------------------------------------------------------------------------
# dispatch


def _get_int(params: dict, key: str, minimum: int = 1) -> int:
    if key not in params:
        raise ValueError(f"missing required parameter {key!r}")
    value = params[key]
    if isinstance(value, bool) or int(value) != value:
        raise ValueError(f"parameter {key!r} must be an integer, got {value!r}")
    value = int(value)
    if value < minimum:
        raise ValueError(f"parameter {key!r} must be >= {minimum}, got {value}")
    return value


def _get_float(params: dict, key: str, default=None) -> float:
    if key not in params:
        if default is None:
            raise ValueError(f"missing required parameter {key!r}")
        return default
    return float(params[key])


FAMILIES = (
    "path", "cycle", "complete", "star", "wheel", "balanced_tree",
    "directed_balanced_tree_out", "karate", "erdos_renyi", "watts_strogatz",
    "barabasi_albert", "scale_free_directed", "gn", "gnc", "gnr",
    "random_k_out", "paparo7",
)


def generate(name: str, params: dict | None = None, seed: int = 42) -> DiGraph:
    """Build a named graph family.

    Deterministic families ignore the seed; random families are fully
    reproducible for a fixed (params, seed).  Undirected families come
    pre-symmetrized.
    """
    params = dict(params or {})
    rng = SplitMix64(seed)
    if name == "path":
        return _path(_get_int(params, "n"))
    if name == "cycle":
        return _cycle(_get_int(params, "n"))
    if name == "complete":
        return _complete(_get_int(params, "n"))
    if name == "star":
        return _star(_get_int(params, "n", 2))
    if name == "wheel":
        return _wheel(_get_int(params, "n", 4))
    if name == "balanced_tree":
        return _balanced_tree(_get_int(params, "r", 2), _get_int(params, "h"))
    if name == "directed_balanced_tree_out":
        return _directed_balanced_tree_out(_get_int(params, "r", 2), _get_int(params, "h"))
    if name == "karate":
        return _karate()
    if name == "paparo7":
        return _paparo7()
    if name == "erdos_renyi":
        return _erdos_renyi(_get_int(params, "n"), _get_float(params, "p"), rng)
    if name == "watts_strogatz":
        return _watts_strogatz(_get_int(params, "n"), _get_int(params, "k", 2),
                               _get_float(params, "beta", 0.3), rng)
    if name == "barabasi_albert":
        return _barabasi_albert(_get_int(params, "n"), _get_int(params, "m"), rng)
    if name == "scale_free_directed":
        return _scale_free_directed(
            _get_int(params, "n", 3),
            _get_float(params, "alpha", 0.41), _get_float(params, "beta", 0.54),
            _get_float(params, "gamma", 0.05), _get_float(params, "delta_in", 0.2),
            _get_float(params, "delta_out", 0.0), rng)
    if name == "gn":
        return _gn(_get_int(params, "n"), rng)
    if name == "gnr":
        return _gnr(_get_int(params, "n"), _get_float(params, "p", 0.5), rng)
    if name == "gnc":
        return _gnc(_get_int(params, "n"), rng)
    if name == "random_k_out":
        return _random_k_out(_get_int(params, "n"), _get_int(params, "k"), rng)
    raise ValueError(f"unknown graph family {name!r}; known: {', '.join(FAMILIES)}")
