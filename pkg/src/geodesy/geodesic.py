"""Layered geodesic structure between two vertices.

A path is reported as an alternating tuple ``(x, e1, v1, e2, ..., y)`` where
each edge is ``(a, b, k)``: ``(a, b)`` is the stored orientation of the
bundle in the graph and ``k < mult`` picks one of its parallel copies.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CapExceededError, NoPathError
from .graph import MultiGraph, bfs_distances, max_degree

__all__ = [
    "GeodesicDAG",
    "geodesic_dag",
    "count_shortest_paths",
    "enumerate_shortest_paths",
    "sample_shortest_path",
    "path_probability",
    "DEFAULT_ENUMERATION_CAP",
]

DEFAULT_ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class GeodesicDAG:
    """Vertices and bundles lying on at least one shortest ``source``-``target`` path.

    ``down[v]`` lists ``(u, mult)`` with ``u`` one layer closer to the source,
    ``up[v]`` lists ``(w, mult)`` one layer closer to the target, both sorted
    by vertex id.  ``deg_x``/``deg_y`` are the multiplicity sums of those.
    """

    graph: MultiGraph = field(repr=False)
    source: str
    target: str
    t: int
    delta: int
    layers: tuple[tuple[str, ...], ...]
    n_x: dict = field(repr=False)
    n_y: dict = field(repr=False)
    down: dict = field(repr=False)
    up: dict = field(repr=False)

    @property
    def n_total(self) -> int:
        return self.n_x[self.target]

    @property
    def vertices(self) -> list[str]:
        return [v for layer in self.layers for v in layer]

    @property
    def interior(self) -> list[str]:
        return [v for layer in self.layers[1:-1] for v in layer]

    def deg_x(self, v) -> int:
        return sum(m for _, m in self.down[v])

    def deg_y(self, v) -> int:
        return sum(m for _, m in self.up[v])

    def N_x(self, v) -> set[tuple[str, str]]:
        """Retained bundles at ``v`` whose other end is closer to the source."""
        return {self.graph.record(u, v) for u, _ in self.down[v]}

    def N_y(self, v) -> set[tuple[str, str]]:
        return {self.graph.record(v, w) for w, _ in self.up[v]}

    def layer_of(self, v) -> int:
        for i, layer in enumerate(self.layers):
            if v in layer:
                return i
        raise KeyError(v)

    def reversed(self) -> "GeodesicDAG":
        return geodesic_dag(self.graph, self.target, self.source)


def geodesic_dag(G: MultiGraph, x, y) -> GeodesicDAG:
    """Prune ``G`` to the union of shortest ``x``-``y`` paths and fill in the counts.

    A bundle ``{u, w}`` is kept iff ``d(x, u) + 1 + d(w, y) == d(x, y)``.
    """
    G.check_vertex(x)
    G.check_vertex(y)
    dx = bfs_distances(G, x)
    if y not in dx:
        raise NoPathError(f"no path from {x!r} to {y!r}")
    dy = bfs_distances(G, y)
    t = dx[y]

    layers: list[list[str]] = [[] for _ in range(t + 1)]
    for v in sorted(dx):
        if v in dy and dx[v] + dy[v] == t:
            layers[dx[v]].append(v)

    down: dict[str, list] = {v: [] for layer in layers for v in layer}
    up: dict[str, list] = {v: [] for v in down}
    for i in range(t):
        for u in layers[i]:
            for w in sorted(G.neighbors(u)):
                if dy.get(w) == t - i - 1 and dx.get(w) == i + 1:
                    m = G.mult(u, w)
                    up[u].append((w, m))
                    down[w].append((u, m))

    n_x = {x: 1}
    for layer in layers[1:]:
        for v in layer:
            n_x[v] = sum(m * n_x[u] for u, m in down[v])
    n_y = {y: 1}
    for layer in reversed(layers[:-1]):
        for v in layer:
            n_y[v] = sum(m * n_y[w] for w, m in up[v])

    return GeodesicDAG(
        graph=G,
        source=x,
        target=y,
        t=t,
        delta=max_degree(G),
        layers=tuple(tuple(layer) for layer in layers),
        n_x=n_x,
        n_y=n_y,
        down={v: tuple(lst) for v, lst in down.items()},
        up={v: tuple(lst) for v, lst in up.items()},
    )


def count_shortest_paths(G: MultiGraph, x, y) -> int:
    """Number of shortest ``x``-``y`` paths, parallel edges counted separately."""
    return geodesic_dag(G, x, y).n_total


def enumerate_shortest_paths(G: MultiGraph, x, y, cap: int = DEFAULT_ENUMERATION_CAP) -> list[tuple]:
    """List every shortest path explicitly by depth-first search.

    Serves as an independent check on :func:`count_shortest_paths`: it walks
    the raw graph and only uses the distance to ``y`` to cut branches that
    can no longer arrive in time.

    Raises
    ------
    CapExceededError
        If more than ``cap`` paths exist; ``err.count`` is the number found
        when the search stopped.
    """
    G.check_vertex(x)
    G.check_vertex(y)
    dy = bfs_distances(G, y)
    if x not in dy:
        raise NoPathError(f"no path from {x!r} to {y!r}")
    t = dy[x]
    paths: list[tuple] = []

    def extend(seq: list, v, remaining: int) -> None:
        if remaining == 0:
            if v == y:
                if len(paths) >= cap:
                    raise CapExceededError(f"more than {cap} shortest paths", len(paths) + 1)
                paths.append(tuple(seq))
            return
        for w in sorted(G.neighbors(v)):
            if dy.get(w, remaining) > remaining - 1:
                continue
            a, b = G.record(v, w)
            for k in range(G.mult(v, w)):
                seq.append((a, b, k))
                seq.append(w)
                extend(seq, w, remaining - 1)
                seq.pop()
                seq.pop()

    extend([x], x, t)
    return paths


def _step_choices(dag: GeodesicDAG, v):
    for w, m in dag.up[v]:
        a, b = dag.graph.record(v, w)
        for k in range(m):
            yield (a, b, k), w


def sample_shortest_path(dag: GeodesicDAG, seed: int) -> tuple:
    """Draw one shortest path uniformly at random.

    Each step from ``v`` takes a particular parallel copy toward ``w`` with
    probability ``n_y(w) / n_y(v)``; the product telescopes to
    ``1 / n_total`` for every path.
    """
    rng = random.Random(seed)
    v = dag.source
    seq: list = [v]
    while v != dag.target:
        r = rng.randrange(dag.n_y[v])
        for edge, w in _step_choices(dag, v):
            r -= dag.n_y[w]
            if r < 0:
                break
        seq.append(edge)
        seq.append(w)
        v = w
    return tuple(seq)


def path_probability(dag: GeodesicDAG, path: tuple) -> Fraction:
    """Exact probability that :func:`sample_shortest_path` returns ``path``."""
    if path[0] != dag.source or path[-1] != dag.target or len(path) != 2 * dag.t + 1:
        return Fraction(0)
    p = Fraction(1)
    for i in range(dag.t):
        v, edge, w = path[2 * i], path[2 * i + 1], path[2 * i + 2]
        if (edge, w) not in set(_step_choices(dag, v)):
            return Fraction(0)
        p *= Fraction(dag.n_y[w], dag.n_y[v])
    return p
