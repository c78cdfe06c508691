"""Exhaustive search for the layered multigraph with the most shortest paths.

Some maximizer is always layered: an edge inside a layer, or skipping
layers, either shortens the distance or lies on no geodesic, and dropping
it only frees degree.  So the search ranges over profiles

    x = L_0, L_1, ..., L_{t-1}, L_t = y,   |L_i| <= layer_cap,

with a nonnegative multiplicity matrix between consecutive layers, every
interior vertex having at least one edge in each direction and total degree
at most Δ.  The count is the single entry of ``M_1 M_2 ... M_t``.

Rather than listing profiles one by one, the search sweeps layer by layer.
What the remaining layers can achieve depends only on the multiset of
``(paths from x, spare degree)`` pairs of the current layer, so optimal
continuations are memoized on that multiset.  Columns of each matrix are
generated as a sorted multiset, which removes the permutation symmetry of
the new layer.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import comb

from .errors import BudgetExceededError
from .graph import MultiGraph, serialize_graph

__all__ = [
    "LayeredProfile",
    "SearchResult",
    "search_max_count",
    "iter_profiles",
    "DEFAULT_LAYER_CAP",
    "DEFAULT_PROFILE_LIMIT",
]

DEFAULT_LAYER_CAP = 3
DEFAULT_PROFILE_LIMIT = 10**8


@dataclass(frozen=True)
class LayeredProfile:
    """Multiplicity matrices ``M_1..M_t``; ``matrices[i][u][w]`` joins layer i vertex u to layer i+1 vertex w."""

    matrices: tuple

    @property
    def t(self) -> int:
        return len(self.matrices)

    @property
    def layer_sizes(self) -> tuple[int, ...]:
        return (1,) + tuple(len(M[0]) for M in self.matrices)

    def count(self) -> int:
        vec = [1]
        for M in self.matrices:
            vec = [sum(vec[u] * M[u][w] for u in range(len(vec))) for w in range(len(M[0]))]
        return vec[0]

    def vertex_name(self, i: int, j: int) -> str:
        if i == 0:
            return "x"
        if i == self.t:
            return "y"
        return f"L{i}_{j}"

    def to_graph(self) -> MultiGraph:
        vertices = [self.vertex_name(i, j) for i, s in enumerate(self.layer_sizes) for j in range(s)]
        edges = []
        for i, M in enumerate(self.matrices):
            for u, row in enumerate(M):
                for w, m in enumerate(row):
                    if m:
                        edges.append((self.vertex_name(i, u), self.vertex_name(i + 1, w), m))
        return MultiGraph(vertices, edges)


@dataclass(frozen=True)
class SearchResult:
    delta: int
    t: int
    layer_cap: int
    simple_mode: bool
    max_count: int
    witness: LayeredProfile = field(repr=False)
    profiles_explored: int
    transitions_evaluated: int

    @property
    def witness_graph(self) -> MultiGraph:
        return self.witness.to_graph()

    def to_dict(self) -> dict:
        return {
            "delta": self.delta,
            "t": self.t,
            "layer_cap": self.layer_cap,
            "simple_mode": self.simple_mode,
            "max_count": str(self.max_count),
            "profiles_explored": str(self.profiles_explored),
            "transitions_evaluated": self.transitions_evaluated,
            "witness": json.loads(serialize_graph(self.witness_graph, "json", {"x": "x", "y": "y"})),
            "layer_sizes": list(self.witness.layer_sizes),
        }


def _column_vectors(caps, lo: int, hi: int, max_entry: int) -> list[tuple[int, ...]]:
    ranges = [range(min(c, max_entry) + 1) for c in caps]
    return [v for v in product(*ranges) if lo <= sum(v) <= hi]


def _transitions(state, delta: int, layer_cap: int, simple: bool, final: bool):
    """Yield ``(columns, next_state)`` for every canonical matrix leaving ``state``.

    ``state`` is a sorted tuple of ``(n_x, spare)``.  Columns come back
    ordered to line up with the sorted ``next_state``.
    """
    caps = [c for _, c in state]
    max_entry = 1 if simple else delta
    if final:
        for col in product(*[range(1, min(c, max_entry) + 1) for c in caps]):
            if sum(col) <= delta:
                yield (col,), None
        return
    vectors = _column_vectors(caps, 1, delta - 1, max_entry)
    for size in range(1, layer_cap + 1):
        for cols in combinations_with_replacement(vectors, size):
            sums = [sum(col[r] for col in cols) for r in range(len(state))]
            if any(s < 1 or s > c for s, c in zip(sums, caps)):
                continue
            nodes = sorted(
                ((sum(col[r] * state[r][0] for r in range(len(state))), delta - sum(col)), col) for col in cols
            )
            yield tuple(col for _, col in nodes), tuple(nd for nd, _ in nodes)


def _matrix(cols, rows: int) -> tuple:
    return tuple(tuple(col[r] for col in cols) for r in range(rows))


class _Solver:
    def __init__(self, delta, t, layer_cap, simple, limit):
        self.delta, self.t, self.layer_cap, self.simple, self.limit = delta, t, layer_cap, simple, limit
        self.evaluated = 0
        self.best = lru_cache(maxsize=None)(self._best)

    def _best(self, layer: int, state):
        """``(max_count, n_profiles, matrices)`` for the layers after ``layer``; ``None`` if infeasible.

        Among maximizers ``matrices`` is the lexicographically least
        sequence; since the first matrix fixes the next state, the least
        sequence is the least first matrix followed by its memoized suffix.
        """
        final = layer == self.t - 1
        top = None
        n_profiles = 0
        for cols, nxt in _transitions(state, self.delta, self.layer_cap, self.simple, final):
            self.evaluated += 1
            if self.evaluated > self.limit:
                raise BudgetExceededError(
                    f"search exceeded the limit of {self.limit} transitions", self.evaluated
                )
            M = _matrix(cols, len(state))
            if final:
                value, suffix = sum(c * n for c, (n, _) in zip(cols[0], state)), ()
                n_profiles += 1
            else:
                sub = self.best(layer + 1, nxt)
                if sub is None:
                    continue
                value, suffix = sub[0], sub[2]
                n_profiles += sub[1]
            if top is None or value > top[0] or (value == top[0] and (M,) + suffix < top[1]):
                top = (value, (M,) + suffix)
        if top is None:
            return None
        return top[0], n_profiles, top[1]


def _matrix_estimate(delta: int, layer_cap: int, simple: bool) -> int:
    """Matrices leaving one full layer; the largest single fan-out of the search."""
    caps = [delta - 1] * layer_cap
    k = len(_column_vectors(caps, 1, delta - 1, 1 if simple else delta))
    return sum(comb(k + s - 1, s) for s in range(1, layer_cap + 1))


def _solve_branch(args):
    delta, t, layer_cap, simple, limit, state = args
    solver = _Solver(delta, t, layer_cap, simple, limit)
    return solver.best(1, state), solver.evaluated


def search_max_count(
    delta: int,
    t: int,
    layer_cap: int = DEFAULT_LAYER_CAP,
    simple_mode: bool = False,
    profile_limit: int | None = None,
    jobs: int = 1,
) -> SearchResult:
    """Maximum number of shortest x-y paths over layered profiles with ``|L_i| <= layer_cap``.

    ``profile_limit`` bounds the number of matrix transitions evaluated
    (default from ``GEODESY_PROFILE_LIMIT`` or 10**8).  ``jobs > 1`` spreads
    the first layer over worker processes; the merge keeps the first
    maximizer in enumeration order, so the witness does not depend on
    ``jobs``.
    """
    if delta < 2 or t < 1 or layer_cap < 1:
        raise ValueError("search needs Δ >= 2, t >= 1 and layer_cap >= 1")
    if profile_limit is None:
        profile_limit = int(os.environ.get("GEODESY_PROFILE_LIMIT", DEFAULT_PROFILE_LIMIT))
    estimate = _matrix_estimate(delta, layer_cap, simple_mode)
    if estimate > profile_limit:
        raise BudgetExceededError(
            f"a single layer already has about {estimate} matrices, above the limit {profile_limit}", estimate
        )
    root = ((1, delta),)
    if t == 1 or jobs <= 1:
        solver = _Solver(delta, t, layer_cap, simple_mode, profile_limit)
        res = solver.best(0, root)
        return SearchResult(delta, t, layer_cap, simple_mode, res[0], LayeredProfile(res[2]), res[1], solver.evaluated)

    firsts = list(_transitions(root, delta, layer_cap, simple_mode, final=False))
    tasks = [(delta, t, layer_cap, simple_mode, profile_limit, nxt) for _, nxt in firsts]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        outcomes = list(pool.map(_solve_branch, tasks))
    top = None
    total_profiles = 0
    evaluated = len(firsts)
    for (cols, _), (res, ev) in zip(firsts, outcomes):
        evaluated += ev
        if res is None:
            continue
        total_profiles += res[1]
        wit = (_matrix(cols, 1),) + res[2]
        if top is None or res[0] > top[0] or (res[0] == top[0] and wit < top[1]):
            top = (res[0], wit)
    return SearchResult(
        delta, t, layer_cap, simple_mode, top[0], LayeredProfile(top[1]), total_profiles, evaluated
    )


def iter_profiles(delta: int, t: int, layer_cap: int = DEFAULT_LAYER_CAP, simple_mode: bool = False):
    """Yield every canonical profile explicitly (no memoization); for cross-checks."""

    def walk(layer, state, acc):
        final = layer == t - 1
        for cols, nxt in _transitions(state, delta, layer_cap, simple_mode, final):
            M = _matrix(cols, len(state))
            if final:
                yield LayeredProfile(tuple(acc + [M]))
            else:
                yield from walk(layer + 1, nxt, acc + [M])

    yield from walk(0, ((1, delta),), [])
