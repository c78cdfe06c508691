"""Conditional entropies of a uniformly random shortest path.

For the random path ``(X_0, E_1, X_1, ..., E_t, X_t)`` this computes the
forward terms ``H(E_i | X_{i-1})``, the backward terms ``H(E_i | X_i)`` and
their per-layer pairings.  Probabilities are exact fractions; only the
logarithms are floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .geodesic import GeodesicDAG

__all__ = [
    "EntropyReport",
    "DegreeSplitReport",
    "vertex_marginals",
    "entropy_decomposition",
    "check_degree_split",
]


def _log2(q: Fraction) -> float:
    # int log2 avoids float overflow on huge numerators/denominators
    return math.log2(q.numerator) - math.log2(q.denominator)


def _entropy(weights) -> float:
    """Entropy in bits of ``[(prob, copies), ...]``; ``0 log 0 = 0``."""
    return -sum(c * p * _log2(p) for p, c in weights if p)


def vertex_marginals(dag: GeodesicDAG, i: int) -> dict[str, Fraction]:
    """``Pr[X_i = v] = n_x(v) n_y(v) / n_total`` for each ``v`` in layer ``i``."""
    if not 0 <= i <= dag.t:
        raise IndexError(f"layer {i} outside 0..{dag.t}")
    n = dag.n_total
    return {v: Fraction(dag.n_x[v] * dag.n_y[v], n) for v in dag.layers[i]}


def _forward_entropy(dag: GeodesicDAG, v) -> float:
    """H(next edge | current vertex = v)."""
    return _entropy((Fraction(dag.n_y[w], dag.n_y[v]), m) for w, m in dag.up[v])


def _backward_entropy(dag: GeodesicDAG, v) -> float:
    """H(previous edge | current vertex = v)."""
    return _entropy((Fraction(dag.n_x[u], dag.n_x[v]), m) for u, m in dag.down[v])


@dataclass(frozen=True)
class EntropyReport:
    """All entropy terms in bits.

    ``forward[i-1] = H(E_i | X_{i-1})`` and ``backward[i-1] = H(E_i | X_i)``
    for ``i = 1..t``.  ``paired[i-1] = H(E_{i+1} | X_i) + H(E_i | X_i)`` for
    ``i = 1..t-1``, and ``degree_terms[i-1]`` is the matching
    ``sum_v Pr[X_i = v] log2(deg_x(v) deg_y(v))`` that dominates it.
    """

    H_total: float
    forward: tuple[float, ...]
    backward: tuple[float, ...]
    paired: tuple[float, ...]
    degree_terms: tuple[float, ...]
    delta: int

    @property
    def first(self) -> float:
        return self.forward[0] if self.forward else 0.0

    @property
    def last(self) -> float:
        return self.backward[-1] if self.backward else 0.0

    @property
    def layer_cap(self) -> float:
        """log2(floor(Δ/2) ceil(Δ/2)), the bound on every paired term."""
        a, b = self.delta // 2, (self.delta + 1) // 2
        return math.log2(a * b) if a * b else -math.inf

    def residuals(self) -> dict[str, float]:
        """Deviations of the three chain-rule identities; all should be ~0."""
        return {
            "forward": sum(self.forward) - self.H_total,
            "backward": sum(self.backward) - self.H_total,
            "two_sided": self.first + self.last + sum(self.paired) - 2 * self.H_total,
        }

    def check(self, tol: float = 1e-9) -> bool:
        if any(abs(r) > tol for r in self.residuals().values()):
            return False
        if self.forward:
            log_delta = math.log2(self.delta)
            if self.first > log_delta + tol or self.last > log_delta + tol:
                return False
        for s, d in zip(self.paired, self.degree_terms):
            if s > d + tol or d > self.layer_cap + tol:
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "H_total": self.H_total,
            "forward": list(self.forward),
            "backward": list(self.backward),
            "paired": list(self.paired),
            "degree_terms": list(self.degree_terms),
            "layer_cap": self.layer_cap if self.paired else None,
            "residuals": self.residuals(),
            "ok": self.check(),
        }


def entropy_decomposition(dag: GeodesicDAG) -> EntropyReport:
    """Evaluate every term of the forward/backward chain-rule expansion.

    The path is memoryless given the current vertex, so each conditional
    entropy only needs the one-layer marginal of ``X_i``.
    """
    t = dag.t
    marg = [vertex_marginals(dag, i) for i in range(t + 1)]
    forward = tuple(
        sum(float(p) * _forward_entropy(dag, v) for v, p in marg[i - 1].items()) for i in range(1, t + 1)
    )
    backward = tuple(
        sum(float(p) * _backward_entropy(dag, v) for v, p in marg[i].items()) for i in range(1, t + 1)
    )
    paired = tuple(forward[i] + backward[i - 1] for i in range(1, t))
    degree_terms = tuple(
        sum(float(p) * math.log2(dag.deg_x(v) * dag.deg_y(v)) for v, p in marg[i].items()) for i in range(1, t)
    )
    n = dag.n_total
    return EntropyReport(
        H_total=math.log2(n),
        forward=forward,
        backward=backward,
        paired=paired,
        degree_terms=degree_terms,
        delta=dag.delta,
    )


@dataclass(frozen=True)
class DegreeSplitReport:
    limit: int
    vertices: dict  # v -> (deg_x, deg_y, disjoint)
    all_pass: bool

    def to_dict(self) -> dict:
        return {
            "limit": self.limit,
            "vertices": {v: {"deg_x": a, "deg_y": b, "disjoint": d} for v, (a, b, d) in self.vertices.items()},
            "all_pass": self.all_pass,
        }


def check_degree_split(dag: GeodesicDAG, limit: int | None = None) -> DegreeSplitReport:
    """Check ``N_x(v) ∩ N_y(v) = ∅`` and ``deg_x(v) + deg_y(v) <= limit`` at interior vertices.

    ``limit`` defaults to the graph's maximum degree; pass ``Δ - 2`` for the
    sphere-triangulation condition.
    """
    if limit is None:
        limit = dag.delta
    rows = {}
    ok = True
    for v in dag.interior:
        dx, dy = dag.deg_x(v), dag.deg_y(v)
        disjoint = not (dag.N_x(v) & dag.N_y(v))
        rows[v] = (dx, dy, disjoint)
        ok = ok and disjoint and dx + dy <= limit
    return DegreeSplitReport(limit=limit, vertices=rows, all_pass=ok)
