"""Random walks on weighted graphs via quantization to multigraphs.

Each weight is rounded (half up) to a multiple of ``1/Δ`` and becomes a
bundle of that multiplicity.  Every vertex is then padded with silent
self-loops to exactly ``Δ`` outgoing half-edges, so one walk step picks one
of ``Δ`` slots uniformly.  The first time the walk can reach ``y`` is
``t = d(x, y)`` and it does so with probability ``n(x, y) / Δ**t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NoPathError, QuantizationError
from .geodesic import geodesic_dag
from .graph import MultiGraph, WeightedGraph, max_degree

__all__ = ["QuantizedWalk", "quantize_weights", "multigraph_walk", "minimal_arrival_probability", "arrival_bound"]


@dataclass(frozen=True)
class QuantizedWalk:
    base: WeightedGraph = field(repr=False)
    delta: int
    graph: MultiGraph = field(repr=False)
    padding: dict = field(repr=False)
    quantization_error: Fraction
    warnings: tuple[str, ...] = ()

    def padded_degree(self, v) -> int:
        return self.graph.degree(v) + self.padding[v]


def _round_half_up(q: Fraction) -> int:
    return math.floor(q + Fraction(1, 2))


def quantize_weights(W: WeightedGraph, delta: int) -> QuantizedWalk:
    """Round every weight to the nearest multiple of ``1/delta`` (ties up).

    Raises ``QuantizationError`` if some vertex ends up with more than
    ``delta`` half-edges.  Positive weights that round to zero are dropped
    with a warning.
    """
    if delta < 2:
        raise ValueError("quantization needs Δ >= 2")
    edges = []
    warnings = []
    err = Fraction(0)
    for u, v, w in W.edges:
        m = _round_half_up(w * delta)
        err = max(err, abs(w - Fraction(m, delta)))
        if m == 0:
            if w > 0:
                warnings.append(f"edge {u}-{v} with weight {w} rounds to 0 at Δ={delta}; dropped")
            continue
        edges.append((u, v, m))
    G = MultiGraph(W.vertices, edges)
    padding = {}
    for v in G.vertices:
        pad = delta - G.degree(v)
        if pad < 0:
            raise QuantizationError(f"vertex {v} has {G.degree(v)} half-edges after rounding, above Δ={delta}")
        padding[v] = pad
    return QuantizedWalk(W, delta, G, padding, err, tuple(warnings))


def multigraph_walk(G: MultiGraph, delta: int | None = None) -> QuantizedWalk:
    """Treat a multigraph itself as a walk with ``delta`` slots per vertex."""
    if delta is None:
        delta = max_degree(G)
    W = WeightedGraph(G.vertices, [(u, v, Fraction(m, delta)) for u, v, m in G.edges])
    return quantize_weights(W, delta)


def minimal_arrival_probability(q: QuantizedWalk, x, y) -> Fraction:
    """Exact probability that the walk from ``x`` is at ``y`` after ``t = d(x, y)`` steps.

    A ``t``-step walk that reaches ``y`` cannot afford a self-loop or a
    detour, so it is a shortest path of the quantized graph.
    """
    try:
        dag = geodesic_dag(q.graph, x, y)
    except NoPathError:
        raise NoPathError(f"{y!r} is not reachable from {x!r} in the quantized graph") from None
    return Fraction(dag.n_total, q.delta**dag.t)


def arrival_bound(t: int) -> Fraction:
    """``(1/2)**(t-1)``, the universal cap on the minimal-time arrival probability."""
    return Fraction(1, 2) ** (t - 1)
