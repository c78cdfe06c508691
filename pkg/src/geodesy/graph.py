"""Undirected multigraphs with integer edge multiplicities.

Parallel edges are stored as one record per unordered vertex pair carrying a
positive multiplicity.  Self-loops are rejected.
"""

from __future__ import annotations

import json
from collections import deque
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator

from .errors import ParseError, UnknownVertexError

__all__ = [
    "MultiGraph",
    "WeightedGraph",
    "parse_graph",
    "serialize_graph",
    "read_graph",
    "parse_weighted_graph",
    "max_degree",
    "girth",
    "bfs_distances",
]


class MultiGraph:
    """Immutable undirected multigraph.

    Parameters
    ----------
    vertices : iterable of str, optional
        Vertex ids, kept in first-seen order.  Endpoints of ``edges`` are
        added automatically.
    edges : iterable of (u, v) or (u, v, mult)
        Repeated pairs are merged by summing multiplicities.

    Examples
    --------
    >>> G = MultiGraph(edges=[("a", "b", 2), ("b", "a"), ("b", "c")])
    >>> G.mult("a", "b"), G.degree("b")
    (3, 4)
    """

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[tuple] = ()):
        order: dict[str, None] = {}
        for v in vertices:
            order.setdefault(str(v), None)
        records: dict[frozenset, list] = {}
        for e in edges:
            if len(e) == 2:
                u, v = e
                m = 1
            else:
                u, v, m = e
            u, v = str(u), str(v)
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if not isinstance(m, int) or isinstance(m, bool) or m <= 0:
                raise ValueError(f"multiplicity must be a positive integer, got {m!r}")
            order.setdefault(u, None)
            order.setdefault(v, None)
            key = frozenset((u, v))
            if key in records:
                records[key][2] += m
            else:
                records[key] = [u, v, m]

        self._vertices = tuple(order)
        self._edges = tuple((u, v, m) for u, v, m in records.values())
        adj: dict[str, dict[str, int]] = {v: {} for v in self._vertices}
        for u, v, m in self._edges:
            adj[u][v] = m
            adj[v][u] = m
        self._adj = adj
        self._orient = {frozenset((u, v)): (u, v) for u, v, _ in self._edges}

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[tuple[str, str, int], ...]:
        """Edge records ``(u, v, mult)`` in insertion order."""
        return self._edges

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return set(self._vertices) == set(other._vertices) and self._edge_map() == other._edge_map()

    def __hash__(self):
        return hash((frozenset(self._vertices), frozenset(self._edge_map().items())))

    def __repr__(self) -> str:
        return f"MultiGraph(|V|={len(self._vertices)}, records={len(self._edges)}, Δ={max_degree(self)})"

    def _edge_map(self) -> dict[frozenset, int]:
        return {frozenset((u, v)): m for u, v, m in self._edges}

    def check_vertex(self, v) -> None:
        if v not in self._adj:
            raise UnknownVertexError(f"unknown vertex {v!r}")

    def neighbors(self, v) -> dict[str, int]:
        """Map neighbor -> multiplicity of the connecting bundle."""
        self.check_vertex(v)
        return self._adj[v]

    def mult(self, u, v) -> int:
        return self._adj.get(u, {}).get(v, 0)

    def record(self, u, v) -> tuple[str, str]:
        """The stored orientation ``(a, b)`` of the record joining ``u`` and ``v``."""
        return self._orient[frozenset((u, v))]

    def degree(self, v) -> int:
        return sum(self.neighbors(v).values())

    def total_multiplicity(self) -> int:
        return sum(m for _, _, m in self._edges)

    def is_simple(self) -> bool:
        return all(m == 1 for _, _, m in self._edges)

    def canonical(self) -> "MultiGraph":
        """Same graph with sorted vertices and lexicographically oriented, sorted records."""
        recs = sorted((min(u, v), max(u, v), m) for u, v, m in self._edges)
        return MultiGraph(sorted(self._vertices), recs)


class WeightedGraph:
    """Undirected graph with exact rational edge weights in [0, 1]."""

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[tuple] = ()):
        order: dict[str, None] = {}
        for v in vertices:
            order.setdefault(str(v), None)
        weights: dict[frozenset, list] = {}
        for u, v, w in edges:
            u, v = str(u), str(v)
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            w = Fraction(w)
            if w < 0 or w > 1:
                raise ValueError(f"weight {w} outside [0, 1]")
            order.setdefault(u, None)
            order.setdefault(v, None)
            key = frozenset((u, v))
            if key in weights:
                weights[key][2] += w
            else:
                weights[key] = [u, v, w]
        self.vertices = tuple(order)
        self.edges = tuple((u, v, w) for u, v, w in weights.values())

    def __repr__(self) -> str:
        return f"WeightedGraph(|V|={len(self.vertices)}, edges={len(self.edges)})"


def _parse_mult(tok: str, lineno: int) -> int:
    try:
        m = int(tok)
    except ValueError:
        raise ParseError(f"multiplicity {tok!r} is not an integer", lineno) from None
    if m <= 0:
        raise ParseError(f"non-positive multiplicity {m}", lineno)
    return m


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_graph(text: str, format: str = "edge-list") -> MultiGraph:
    """Parse a multigraph from edge-list or JSON text.

    Edge-list lines are ``u v [mult]``; ``#`` starts a comment.  Lines that
    repeat a pair add to its multiplicity.

    >>> parse_graph("a b 2\\nb c").edges
    (('a', 'b', 2), ('b', 'c', 1))
    """
    if format == "json":
        return _parse_json(text)
    if format != "edge-list":
        raise ValueError(f"unknown graph format {format!r}")
    edges = []
    for lineno, toks in _data_lines(text):
        if len(toks) not in (2, 3):
            raise ParseError(f"expected 'u v [mult]', got {len(toks)} fields", lineno)
        u, v = toks[0], toks[1]
        if u == v:
            raise ParseError(f"self-loop at {u!r}", lineno)
        m = _parse_mult(toks[2], lineno) if len(toks) == 3 else 1
        edges.append((u, v, m))
    return MultiGraph(edges=edges)


def _parse_json(text: str) -> MultiGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict) or "edges" not in doc:
        raise ParseError("JSON graph must be an object with an 'edges' list")
    edges = []
    for i, e in enumerate(doc["edges"]):
        try:
            u, v = str(e["u"]), str(e["v"])
            m = e.get("mult", 1)
        except (TypeError, KeyError):
            raise ParseError(f"edge #{i} must have 'u' and 'v'") from None
        if u == v:
            raise ParseError(f"edge #{i}: self-loop at {u!r}")
        if not isinstance(m, int) or isinstance(m, bool) or m <= 0:
            raise ParseError(f"edge #{i}: non-positive or non-integer multiplicity {m!r}")
        edges.append((u, v, m))
    return MultiGraph(doc.get("vertices", ()), edges)


def serialize_graph(G: MultiGraph, format: str = "edge-list", metadata: dict | None = None) -> str:
    """Inverse of :func:`parse_graph`.

    Edge lists cannot carry isolated vertices; use JSON for those.  JSON
    output may carry a ``metadata`` object (generators put the designated
    pair there).
    """
    if format == "json":
        doc: dict = {
            "vertices": list(G.vertices),
            "edges": [{"u": u, "v": v, "mult": m} for u, v, m in G.edges],
        }
        if metadata:
            doc["metadata"] = metadata
        return json.dumps(doc, indent=2) + "\n"
    if format != "edge-list":
        raise ValueError(f"unknown graph format {format!r}")
    lines = []
    if metadata:
        lines.extend(f"# {k}: {v}" for k, v in metadata.items())
    lines.extend(f"{u} {v} {m}" for u, v, m in G.edges)
    return "\n".join(lines) + "\n"


def _format_for(path: Path, format: str | None) -> str:
    if format:
        return format
    return "json" if path.suffix.lower() == ".json" else "edge-list"


def read_graph(path, format: str | None = None) -> MultiGraph:
    path = Path(path)
    return parse_graph(path.read_text(encoding="utf-8"), _format_for(path, format))


def parse_weighted_graph(text: str) -> WeightedGraph:
    """Parse ``u v w`` lines where ``w`` is a decimal or a fraction ``p/q``."""
    edges = []
    for lineno, toks in _data_lines(text):
        if len(toks) != 3:
            raise ParseError(f"expected 'u v w', got {len(toks)} fields", lineno)
        u, v, tok = toks
        if u == v:
            raise ParseError(f"self-loop at {u!r}", lineno)
        try:
            w = Fraction(tok)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad weight {tok!r}", lineno) from None
        if w < 0 or w > 1:
            raise ParseError(f"weight {tok} outside [0, 1]", lineno)
        edges.append((u, v, w))
    return WeightedGraph(edges=edges)


def max_degree(G: MultiGraph) -> int:
    """Largest multiplicity-weighted degree; 0 for the empty graph."""
    return max((G.degree(v) for v in G.vertices), default=0)


def bfs_distances(G: MultiGraph, source) -> dict[str, int]:
    G.check_vertex(source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in G.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def girth(G: MultiGraph) -> int | None:
    """Length of the shortest cycle, or ``None`` for a forest.

    A bundle of multiplicity >= 2 is a 2-cycle.
    """
    if any(m >= 2 for _, _, m in G.edges):
        return 2
    best = None
    for root in G.vertices:
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in G.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best
