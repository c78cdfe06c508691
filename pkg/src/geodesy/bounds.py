"""Exact evaluation of the shortest-path count bounds.

Several bounds have half-integer exponents, so every bound ``B`` is stored
as the exact rational ``B**2`` and a count ``n`` satisfies the bound iff
``n**2 <= B**2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .entropy import check_degree_split
from .errors import GeodesyError, NotApplicableError
from .geodesic import GeodesicDAG, geodesic_dag
from .graph import MultiGraph, max_degree

__all__ = ["KINDS", "ExactBound", "CertReport", "evaluate_bound", "certify", "refined_certificate"]

KINDS = ("naive", "theorem1", "abstract2", "simple", "conjectured", "triangulation")


def _halves(delta: int) -> tuple[int, int]:
    return delta // 2, (delta + 1) // 2


@dataclass(frozen=True)
class ExactBound:
    kind: str
    delta: int
    t: int
    squared_value: Fraction

    @property
    def value(self) -> int | None:
        """The bound itself when it is an integer, else ``None``."""
        sq = self.squared_value
        if sq.denominator != 1:
            return None
        r = math.isqrt(sq.numerator)
        return r if r * r == sq.numerator else None

    @property
    def is_integer_valued(self) -> bool:
        return self.value is not None

    def __float__(self) -> float:
        return math.sqrt(self.squared_value)

    def admits(self, n: int) -> bool:
        return n * n <= self.squared_value

    def is_tight(self, n: int) -> bool:
        return n * n == self.squared_value

    def floor(self) -> int:
        """Largest integer ``n`` with ``n**2 <= B**2``."""
        return math.isqrt(self.squared_value.numerator // self.squared_value.denominator)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "delta": self.delta,
            "t": self.t,
            "squared_value": str(self.squared_value),
            "value": None if self.value is None else str(self.value),
            "approx": float(self),
        }


def evaluate_bound(kind: str, delta: int, t: int) -> ExactBound:
    """Closed-form bound of the given kind, with ``a = floor(Δ/2)``, ``b = ceil(Δ/2)``.

    - naive: Δ (Δ-1)^(t-1)
    - theorem1: Δ (ab)^((t-1)/2)
    - abstract2: 2 (Δ/2)^t
    - simple: 1 for t=1, Δ for t=2, Δ(Δ-1)(ab)^((t-3)/2) beyond
    - conjectured: 2 (ab)^(t/2); odd Δ and even t only
    - triangulation: theorem1 with Δ-2 in place of Δ inside the product; Δ>=3, t>1
    """
    if kind not in KINDS:
        raise ValueError(f"unknown bound kind {kind!r}")
    if delta < 1 or t < 1:
        raise NotApplicableError(f"{kind}: needs Δ >= 1 and t >= 1 (got Δ={delta}, t={t})")
    a, b = _halves(delta)
    if kind == "naive":
        sq = Fraction((delta * (delta - 1) ** (t - 1)) ** 2)
    elif kind == "theorem1":
        sq = Fraction(delta**2 * (a * b) ** (t - 1))
    elif kind == "abstract2":
        sq = Fraction(delta ** (2 * t), 4 ** (t - 1))
    elif kind == "simple":
        if t == 1:
            sq = Fraction(1)
        elif t == 2:
            sq = Fraction(delta**2)
        else:
            sq = Fraction(delta**2 * (delta - 1) ** 2 * (a * b) ** (t - 3))
    elif kind == "conjectured":
        if delta % 2 == 0 or t % 2 == 1:
            raise NotApplicableError("conjectured: needs odd Δ and even t")
        sq = Fraction((2 * (a * b) ** (t // 2)) ** 2)
    else:
        if delta < 3 or t <= 1:
            raise NotApplicableError("triangulation: needs Δ >= 3 and t > 1")
        a2, b2 = _halves(delta - 2)
        sq = Fraction(delta**2 * (a2 * b2) ** (t - 1))
    return ExactBound(kind, delta, t, sq)


def refined_certificate(dag: GeodesicDAG) -> int:
    """Per-graph squared bound from the term-by-term entropy argument.

    ``deg_y(x) * deg_x(y) * prod_i max_{v in L_i} deg_x(v) deg_y(v)``; the
    shortest-path count always satisfies ``n**2 <= `` this value.
    """
    if dag.t < 1:
        raise NotApplicableError("refined certificate needs t >= 1")
    value = dag.deg_y(dag.source) * dag.deg_x(dag.target)
    for layer in dag.layers[1:-1]:
        value *= max(dag.deg_x(v) * dag.deg_y(v) for v in layer)
    return value


@dataclass(frozen=True)
class Verdict:
    status: str  # "pass" | "fail" | "not-applicable"
    tight: bool = False
    bound: ExactBound | None = None
    reason: str = ""

    def to_dict(self) -> dict:
        d = {"status": self.status, "tight": self.tight}
        if self.bound is not None:
            d["squared_bound"] = str(self.bound.squared_value)
        if self.reason:
            d["reason"] = self.reason
        return d


@dataclass(frozen=True)
class CertReport:
    n: int
    t: int
    delta: int
    verdicts: dict = field(default_factory=dict)
    refined_certificate_value: int | None = None
    local_triangulation_condition: bool | None = None

    @property
    def all_pass(self) -> bool:
        return all(v.status != "fail" for v in self.verdicts.values())

    def to_dict(self) -> dict:
        return {
            "n": str(self.n),
            "n_squared": str(self.n * self.n),
            "t": self.t,
            "delta": self.delta,
            "verdicts": {k: v.to_dict() for k, v in self.verdicts.items()},
            "refined_certificate": None if self.refined_certificate_value is None else str(self.refined_certificate_value),
            "local_triangulation_condition": self.local_triangulation_condition,
        }


def certify(G: MultiGraph, x, y, claims=KINDS, delta: int | None = None) -> CertReport:
    """Count shortest ``x``-``y`` paths and test the count against each claimed bound.

    ``delta`` may raise the degree bound above ``max_degree(G)``.  The
    triangulation verdict assumes the caller knows ``G`` triangulates the
    sphere; independently, the local condition ``deg_x + deg_y <= Δ - 2`` is
    checked on the geodesic vertices and reported alongside.
    """
    dag = geodesic_dag(G, x, y)
    g_delta = max_degree(G)
    if delta is None:
        delta = g_delta
    elif delta < g_delta:
        raise GeodesyError(f"declared Δ={delta} below the graph's max degree {g_delta}")
    n, t = dag.n_total, dag.t
    verdicts = {}
    for kind in claims:
        if kind == "simple" and not G.is_simple():
            verdicts[kind] = Verdict("not-applicable", reason="graph has parallel edges")
            continue
        try:
            bound = evaluate_bound(kind, delta, t)
        except NotApplicableError as exc:
            verdicts[kind] = Verdict("not-applicable", reason=str(exc))
            continue
        status = "pass" if bound.admits(n) else "fail"
        verdicts[kind] = Verdict(status, tight=bound.is_tight(n), bound=bound)
    refined = refined_certificate(dag) if t >= 1 else None
    local = None
    if "triangulation" in claims and delta >= 3:
        local = check_degree_split(dag, limit=delta - 2).all_pass
    return CertReport(n, t, delta, verdicts, refined, local)
