"""Generators for the extremal families and their closed-form antipodal counts."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import GadgetNotFoundError
from .graph import MultiGraph, girth

__all__ = [
    "FamilySpec",
    "gen_cycle_multigraph",
    "gen_blowup_cycle",
    "closed_form_count",
    "generate",
    "DEFAULT_GADGET_BUDGET",
]

DEFAULT_GADGET_BUDGET = 10**5
FAMILIES = ("cycle-multigraph", "blowup-cycle", "blowup-cycle-odd", "blowup-high-girth")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    delta: int
    t: int
    girth_target: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")


def gen_cycle_multigraph(delta: int, t: int) -> tuple[MultiGraph, str, str]:
    """The ``2t``-cycle with bundle multiplicities alternating ``floor(Δ/2)``, ``ceil(Δ/2)``.

    Vertices are ``v0 .. v{2t-1}``; the returned pair is ``(v0, v{t})``.
    For ``t = 1`` the two bundles join the same pair and merge into one
    record of multiplicity ``Δ``.
    """
    if delta < 2:
        raise ValueError("cycle multigraph needs Δ >= 2")
    if t < 1:
        raise ValueError("cycle multigraph needs t >= 1")
    a, b = delta // 2, (delta + 1) // 2
    n = 2 * t
    edges = [(f"v{i}", f"v{(i + 1) % n}", a if i % 2 == 0 else b) for i in range(n)]
    G = MultiGraph([f"v{i}" for i in range(n)], edges)
    return G, "v0", f"v{t}"


def _groups(t: int, size: int) -> list[list[str]]:
    return [[f"g{i}_{j}" for j in range(size)] for i in range(2 * t)]


def _circulant_blowup(t: int, size: int, shifts) -> MultiGraph:
    groups = _groups(t, size)
    edges = []
    for i in range(2 * t):
        nxt = groups[(i + 1) % (2 * t)]
        for j, u in enumerate(groups[i]):
            for s in shifts[i]:
                edges.append((u, nxt[(j + s) % size]))
    return MultiGraph([v for g in groups for v in g], edges)


def gen_blowup_cycle(
    delta: int,
    t: int,
    mode: str = "even",
    girth_bound: int | None = None,
    budget: int = DEFAULT_GADGET_BUDGET,
) -> tuple[MultiGraph, str, str]:
    """Simple Δ-regular graph built on a cycle of ``2t`` vertex groups.

    Modes
    -----
    even
        Groups of ``Δ/2`` vertices, consecutive groups joined by complete
        bipartite graphs.
    odd-alternating
        Groups of ``ceil(Δ/2)`` vertices; joins alternate between the
        complete bipartite graph and a ``floor(Δ/2)``-regular bipartite
        circulant (the complete one minus a perfect matching).
    high-girth
        Joins are ``Δ/2``-regular bipartite circulants whose shift sets
        (containing 0) alternate between two choices; group sizes and shift
        sets are tried in a fixed order until the whole graph has girth
        ``> girth_bound``.

    The designated pair is ``g0_0`` and ``g{t}_0``, which are at distance t.
    """
    if t < 2:
        raise ValueError("blowup cycle needs t >= 2 (t = 1 would need parallel edges)")
    n_joins = 2 * t
    if mode == "even":
        if delta % 2:
            raise ValueError("even blowup needs even Δ")
        h = delta // 2
        G = _circulant_blowup(t, h, [range(h)] * n_joins)
    elif mode == "odd-alternating":
        if delta % 2 == 0 or delta < 3:
            raise ValueError("odd-alternating blowup needs odd Δ >= 3")
        b = (delta + 1) // 2
        shifts = [range(b) if i % 2 == 0 else range(b - 1) for i in range(n_joins)]
        G = _circulant_blowup(t, b, shifts)
    elif mode == "high-girth":
        if delta % 2:
            raise ValueError("high-girth blowup needs even Δ")
        if girth_bound is None:
            raise ValueError("high-girth blowup needs girth_bound")
        G = _high_girth_blowup(delta // 2, t, girth_bound, budget)
    else:
        raise ValueError(f"unknown blowup mode {mode!r}")
    return G, "g0_0", f"g{t}_0"


def _differences(shifts, m: int) -> list[int]:
    return [(p - q) % m for p in shifts for q in shifts if p != q]


def _short_cycle_free(G: MultiGraph, roots, g: int) -> bool:
    """True iff no cycle of length <= g passes through any of ``roots``."""
    for root in roots:
        dist = {root: 0}
        parent = {root: None}
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                if 2 * dist[u] >= g:
                    break
                for w in G.neighbors(u):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif parent[u] != w and dist[u] + dist[w] + 1 <= g:
                        return False
            frontier = nxt
    return True


def _high_girth_blowup(h: int, t: int, g: int, budget: int) -> MultiGraph:
    # joins alternate shift sets S (even joins) and T (odd joins), both containing 0
    if g >= 2 * t:
        # lifting the group cycle along shift 0 always closes a 2t-cycle
        raise GadgetNotFoundError(f"girth > {g} is impossible with 2t = {2 * t} groups; need g < 2t")
    tried = 0
    size = h
    while True:
        sets = [(0,) + rest for rest in combinations(range(1, size), h - 1)]
        diffs = [set(_differences(S, size)) for S in sets]
        # a repeated difference inside one join, or a difference shared by
        # neighbouring joins, closes a 4-cycle
        sidon = [len(d) == len(S) * (len(S) - 1) for d, S in zip(diffs, sets)]
        for i, S in enumerate(sets):
            for j, T in enumerate(sets):
                if tried >= budget:
                    raise GadgetNotFoundError(f"no circulant gadget with girth > {g} within {budget} candidates")
                tried += 1
                if g >= 4 and not (sidon[i] and sidon[j] and not diffs[i] & diffs[j]):
                    continue
                G = _circulant_blowup(t, size, [S if k % 2 == 0 else T for k in range(2 * t)])
                # translation inside every group is an automorphism, so one root per group suffices
                if _short_cycle_free(G, [f"g{k}_0" for k in range(2 * t)], g):
                    return G
        size += 1


def closed_form_count(family: str, delta: int, t: int) -> int:
    """Antipodal shortest-path count of a generated family.

    ``cycle-multigraph``: ``2 (ab)^(t/2)`` for even t, ``Δ (ab)^((t-1)/2)``
    for odd t.  ``blowup-cycle`` (even Δ): ``2 (Δ/2)^(t-1)``, one factor
    ``(Δ/2)^(t-1)`` per arc of the group cycle.
    """
    if family == "cycle-multigraph":
        a, b = delta // 2, (delta + 1) // 2
        if t % 2 == 0:
            return 2 * (a * b) ** (t // 2)
        return delta * (a * b) ** ((t - 1) // 2)
    if family == "blowup-cycle":
        if delta % 2:
            raise ValueError("blowup-cycle closed form needs even Δ")
        return 2 * (delta // 2) ** (t - 1)
    raise ValueError(f"no closed form for family {family!r}")


def generate(spec: FamilySpec, budget: int = DEFAULT_GADGET_BUDGET) -> tuple[MultiGraph, str, str]:
    if spec.family == "cycle-multigraph":
        return gen_cycle_multigraph(spec.delta, spec.t)
    mode = {"blowup-cycle": "even", "blowup-cycle-odd": "odd-alternating", "blowup-high-girth": "high-girth"}
    return gen_blowup_cycle(spec.delta, spec.t, mode[spec.family], spec.girth_target, budget)
