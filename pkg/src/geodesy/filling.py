"""F2 chain complexes and minimal fillings of cycles.

Boundary matrices are stored column-wise as Python ints used as bitsets:
bit ``r`` of ``boundaries[k][j]`` is set iff (k-1)-face ``r`` lies in the
boundary of k-face ``j``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from itertools import combinations, product
from pathlib import Path

from .errors import CapExceededError, GeodesyError, NoFillingError, NotACycleError, ParseError

__all__ = [
    "ChainComplexF2",
    "ChainF2",
    "FillingResult",
    "build_complex",
    "grid_complex",
    "cube_surface",
    "simplicial_complex",
    "load_complex",
    "boundary",
    "minimal_fillings",
    "is_irreducible",
    "DEFAULT_KERNEL_CAP",
]

DEFAULT_KERNEL_CAP = 24
DEFAULT_LIST_CAP = 16


def _bits(indices) -> int:
    v = 0
    for i in indices:
        v |= 1 << i
    return v


def _support(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


@dataclass(frozen=True)
class ChainF2:
    dim: int
    bits: int = 0

    @classmethod
    def from_support(cls, dim: int, support) -> "ChainF2":
        return cls(dim, _bits(support))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(_support(self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __add__(self, other: "ChainF2") -> "ChainF2":
        if other.dim != self.dim:
            raise ValueError("cannot add chains of different dimensions")
        return ChainF2(self.dim, self.bits ^ other.bits)

    def __bool__(self) -> bool:
        return self.bits != 0


class ChainComplexF2:
    """Faces by dimension plus F2 boundary operators.

    Parameters
    ----------
    faces : list of lists
        ``faces[k]`` are the labels of the k-faces.
    boundaries : list of lists of int
        ``boundaries[k][j]`` is the bitset boundary of k-face ``j``
        (``boundaries[0]`` is ignored).
    """

    def __init__(self, faces, boundaries, name: str = ""):
        self.faces = [list(fs) for fs in faces]
        self.boundaries = [list(b) for b in boundaries]
        self.name = name
        self._index = [{f: i for i, f in enumerate(fs)} for fs in self.faces]
        for k in range(2, self.dimension + 1):
            for j, col in enumerate(self.boundaries[k]):
                acc = 0
                for r in _support(col):
                    acc ^= self.boundaries[k - 1][r]
                if acc:
                    raise GeodesyError(f"boundary of boundary nonzero at {k}-face {self.faces[k][j]}")

    @property
    def dimension(self) -> int:
        return len(self.faces) - 1

    def n_faces(self, k: int) -> int:
        return len(self.faces[k])

    def face_index(self, k: int, label) -> int:
        return self._index[k][label]

    def face_degree(self, k: int | None = None) -> int:
        """Max number of k-faces sharing one (k-1)-face (defaults to the top dimension)."""
        k = self.dimension if k is None else k
        counts = [0] * self.n_faces(k - 1)
        for col in self.boundaries[k]:
            for r in _support(col):
                counts[r] += 1
        return max(counts, default=0)

    def chain(self, k: int, labels) -> ChainF2:
        return ChainF2(k, _bits(self.face_index(k, lab) for lab in labels))

    def chain_from_json(self, k: int, items) -> ChainF2:
        """Chain of k-faces from a list of face indices or vertex lists."""
        idx = []
        for it in items:
            try:
                idx.append(it if isinstance(it, int) else self.face_index(k, tuple(sorted(it))))
            except (KeyError, TypeError):
                raise ParseError(f"{it!r} is not a {k}-face of the complex") from None
            if not 0 <= idx[-1] < self.n_faces(k):
                raise ParseError(f"face index {it} out of range for dimension {k}")
        return ChainF2.from_support(k, idx)

    def __repr__(self) -> str:
        sizes = ", ".join(str(len(fs)) for fs in self.faces)
        return f"ChainComplexF2({self.name or 'complex'}: faces per dim [{sizes}])"


def grid_complex(*sizes: int, max_dim: int | None = None, name: str = "") -> ChainComplexF2:
    """Cubical complex of the box ``[0, s_1] x ... x [0, s_n]`` with unit cells.

    A cell is ``(anchor, directions)``; its boundary pairs the faces at
    ``anchor`` and ``anchor + e_d`` for each direction ``d``.
    """
    n = len(sizes)
    if any(s < 1 for s in sizes):
        raise ValueError("grid sizes must be >= 1")
    top = n if max_dim is None else max_dim
    faces: list[list] = [[] for _ in range(top + 1)]
    for k in range(top + 1):
        for dirs in combinations(range(n), k):
            ranges = [range(sizes[d] + (0 if d in dirs else 1)) for d in range(n)]
            for anchor in product(*ranges):
                faces[k].append((anchor, dirs))
        faces[k].sort()
    index = [{f: i for i, f in enumerate(fs)} for fs in faces]
    boundaries: list[list[int]] = [[]]
    for k in range(1, top + 1):
        cols = []
        for anchor, dirs in faces[k]:
            col = 0
            for d in dirs:
                rest = tuple(e for e in dirs if e != d)
                shifted = tuple(a + (1 if i == d else 0) for i, a in enumerate(anchor))
                col ^= 1 << index[k - 1][(anchor, rest)]
                col ^= 1 << index[k - 1][(shifted, rest)]
            cols.append(col)
        boundaries.append(cols)
    return ChainComplexF2(faces, boundaries, name or "grid" + "x".join(map(str, sizes)))


def cube_surface() -> ChainComplexF2:
    """Boundary of the unit cube: 8 vertices, 12 edges, 6 squares."""
    return grid_complex(1, 1, 1, max_dim=2, name="cube-surface")


def simplicial_complex(top_faces, name: str = "") -> ChainComplexF2:
    """Simplicial complex generated by ``top_faces`` (all of one dimension)."""
    tops = [tuple(f) for f in top_faces]
    if not tops:
        raise ParseError("complex needs at least one face")
    d = len(tops[0]) - 1
    for f in tops:
        if len(f) != d + 1:
            raise ParseError(f"face {list(f)} does not have {d + 1} vertices")
        if len(set(f)) != len(f):
            raise ParseError(f"degenerate face {list(f)} repeats a vertex")
    try:
        tops = [tuple(sorted(f)) for f in tops]
    except TypeError:
        raise ParseError("vertex labels within a complex must be mutually comparable") from None
    faces = []
    for k in range(d + 1):
        faces.append(sorted({sub for f in tops for sub in combinations(f, k + 1)}))
    index = [{f: i for i, f in enumerate(fs)} for fs in faces]
    boundaries: list[list[int]] = [[]]
    for k in range(1, d + 1):
        boundaries.append([_bits(index[k - 1][sub] for sub in combinations(f, k)) for f in faces[k]])
    return ChainComplexF2(faces, boundaries, name or f"simplicial-{d}")


def load_complex(path) -> ChainComplexF2:
    """Read ``{"dimension": d, "faces": [[v, ...], ...]}`` (top faces only)."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict) or "faces" not in doc:
        raise ParseError("complex file needs a 'faces' list")
    X = simplicial_complex(doc["faces"], name=Path(path).stem)
    if "dimension" in doc and doc["dimension"] != X.dimension:
        raise ParseError(f"declared dimension {doc['dimension']} but faces have dimension {X.dimension}")
    return X


_SPEC = re.compile(r"^(grid2d|grid3d)[(:]\s*([\d,\s]+)\)?$")


def build_complex(spec: str) -> ChainComplexF2:
    """Build from ``grid2d(p,q)``, ``grid3d(p,q,r)``, ``cube-surface`` or a JSON file path."""
    spec = spec.strip()
    if spec == "cube-surface":
        return cube_surface()
    m = _SPEC.match(spec)
    if m:
        dims = [int(s) for s in m.group(2).replace(" ", "").split(",") if s]
        want = 2 if m.group(1) == "grid2d" else 3
        if len(dims) != want:
            raise ParseError(f"{m.group(1)} needs {want} sizes")
        return grid_complex(*dims, name=spec)
    if Path(spec).exists():
        return load_complex(spec)
    raise ParseError(f"unrecognized complex spec {spec!r}")


def boundary(X: ChainComplexF2, f: ChainF2) -> ChainF2:
    if not 1 <= f.dim <= X.dimension:
        raise ValueError(f"no boundary operator on {f.dim}-chains of a {X.dimension}-complex")
    acc = 0
    for j in _support(f.bits):
        acc ^= X.boundaries[f.dim][j]
    return ChainF2(f.dim - 1, acc)


def _is_cycle(X: ChainComplexF2, c: ChainF2) -> bool:
    return c.dim == 0 or not boundary(X, c).bits


def _reduce(columns):
    """Column reduction over F2.

    Returns ``(pivots, kernel)``: ``pivots`` maps a lowest set bit to
    ``(reduced column, combination)``, ``kernel`` is a basis of the null
    space as bitsets over the columns.
    """
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for j, col in enumerate(columns):
        combo = 1 << j
        while col:
            low = col & -col
            if low not in pivots:
                pivots[low] = (col, combo)
                break
            pcol, pcombo = pivots[low]
            col ^= pcol
            combo ^= pcombo
        else:
            kernel.append(combo)
    return pivots, kernel


def _solve(pivots, target: int) -> int | None:
    combo = 0
    while target:
        low = target & -target
        if low not in pivots:
            return None
        pcol, pcombo = pivots[low]
        target ^= pcol
        combo ^= pcombo
    return combo


@dataclass(frozen=True)
class FillingResult:
    m: int
    count: int
    kernel_dim: int
    witnesses: list = field(default_factory=list)
    face_degree: int = 0

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "count": str(self.count),
            "kernel_dim": self.kernel_dim,
            "face_degree": self.face_degree,
            "witnesses": [sorted(w.support) for w in self.witnesses],
        }


def minimal_fillings(
    X: ChainComplexF2, c: ChainF2, kernel_cap: int = DEFAULT_KERNEL_CAP, list_cap: int = DEFAULT_LIST_CAP
) -> FillingResult:
    """Smallest fillings ``f`` with ``∂f = c`` and how many there are.

    Every solution is ``f0 + z`` for one particular solution ``f0`` and
    ``z`` in the kernel of the boundary map, so the whole coset is walked in
    Gray-code order (one XOR per step) when the kernel has dimension at most
    ``kernel_cap``.
    """
    k = c.dim + 1
    if k > X.dimension:
        raise ValueError(f"no {k}-faces to fill a {c.dim}-chain")
    if not _is_cycle(X, c):
        raise NotACycleError("chain is not a cycle")
    pivots, kernel = _reduce(X.boundaries[k])
    f0 = _solve(pivots, c.bits)
    if f0 is None:
        raise NoFillingError("no filling exists: the cycle is not a boundary")
    kdim = len(kernel)
    if kdim > kernel_cap:
        raise CapExceededError(f"kernel dimension {kdim} exceeds cap {kernel_cap}", kdim)

    f = f0
    best = f.bit_count()
    count = 1
    wit = [f]
    for i in range(1, 1 << kdim):
        f ^= kernel[(i & -i).bit_length() - 1]
        w = f.bit_count()
        if w < best:
            best, count, wit = w, 1, [f]
        elif w == best:
            count += 1
            if len(wit) < list_cap:
                wit.append(f)
    witnesses = [ChainF2(k, b) for b in sorted(wit)[:list_cap]]
    return FillingResult(best, count, kdim, witnesses, X.face_degree(k))


def is_irreducible(X: ChainComplexF2, c: ChainF2) -> bool:
    """Whether a cycle admits no split into two nonzero cycles of disjoint support.

    Over F2 such a split exists iff some nonzero cycle has support strictly
    inside ``supp(c)``, i.e. iff the boundary map restricted to ``supp(c)``
    has nullity above 1.
    """
    if c.dim < 1:
        raise ValueError("irreducibility is defined for chains of dimension >= 1")
    if not _is_cycle(X, c):
        raise NotACycleError("chain is not a cycle")
    supp = _support(c.bits)
    if not supp:
        return True
    _, kernel = _reduce([X.boundaries[c.dim][j] for j in supp])
    return len(kernel) == 1
