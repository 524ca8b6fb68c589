"""Finite abstract simplicial complexes on a totally ordered vertex set.

Vertices are named by strings; their declaration order is the total order.
A simplex is stored as a strictly increasing tuple of vertex ranks, so the
lexicographic order on those tuples is the canonical chain-basis order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Mapping, Sequence

from .errors import DuplicateVertex, IndexOutOfRange, UnknownVertex

Simplex = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple[str, ...]
    simplices: tuple[tuple[Simplex, ...], ...]
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        index = {}
        for d, level in enumerate(self.simplices):
            for i, s in enumerate(level):
                index[s] = i
        object.__setattr__(self, "_index", index)

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    @property
    def rank(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def n_simplices(self, n: int) -> tuple[Simplex, ...]:
        if 0 <= n < len(self.simplices):
            return self.simplices[n]
        return ()

    def count(self, n: int) -> int:
        return len(self.n_simplices(n))

    def index_of(self, s: Simplex) -> int:
        return self._index[s]

    def __contains__(self, s) -> bool:
        return tuple(s) in self._index

    def __len__(self) -> int:
        return sum(len(level) for level in self.simplices)

    def all_simplices(self) -> list[Simplex]:
        return [s for level in self.simplices for s in level]

    def maximal_faces(self) -> list[Simplex]:
        out = []
        for s in self.all_simplices():
            up = self.n_simplices(len(s))
            if not any(set(s) < set(t) for t in up):
                out.append(s)
        return sorted(out, key=lambda s: (len(s), s))

    def names(self, s: Simplex) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in s)

    def vertex_id(self, name: str) -> int:
        try:
            return self.rank[name]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {name!r}") from None

    def simplex(self, *names: str) -> Simplex:
        """Look up a simplex by vertex names (in any order)."""
        s = tuple(sorted(self.vertex_id(n) for n in names))
        if s not in self._index:
            raise KeyError(f"{names} is not a simplex of the complex")
        return s


def _closure(vertices: Sequence[str], gens: Iterable[Simplex]) -> SimplicialComplex:
    faces = set()
    for g in gens:
        for k in range(1, len(g) + 1):
            faces.update(combinations(g, k))
    top = max((len(s) for s in faces), default=0)
    levels = tuple(tuple(sorted(s for s in faces if len(s) == d + 1)) for d in range(top))
    return SimplicialComplex(tuple(vertices), levels)


def build_complex(vertices: Sequence[str], generators: Iterable[Iterable[str]]) -> SimplicialComplex:
    """Smallest face-closed complex on ``vertices`` containing every generator."""
    vertices = list(vertices)
    rank = {}
    for v in vertices:
        if v in rank:
            raise DuplicateVertex(f"vertex {v!r} declared twice")
        rank[v] = len(rank)
    gens = []
    for g in generators:
        g = list(g)
        if not g:
            raise ValueError("empty generator simplex")
        ids = []
        for name in g:
            if name not in rank:
                raise UnknownVertex(f"unknown vertex {name!r}")
            ids.append(rank[name])
        if len(set(ids)) != len(ids):
            raise DuplicateVertex(f"repeated vertex in simplex {g}")
        gens.append(tuple(sorted(ids)))
    return _closure(vertices, gens)


def face(sigma: Simplex, i: int) -> Simplex:
    """The i-th codimension-one face: sigma with its i-th smallest vertex removed."""
    if len(sigma) < 2 or not 0 <= i < len(sigma):
        raise IndexOutOfRange(f"face {i} of a {len(sigma) - 1}-simplex")
    return sigma[:i] + sigma[i + 1:]


def star(K: SimplicialComplex, v: str | int) -> list[Simplex]:
    """Open star: every simplex containing ``v``."""
    vid = K.vertex_id(v) if isinstance(v, str) else v
    if not 0 <= vid < len(K.vertices):
        raise UnknownVertex(f"unknown vertex id {vid}")
    return [s for s in K.all_simplices() if vid in s]


def _weight_fn(K: SimplicialComplex, w) -> Callable[[int], object]:
    if isinstance(w, Mapping):
        return lambda i: w[K.vertices[i]]
    return lambda i: w[i]


def restrict_nonvanishing(K: SimplicialComplex, w) -> SimplicialComplex:
    """The maximal subcomplex on which ``w`` vanishes at no vertex.

    ``w`` is a name-keyed mapping or a rank-indexed sequence.  The vertex
    list is kept, so chain bases of the result stay comparable with ``K``.
    """
    weight = _weight_fn(K, w)
    alive = {i for i in range(len(K.vertices)) if weight(i) != 0}
    levels = [tuple(s for s in level if alive.issuperset(s)) for level in K.simplices]
    while levels and not levels[-1]:
        levels.pop()
    return SimplicialComplex(K.vertices, tuple(levels))


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** n * len(level) for n, level in enumerate(K.simplices))
