"""Weighted chain data: boundary matrices, Gram matrices and rescalings.

Chain groups use the canonical basis of a :class:`SimplicialComplex`, so a
degree-n matrix has one column per n-simplex in lexicographic rank order.
Weights are rank-indexed tuples of fractions (see :class:`WeightPair`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Mapping, Sequence

from .complex import SimplicialComplex, Simplex, restrict_nonvanishing, star
from .errors import UnknownVertex, VanishingScale
from .linalg import RationalMatrix, to_fraction

Weights = tuple[Fraction, ...]


def as_weights(K: SimplicialComplex, w) -> Weights:
    """Normalize a name-keyed mapping or a rank-indexed sequence to a tuple."""
    if isinstance(w, Mapping):
        missing = [v for v in K.vertices if v not in w]
        if missing:
            raise UnknownVertex(f"no weight given for vertices {missing}")
        return tuple(to_fraction(w[v]) for v in K.vertices)
    w = tuple(to_fraction(x) for x in w)
    if len(w) != len(K.vertices):
        raise ValueError(f"expected {len(K.vertices)} weights, got {len(w)}")
    return w


def support(w: Sequence) -> Weights:
    """Indicator of the nonzero entries: 1 where w(v) != 0, else 0."""
    return tuple(Fraction(1 if x != 0 else 0) for x in w)


def multiply(*ws: Sequence) -> Weights:
    return tuple(Fraction(prod(xs)) for xs in zip(*ws))


@dataclass(frozen=True)
class WeightPair:
    """Vertex weights ``f`` (twisting the boundary) and ``g`` (the pairing)."""

    f: Weights
    g: Weights

    @classmethod
    def on(cls, K: SimplicialComplex, f, g) -> WeightPair:
        return cls(as_weights(K, f), as_weights(K, g))

    @property
    def eps_f(self) -> Weights:
        return support(self.f)

    @property
    def eps_g(self) -> Weights:
        return support(self.g)

    def scaled(self, hf=None, hg=None) -> WeightPair:
        f = self.f if hf is None else multiply(self.f, hf)
        g = self.g if hg is None else multiply(self.g, hg)
        return WeightPair(f, g)


def simplex_weight(w: Sequence, sigma: Simplex) -> Fraction:
    return Fraction(prod((w[i] for i in sigma), start=Fraction(1)))


def boundary_matrix(K: SimplicialComplex, f: Sequence, n: int) -> RationalMatrix:
    """Matrix of the f-weighted boundary from C_n to C_{n-1}.

    The i-th face of ``{v_0 < ... < v_n}`` enters with coefficient
    ``(-1)^i f(v_i)``.  For n = 0 the target is the zero space.
    """
    cols = K.n_simplices(n)
    if n <= 0:
        return RationalMatrix.zeros(0, len(cols))
    rows = K.n_simplices(n - 1)
    m = [[Fraction(0)] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for i, v in enumerate(s):
            r = K.index_of(s[:i] + s[i + 1:])
            m[r][j] = (-1) ** i * to_fraction(f[v])
    return RationalMatrix.from_rows(m, len(cols))


def gram_matrix(K: SimplicialComplex, g: Sequence, n: int) -> RationalMatrix:
    """Diagonal Gram matrix of the g-weighted pairing, entries g(sigma)^2."""
    return RationalMatrix.diag([simplex_weight(g, s) ** 2 for s in K.n_simplices(n)])


def null_basis(K: SimplicialComplex, g: Sequence, n: int) -> list[Simplex]:
    """The n-simplices of zero g-weight; they span the null space of the pairing."""
    return [s for s in K.n_simplices(n) if simplex_weight(g, s) == 0]


def null_basis_from_stars(K: SimplicialComplex, g: Sequence, n: int) -> list[Simplex]:
    """Same set as :func:`null_basis`, read off the open stars of g-zero vertices."""
    hit = set()
    for v in range(len(K.vertices)):
        if g[v] == 0:
            hit.update(s for s in star(K, v) if len(s) == n + 1)
    return sorted(hit)


def chain_scale_iso(K: SimplicialComplex, h: Sequence, n: int) -> RationalMatrix:
    """Diagonal chain isomorphism sigma -> sigma / h(sigma)."""
    if any(x == 0 for x in h):
        raise VanishingScale("rescaling weight vanishes at some vertex")
    return RationalMatrix.diag([1 / simplex_weight(h, s) for s in K.n_simplices(n)])


def reduced_boundary(K: SimplicialComplex, f: Sequence, g: Sequence, n: int) -> RationalMatrix:
    """Boundary of the complex modulo g-null chains, written on the restriction."""
    return boundary_matrix(restrict_nonvanishing(K, g), f, n)
