"""Weighted homology with its induced quadratic form.

H_n = ker d_n / im d_{n+1} for the f-weighted boundary, carrying the form
induced by the g-weighted pairing on n-chains.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .certificate import Certificate
from .chains import (boundary_matrix, chain_scale_iso, gram_matrix, null_basis,
                     simplex_weight)
from .complex import SimplicialComplex, restrict_nonvanishing
from .errors import VanishingScale
from .linalg import RationalMatrix, column_span_contains
from .quotient import (FormedSpace, QuotientForm, induced_form_on_quotient,
                       is_positive_definite, transport_quotient_form)


@dataclass(frozen=True)
class HomologyResult:
    degree: int
    betti: int
    cycles: RationalMatrix
    boundaries: RationalMatrix
    form: QuotientForm
    inner_product: bool

    @property
    def gram(self) -> RationalMatrix:
        return self.form.gram


def cycle_basis(K: SimplicialComplex, f: Sequence, n: int) -> RationalMatrix:
    return boundary_matrix(K, f, n).nullspace()


def boundary_basis(K: SimplicialComplex, f: Sequence, n: int) -> RationalMatrix:
    """Independent columns of d_{n+1}: a basis of the n-boundaries."""
    return boundary_matrix(K, f, n + 1).column_basis()


def homology_of(d_n: RationalMatrix, d_next: RationalMatrix, gram: RationalMatrix,
                degree: int = 0) -> HomologyResult:
    """Homology of an abstract chain complex at one degree, with its form."""
    cycles = d_n.nullspace()
    bounds = d_next.column_basis()
    form = induced_form_on_quotient(FormedSpace(gram), cycles, bounds)
    return HomologyResult(degree, cycles.ncols - bounds.ncols, cycles, bounds, form,
                          is_positive_definite(form.gram))


def weighted_homology(K: SimplicialComplex, f: Sequence, g: Sequence, n: int) -> HomologyResult:
    return homology_of(boundary_matrix(K, f, n), boundary_matrix(K, f, n + 1),
                       gram_matrix(K, g, n), n)


def betti_numbers(K: SimplicialComplex, f: Sequence, g: Sequence | None = None) -> list[int]:
    """Betti numbers in degrees 0..dim K (ranks only, no forms)."""
    ranks = [boundary_matrix(K, f, n).rank() for n in range(K.dimension + 2)]
    return [K.count(n) - ranks[n] - ranks[n + 1] for n in range(K.dimension + 1)]


def inner_product_criterion(K: SimplicialComplex, f: Sequence, g: Sequence, n: int) -> bool:
    """Whether the induced form on H_n is an inner product.

    Holds iff every g-null n-cycle is a boundary.  The g-null chains are
    spanned by the simplices of zero g-weight, so this is a span containment
    of (null chains ∩ cycles) in the boundaries.
    """
    simplices = K.n_simplices(n)
    nulls = [simplices.index(s) for s in null_basis(K, g, n)]
    if not nulls:
        return True
    d_n = boundary_matrix(K, f, n)
    # cycles supported on null simplices
    null_cycles = d_n.select_columns(nulls).nullspace()
    embed = RationalMatrix.from_columns(
        [[c[nulls.index(i)] if i in nulls else 0 for i in range(len(simplices))]
         for c in null_cycles.columns()], len(simplices))
    return column_span_contains(boundary_basis(K, f, n), embed)


def restriction_isometry_check(K: SimplicialComplex, f: Sequence, g: Sequence,
                               n: int) -> Certificate:
    """Compare H_n of the complex modulo g-null chains with H_n of the restriction.

    The quotient C_n / N_n is modelled with coset representatives that are
    deliberately not the bare simplices (each is shifted by the sum of all
    null simplices), and its boundary is transported from the restriction.
    """
    Kx = restrict_nonvanishing(K, g)

    def quotient_data(k):
        simplices = K.n_simplices(k)
        dim = len(simplices)
        null_idx = [i for i, s in enumerate(simplices) if simplex_weight(g, s) == 0]
        live = [s for s in simplices if simplex_weight(g, s) != 0]
        shift = [1 if i in null_idx else 0 for i in range(dim)]
        reps = []
        for s in live:
            v = list(shift)
            v[simplices.index(s)] += 1
            reps.append(v)
        nulls = [[1 if i == j else 0 for i in range(dim)] for j in null_idx]
        reps_m = RationalMatrix.from_columns(reps, dim)
        basis = reps_m.hstack(RationalMatrix.from_columns(nulls, dim))
        # iota: restriction chain sigma -> coset coordinates in the reps basis
        iota_cols = []
        for s in live:
            e = [0] * dim
            e[simplices.index(s)] = 1
            x = basis.solve(e)
            iota_cols.append(x[:len(live)])
        iota = RationalMatrix.from_columns(iota_cols, len(live))
        gram = reps_m.T @ gram_matrix(K, g, k) @ reps_m
        return iota, gram

    iota_n, gram_n = quotient_data(n)
    iota_prev, _ = quotient_data(n - 1) if n > 0 else (RationalMatrix.zeros(0, 0), None)
    iota_next, _ = quotient_data(n + 1)

    def reduced(k, iota_k, iota_km1):
        b = boundary_matrix(Kx, f, k)
        if iota_k.nrows == 0:
            return RationalMatrix.zeros(iota_km1.nrows, 0)
        return iota_km1 @ b @ iota_k.inverse()

    d_n = reduced(n, iota_n, iota_prev) if n > 0 else RationalMatrix.zeros(0, iota_n.nrows)
    d_next = reduced(n + 1, iota_next, iota_n)
    quotient_route = homology_of(d_n, d_next, gram_n, n)
    restricted_route = weighted_homology(Kx, f, g, n)

    # carry the quotient-route representatives back to restriction chains
    back = (iota_n.inverse() if iota_n.nrows else iota_n) @ quotient_route.form.representatives
    k = back.ncols
    pairings = RationalMatrix.from_rows(
        [[restricted_route.form.pair(back.column(i), back.column(j)) for j in range(k)]
         for i in range(k)], k)
    ok = (quotient_route.betti == restricted_route.betti
          and pairings == quotient_route.gram)
    return Certificate("restriction-isometry", ok, {
        "degree": n,
        "betti_quotient": quotient_route.betti,
        "betti_restricted": restricted_route.betti,
        "gram_quotient": quotient_route.gram,
        "gram_transported": pairings,
    })


def scale_isometry_check(K: SimplicialComplex, f: Sequence, g: Sequence, h: Sequence,
                         n: int) -> Certificate:
    """The rescaling sigma -> sigma/h(sigma) is an isometry H_n(f, g) -> H_n(fh, gh)."""
    if any(x == 0 for x in h):
        raise VanishingScale("rescaling weight vanishes at some vertex")
    fh = tuple(Fraction(a) * b for a, b in zip(f, h))
    gh = tuple(Fraction(a) * b for a, b in zip(g, h))
    phi = chain_scale_iso(K, h, n)
    cert = transport_quotient_form(
        phi, FormedSpace(gram_matrix(K, g, n)), FormedSpace(gram_matrix(K, gh, n)),
        cycle_basis(K, f, n), boundary_basis(K, f, n),
        cycle_basis(K, fh, n), boundary_basis(K, fh, n))
    cert.name = "scale-isometry"
    cert.details["degree"] = n
    return cert
