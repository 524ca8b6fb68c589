"""Forms induced on quotients of a space with a positive semi-definite form.

Subspaces are given as matrices whose columns are ambient coordinate vectors.
A quotient W/U receives the pairing of the components of representatives
that are orthogonal to U inside a chosen complement W_1 of the null space;
the result is independent of that choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .certificate import Certificate
from .errors import NotEquivariant, NotSubspace
from .linalg import (RationalMatrix, column_span_contains, psd_certificate,
                     require_psd, same_column_span)


@dataclass(frozen=True)
class FormedSpace:
    gram: RationalMatrix

    def __post_init__(self):
        require_psd(self.gram)

    @property
    def dimension(self) -> int:
        return self.gram.nrows

    def pairing(self, v: Sequence, w: Sequence) -> Fraction:
        return sum((a * b for a, b in zip(v, self.gram.apply(w))), Fraction(0))


def null_space(space: FormedSpace) -> RationalMatrix:
    """Basis of {v : <v, v> = 0}, which for a PSD form is the kernel of the Gram."""
    return space.gram.nullspace()


def _extend(partial: RationalMatrix, candidates: RationalMatrix) -> RationalMatrix:
    """Columns of ``candidates`` that greedily extend the span of ``partial``."""
    k = partial.ncols
    pivots = partial.hstack(candidates).rref()[1]
    return candidates.select_columns([p - k for p in pivots if p >= k])


@dataclass(frozen=True)
class QuotientForm:
    """Decomposition ``W = U_1 + complement + N_W`` and the induced Gram.

    ``representatives`` are coset representatives of a basis of W/U: first
    the form-orthogonal complement of U_1 in W_1, then null directions not
    already in U.  ``gram`` is the induced form in that basis; its null block
    is identically zero.
    """

    ambient: RationalMatrix
    u_basis: RationalMatrix
    u1: RationalMatrix
    w1: RationalMatrix
    null_w: RationalMatrix
    complement: RationalMatrix
    null_reps: RationalMatrix
    gram: RationalMatrix

    @property
    def representatives(self) -> RationalMatrix:
        return self.complement.hstack(self.null_reps)

    @property
    def dimension(self) -> int:
        return self.gram.nrows

    def orthogonal_component(self, v: Sequence) -> tuple[Fraction, ...]:
        """The complement part v_2 of ``v = v_0 + v_2 + n``."""
        d = self.u1.hstack(self.complement).hstack(self.null_w)
        x = d.solve(v)
        if x is None:
            raise NotSubspace("vector is not in W")
        k = self.u1.ncols
        coeffs = x[k:k + self.complement.ncols]
        return self.complement.apply(coeffs)

    def pair(self, v: Sequence, w: Sequence) -> Fraction:
        v2 = self.orthogonal_component(v)
        w2 = self.orthogonal_component(w)
        return sum((a * b for a, b in zip(v2, self.ambient.apply(w2))), Fraction(0))


def induced_form_on_quotient(space: FormedSpace, w_basis: RationalMatrix,
                             u_basis: RationalMatrix,
                             extension: RationalMatrix | None = None) -> QuotientForm:
    """Induced semi-definite form on W/U.

    ``extension`` optionally supplies the candidate vectors (inside W) used
    to extend U_1 to a complement W_1 of the null space; by default the
    columns of ``w_basis`` are used in order.
    """
    a = space.gram
    n = a.nrows
    if w_basis.nrows != n or u_basis.nrows != n:
        raise ValueError("basis vectors have the wrong length")
    w = w_basis.column_basis()
    u = u_basis.column_basis()
    if not column_span_contains(w, u):
        raise NotSubspace("U is not contained in W")

    null_w = w @ (w.T @ a @ w).nullspace()
    u_null = u @ (u.T @ a @ u).nullspace()
    u1 = u @ _extend((u.T @ a @ u).nullspace(), RationalMatrix.identity(u.ncols))

    candidates = w if extension is None else extension
    if not column_span_contains(w, candidates):
        raise NotSubspace("extension vectors are not in W")
    w1 = u1.hstack(_extend(u1.hstack(null_w), candidates))
    if w1.ncols + null_w.ncols != w.ncols:
        raise ValueError("extension vectors do not span a complement of the null space")

    complement = w1 @ (u1.T @ a @ w1).nullspace()
    null_reps = _extend(u_null, null_w)
    reps = complement.hstack(null_reps)
    return QuotientForm(a, u, u1, w1, null_w, complement, null_reps, reps.T @ a @ reps)


def projected_pairing(space: FormedSpace, u_basis: RationalMatrix,
                      v: Sequence, w: Sequence) -> Fraction:
    """<v + U, w + U> by projecting ``w`` off U with a least-squares solve.

    Works directly with the possibly singular Gram of U; no splitting of U
    or choice of complement is involved.
    """
    a = space.gram
    aw = a.apply(w)
    if u_basis.ncols:
        ua = u_basis.T
        c = (ua @ a @ u_basis).solve(ua.apply(aw))
        if c is None:
            raise ValueError("inconsistent projection system")
        aw = tuple(x - y for x, y in zip(aw, (a @ u_basis).apply(c)))
    return sum((x * y for x, y in zip(v, aw)), Fraction(0))


def quotient_form_is_inner_product(space: FormedSpace, w_basis: RationalMatrix,
                                   u_basis: RationalMatrix) -> bool:
    """True iff the null directions of the form on W all lie in U."""
    if not column_span_contains(w_basis, u_basis):
        raise NotSubspace("U is not contained in W")
    a = space.gram
    null_w = w_basis @ (w_basis.T @ a @ w_basis).nullspace()
    return column_span_contains(u_basis, null_w)


def is_positive_definite(gram: RationalMatrix) -> bool:
    return psd_certificate(gram) and gram.rank() == gram.nrows


def transport_quotient_form(phi: RationalMatrix, source: FormedSpace, target: FormedSpace,
                            w_basis: RationalMatrix, u_basis: RationalMatrix,
                            w_target: RationalMatrix, u_target: RationalMatrix) -> Certificate:
    """Check that ``phi`` induces an isometry W/U -> W'/U'.

    Requires phi to preserve the forms and to carry W onto W' and U onto U'.
    The certificate carries the matrix of the induced map in the
    representative bases of both quotients.
    """
    if phi.T @ target.gram @ phi != source.gram:
        raise NotEquivariant("phi does not preserve the forms")
    if not same_column_span(phi @ w_basis, w_target):
        raise NotEquivariant("phi(W) != W'")
    if not same_column_span(phi @ u_basis, u_target):
        raise NotEquivariant("phi(U) != U'")

    qs = induced_form_on_quotient(source, w_basis, u_basis)
    qt = induced_form_on_quotient(target, w_target, u_target)
    images = phi @ qs.representatives
    k = images.ncols
    transported = RationalMatrix.from_rows(
        [[qt.pair(images.column(i), images.column(j)) for j in range(k)] for i in range(k)], k)

    # coordinates of phi(rep) in the target representatives, modulo U'
    basis = qt.u_basis.hstack(qt.representatives)
    coords = basis.solve_columns(images) if basis.nrows else RationalMatrix.zeros(0, k)
    if coords is None:
        return Certificate("quotient-transport", False, {"reason": "image leaves W'"})
    induced = coords.select_rows(range(qt.u_basis.ncols, basis.ncols))
    invertible = induced.is_square() and induced.rank() == induced.nrows
    ok = invertible and transported == qs.gram and qt.dimension == qs.dimension
    return Certificate("quotient-transport", ok, {
        "dimension": qs.dimension,
        "induced_map": induced,
        "source_gram": qs.gram,
        "transported_gram": transported,
    })
