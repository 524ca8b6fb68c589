"""Weighted Hodge-Laplacians, their spectra, and the analytic torsion.

All operators live on the restriction of the complex to the vertices where
g does not vanish; there the g-pairing is an inner product.  The torsion
is evaluated twice: in floating point from the spectra, and exactly as a
rational T^2 from pseudo-determinants.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .certificate import Certificate
from .chains import boundary_matrix, gram_matrix, multiply, support
from .complex import SimplicialComplex, restrict_nonvanishing
from .errors import (EigenFailure, HypothesisViolated, SingularGram, VanishingScale,
                     ZeroScalar)
from .linalg import RationalMatrix, pseudo_determinant, rational_sqrt, to_fraction

log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
FLOAT_RTOL = 1e-9


@dataclass(frozen=True)
class SpectralBundle:
    degree: int
    laplacian: RationalMatrix
    symmetrized: RationalMatrix
    eigenvalues: tuple[float, ...]
    exact_rank: int
    pseudo_det: Fraction | None

    @property
    def nonzero_eigenvalues(self) -> tuple[float, ...]:
        return self.eigenvalues[len(self.eigenvalues) - self.exact_rank:]

    @property
    def zeta_derivative_at_zero(self) -> float:
        return -sum(math.log(x) for x in self.nonzero_eigenvalues)


@dataclass(frozen=True)
class TorsionResult:
    log_torsion: float | None
    torsion: float | None
    torsion_squared_exact: Fraction | None
    s_exponent: int
    bundles: tuple[SpectralBundle, ...] = ()

    def to_json(self) -> dict:
        exact = self.torsion_squared_exact
        return {
            "log_torsion": self.log_torsion,
            "torsion": self.torsion,
            "torsion_squared_exact": None if exact is None else f"{exact.numerator}/{exact.denominator}",
            "s_exponent": self.s_exponent,
        }


def _check_gram(gram: RationalMatrix) -> None:
    if any(x == 0 for x in gram.diagonal()):
        raise SingularGram("zero g-weight simplex in a complex where g must not vanish")


def adjoint_boundary(Kx: SimplicialComplex, f: Sequence, g: Sequence, n: int) -> RationalMatrix:
    """Adjoint of d_n with respect to the g-pairings: G_n^-1 B^T G_{n-1}."""
    b = boundary_matrix(Kx, f, n)
    g_n = gram_matrix(Kx, g, n)
    _check_gram(g_n)
    if n == 0:
        return RationalMatrix.zeros(b.ncols, 0)
    g_prev = gram_matrix(Kx, g, n - 1)
    _check_gram(g_prev)
    g_inv = RationalMatrix.diag([1 / x for x in g_n.diagonal()])
    return g_inv @ b.T @ g_prev


def hodge_laplacian(Kx: SimplicialComplex, f: Sequence, g: Sequence, n: int) -> RationalMatrix:
    """d_n* d_n + d_{n+1} d_{n+1}* on C_n of the restriction."""
    down = adjoint_boundary(Kx, f, g, n) @ boundary_matrix(Kx, f, n)
    up = boundary_matrix(Kx, f, n + 1) @ adjoint_boundary(Kx, f, g, n + 1)
    return down + up


def symmetrize(laplacian: RationalMatrix, gram: RationalMatrix) -> RationalMatrix:
    """G^(1/2) L G^(-1/2) for a diagonal Gram with rational square roots."""
    roots = []
    for x in gram.diagonal():
        r = rational_sqrt(x)
        if r is None or r == 0:
            raise ValueError(f"Gram entry {x} has no nonzero rational square root")
        roots.append(r)
    n = len(roots)
    rows = [[roots[i] * laplacian[i, j] / roots[j] for j in range(n)] for i in range(n)]
    return RationalMatrix.from_rows(rows, n)


def spectrum(sym: RationalMatrix, tol: float = DEFAULT_TOL,
             exact_rank: int | None = None) -> list[float]:
    """Ascending eigenvalues of a symmetric rational matrix.

    The exact rank decides how many eigenvalues are zero; those are reported
    as exactly 0.0.  ``tol`` (relative to the spectral radius) is only used
    to log a diagnostic when the float spectrum disagrees.
    """
    n = sym.nrows
    if n == 0:
        return []
    if exact_rank is None:
        exact_rank = sym.rank()
    try:
        vals = np.linalg.eigvalsh(sym.to_numpy())
    except np.linalg.LinAlgError as exc:
        raise EigenFailure(str(exc)) from exc
    if not np.all(np.isfinite(vals)):
        raise EigenFailure("non-finite eigenvalues")
    vals = sorted(float(x) for x in vals)
    zeros = n - exact_rank
    scale = max(abs(vals[-1]), 1.0)
    float_zeros = sum(1 for x in vals if abs(x) <= tol * scale)
    if float_zeros != zeros:
        log.debug("float zero count %d differs from exact count %d", float_zeros, zeros)
    out = [0.0] * zeros + vals[zeros:]
    if any(x <= 0 for x in out[zeros:]):
        raise EigenFailure("a nonzero eigenvalue came out non-positive")
    return out


def pseudo_det(sym: RationalMatrix) -> Fraction:
    return pseudo_determinant(sym)


def spectral_bundle(Kx: SimplicialComplex, f: Sequence, g: Sequence, n: int,
                    tol: float = DEFAULT_TOL, exact: bool = True,
                    floats: bool = True) -> SpectralBundle:
    lap = hodge_laplacian(Kx, f, g, n)
    sym = symmetrize(lap, gram_matrix(Kx, g, n))
    rank = sym.rank()
    eig = tuple(spectrum(sym, tol, rank)) if floats else ()
    pdet = pseudo_det(sym) if exact else None
    return SpectralBundle(n, lap, sym, eig, rank, pdet)


def s_exponent(K: SimplicialComplex, w: Sequence) -> int:
    """Alternating sum of the ranks of the unweighted boundaries of K restricted to w != 0."""
    Kx = restrict_nonvanishing(K, w)
    ones = [1] * len(K.vertices)
    return sum((-1) ** n * boundary_matrix(Kx, ones, n).rank() for n in range(Kx.dimension + 1))


def analytic_torsion(K: SimplicialComplex, f: Sequence, g: Sequence, mode: str = "both",
                     tol: float = DEFAULT_TOL) -> TorsionResult:
    """Analytic torsion of (K, f, g), computed on the restriction to g != 0.

    log T = 1/2 sum_n (-1)^n n zeta_n'(0) with zeta_n'(0) = -sum log(lambda);
    exactly, T^2 = prod_n pdet(Delta_n)^((-1)^(n+1) n).
    """
    if mode not in ("exact", "float", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    f = tuple(to_fraction(x) for x in f)
    g = tuple(to_fraction(x) for x in g)
    Kx = restrict_nonvanishing(K, g)
    want_exact = mode in ("exact", "both")
    want_float = mode in ("float", "both")
    bundles = []
    log_t = 0.0
    t2 = Fraction(1)
    for n in range(1, Kx.dimension + 1):
        b = spectral_bundle(Kx, f, g, n, tol, exact=want_exact, floats=want_float)
        bundles.append(b)
        sign = (-1) ** n
        if want_float:
            log_t += 0.5 * sign * n * b.zeta_derivative_at_zero
        if want_exact:
            t2 *= b.pseudo_det ** (-sign * n)
    s = s_exponent(K, multiply(support(f), support(g)))
    return TorsionResult(
        log_t if want_float else None,
        math.exp(log_t) if want_float else None,
        t2 if want_exact else None,
        s,
        tuple(bundles),
    )


def _torsion_pair(K, f, g):
    r = analytic_torsion(K, f, g, mode="both")
    return r.torsion_squared_exact, r.log_torsion


def _float_close(log_a: float, log_b: float, factor: Fraction = Fraction(1)) -> bool:
    """exp(2 log_a) == factor * exp(2 log_b) to relative FLOAT_RTOL."""
    target = 2 * log_b + math.log(float(factor))
    return abs(math.expm1(2 * log_a - target)) <= FLOAT_RTOL


def check_scale_invariance(K: SimplicialComplex, f: Sequence, g: Sequence,
                           h: Sequence) -> Certificate:
    """T(hf, hg) = T(f, g) for nowhere-vanishing h."""
    if any(x == 0 for x in h):
        raise VanishingScale("rescaling weight vanishes at some vertex")
    base, base_log = _torsion_pair(K, f, g)
    scaled, scaled_log = _torsion_pair(K, multiply(f, h), multiply(g, h))
    ok = scaled == base and _float_close(scaled_log, base_log)
    return Certificate("scale-invariance", ok, {"T2": base, "T2_scaled": scaled})


def _require_support(f: Sequence, g: Sequence) -> None:
    bad = [i for i, (a, b) in enumerate(zip(f, g)) if b != 0 and a == 0]
    if bad:
        raise HypothesisViolated(f"g(v) != 0 but f(v) == 0 at vertex ranks {bad}")


def _scaling(K, f, g, c, which) -> Certificate:
    c = to_fraction(c)
    if c == 0:
        raise ZeroScalar("scaling constant must be nonzero")
    _require_support(f, g)
    s = s_exponent(K, support(g))
    base, base_log = _torsion_pair(K, f, g)
    if which == "g":
        scaled, scaled_log = _torsion_pair(K, f, [c * x for x in g])
        factor = abs(c) ** (2 * s)
    else:
        scaled, scaled_log = _torsion_pair(K, [c * x for x in f], g)
        factor = abs(c) ** (-2 * s)
    ok = scaled == factor * base and _float_close(scaled_log, base_log, factor)
    return Certificate(f"{which}-scaling", ok, {
        "c": c, "s": s, "T2": base, "T2_scaled": scaled, "factor": factor})


def check_g_scaling(K: SimplicialComplex, f: Sequence, g: Sequence, c) -> Certificate:
    """T(f, cg) = |c|^s T(f, g), s = s_exponent(K, supp g)."""
    return _scaling(K, f, g, c, "g")


def check_f_scaling(K: SimplicialComplex, f: Sequence, g: Sequence, c) -> Certificate:
    """T(cf, g) = |c|^-s T(f, g)."""
    return _scaling(K, f, g, c, "f")


def check_main_theorem(K: SimplicialComplex, f: Sequence, g: Sequence, h: Sequence,
                       c) -> Certificate:
    """The rescaling and scalar laws for the support-trimmed pair (eps(g) f, eps(f) g)."""
    if any(x == 0 for x in h):
        raise VanishingScale("rescaling weight vanishes at some vertex")
    c = to_fraction(c)
    if c == 0:
        raise ZeroScalar("scaling constant must be nonzero")
    f1 = multiply(support(g), f)
    g1 = multiply(support(f), g)
    s = s_exponent(K, multiply(support(f), support(g)))
    base, base_log = _torsion_pair(K, f1, g1)
    rescaled, rescaled_log = _torsion_pair(K, multiply(f1, h), multiply(g1, h))
    g_scaled, g_log = _torsion_pair(K, f1, [c * x for x in g1])
    f_scaled, f_log = _torsion_pair(K, [c * x for x in f1], g1)
    up = abs(c) ** (2 * s)
    down = abs(c) ** (-2 * s)
    parts = {
        "rescale": rescaled == base and _float_close(rescaled_log, base_log),
        "g_scalar": g_scaled == up * base and _float_close(g_log, base_log, up),
        "f_scalar": f_scaled == down * base and _float_close(f_log, base_log, down),
    }
    return Certificate("main-theorem", all(parts.values()), {
        "s": s, "T2": base, **parts})
