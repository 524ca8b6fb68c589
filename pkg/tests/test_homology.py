import random

import pytest
import sympy

from complexes import example_k, fr, hollow_triangle, solid_triangle
from weightedtorsion.chains import boundary_matrix, null_basis
from weightedtorsion.complex import build_complex, euler_characteristic, restrict_nonvanishing
from weightedtorsion.homology import (betti_numbers, boundary_basis, inner_product_criterion,
                                      restriction_isometry_check, scale_isometry_check,
                                      weighted_homology)
from weightedtorsion.linalg import RationalMatrix, column_span_contains
from weightedtorsion.sampling import random_complex, random_nonzero, random_weights


def unweighted_betti(K):
    """Betti numbers from integer incidence matrices ranked by sympy."""
    def rank(n):
        if n <= 0 or n > K.dimension:
            return 0
        rows = K.n_simplices(n - 1)
        index = {s: i for i, s in enumerate(rows)}
        m = sympy.zeros(len(rows), K.count(n))
        for j, s in enumerate(K.n_simplices(n)):
            for i in range(len(s)):
                m[index[s[:i] + s[i + 1:]], j] = (-1) ** i
        return m.rank()
    return [K.count(n) - rank(n) - rank(n + 1) for n in range(K.dimension + 1)]


def test_solid_and_hollow_betti():
    assert betti_numbers(solid_triangle(), fr(1, 1, 1)) == [1, 0, 0]
    assert betti_numbers(hollow_triangle(), fr(1, 1, 1)) == [1, 1]


def test_example_k_restricted_homology():
    K = example_k()
    f, g = fr(1, 2, 3, 4), fr(2, 1, 5, 0)
    Kx = restrict_nonvanishing(K, g)
    assert [weighted_homology(Kx, f, g, n).betti for n in range(3)] == [1, 0, 0]
    for n in range(3):
        h = weighted_homology(Kx, f, g, n)
        assert h.inner_product


@pytest.mark.parametrize("seed", range(30))
def test_unit_weights_match_unweighted_oracle(seed):
    K = random_complex(random.Random(seed))
    ones = [1] * len(K.vertices)
    assert betti_numbers(K, ones) == unweighted_betti(K)


@pytest.mark.parametrize("seed", range(20))
def test_euler_identity_nonvanishing_f(seed):
    rng = random.Random(seed)
    K = random_complex(rng)
    f = [random_nonzero(rng) for _ in K.vertices]
    assert sum((-1) ** n * b for n, b in enumerate(betti_numbers(K, f))) == \
        euler_characteristic(K)


def test_inner_product_criterion_examples():
    K = example_k()
    f = fr(1, 2, 3, 4)
    assert inner_product_criterion(K, f, fr(1, 1, 1, 1), 1)
    # im d_1 is the hyperplane sum f(v) x_v = 0, which misses v3 since f(v3) != 0
    b = boundary_matrix(K, f, 1)
    assert all(sum(x * y for x, y in zip(f, b.column(j))) == 0 for j in range(b.ncols))
    assert not inner_product_criterion(K, f, fr(1, 2, 3, 0), 0)
    assert not weighted_homology(K, f, fr(1, 2, 3, 0), 0).inner_product
    assert not inner_product_criterion(K, fr(0, 0, 0, 0), fr(1, 2, 3, 0), 0)


def test_literal_null_containment_is_too_strong():
    # at n = 1 the null edges v_i v3 are not boundaries, yet none of their
    # combinations is a cycle, so the form on H_1 is still definite
    K = example_k()
    f, g = fr(1, 2, 3, 4), fr(1, 2, 3, 0)
    idx = [K.index_of(s) for s in null_basis(K, g, 1)]
    nulls = RationalMatrix.from_columns(
        [[1 if i == j else 0 for i in range(K.count(1))] for j in idx], K.count(1))
    assert not column_span_contains(boundary_basis(K, f, 1), nulls)
    assert inner_product_criterion(K, f, g, 1)
    assert weighted_homology(K, f, g, 1).inner_product


@pytest.mark.parametrize("seed", range(30))
def test_criterion_agrees_with_form(seed):
    rng = random.Random(seed)
    K = random_complex(rng)
    m = len(K.vertices)
    f, g = random_weights(rng, m), random_weights(rng, m, zero_prob=0.3)
    for n in range(K.dimension + 1):
        assert inner_product_criterion(K, f, g, n) == weighted_homology(K, f, g, n).inner_product


@pytest.mark.parametrize("seed", range(30))
def test_restriction_isometry(seed):
    rng = random.Random(seed)
    K = random_complex(rng)
    m = len(K.vertices)
    f, g = random_weights(rng, m), random_weights(rng, m, zero_prob=0.3)
    for n in range(K.dimension + 1):
        assert restriction_isometry_check(K, f, g, n).ok


def test_restriction_isometry_edge_cases():
    K = example_k()
    for n in range(3):
        c = restriction_isometry_check(K, fr(1, 2, 3, 4), fr(1, 2, 3, 0), n)
        assert c.ok
        assert c.details["betti_quotient"] == [1, 0, 0][n]
        assert restriction_isometry_check(K, fr(1, 2, 3, 4), fr(0, 0, 0, 0), n).details[
            "betti_restricted"] == 0


@pytest.mark.parametrize("seed", range(20))
def test_scale_isometry(seed):
    rng = random.Random(seed)
    K = random_complex(rng)
    m = len(K.vertices)
    f, g = random_weights(rng, m), random_weights(rng, m)
    h = [random_nonzero(rng) for _ in range(m)]
    for n in range(K.dimension + 1):
        assert scale_isometry_check(K, f, g, h, n).ok
        assert scale_isometry_check(K, f, g, [1] * m, n).ok


def test_f_equals_g_rescales_to_unit():
    # with h = 1/f the pair (f, f) becomes (1, 1)
    K = build_complex(["a", "b", "c"], [["a", "b", "c"]])
    f = fr(2, -3, "1/2")
    h = [1 / x for x in f]
    for n in range(3):
        assert scale_isometry_check(K, f, f, h, n).ok
        assert weighted_homology(K, f, f, n).betti == weighted_homology(K, [1] * 3, [1] * 3, n).betti
        if n:
            assert boundary_matrix(K, [a * b for a, b in zip(f, h)], n) == \
                boundary_matrix(K, [1] * 3, n)
