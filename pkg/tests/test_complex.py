import itertools
import random

import pytest

from complexes import V3, V4, example_k, hollow_triangle, solid_triangle
from weightedtorsion.complex import (build_complex, euler_characteristic, face,
                                     restrict_nonvanishing, star)
from weightedtorsion.errors import DuplicateVertex, IndexOutOfRange, UnknownVertex
from weightedtorsion.sampling import random_complex


def test_closure_of_triangle():
    K = solid_triangle()
    assert len(K) == 7
    assert [K.count(n) for n in range(3)] == [3, 3, 1]
    assert K.dimension == 2


def test_single_vertex():
    K = build_complex(["v0"], [["v0"]])
    assert len(K) == 1 and K.dimension == 0


def test_example_k_counts():
    K = example_k()
    assert len(K) == 11
    assert [K.count(n) for n in range(3)] == [4, 6, 1]


def test_canonical_order():
    K = build_complex(V4, [["v3", "v1"], ["v2", "v0", "v1"]])
    for n in range(K.dimension + 1):
        level = K.n_simplices(n)
        assert list(level) == sorted(level)
        assert all(list(s) == sorted(set(s)) for s in level)


def test_build_errors():
    with pytest.raises(UnknownVertex):
        build_complex(V3, [["v0", "x"]])
    with pytest.raises(DuplicateVertex):
        build_complex(["a", "a"], [["a"]])
    with pytest.raises(DuplicateVertex):
        build_complex(V3, [["v0", "v0"]])


def test_face():
    assert face((0, 1, 2), 1) == (0, 2)
    assert face((0, 1), 0) == (1,)
    with pytest.raises(IndexOutOfRange):
        face((0,), 0)


def test_star():
    K = solid_triangle()
    assert set(star(K, "v0")) == {(0,), (0, 1), (0, 2), (0, 1, 2)}
    assert set(star(build_complex(["v0"], [["v0"]]), "v0")) == {(0,)}
    assert set(star(example_k(), "v3")) == {(3,), (0, 3), (1, 3), (2, 3)}


def test_restriction_examples():
    K = example_k()
    Kx = restrict_nonvanishing(K, [1, 2, 3, 0])
    assert set(Kx.all_simplices()) == set(solid_triangle().all_simplices())
    assert restrict_nonvanishing(K, [1, 1, 1, 1]).all_simplices() == K.all_simplices()
    assert restrict_nonvanishing(K, [0, 0, 0, 0]).dimension == -1


@pytest.mark.parametrize("seed", range(30))
def test_restriction_is_complement_of_stars(seed):
    rng = random.Random(seed)
    K = random_complex(rng)
    w = [rng.choice([0, 1, 2]) for _ in K.vertices]
    removed = set()
    for v, x in enumerate(w):
        if x == 0:
            removed |= set(star(K, v))
    Kx = restrict_nonvanishing(K, w)
    assert set(Kx.all_simplices()) == set(K.all_simplices()) - removed
    for s in Kx.all_simplices():
        for r in range(1, len(s)):
            assert all(t in Kx for t in itertools.combinations(s, r))


def test_euler():
    assert euler_characteristic(solid_triangle()) == 1
    assert euler_characteristic(hollow_triangle()) == 0
    assert euler_characteristic(build_complex([], [])) == 0


@pytest.mark.parametrize("seed", range(10))
def test_closure_idempotent(seed):
    K = random_complex(random.Random(seed))
    again = build_complex(K.vertices, [K.names(s) for s in K.maximal_faces()])
    assert again == K
