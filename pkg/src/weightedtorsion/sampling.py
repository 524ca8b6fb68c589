"""Seeded random weights and complexes for randomized certificate runs.

Weights are small rationals (|numerator| <= 9, 1 <= denominator <= 9) so
exact arithmetic stays cheap; zeros appear with probability 1/5 unless
disabled.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .complex import SimplicialComplex, build_complex

ZERO_PROB = 0.2


def random_nonzero(rng: random.Random) -> Fraction:
    return Fraction(rng.choice((-1, 1)) * rng.randint(1, 9), rng.randint(1, 9))


def random_weight(rng: random.Random, zero_prob: float = ZERO_PROB) -> Fraction:
    if rng.random() < zero_prob:
        return Fraction(0)
    return random_nonzero(rng)


def random_weights(rng: random.Random, n: int, zero_prob: float = ZERO_PROB) -> tuple[Fraction, ...]:
    return tuple(random_weight(rng, zero_prob) for _ in range(n))


def random_supported_pair(rng: random.Random, n: int, zero_prob: float = ZERO_PROB):
    """(f, g) with g(v) != 0 implying f(v) != 0."""
    g = random_weights(rng, n, zero_prob)
    f = tuple(random_nonzero(rng) if b != 0 else random_weight(rng, zero_prob) for b in g)
    return f, g


def random_complex(rng: random.Random, n_vertices: int = 5,
                   max_generators: int = 5) -> SimplicialComplex:
    """Closure of a few random vertex subsets of the full simplex on ``n_vertices``."""
    names = [f"v{i}" for i in range(n_vertices)]
    subsets = [c for k in range(1, n_vertices + 1) for c in combinations(names, k)]
    gens = [rng.choice(subsets) for _ in range(rng.randint(1, max_generators))]
    return build_complex(names, gens)
