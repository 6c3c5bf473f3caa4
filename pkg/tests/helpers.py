"""Shared test utilities."""

import random

from tilegb.polyring import Polynomial


def random_poly(rng: random.Random, max_degree: int = 8, max_terms: int = 8,
                coeff_bound: int = 50) -> Polynomial:
    terms = {}
    for _ in range(rng.randrange(0, max_terms + 1)):
        i = rng.randrange(0, max_degree + 1)
        j = rng.randrange(0, max_degree + 1 - i)
        c = rng.randint(-coeff_bound, coeff_bound)
        if c:
            terms[(i, j)] = terms.get((i, j), 0) + c
    return Polynomial({m: c for m, c in terms.items() if c})


def random_univariate(rng: random.Random, max_degree: int, coeff_bound: int = 30) -> Polynomial:
    terms = {}
    for m in range(max_degree + 1):
        if rng.random() < 0.4:
            c = rng.randint(-coeff_bound, coeff_bound)
            if c:
                terms[(m, 0)] = c
    return Polynomial(terms)
