"""Seeded random elements within degree and coefficient bounds."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Bounds:
    max_terms: int = 4
    max_exp: int = 3
    max_degree: int = 3
    coeff: int = 5


DEFAULT_BOUNDS = Bounds()


def random_coeff(rng, bounds):
    c = 0
    while c == 0:
        c = rng.randint(-bounds.coeff, bounds.coeff)
    return c


def random_exponents(rng, nvars, bounds):
    exps = [0] * nvars
    budget = bounds.max_degree
    order = list(range(nvars))
    rng.shuffle(order)
    for i in order:
        e = rng.randint(0, min(bounds.max_exp, budget))
        exps[i] = e
        budget -= e
    return tuple(exps)


def random_poly(rng, ring, bounds=DEFAULT_BOUNDS):
    terms = {}
    for _ in range(rng.randint(0, bounds.max_terms)):
        exps = random_exponents(rng, len(ring.vars), bounds)
        terms[exps] = terms.get(exps, 0) + random_coeff(rng, bounds)
    return ring.from_terms(terms)
