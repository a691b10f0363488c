"""Seeded random homogeneous polynomials and series for the property suites."""

from __future__ import annotations

import random
from fractions import Fraction

from .gradedring import GradedPolynomial, RingDescriptor
from .series import LaurentSeries

_NUMERATORS = [-3, -2, -1, 1, 2, 3]


def random_scalar(ring: RingDescriptor, rng: random.Random):
    if ring.characteristic == 2:
        return 1
    return Fraction(rng.choice(_NUMERATORS), rng.randint(1, 3))


def random_poly(ring: RingDescriptor, degree: int, rng: random.Random, support: int = 3) -> GradedPolynomial:
    """Random homogeneous element with at most ``support`` monomials (zero if none exist)."""
    monomials = ring.monomials_of_degree(degree)
    if not monomials:
        return ring.zero(degree)
    k = rng.randint(1, min(support, len(monomials)))
    chosen = rng.sample(monomials, k)
    return GradedPolynomial(ring, {m: random_scalar(ring, rng) for m in chosen}, degree)


def random_laurent(ring: RingDescriptor, variable: str, order: int, rng: random.Random,
                   depth: int = 3, support: int = 3, density: float = 0.7,
                   degree: int | None = None) -> LaurentSeries:
    """Random series with principal part of depth at most ``depth``."""
    low = -rng.randint(0, depth) if depth else 0
    if degree is None:
        degree = rng.randint(-low - 1 if low else 0, -low + 2)
    coeffs = {}
    for n in range(low, order + 1):
        if rng.random() < density:
            p = random_poly(ring, degree + n, rng, support)
            if p.terms:
                coeffs[n] = p
    if low < 0 and low not in coeffs and rng.random() < 0.8:
        # usually make the principal part actually reach the chosen depth
        p = random_poly(ring, degree + low, rng, support)
        if p.terms:
            coeffs[low] = p
    return LaurentSeries(ring, variable, degree, coeffs, order, min(low, order + 1))


def random_power_series(ring: RingDescriptor, variable: str, order: int, rng: random.Random,
                        support: int = 3, degree: int | None = None) -> LaurentSeries:
    return random_laurent(ring, variable, order, rng, depth=0, support=support, degree=degree)


def random_substitution(ring: RingDescriptor, variable: str, order: int, rng: random.Random,
                        support: int = 3) -> LaurentSeries:
    """Random degree -1 series of valuation exactly 1 with a unit leading coefficient."""
    coeffs = {1: ring.constant(random_scalar(ring, rng))}
    for n in range(2, order + 1):
        p = random_poly(ring, n - 1, rng, support)
        if p.terms:
            coeffs[n] = p
    return LaurentSeries(ring, variable, -1, coeffs, order, 1)
