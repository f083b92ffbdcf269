"""Shared randomized-input helpers.

All randomness is seeded per test; reruns are deterministic.
"""

import random
from fractions import Fraction

from dorex import DOEPresentation, Element, Poly, Ring, StructureMaps

COEFFS = [Fraction(n) for n in (-3, -2, -1, 1, 2, 3)] + [
    Fraction(1, 2), Fraction(-1, 2), Fraction(2, 3)]
COEFFS_WITH_ZERO = COEFFS + [Fraction(0)] * 3


def random_poly(rng, ring, max_degree=3, max_terms=3, nonzero=False):
    terms = {}
    for _ in range(rng.randint(1 if nonzero else 0, max_terms)):
        exps = [0] * ring.ngens
        budget = rng.randint(0, max_degree)
        for _ in range(budget):
            if ring.ngens == 0:
                break
            exps[rng.randrange(ring.ngens)] += 1
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + rng.choice(COEFFS)
    p = Poly(ring, terms)
    if nonzero and p.is_zero:
        return ring.const(rng.choice(COEFFS))
    return p


def random_element(rng, pres, max_x=2, max_coeff_degree=2, max_terms=2,
                   nonzero=False):
    terms = {}
    for _ in range(rng.randint(1 if nonzero else 0, max_terms)):
        a1 = rng.randint(0, max_x)
        a2 = rng.randint(0, max_x - a1)
        coeff = random_poly(rng, pres.ring, max_degree=max_coeff_degree,
                            max_terms=2, nonzero=True)
        mono = (a1, a2)
        terms[mono] = terms[mono] + coeff if mono in terms else coeff
    u = Element(pres.ring, terms)
    if nonzero and u.is_zero:
        return pres.one()
    return u


def random_graded_kt(rng, trimmed=False):
    """Random connected graded presentation over Q[t] with linear sigma
    entries, degree-2 deltas and a degree-correct tail; every automorphism
    question it raises is decided exactly."""
    ring = Ring(("t",))
    t = ring.gen(0)
    zero = ring.zero()

    def lin():
        return t * rng.choice(COEFFS_WITH_ZERO)

    off_diag = rng.random() < 0.5
    sigma = (((lin(), lin() if off_diag else zero),
              (lin() if off_diag else zero, lin())),)
    if trimmed:
        delta = ((zero, zero),)
        tau = (zero, zero, zero)
    else:
        t2 = t * t
        delta = ((t2 * rng.choice(COEFFS_WITH_ZERO),
                  t2 * rng.choice(COEFFS_WITH_ZERO)),)
        tau = (t * rng.choice(COEFFS_WITH_ZERO),
               t * rng.choice(COEFFS_WITH_ZERO),
               t2 * rng.choice(COEFFS_WITH_ZERO))
    p12 = rng.choice(COEFFS_WITH_ZERO)
    p11 = rng.choice([Fraction(0)] * 3 + COEFFS)
    maps = StructureMaps(ring, sigma=sigma, delta=delta)
    return DOEPresentation(ring, maps, p12=p12, p11=p11,
                           tau1=tau[0], tau2=tau[1], tau0=tau[2])
