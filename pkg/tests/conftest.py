"""Shared oracles and generators for the test suite.

The oracles here are deliberately independent re-implementations: the
inner-product oracle works on plain (Fraction, Fraction) tuples over the
union of supports, primality is trial division, and polynomials are built
from explicitly chosen roots so the ground truth is known exactly.
"""

from __future__ import annotations

import random
from fractions import Fraction

from bergspace import Polynomial, SparseSeries
from bergspace.rational import GaussianRational

Pair = tuple[Fraction, Fraction]


def oracle_inner_product(
    f_terms: dict[int, Pair], g_terms: dict[int, Pair], radius: Fraction
) -> Pair:
    """Direct summation of pi^-1 <f, g> over the union of supports."""
    zero = (Fraction(0), Fraction(0))
    re_acc, im_acc = Fraction(0), Fraction(0)
    for n in set(f_terms) | set(g_terms):
        fr, fi = f_terms.get(n, zero)
        gr, gi = g_terms.get(n, zero)
        # f_n * conj(g_n)
        prod_re = fr * gr + fi * gi
        prod_im = fi * gr - fr * gi
        weight = radius ** (2 * n + 2) / (n + 1)
        re_acc += prod_re * weight
        im_acc += prod_im * weight
    return re_acc, im_acc


def oracle_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def oracle_prime_factors(n: int) -> list[int]:
    factors = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            if not factors or factors[-1] != d:
                factors.append(d)
            n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


def random_fraction(rng: random.Random, span: int = 10, den: int = 12) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_rational_series(
    rng: random.Random, max_degree: int = 64, max_terms: int = 8
) -> SparseSeries:
    """Sparse series with real rational coefficients."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.randint(0, max_degree)] = random_fraction(rng)
    return SparseSeries(terms)


def random_gaussian_series(
    rng: random.Random, max_degree: int = 64, max_terms: int = 8
) -> SparseSeries:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.randint(0, max_degree)] = GaussianRational(
            random_fraction(rng), random_fraction(rng)
        )
    return SparseSeries(terms)


def series_as_pairs(f: SparseSeries) -> dict[int, Pair]:
    return {e: (c.re, c.im) for e, c in f.terms()}


def random_polynomial(
    rng: random.Random, min_degree: int = 2, max_degree: int = 8
) -> Polynomial:
    """Random Gaussian-rational polynomial with a_0 != 0 and a_n != 0."""
    degree = rng.randint(min_degree, max_degree)
    coeffs = []
    for k in range(degree + 1):
        c = GaussianRational(random_fraction(rng, 6, 6), random_fraction(rng, 6, 6))
        coeffs.append(c)
    while coeffs[0].is_zero:
        coeffs[0] = GaussianRational(random_fraction(rng, 6, 6), random_fraction(rng, 6, 6))
    while coeffs[-1].is_zero:
        coeffs[-1] = GaussianRational(random_fraction(rng, 6, 6), random_fraction(rng, 6, 6))
    return Polynomial(coeffs)


def poly_from_roots(roots: list[complex]) -> Polynomial:
    """Expand prod (z - r) exactly; the given roots are then exact roots.

    Float inputs are taken at face value (their exact binary rationals), so
    the constructed polynomial's roots are exactly the requested complexes.
    """
    coeffs = [GaussianRational.of(1)]
    for r in roots:
        rg = GaussianRational(Fraction(r.real), Fraction(r.imag))
        coeffs = [GaussianRational.of(0)] + coeffs
        for i in range(len(coeffs) - 1):
            coeffs[i] = coeffs[i] - rg * coeffs[i + 1]
    return Polynomial(coeffs)


def random_roots(rng: random.Random, count: int, min_modulus: float = 0.3,
                 max_modulus: float = 10.0) -> list[complex]:
    import cmath

    roots = []
    for _ in range(count):
        modulus = rng.uniform(min_modulus, max_modulus)
        roots.append(modulus * cmath.exp(1j * rng.uniform(0.0, 2 * 3.141592653589793)))
    return roots
