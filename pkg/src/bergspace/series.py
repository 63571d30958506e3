"""Sparse formal power series over the Gaussian rationals, and the
coefficient-level inner product of the Bergman space of a disc.

For holomorphic f(z) = sum f_n z^n and g(z) = sum g_n z^n on the disc
|z| < R, integrating monomials in polar coordinates reduces the area
inner product to

    <f, g> = pi * sum_n R^(2n+2) * f_n * conj(g_n) / (n+1),

so with rational coefficients and rational R every inner product and
norm in this module is an exact rational multiple of pi.

All values are immutable and every operation is a pure function; there
is no shared mutable state, so concurrent use is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Union

from .rational import (
    GaussianLike,
    GaussianRational,
    PiRational,
    RationalLike,
    sum_fractions,
)

__all__ = [
    "Disc",
    "SparseSeries",
    "UNIT_DISC",
    "add",
    "compose_power",
    "disjoint_support",
    "inner_product",
    "norm_sq",
    "scale",
    "truncate",
]


@dataclass(frozen=True, slots=True)
class Disc:
    """The open disc |z| < radius, with exact rational radius."""

    radius: Fraction

    def __post_init__(self):
        r = self.radius if isinstance(self.radius, Fraction) else Fraction(self.radius)
        if r <= 0:
            raise ValueError(f"disc radius must be positive, got {r}")
        object.__setattr__(self, "radius", r)


UNIT_DISC = Disc(Fraction(1))


class SparseSeries:
    """Finitely many nonzero Gaussian-rational coefficients, indexed by
    nonnegative exponent.

    Kept in canonical sparse form: no zero coefficient is ever stored, so
    equality and disjointness of supports are structural. ``degree_bound``
    records the truncation degree D when the series stands for the
    truncation of an infinite series; None means the series is exact.
    """

    __slots__ = ("_coeffs", "_degree_bound")

    def __init__(
        self,
        coefficients: Mapping[int, GaussianLike] | None = None,
        degree_bound: int | None = None,
    ):
        coeffs: dict[int, GaussianRational] = {}
        for exponent, value in (coefficients or {}).items():
            if not isinstance(exponent, int) or exponent < 0:
                raise ValueError(f"exponents must be nonnegative integers, got {exponent!r}")
            c = GaussianRational.of(value)
            if not c.is_zero:
                coeffs[exponent] = c
        if degree_bound is not None:
            if degree_bound < 0:
                raise ValueError(f"degree_bound must be >= 0, got {degree_bound}")
            over = [e for e in coeffs if e > degree_bound]
            if over:
                raise ValueError(
                    f"exponent {max(over)} exceeds degree_bound {degree_bound}"
                )
        self._coeffs = coeffs
        self._degree_bound = degree_bound

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(degree_bound: int | None = None) -> SparseSeries:
        return SparseSeries({}, degree_bound)

    @staticmethod
    def monomial(exponent: int, coefficient: GaussianLike = 1) -> SparseSeries:
        return SparseSeries({exponent: coefficient})

    @staticmethod
    def one() -> SparseSeries:
        return SparseSeries.monomial(0)

    @staticmethod
    def geometric(degree: int) -> SparseSeries:
        """1 + z + ... + z^degree, the degree-D truncation of 1/(1-z)."""
        return SparseSeries({n: 1 for n in range(degree + 1)}, degree_bound=degree)

    @staticmethod
    def from_exponents(exponents, degree_bound: int | None = None) -> SparseSeries:
        """0/1 series with the given exponent set."""
        return SparseSeries({e: 1 for e in exponents}, degree_bound)

    # -- inspection --------------------------------------------------------

    @property
    def degree_bound(self) -> int | None:
        return self._degree_bound

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, exponent: int) -> GaussianRational:
        return self._coeffs.get(exponent, GaussianRational())

    def terms(self) -> Iterator[tuple[int, GaussianRational]]:
        """(exponent, coefficient) pairs in increasing exponent order."""
        for e in sorted(self._coeffs):
            yield e, self._coeffs[e]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseSeries):
            return NotImplemented
        return self._coeffs == other._coeffs and self._degree_bound == other._degree_bound

    def __repr__(self) -> str:
        if self.is_zero:
            body = "0"
        else:
            body = " + ".join(
                f"({c!r})z^{e}" if e else f"({c!r})" for e, c in self.terms()
            )
        if self._degree_bound is not None:
            return f"<{body} | truncated at {self._degree_bound}>"
        return f"<{body}>"

    # -- arithmetic sugar (delegates to the module functions) --------------

    def __add__(self, other: SparseSeries) -> SparseSeries:
        return add(self, other)

    def __sub__(self, other: SparseSeries) -> SparseSeries:
        return add(self, scale(other, -1))

    def __neg__(self) -> SparseSeries:
        return scale(self, -1)

    def __mul__(self, c: GaussianLike) -> SparseSeries:
        return scale(self, c)

    __rmul__ = __mul__

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "terms": [[e, c.to_json()] for e, c in self.terms()],
            "degree_bound": self._degree_bound,
        }

    @staticmethod
    def from_json(data: dict) -> SparseSeries:
        coeffs = {e: GaussianRational.from_json(c) for e, c in data["terms"]}
        return SparseSeries(coeffs, data.get("degree_bound"))


def _min_bound(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def add(f: SparseSeries, g: SparseSeries) -> SparseSeries:
    """Coefficient-wise sum.

    The result carries the tighter of the two truncation degrees and is
    truncated to it: the sum of a degree-D truncation and anything else is
    only faithful up to degree D.
    """
    bound = _min_bound(f.degree_bound, g.degree_bound)
    coeffs: dict[int, GaussianRational] = dict(f._coeffs)
    for e, c in g._coeffs.items():
        coeffs[e] = coeffs.get(e, GaussianRational()) + c
    if bound is not None:
        coeffs = {e: c for e, c in coeffs.items() if e <= bound}
    return SparseSeries(coeffs, bound)


def scale(f: SparseSeries, c: GaussianLike) -> SparseSeries:
    c = GaussianRational.of(c)
    return SparseSeries({e: c * v for e, v in f._coeffs.items()}, f.degree_bound)


def truncate(f: SparseSeries, degree: int) -> SparseSeries:
    """Drop all exponents above ``degree`` and record it as the bound."""
    if degree < 0:
        raise ValueError(f"truncation degree must be >= 0, got {degree}")
    return SparseSeries(
        {e: c for e, c in f._coeffs.items() if e <= degree}, degree_bound=degree
    )


def compose_power(f: SparseSeries, m: int) -> SparseSeries:
    """g(z) = f(z^m): every exponent is dilated by the factor m."""
    if m < 1:
        raise ValueError(f"power substitution needs m >= 1, got {m}")
    bound = None if f.degree_bound is None else f.degree_bound * m
    return SparseSeries({e * m: c for e, c in f._coeffs.items()}, bound)


def disjoint_support(f: SparseSeries, g: SparseSeries) -> bool:
    """True iff no exponent carries a nonzero coefficient in both series.

    Disjoint supports make f and g orthogonal on every disc.
    """
    small, large = (f._coeffs, g._coeffs) if len(f) <= len(g) else (g._coeffs, f._coeffs)
    return not any(e in large for e in small)


def inner_product(f: SparseSeries, g: SparseSeries, disc: Disc = UNIT_DISC) -> PiRational:
    """<f, g> on the disc: pi * sum R^(2n+2) f_n conj(g_n) / (n+1), exact."""
    radius = disc.radius
    unit = radius == 1
    re_terms: list[Fraction] = []
    im_terms: list[Fraction] = []
    for e, fc in f._coeffs.items():
        gc = g._coeffs.get(e)
        if gc is None:
            continue
        prod = fc * gc.conjugate()
        weight = Fraction(1, e + 1) if unit else radius ** (2 * e + 2) / (e + 1)
        if prod.re:
            re_terms.append(prod.re * weight)
        if prod.im:
            im_terms.append(prod.im * weight)
    return PiRational(sum_fractions(re_terms), sum_fractions(im_terms))


def norm_sq(f: SparseSeries, disc: Disc = UNIT_DISC) -> PiRational:
    """||f||^2 = <f, f>; the coefficient is nonnegative and zero iff f = 0."""
    radius = disc.radius
    unit = radius == 1
    terms = []
    for e, c in f._coeffs.items():
        weight = Fraction(1, e + 1) if unit else radius ** (2 * e + 2) / (e + 1)
        terms.append(c.abs_sq() * weight)
    return PiRational(sum_fractions(terms))
