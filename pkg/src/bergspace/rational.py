"""Exact scalar arithmetic: Gaussian rationals and rational multiples of pi.

Everything here is built on ``fractions.Fraction`` so that equality,
comparison and accumulation are exact. Floats appear only on explicit
conversion (``complex()``, ``float()``), which the CLI uses for display.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import pi as _PI
from typing import Iterable, Union

RationalLike = Union[int, Fraction]
GaussianLike = Union[int, Fraction, "GaussianRational"]


def _as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def sum_fractions(items: Iterable[Fraction]) -> Fraction:
    """Sum exactly, pairing terms tree-style.

    A left fold re-normalises a huge accumulator against every small term;
    balanced merging keeps intermediate numerators/denominators comparable
    in size, which matters when summing thousands of unit fractions.
    """
    vals = list(items)
    if not vals:
        return Fraction(0)
    while len(vals) > 1:
        half = [vals[i] + vals[i + 1] for i in range(0, len(vals) - 1, 2)]
        if len(vals) % 2:
            half.append(vals[-1])
        vals = half
    return vals[0]


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """A complex number with exact rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _as_fraction(self.re))
        object.__setattr__(self, "im", _as_fraction(self.im))

    @staticmethod
    def of(value: GaussianLike) -> GaussianRational:
        """Coerce an int, Fraction or GaussianRational."""
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(_as_fraction(value))

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    @property
    def is_real(self) -> bool:
        return not self.im

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def abs_sq(self) -> Fraction:
        """|z|^2 = re^2 + im^2, exact."""
        return self.re * self.re + self.im * self.im

    def one_norm(self) -> Fraction:
        """|re| + |im|: a cheap exact upper bound for the modulus."""
        return abs(self.re) + abs(self.im)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, other: GaussianLike) -> GaussianRational:
        o = GaussianRational.of(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: GaussianLike) -> GaussianRational:
        return self + (-GaussianRational.of(other))

    def __rsub__(self, other: GaussianLike) -> GaussianRational:
        return GaussianRational.of(other) + (-self)

    def __mul__(self, other: GaussianLike) -> GaussianRational:
        o = GaussianRational.of(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: GaussianLike) -> GaussianRational:
        o = GaussianRational.of(other)
        d = o.abs_sq()
        if not d:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __rtruediv__(self, other: GaussianLike) -> GaussianRational:
        return GaussianRational.of(other) / self

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        if self.is_real:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def to_json(self) -> list[int]:
        """[re_num, re_den, im_num, im_den]."""
        return [
            self.re.numerator,
            self.re.denominator,
            self.im.numerator,
            self.im.denominator,
        ]

    @staticmethod
    def from_json(data) -> GaussianRational:
        rn, rd, im_n, im_d = data
        return GaussianRational(Fraction(rn, rd), Fraction(im_n, im_d))


GAUSSIAN_ZERO = GaussianRational()
GAUSSIAN_ONE = GaussianRational(Fraction(1))


@dataclass(frozen=True, slots=True)
class PiRational:
    """The exact value (coefficient + imag_coefficient*i) * pi.

    Inner products of series with real rational coefficients always have
    imag_coefficient == 0; the imaginary slot exists because the pairing of
    two Gaussian-rational series is complex in general. Comparisons and
    float conversion insist on a real value.
    """

    coefficient: Fraction = Fraction(0)
    imag_coefficient: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "coefficient", _as_fraction(self.coefficient))
        object.__setattr__(self, "imag_coefficient", _as_fraction(self.imag_coefficient))

    @property
    def is_zero(self) -> bool:
        return not self.coefficient and not self.imag_coefficient

    @property
    def is_real(self) -> bool:
        return not self.imag_coefficient

    def _require_real(self, what: str) -> Fraction:
        if not self.is_real:
            raise ValueError(f"{what} undefined for non-real multiple of pi: {self!r}")
        return self.coefficient

    def __add__(self, other: PiRational) -> PiRational:
        return PiRational(
            self.coefficient + other.coefficient,
            self.imag_coefficient + other.imag_coefficient,
        )

    def __sub__(self, other: PiRational) -> PiRational:
        return PiRational(
            self.coefficient - other.coefficient,
            self.imag_coefficient - other.imag_coefficient,
        )

    def __neg__(self) -> PiRational:
        return PiRational(-self.coefficient, -self.imag_coefficient)

    def __mul__(self, scalar: RationalLike) -> PiRational:
        s = _as_fraction(scalar)
        return PiRational(self.coefficient * s, self.imag_coefficient * s)

    __rmul__ = __mul__

    def __lt__(self, other: PiRational) -> bool:
        return self._require_real("comparison") < other._require_real("comparison")

    def __le__(self, other: PiRational) -> bool:
        return self._require_real("comparison") <= other._require_real("comparison")

    def __gt__(self, other: PiRational) -> bool:
        return other < self

    def __ge__(self, other: PiRational) -> bool:
        return other <= self

    def __float__(self) -> float:
        return float(self._require_real("float conversion")) * _PI

    def __complex__(self) -> complex:
        return complex(float(self.coefficient) * _PI, float(self.imag_coefficient) * _PI)

    def __repr__(self) -> str:
        if self.is_real:
            return f"({self.coefficient})*pi"
        return f"({GaussianRational(self.coefficient, self.imag_coefficient)!r})*pi"

    def to_json(self) -> dict:
        out = {"pi_coeff": [self.coefficient.numerator, self.coefficient.denominator]}
        if self.imag_coefficient:
            out["pi_coeff_imag"] = [
                self.imag_coefficient.numerator,
                self.imag_coefficient.denominator,
            ]
        return out

    @staticmethod
    def from_json(data: dict) -> PiRational:
        num, den = data["pi_coeff"]
        im = data.get("pi_coeff_imag")
        if im is None:
            return PiRational(Fraction(num, den))
        return PiRational(Fraction(num, den), Fraction(im[0], im[1]))


PI_ZERO = PiRational()
