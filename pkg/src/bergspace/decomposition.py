"""Orthogonal monomial decompositions of the truncated geometric series and
of the rough-number series, with exact verification.

Two constructions, both at a finite truncation degree D:

* ``geometric_partition`` splits 1 + z + ... + z^D into the blocks
  {1, z, F(z)} and {z^k, F(z^k)} for smooth k, where F collects the rough
  exponents. Every integer is uniquely smooth * rough, so each exponent
  lands in exactly one block and the blocks are mutually orthogonal.

* ``rough_dedup`` decomposes F itself into the prime block Q and greedily
  deduplicated dilates G_l of Q, one per composite-capable rough l, and
  checks the exact norm chain ||G_l||^2 <= ||H_l||^2 <= (2/l) ||Q||^2.

Report construction is deterministic and sequential (the dedup seen-set is
order-sensitive by design); verification of a finished report is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CoverageGap, PartitionViolation, TailNotSmall
from .primes import PrimePartition, make_partition, rough_numbers, smooth_numbers, tail_sum
from .rational import PiRational, sum_fractions
from .series import SparseSeries, add, compose_power, norm_sq, truncate

__all__ = [
    "Block",
    "DedupReport",
    "PartitionReport",
    "RoughTailBound",
    "StepOneBound",
    "StepTwoBound",
    "geometric_partition",
    "rough_dedup",
    "rough_tail_geometric_bound",
    "step_one_norm_bound",
    "step_two_norm_bound",
]


@dataclass(frozen=True)
class Block:
    label: str
    series: SparseSeries


@dataclass(frozen=True)
class PartitionReport:
    """Monomial partition of 1 + z + ... + z^degree into orthogonal blocks."""

    pk: int
    degree: int
    blocks: tuple[Block, ...]
    coverage: dict[int, str]

    def block_sum(self) -> SparseSeries:
        total = SparseSeries.zero(self.degree)
        for b in self.blocks:
            total = add(total, b.series)
        return total


def geometric_partition(pk: int, degree: int) -> PartitionReport:
    """Partition the exponents 0..degree into 1, z, F(z), z^k and F(z^k) blocks.

    Raises PartitionViolation if any exponent is covered zero or two times;
    that would be a bug, and it is surfaced rather than repaired.
    """
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    part = make_partition(pk, degree)
    smooth = smooth_numbers(part, degree)
    rough = rough_numbers(part, degree)

    blocks = [
        Block("1", SparseSeries.monomial(0)),
        Block("z", SparseSeries.monomial(1)),
        Block("F(z)", SparseSeries.from_exponents(rough, degree_bound=degree)),
    ]
    for k in smooth:
        shifted = [k * n for n in rough if k * n <= degree]
        blocks.append(Block(f"z^{k}", SparseSeries.monomial(k)))
        blocks.append(Block(f"F(z^{k})", SparseSeries.from_exponents(shifted, degree_bound=degree)))

    coverage: dict[int, str] = {}
    for block in blocks:
        for e, _ in block.series.terms():
            if e in coverage:
                raise PartitionViolation(e, [coverage[e], block.label])
            coverage[e] = block.label
    for e in range(degree + 1):
        if e not in coverage:
            raise PartitionViolation(e, [])

    report = PartitionReport(pk, degree, tuple(blocks), coverage)
    if report.block_sum() != SparseSeries.geometric(degree):
        raise PartitionViolation(-1, ["block sum differs from geometric series"])
    return report


@dataclass(frozen=True)
class StepOneBound:
    """Exact two-sided record for the truncated geometric-series estimate.

    lhs = ||1 + z + ... + z^D||^2.
    rhs = 3pi/2 + ||F_D||^2 + (pi + 2 ||F_D||^2) * sum_{smooth k <= D} 1/k.
    """

    pk: int
    degree: int
    lhs: PiRational
    rhs: PiRational
    f_norm_sq: PiRational
    smooth_recip_sum: Fraction
    holds: bool


def step_one_norm_bound(pk: int, degree: int) -> StepOneBound:
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    part = make_partition(pk, degree)
    lhs = PiRational(sum_fractions([Fraction(1, n + 1) for n in range(degree + 1)]))
    f_norm = PiRational(
        sum_fractions([Fraction(1, n + 1) for n in rough_numbers(part, degree)])
    )
    smooth_sum = sum_fractions(
        [Fraction(1, k) for k in smooth_numbers(part, degree)]
    )
    rhs_coeff = (
        Fraction(3, 2)
        + f_norm.coefficient
        + (1 + 2 * f_norm.coefficient) * smooth_sum
    )
    rhs = PiRational(rhs_coeff)
    return StepOneBound(pk, degree, lhs, rhs, f_norm, smooth_sum, lhs <= rhs)


@dataclass(frozen=True)
class DedupReport:
    """F_D = Q + sum G_l with pairwise disjoint supports.

    q_block is the prime series over [pk, D]; g_blocks holds (l, G_l) in
    increasing l; h_norms records ||H_l||^2 for the norm-chain comparison.
    """

    pk: int
    degree: int
    p2_limit: int
    q_block: SparseSeries
    g_blocks: tuple[tuple[int, SparseSeries], ...]
    h_norms: tuple[tuple[int, PiRational], ...]

    def block_sum(self) -> SparseSeries:
        total = self.q_block
        for _, g in self.g_blocks:
            total = add(total, g)
        return total


def rough_dedup(pk: int, degree: int, p2_limit: int) -> DedupReport:
    """Greedy deduplicated decomposition of the rough-number series.

    Walks the rough numbers l in increasing order; H_l is the l-fold dilate
    of Q truncated at ``degree``, and G_l keeps only monomials not already
    claimed by Q or an earlier G. Verifies coverage and the exact chain
    ||G_l||^2 <= ||H_l||^2 <= (2/l) ||Q||^2 for every l.
    """
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    if p2_limit < degree:
        raise ValueError(
            f"p2_limit {p2_limit} < degree {degree}: Q would be incomplete"
        )
    part = make_partition(pk, p2_limit)
    q = SparseSeries.from_exponents(
        [p for p in part.p2 if p <= degree], degree_bound=degree
    )
    q_norm = norm_sq(q)
    seen = set(q.support)

    g_blocks: list[tuple[int, SparseSeries]] = []
    h_norms: list[tuple[int, PiRational]] = []
    for l in rough_numbers(part, degree):
        h = truncate(compose_power(q, l), degree)
        h_norm = norm_sq(h)
        g = SparseSeries.from_exponents(
            [e for e in h.support if e not in seen], degree_bound=degree
        )
        seen.update(g.support)
        g_blocks.append((l, g))
        h_norms.append((l, h_norm))
        if not (norm_sq(g) <= h_norm and h_norm <= Fraction(2, l) * q_norm):
            raise ArithmeticError(f"norm chain violated at l = {l}")

    report = DedupReport(pk, degree, p2_limit, q, tuple(g_blocks), tuple(h_norms))
    covered = set(report.block_sum().support)
    for n in rough_numbers(part, degree):
        if n not in covered:
            raise CoverageGap(n)
    return report


@dataclass(frozen=True)
class StepTwoBound:
    """||F_D||^2 (summed block-wise) against 2 ||Q||^2 (1 + sum 1/l)."""

    pk: int
    degree: int
    p2_limit: int
    f_norm_sq: PiRational
    q_norm_sq: PiRational
    bound: PiRational
    holds: bool


def step_two_norm_bound(pk: int, degree: int, p2_limit: int) -> StepTwoBound:
    report = rough_dedup(pk, degree, p2_limit)
    q_norm = norm_sq(report.q_block)
    f_norm = q_norm
    for _, g in report.g_blocks:
        f_norm = f_norm + norm_sq(g)
    part = make_partition(pk, degree)
    rough_recip = sum_fractions(
        [Fraction(1, l) for l in rough_numbers(part, degree)]
    )
    bound = q_norm * (2 * (1 + rough_recip))
    return StepTwoBound(pk, degree, p2_limit, f_norm, q_norm, bound, f_norm <= bound)


@dataclass(frozen=True)
class RoughTailBound:
    """Geometric majorant for the reciprocal sum over rough numbers.

    With s = sum 1/p over the tail primes and s < 1, every rough reciprocal
    sum is bounded by s + s^2 + ... = s / (1 - s)."""

    tail: Fraction
    geometric_bound: Fraction
    partial_sum: Fraction
    terms: int
    holds: bool


def rough_tail_geometric_bound(part: PrimePartition, terms: int) -> RoughTailBound:
    """Compare sum of 1/l over rough l <= terms with the geometric majorant.

    Requires terms <= p2_limit so that every prime factor that can occur in
    a rough l <= terms contributes to the tail sum; raises TailNotSmall when
    the tail sum is >= 1 and the majorant does not exist.
    """
    if terms > part.p2_limit:
        raise ValueError(
            f"terms {terms} exceeds p2_limit {part.p2_limit}: tail sum incomplete"
        )
    s = tail_sum(part)
    if s >= 1:
        raise TailNotSmall(s)
    geometric = s / (1 - s)
    partial = sum_fractions(
        [Fraction(1, l) for l in rough_numbers(part, max(terms, 1))]
    )
    return RoughTailBound(s, geometric, partial, terms, partial <= geometric)
