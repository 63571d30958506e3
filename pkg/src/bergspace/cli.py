"""Command-line interface.

One command per process; every report is written to stdout in a single
atomic write, diagnostics go to stderr. Exit codes: 0 success, 2 malformed
input or usage, 3 a mathematical hypothesis check failed (e.g. the prime
tail sum was not below 1).

Usage examples:

    bergspace norm --series "1@0,1@1" --radius 1
    bergspace inner --f "1@2" --g "1@2,1/2@3" --radius 1/2
    bergspace fta-cert --poly "6,-5,1" --grid 256x256
    bergspace primes norm --limit 100
    bergspace primes bertrand --n 42
    bergspace primes twins --limit 10000
    bergspace primes euler --pk 7
    bergspace decompose geometric --pk 3 --degree 8
    bergspace decompose rough --pk 3 --degree 25
    bergspace decompose tail --pk 11 --p2-limit 10000 --terms 10000
    bergspace sweep primes-norm --range 10..100000 --points 5
    bergspace sweep bertrand --range 1..100

Exact coefficients survive the shell as "num/den" tokens: series terms are
"coeff@exponent" comma lists, complex coefficients "1/2+3/4i". Defaults can
come from a config file of "key = value" lines (--config) or environment
variables prefixed BERGSPACE_ (GRID, OUTPUT_FORMAT, FLOAT_DIGITS,
SIEVE_CACHE_PATH); flags win over both.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path

from . import decomposition, fta, primes
from .errors import BergspaceError, TailNotSmall
from .fta import Polynomial, QuadratureGrid
from .rational import GaussianRational, PiRational
from .series import Disc, SparseSeries, inner_product, norm_sq

ENV_PREFIX = "BERGSPACE_"
FULL_LISTING_MAX_DEGREE = 128


class UsageError(Exception):
    """Bad input from the user; maps to exit code 2."""


# -- input parsing -----------------------------------------------------------


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {text!r}: {exc}") from None


def parse_coefficient(text: str) -> GaussianRational:
    """Gaussian rational: "2", "-3/4", "2i", "1/2+3/4i", "1/2-3/4i", "i"."""
    s = text.replace(" ", "")
    if not s:
        raise UsageError("empty coefficient")
    if not s.endswith("i"):
        return GaussianRational(parse_rational(s))
    body = s[:-1]
    split = 0
    for idx in range(len(body) - 1, 0, -1):
        if body[idx] in "+-" and body[idx - 1] not in "+-/":
            split = idx
            break
    real, imag = body[:split], body[split:]
    if imag in ("", "+"):
        imag = "1"
    elif imag == "-":
        imag = "-1"
    return GaussianRational(
        parse_rational(real) if real else Fraction(0), parse_rational(imag)
    )


def parse_series(text: str) -> SparseSeries:
    """Comma list of coeff@exponent terms; repeated exponents accumulate."""
    coeffs: dict[int, GaussianRational] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "@" not in chunk:
            raise UsageError(f"series term {chunk!r} is missing '@exponent'")
        coeff_text, _, exp_text = chunk.rpartition("@")
        try:
            exponent = int(exp_text)
        except ValueError:
            raise UsageError(f"bad exponent {exp_text!r}") from None
        if exponent < 0:
            raise UsageError(f"exponent must be >= 0, got {exponent}")
        c = parse_coefficient(coeff_text)
        coeffs[exponent] = coeffs.get(exponent, GaussianRational()) + c
    return SparseSeries(coeffs)


def parse_poly(text: str) -> Polynomial:
    """Comma list a0,a1,...,an of Gaussian-rational coefficients."""
    parts = [p for p in (chunk.strip() for chunk in text.split(",")) if p]
    if not parts:
        raise UsageError("empty polynomial")
    try:
        return Polynomial([parse_coefficient(p) for p in parts])
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_grid(text: str) -> QuadratureGrid:
    try:
        nr_text, nt_text = text.lower().split("x")
        grid = QuadratureGrid(int(nr_text), int(nt_text))
    except ValueError as exc:
        raise UsageError(f"bad grid spec {text!r}: {exc}") from None
    return grid


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo_text, hi_text = text.split("..")
        return int(lo_text), int(hi_text)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected START..STOP") from None


# -- configuration -----------------------------------------------------------


@dataclass(frozen=True)
class RunConfig:
    default_grid: QuadratureGrid = QuadratureGrid()
    output_format: str = "json"
    float_digits: int = 15
    sieve_cache_path: str | None = None

    def __post_init__(self):
        if not 1 <= self.float_digits <= 30:
            raise UsageError(f"float_digits must be in [1, 30], got {self.float_digits}")
        if self.output_format not in ("json", "csv"):
            raise UsageError(f"output_format must be json or csv, got {self.output_format!r}")


def _read_config_file(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path!r}: {exc}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        values[key.strip().lower()] = value.strip()
    return values


def load_config(config_path: str | None, env: dict[str, str]) -> RunConfig:
    values: dict[str, str] = {}
    if config_path:
        values.update(_read_config_file(config_path))
    for key in ("grid", "output_format", "float_digits", "sieve_cache_path"):
        env_value = env.get(ENV_PREFIX + key.upper())
        if env_value is not None:
            values[key] = env_value
    cfg = RunConfig()
    if "grid" in values:
        cfg = replace(cfg, default_grid=parse_grid(values["grid"]))
    if "output_format" in values:
        cfg = replace(cfg, output_format=values["output_format"].lower())
    if "float_digits" in values:
        try:
            cfg = replace(cfg, float_digits=int(values["float_digits"]))
        except ValueError:
            raise UsageError(f"bad float_digits {values['float_digits']!r}") from None
    if "sieve_cache_path" in values:
        cfg = replace(cfg, sieve_cache_path=values["sieve_cache_path"] or None)
    return cfg


def _load_sieve_cache(path: str) -> int:
    """Warm the in-memory sieve from the file; returns the file's limit."""
    try:
        text = Path(path).read_text().split()
    except OSError:
        return 0
    if not text:
        return 0
    limit = int(text[0])
    primes.warm_cache([int(t) for t in text[1:]], limit)
    return limit


def _save_sieve_cache(path: str, file_limit: int) -> None:
    """Write the sieve back whenever memory knows more than the file."""
    limit, cached = primes.cache_snapshot()
    if limit <= file_limit:
        return
    try:
        Path(path).write_text(" ".join([str(limit)] + [str(p) for p in cached]))
    except OSError as exc:
        print(f"warning: could not write sieve cache: {exc}", file=sys.stderr)


# -- rendering ---------------------------------------------------------------


def render_float(value: float, digits: int) -> float:
    return float(f"{value:.{digits}g}")


def pi_report(value: PiRational, digits: int) -> dict:
    out = value.to_json()
    if value.is_real:
        out["float"] = render_float(float(value), digits)
    return out


def fraction_json(q: Fraction) -> list[int]:
    return [q.numerator, q.denominator]


def _flatten(prefix: str, value, row: dict) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, row)
    elif isinstance(value, (list, tuple)):
        row[prefix] = json.dumps(value)
    else:
        row[prefix] = value


def emit(report: dict, cfg: RunConfig) -> str:
    if cfg.output_format == "csv":
        row: dict = {}
        _flatten("", report, row)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(row), lineterminator="\n")
        writer.writeheader()
        writer.writerow(row)
        return buf.getvalue()
    return json.dumps(report, indent=2) + "\n"


# -- subcommand handlers -----------------------------------------------------


def _cmd_norm(args, cfg: RunConfig) -> str:
    series = parse_series(args.series)
    value = norm_sq(series, Disc(parse_rational(args.radius)))
    return emit(pi_report(value, cfg.float_digits), cfg)


def _cmd_inner(args, cfg: RunConfig) -> str:
    f = parse_series(args.f)
    g = parse_series(args.g)
    value = inner_product(f, g, Disc(parse_rational(args.radius)))
    return emit(pi_report(value, cfg.float_digits), cfg)


def _cmd_fta_cert(args, cfg: RunConfig) -> str:
    poly = parse_poly(args.poly)
    grid = parse_grid(args.grid) if args.grid else cfg.default_grid
    report = fta.root_disc_certificate(poly, grid)
    return emit(report.to_json(), cfg)


def _cmd_primes_norm(args, cfg: RunConfig) -> str:
    return emit(pi_report(primes.prime_norm_partial(args.limit), cfg.float_digits), cfg)


def _cmd_primes_twins(args, cfg: RunConfig) -> str:
    return emit(pi_report(primes.twin_prime_norm_partial(args.limit), cfg.float_digits), cfg)


def _cmd_primes_bertrand(args, cfg: RunConfig) -> str:
    witness = primes.bertrand_witness(args.n)
    report = {"n": args.n, **pi_report(witness.value, cfg.float_digits)}
    report["prime_found"] = witness.prime_found
    return emit(report, cfg)


def _cmd_primes_euler(args, cfg: RunConfig) -> str:
    part = primes.make_partition(args.pk, max(args.pk - 1, 0))
    product = primes.euler_product_smooth(part)
    report = {
        "pk": args.pk,
        "product": fraction_json(product),
        "float": render_float(float(product), cfg.float_digits),
    }
    return emit(report, cfg)


def _series_listing(series: SparseSeries) -> list:
    return [[e, c.to_json()] for e, c in series.terms()]


def _cmd_decompose_geometric(args, cfg: RunConfig) -> str:
    report = decomposition.geometric_partition(args.pk, args.degree)
    out: dict = {
        "pk": report.pk,
        "degree": report.degree,
        "coverage": "exact",
        "block_count": len(report.blocks),
    }
    if args.degree <= FULL_LISTING_MAX_DEGREE:
        out["blocks"] = [
            {"label": b.label, "terms": _series_listing(b.series)} for b in report.blocks
        ]
    else:
        out["block_summary"] = [
            {"label": b.label, "size": len(b.series)} for b in report.blocks
        ]
    return emit(out, cfg)


def _cmd_decompose_rough(args, cfg: RunConfig) -> str:
    p2_limit = args.p2_limit if args.p2_limit is not None else args.degree
    report = decomposition.rough_dedup(args.pk, args.degree, p2_limit)
    out: dict = {
        "pk": report.pk,
        "degree": report.degree,
        "p2_limit": report.p2_limit,
        "coverage": "exact",
        "q_size": len(report.q_block),
        "g_block_count": len(report.g_blocks),
        "h_norms": [[l, n.to_json()["pi_coeff"]] for l, n in report.h_norms],
    }
    if args.degree <= FULL_LISTING_MAX_DEGREE:
        out["q_block"] = _series_listing(report.q_block)
        out["g_blocks"] = [[l, _series_listing(g)] for l, g in report.g_blocks]
    else:
        out["g_block_sizes"] = [[l, len(g)] for l, g in report.g_blocks]
    return emit(out, cfg)


def _cmd_decompose_tail(args, cfg: RunConfig) -> str:
    part = primes.make_partition(args.pk, args.p2_limit)
    terms = args.terms if args.terms is not None else args.p2_limit
    bound = decomposition.rough_tail_geometric_bound(part, terms)
    out = {
        "pk": args.pk,
        "p2_limit": args.p2_limit,
        "terms": bound.terms,
        "tail": fraction_json(bound.tail),
        "tail_float": render_float(float(bound.tail), cfg.float_digits),
        "geometric_bound": fraction_json(bound.geometric_bound),
        "partial_sum": fraction_json(bound.partial_sum),
        "holds": bound.holds,
    }
    return emit(out, cfg)


def _log_spaced(lo: int, hi: int, points: int | None) -> list[int]:
    if lo > hi:
        return []
    if points is None:
        return list(range(lo, hi + 1))
    if points <= 1:
        return [lo]
    ratio = hi / lo if lo > 0 else 0
    values = []
    for i in range(points):
        if lo > 0:
            values.append(round(lo * ratio ** (i / (points - 1))))
        else:
            values.append(round(lo + (hi - lo) * i / (points - 1)))
    return sorted(set(values))


def _cmd_sweep(args, cfg: RunConfig) -> str:
    lo, hi = parse_range(args.range)
    values = _log_spaced(lo, hi, args.points)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if args.target == "bertrand":
        writer.writerow(["parameter", "numerator", "denominator", "float", "prime_found"])
        for n in values:
            if n < 1:
                raise UsageError(f"bertrand sweep needs parameters >= 1, got {n}")
            witness = primes.bertrand_witness(n)
            q = witness.value.coefficient
            writer.writerow(
                [
                    n,
                    q.numerator,
                    q.denominator,
                    render_float(float(witness.value), cfg.float_digits),
                    witness.prime_found,
                ]
            )
        return buf.getvalue()
    compute = {
        "primes-norm": primes.prime_norm_partial,
        "twins": primes.twin_prime_norm_partial,
    }[args.target]
    writer.writerow(["parameter", "numerator", "denominator", "float"])
    for limit in values:
        if limit < 0:
            raise UsageError(f"sweep needs parameters >= 0, got {limit}")
        value = compute(limit)
        q = value.coefficient
        writer.writerow(
            [limit, q.numerator, q.denominator, render_float(float(value), cfg.float_digits)]
        )
    return buf.getvalue()


# -- argument parsing / dispatch ---------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    # Shared flags use SUPPRESS so a leaf parser's default never clobbers a
    # value parsed before the subcommand; dispatch reads them via getattr.
    common = _Parser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help="config file of key = value lines")
    common.add_argument(
        "--format", choices=["json", "csv"], default=argparse.SUPPRESS, help="report format"
    )
    common.add_argument(
        "--float-digits",
        type=int,
        default=argparse.SUPPRESS,
        help="significant digits for float rendering",
    )

    parser = _Parser(
        prog="bergspace",
        description=__doc__.splitlines()[0],
        parents=[common],
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", parents=[common], help="exact Bergman norm^2 of a series on a disc")
    p.add_argument("--series", required=True, help='terms "coeff@exp,..."')
    p.add_argument("--radius", default="1", help="disc radius (rational)")
    p.set_defaults(handler=_cmd_norm)

    p = sub.add_parser("inner", parents=[common], help="exact inner product of two series on a disc")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--radius", default="1")
    p.set_defaults(handler=_cmd_inner)

    p = sub.add_parser("fta-cert", parents=[common], help="certified root-containing disc for a polynomial")
    p.add_argument("--poly", required=True, help='coefficients "a0,a1,...,an"')
    p.add_argument("--grid", help="quadrature grid NRxNT")
    p.set_defaults(handler=_cmd_fta_cert)

    p = sub.add_parser("primes", help="prime series norms and witnesses")
    psub = p.add_subparsers(dest="primes_command", required=True)
    q = psub.add_parser("norm", parents=[common], help="pi * sum 1/(p+1) over primes <= limit")
    q.add_argument("--limit", type=int, required=True)
    q.set_defaults(handler=_cmd_primes_norm)
    q = psub.add_parser("twins", parents=[common], help="pi * sum 1/(p+1) over twin primes <= limit")
    q.add_argument("--limit", type=int, required=True)
    q.set_defaults(handler=_cmd_primes_twins)
    q = psub.add_parser("bertrand", parents=[common], help="exact witness for a prime in (N, 2N]")
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(handler=_cmd_primes_bertrand)
    q = psub.add_parser("euler", parents=[common], help="prod 1/(1-1/p) over primes below pk")
    q.add_argument("--pk", type=int, required=True)
    q.set_defaults(handler=_cmd_primes_euler)

    p = sub.add_parser("decompose", help="orthogonal monomial decompositions")
    dsub = p.add_subparsers(dest="decompose_command", required=True)
    q = dsub.add_parser("geometric", parents=[common], help="partition of 1 + z + ... + z^D")
    q.add_argument("--pk", type=int, required=True)
    q.add_argument("--degree", type=int, required=True)
    q.set_defaults(handler=_cmd_decompose_geometric)
    q = dsub.add_parser("rough", parents=[common], help="deduplicated decomposition of the rough series")
    q.add_argument("--pk", type=int, required=True)
    q.add_argument("--degree", type=int, required=True)
    q.add_argument("--p2-limit", type=int, dest="p2_limit")
    q.set_defaults(handler=_cmd_decompose_rough)
    q = dsub.add_parser("tail", parents=[common], help="geometric majorant for rough reciprocals")
    q.add_argument("--pk", type=int, required=True)
    q.add_argument("--p2-limit", type=int, dest="p2_limit", required=True)
    q.add_argument("--terms", type=int)
    q.set_defaults(handler=_cmd_decompose_tail)

    p = sub.add_parser("sweep", parents=[common], help="CSV sweep over a parameter range")
    p.add_argument("target", choices=["primes-norm", "twins", "bertrand"])
    p.add_argument("--range", required=True, help="START..STOP inclusive")
    p.add_argument("--points", type=int, help="log-spaced sample count (default: every integer)")
    p.set_defaults(handler=_cmd_sweep)
    return parser


def dispatch(argv: list[str]) -> int:
    # exact rationals at desk scale exceed CPython's default 4300-digit
    # int/str conversion guard; reports deliberately carry such integers
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = load_config(getattr(args, "config", None), dict(os.environ))
        fmt = getattr(args, "format", None)
        if fmt:
            cfg = replace(cfg, output_format=fmt)
        digits = getattr(args, "float_digits", None)
        if digits is not None:
            cfg = replace(cfg, float_digits=digits)
        file_limit = 0
        if cfg.sieve_cache_path:
            file_limit = _load_sieve_cache(cfg.sieve_cache_path)
        output = args.handler(args, cfg)
        if cfg.sieve_cache_path:
            _save_sieve_cache(cfg.sieve_cache_path, file_limit)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TailNotSmall as exc:
        print(f"hypothesis failed: {exc}", file=sys.stderr)
        return 3
    except (BergspaceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(output)
    return 0


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
