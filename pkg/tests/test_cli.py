import json
from fractions import Fraction

import pytest

from bergspace.cli import (
    RunConfig,
    UsageError,
    dispatch,
    load_config,
    parse_coefficient,
    parse_grid,
    parse_range,
    parse_series,
)
from bergspace.rational import GaussianRational, PiRational
from bergspace.series import SparseSeries


def run_cli(capsys, *argv):
    code = dispatch(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- parsers -----------------------------------------------------------------


def test_parse_coefficient_forms():
    cases = {
        "5": (5, 0),
        "-3/4": (Fraction(-3, 4), 0),
        "2i": (0, 2),
        "-2/3i": (0, Fraction(-2, 3)),
        "1/2+3/4i": (Fraction(1, 2), Fraction(3, 4)),
        "1/2-3/4i": (Fraction(1, 2), Fraction(-3, 4)),
        "i": (0, 1),
        "-i": (0, -1),
        "0": (0, 0),
    }
    for text, (re, im) in cases.items():
        assert parse_coefficient(text) == GaussianRational(Fraction(re), Fraction(im))


def test_parse_coefficient_accepts_decimal_strings_exactly():
    # decimal text is an exact rational, no float ever enters
    assert parse_coefficient("1.5") == GaussianRational(Fraction(3, 2))


def test_parse_coefficient_rejects_garbage():
    for bad in ("", "one", "1//2", "3/4j", "2+2"):
        with pytest.raises(UsageError):
            parse_coefficient(bad)


def test_parse_series_accumulates_repeated_exponents():
    series = parse_series("1@2,1/2@2,3@0")
    assert series == SparseSeries({0: 3, 2: Fraction(3, 2)})


def test_parse_grid_and_range():
    grid = parse_grid("128x64")
    assert (grid.n_r, grid.n_theta) == (128, 64)
    with pytest.raises(UsageError):
        parse_grid("4x4")  # below minimum dimensions
    assert parse_range("10..1000") == (10, 1000)
    with pytest.raises(UsageError):
        parse_range("10-1000")


# -- dispatch ------------------------------------------------------------------


def test_primes_norm_report(capsys):
    code, out, _ = run_cli(capsys, "primes", "norm", "--limit", "10")
    assert code == 0
    data = json.loads(out)
    assert data["pi_coeff"] == [7, 8]
    assert data["float"] == pytest.approx(2.748893571891069)


def test_norm_series_report(capsys):
    code, out, _ = run_cli(capsys, "norm", "--series", "1@0,1@1", "--radius", "1")
    assert code == 0
    assert json.loads(out)["pi_coeff"] == [3, 2]


def test_decompose_geometric_report(capsys):
    code, out, _ = run_cli(capsys, "decompose", "geometric", "--pk", "3", "--degree", "8")
    assert code == 0
    data = json.loads(out)
    assert data["coverage"] == "exact"
    labels = [b["label"] for b in data["blocks"]]
    assert labels[:3] == ["1", "z", "F(z)"]


def test_decompose_rough_report(capsys):
    code, out, _ = run_cli(capsys, "decompose", "rough", "--pk", "2", "--degree", "4")
    assert code == 0
    data = json.loads(out)
    assert data["q_block"] == [[2, [1, 1, 0, 1]], [3, [1, 1, 0, 1]]]
    assert data["coverage"] == "exact"


def test_fta_cert_report(capsys):
    code, out, _ = run_cli(capsys, "fta-cert", "--poly", "6,-5,1", "--grid", "64x64")
    assert code == 0
    data = json.loads(out)
    assert data["r0"] == [24, 1]
    assert data["certified_radius"] >= 2
    assert data["root_witness"] is None


def test_usage_error_exit_code(capsys):
    code, out, err = run_cli(capsys, "norm", "--series", "oops")
    assert code == 2
    assert not out
    assert err.startswith("error:")
    code, _, err = run_cli(capsys, "primes", "norm", "--limit", "not-a-number")
    assert code == 2


def test_decompose_tail_emits_large_exact_rationals(capsys):
    # desk-scale tail sums exceed 4300 digits; the report must still be
    # exact JSON integers and reparse to the library's own values
    code, out, _ = run_cli(capsys, "decompose", "tail", "--pk", "29", "--p2-limit", "10000")
    assert code == 0
    data = json.loads(out)
    tail = Fraction(*data["tail"])
    from bergspace.decomposition import rough_tail_geometric_bound
    from bergspace.primes import make_partition

    record = rough_tail_geometric_bound(make_partition(29, 10_000), 10_000)
    assert tail == record.tail
    assert Fraction(*data["geometric_bound"]) == record.geometric_bound
    assert data["holds"] is True


def test_hypothesis_failure_exit_code(capsys):
    code, out, err = run_cli(
        capsys, "decompose", "tail", "--pk", "2", "--p2-limit", "10000"
    )
    assert code == 3
    assert not out
    assert "hypothesis failed" in err


def test_degree_too_small_is_input_error(capsys):
    code, _, err = run_cli(capsys, "fta-cert", "--poly", "1,1")
    assert code == 2


# -- sweeps --------------------------------------------------------------------


def test_sweep_primes_norm_monotone(capsys):
    code, out, _ = run_cli(
        capsys, "sweep", "primes-norm", "--range", "10..1000", "--points", "3"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "parameter,numerator,denominator,float"
    assert len(lines) == 4
    floats = [float(line.split(",")[3]) for line in lines[1:]]
    assert floats == sorted(floats)


def test_sweep_bertrand_all_true(capsys):
    code, out, _ = run_cli(capsys, "sweep", "bertrand", "--range", "1..100")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 101
    assert all(line.endswith("True") for line in lines[1:])


def test_sweep_empty_range_header_only(capsys):
    code, out, _ = run_cli(capsys, "sweep", "twins", "--range", "5..4")
    assert code == 0
    assert out == "parameter,numerator,denominator,float\n"


# -- round trips and float rendering ---------------------------------------------


def test_pi_report_round_trip(capsys):
    _, out, _ = run_cli(capsys, "primes", "norm", "--limit", "97")
    data = json.loads(out)
    num, den = data["pi_coeff"]
    reparsed = PiRational(Fraction(num, den))
    from bergspace.primes import prime_norm_partial

    assert reparsed == prime_norm_partial(97)


def test_float_rendering_is_presentation_only(capsys):
    code_a, out_a, _ = run_cli(capsys, "primes", "norm", "--limit", "1000")
    code_b, out_b, _ = run_cli(
        capsys, "primes", "norm", "--limit", "1000", "--float-digits", "3"
    )
    assert code_a == code_b == 0
    a, b = json.loads(out_a), json.loads(out_b)
    assert a["pi_coeff"] == b["pi_coeff"]
    a.pop("float"), b.pop("float")
    assert a == b


def test_csv_format_flag(capsys):
    code, out, _ = run_cli(capsys, "--format", "csv", "primes", "norm", "--limit", "10")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == "pi_coeff,float"
    assert row.startswith('"[7, 8]"')


# -- configuration ----------------------------------------------------------------


def test_config_file_and_env_precedence(tmp_path, monkeypatch, capsys):
    config = tmp_path / "bergspace.conf"
    config.write_text("float_digits = 3\noutput_format = json  # comment\n")
    cfg = load_config(str(config), {})
    assert cfg.float_digits == 3
    cfg = load_config(str(config), {"BERGSPACE_FLOAT_DIGITS": "5"})
    assert cfg.float_digits == 5
    # flag beats both
    monkeypatch.setenv("BERGSPACE_FLOAT_DIGITS", "5")
    code, out, _ = run_cli(
        capsys,
        "primes",
        "norm",
        "--limit",
        "10",
        "--config",
        str(config),
        "--float-digits",
        "2",
    )
    assert code == 0
    assert json.loads(out)["float"] == 2.7


def test_config_validation():
    with pytest.raises(UsageError):
        RunConfig(float_digits=0)
    with pytest.raises(UsageError):
        RunConfig(output_format="xml")
    with pytest.raises(UsageError):
        load_config(None, {"BERGSPACE_FLOAT_DIGITS": "40"})


def test_sieve_cache_round_trip(tmp_path, monkeypatch, capsys):
    cache = tmp_path / "primes.txt"
    monkeypatch.setenv("BERGSPACE_SIEVE_CACHE_PATH", str(cache))
    code, _, _ = run_cli(capsys, "primes", "norm", "--limit", "10000")
    assert code == 0
    limit, *primes = [int(tok) for tok in cache.read_text().split()]
    assert limit >= 10000
    assert primes[:4] == [2, 3, 5, 7]
    # second run loads the cache without error and gives the same values
    code, out, _ = run_cli(capsys, "primes", "norm", "--limit", "100")
    assert code == 0
    from bergspace.primes import prime_norm_partial

    assert PiRational.from_json(json.loads(out)) == prime_norm_partial(100)
