import math

import pytest

from padiczoo.core import DomainError
from padiczoo.haar import (
    E_prefix_target,
    digit_stream,
    estimate_E_prefix,
    estimate_E_prefix_series,
    estimate_Y0,
    pair_indicator,
    sample_zp,
    slln_report,
    zero_pair_fraction,
)


def test_targets():
    assert E_prefix_target(3, 1) == pytest.approx(8 / 9)
    assert E_prefix_target(3, 10) == pytest.approx((8 / 9) ** 10)
    assert abs(E_prefix_target(3, 10) - 0.3079) < 1e-3
    assert E_prefix_target(2, 1) == pytest.approx(3 / 4)


def test_digit_stream_deterministic_and_in_range():
    p = 5
    a = [d for d, _ in zip(digit_stream(7, 3, p), range(40))]
    b = [d for d, _ in zip(digit_stream(7, 3, p), range(40))]
    assert a == b
    assert all(0 <= d < p for d in a)
    c = [d for d, _ in zip(digit_stream(8, 3, p), range(40))]
    assert a != c  # different seed, different draw


def test_sample_zp():
    x = sample_zp(11, 0, 5, 32)
    y = sample_zp(11, 0, 5, 32)
    assert x.render() == y.render()
    assert x.abs_precision == 32
    stream = [d for d, _ in zip(digit_stream(11, 0, 5), range(32))]
    assert [x.digit(i) for i in range(32)] == stream


def test_pair_statistics_helpers():
    digits = [0, 0, 1, 2, 0, 0]
    assert pair_indicator(digits, 0) == 1
    assert pair_indicator(digits, 1) == 0
    assert zero_pair_fraction(digits, 3) == pytest.approx(2 / 3)
    with pytest.raises(DomainError):
        zero_pair_fraction(digits, 0)


def test_estimates_reproducible_bit_identical():
    a = estimate_E_prefix_series(3, 10, 4000, seed=42)
    b = estimate_E_prefix_series(3, 10, 4000, seed=42)
    assert [r.to_json() for r in a] == [r.to_json() for r in b]
    assert estimate_Y0(2, 4000, 9).to_json() == estimate_Y0(2, 4000, 9).to_json()


def test_estimates_close_to_targets():
    for p in (2, 3):
        r = estimate_Y0(p, 20_000, seed=1)
        assert r.within(4.0)
        series = estimate_E_prefix_series(p, 10, 20_000, seed=1)
        assert all(s.within(4.0) for s in series)
        # one-pass estimates are monotone nonincreasing in k
        ests = [s.estimate for s in series]
        assert all(a >= b for a, b in zip(ests, ests[1:]))


def test_single_k_matches_series():
    r = estimate_E_prefix(3, 4, 2000, seed=5)
    s = estimate_E_prefix_series(3, 4, 2000, seed=5)[3]
    assert r.estimate == s.estimate
    assert r.extras["k"] == 4


def test_slln_report():
    r = slln_report(3, 50, 2000, seed=2)
    assert r.statistic == "slln"
    assert abs(r.estimate - 1 / 9) <= 4 * r.stderr
    assert math.isfinite(r.z_score)


def test_report_json_schema():
    import json
    doc = json.loads(estimate_Y0(3, 500, 0).to_json())
    assert doc["schema"] == 1
    assert {"prime", "samples", "seed", "estimate", "stderr",
            "target", "z_score"} <= set(doc)


def test_input_validation():
    with pytest.raises(DomainError):
        estimate_Y0(3, 0, 0)
    with pytest.raises(DomainError):
        estimate_E_prefix_series(3, 0, 10, 0)
    with pytest.raises(DomainError):
        slln_report(3, 0, 10, 0)
