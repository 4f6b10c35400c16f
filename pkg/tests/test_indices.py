"""Spectral index extraction and streaming moment statistics."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from specgap import eigen
from specgap.graphs import complete, cycle, path, star
from specgap.indices import (
    INDEX_NAMES,
    WITNESS_CAP,
    DegenerateSpectrumError,
    IndexStats,
    InsufficientDataError,
    compute_indices,
    indices_batch,
    stats_merge,
)

PHI = (1.0 + math.sqrt(5.0)) / 2.0


def test_complete_graph_indices():
    idx = compute_indices(eigen.spectrum(complete(4)))
    assert idx.lambda_max == pytest.approx(3.0)
    assert idx.lambda_min == pytest.approx(-1.0)
    assert idx.lambda_plus == pytest.approx(3.0)
    assert idx.lambda_minus == pytest.approx(-1.0)
    assert idx.gap == pytest.approx(4.0)
    assert idx.ind == pytest.approx(3.0)
    assert idx.power == pytest.approx(6.0)


def test_path_indices():
    idx = compute_indices(eigen.spectrum(path(4)))
    assert idx.lambda_plus == pytest.approx(PHI - 1.0)
    assert idx.lambda_minus == pytest.approx(1.0 - PHI)
    assert idx.gap == pytest.approx(2.0 * PHI - 2.0)
    assert idx.ind == pytest.approx(PHI - 1.0)
    assert idx.power == pytest.approx(2.0 * math.sqrt(5.0))


def test_star_indices():
    # K_{1,4}: spectrum {2, 0, 0, 0, -2}
    idx = compute_indices(eigen.spectrum(star(5)))
    assert idx.gap == pytest.approx(4.0)
    assert idx.ind == pytest.approx(2.0)
    assert idx.power == pytest.approx(4.0)


def test_by_name():
    idx = compute_indices(eigen.spectrum(cycle(4)))
    assert idx.by_name("gap") == idx.gap
    assert idx.by_name("pow") == idx.power
    assert idx.by_name("lambda_max") == idx.lambda_max
    with pytest.raises(KeyError):
        idx.by_name("nope")
    assert set(INDEX_NAMES) == {"lambda_max", "lambda_min", "gap", "ind", "pow"}


def test_degenerate_spectra():
    with pytest.raises(DegenerateSpectrumError):
        compute_indices([0.0])
    with pytest.raises(DegenerateSpectrumError):
        compute_indices([1.0, 0.0, 0.0])
    with pytest.raises(DegenerateSpectrumError):
        compute_indices([0.0, -1.0])


def test_zero_tol_controls_sign_classification():
    vals = [1.0, 1e-12, -1.0]
    idx = compute_indices(vals)
    assert idx.lambda_plus == pytest.approx(1.0)
    # with a tolerance below 1e-12 the tiny value becomes lambda_plus
    idx = compute_indices(vals, zero_tol=1e-13)
    assert idx.lambda_plus == pytest.approx(1e-12)


def test_indices_accept_unsorted_input():
    a = compute_indices([-1.0, 3.0, -1.0, -1.0])
    b = compute_indices([3.0, -1.0, -1.0, -1.0])
    assert a == b


def test_batch_matches_scalar(census5):
    vals = np.stack([eigen.spectrum(g) for g in census5])
    out = indices_batch(vals, eigen.default_zero_tol(5))
    for i, g in enumerate(census5):
        idx = compute_indices(vals[i])
        for name in INDEX_NAMES:
            assert out[name][i] == pytest.approx(idx.by_name(name), abs=1e-12)


# ---------------------------------------------------------------------------
# streaming statistics


def hand_moments(values):
    """Two-pass reference: mean, Bessel std, population skew and kurtosis."""
    v = np.asarray(values, dtype=float)
    n = v.size
    mean = v.mean()
    d = v - mean
    m2 = float((d ** 2).sum())
    m3 = float((d ** 3).sum())
    m4 = float((d ** 4).sum())
    std = math.sqrt(m2 / (n - 1)) if n > 1 else 0.0
    skew = (m3 / n) / (m2 / n) ** 1.5
    kurt = (m4 / n) / (m2 / n) ** 2
    return mean, std, skew, kurt


def test_two_value_stream():
    # order-3 census lambda_max values: sqrt(2) for the path, 2 for K3
    s = IndexStats()
    s.update(math.sqrt(2.0), "path")
    s.update(2.0, "complete")
    assert s.mean == pytest.approx((math.sqrt(2.0) + 2.0) / 2.0)
    assert s.std() == pytest.approx((2.0 - math.sqrt(2.0)) / math.sqrt(2.0))
    assert s.skewness() == pytest.approx(0.0, abs=1e-12)
    assert s.kurtosis() == pytest.approx(1.0)
    assert s.minimum == pytest.approx(math.sqrt(2.0))
    assert s.maximum == pytest.approx(2.0)
    out = s.finalize()
    assert out.min_witnesses == ("path",)
    assert out.max_witnesses == ("complete",)


def test_single_and_empty_stream():
    s = IndexStats()
    with pytest.raises(InsufficientDataError):
        s.std()
    s.update(5.0)
    assert s.std() == 0.0
    with pytest.raises(InsufficientDataError):
        s.skewness()
    with pytest.raises(InsufficientDataError):
        s.kurtosis()
    out = s.finalize()
    assert out.count == 1 and out.std == 0.0
    assert out.skewness is None and out.kurtosis is None


def test_constant_stream_has_no_shape():
    s = IndexStats()
    for _ in range(5):
        s.update(2.5)
    assert s.std() == 0.0
    with pytest.raises(InsufficientDataError):
        s.skewness()


def test_stream_matches_two_pass():
    rng = np.random.default_rng(42)
    values = rng.normal(3.0, 1.5, size=257)
    s = IndexStats()
    for v in values:
        s.update(float(v))
    mean, std, skew, kurt = hand_moments(values)
    assert s.mean == pytest.approx(mean, rel=1e-12)
    assert s.std() == pytest.approx(std, rel=1e-10)
    assert s.skewness() == pytest.approx(skew, rel=1e-9)
    assert s.kurtosis() == pytest.approx(kurt, rel=1e-9)


def test_update_many_matches_update_loop():
    rng = np.random.default_rng(3)
    values = rng.uniform(-4.0, 9.0, size=1000)
    one = IndexStats()
    for v in values:
        one.update(float(v))
    bulk = IndexStats()
    bulk.update_many(values[:400])
    bulk.update_many(values[400:])
    assert bulk.count == one.count
    assert bulk.mean == pytest.approx(one.mean, rel=1e-12)
    assert bulk.std() == pytest.approx(one.std(), rel=1e-10)
    assert bulk.skewness() == pytest.approx(one.skewness(), rel=1e-8)
    assert bulk.kurtosis() == pytest.approx(one.kurtosis(), rel=1e-8)


def test_merge_matches_single_pass():
    rng = np.random.default_rng(11)
    values = rng.normal(0.0, 2.0, size=10_000)
    whole = IndexStats()
    whole.update_many(values)
    parts = []
    for lo in range(0, 10_000, 1000):
        s = IndexStats()
        s.update_many(values[lo:lo + 1000])
        parts.append(s)
    merged = parts[0]
    for s in parts[1:]:
        merged = stats_merge(merged, s)
    assert merged.count == whole.count
    assert merged.mean == pytest.approx(whole.mean, abs=1e-9)
    assert merged.std() == pytest.approx(whole.std(), abs=1e-9)
    assert merged.skewness() == pytest.approx(whole.skewness(), abs=1e-9)
    assert merged.kurtosis() == pytest.approx(whole.kurtosis(), abs=1e-9)
    assert merged.minimum == whole.minimum
    assert merged.maximum == whole.maximum


def test_merge_is_order_insensitive():
    a = IndexStats()
    a.update_many(np.array([1.0, 2.0, 3.0]), ["a1", "a2", "a3"])
    b = IndexStats()
    b.update_many(np.array([4.0, 5.0]), ["b1", "b2"])
    ab = stats_merge(a, b)
    ba = stats_merge(b, a)
    assert ab.mean == pytest.approx(ba.mean, rel=1e-14)
    assert ab.finalize().min_witnesses == ba.finalize().min_witnesses
    assert ab.finalize().max_witnesses == ba.finalize().max_witnesses


def test_witness_cap_and_overflow():
    s = IndexStats()
    for i in range(WITNESS_CAP + 4):
        s.update(1.0, f"g{i:02d}")
    out = s.finalize()
    assert len(out.min_witnesses) == WITNESS_CAP
    assert out.min_overflow == 4
    assert out.max_overflow == 4
    # retained labels are the lexicographically smallest, independent of order
    assert out.min_witnesses == tuple(f"g{i:02d}" for i in range(WITNESS_CAP))


def test_witness_reset_on_new_extreme():
    s = IndexStats()
    for i in range(20):
        s.update(5.0, f"hi{i}")
    s.update(1.0, "lone")
    out = s.finalize()
    assert out.min_witnesses == ("lone",)
    assert out.min_overflow == 0
    assert out.minimum == 1.0


def test_witnesses_within_band_tie():
    s = IndexStats()
    s.update(1.0, "exact")
    s.update(1.0 + 1e-10, "close")   # inside the 1e-9 tie band
    s.update(1.1, "far")
    out = s.finalize()
    assert set(out.min_witnesses) == {"exact", "close"}


def test_update_many_witness_callable():
    labels = ["a", "b", "c", "d"]
    s = IndexStats()
    s.update_many(np.array([3.0, 1.0, 2.0, 1.0]), labels.__getitem__)
    out = s.finalize()
    assert set(out.min_witnesses) == {"b", "d"}
    assert out.max_witnesses == ("a",)


@settings(max_examples=60)
@given(st.lists(st.floats(-50, 50), min_size=2, max_size=40),
       st.integers(1, 39))
def test_merge_property(values, cut):
    cut = min(cut, len(values) - 1)
    a = IndexStats()
    a.update_many(np.array(values[:cut]))
    b = IndexStats()
    b.update_many(np.array(values[cut:]))
    merged = stats_merge(a, b)
    whole = IndexStats()
    whole.update_many(np.array(values))
    assert merged.count == whole.count
    assert merged.mean == pytest.approx(whole.mean, rel=1e-9, abs=1e-9)
    assert merged.m2 == pytest.approx(whole.m2, rel=1e-8, abs=1e-7)
