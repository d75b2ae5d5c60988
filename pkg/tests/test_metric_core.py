import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from hausclust.metric_core import (
    DistanceMatrix,
    PriceTable,
    ReturnSeries,
    build_distance_matrix,
    check_metric_axioms,
    correlation,
    correlation_distance,
    euclidean_distance,
    log_returns,
)
from oracles import hp_euclidean

finite = st.floats(-1e3, 1e3, allow_nan=False)


def test_euclidean_345():
    assert euclidean_distance((0, 0), (3, 4)) == 5.0


def test_euclidean_identity():
    assert euclidean_distance((1.25, -7.5), (1.25, -7.5)) == 0.0


@given(st.integers(1, 6).flatmap(lambda k: st.tuples(st.lists(finite, min_size=k, max_size=k),
                                                    st.lists(finite, min_size=k, max_size=k))))
def test_euclidean_matches_high_precision(pq):
    p, q = pq
    assert euclidean_distance(p, q) == pytest.approx(hp_euclidean(p, q), rel=1e-14, abs=1e-300)
    assert euclidean_distance(p, q) == euclidean_distance(q, p)


def test_euclidean_dimension_mismatch():
    with pytest.raises(ValueError):
        euclidean_distance((0, 0), (0, 0, 0))


def test_log_returns_examples():
    assert list(log_returns([100, 100, 100]).values) == [0.0, 0.0]
    assert log_returns([1, math.e]).values[0] == pytest.approx(1.0, abs=1e-15)
    # ln(1.1) evaluated at 40 digits
    assert log_returns([100, 110]).values[0] == pytest.approx(0.09531017980432486, rel=1e-15)


@pytest.mark.parametrize("prices", [[100], [100, 0, 5], [1, -2], [1, float("nan")]])
def test_log_returns_rejects(prices):
    with pytest.raises(ValueError):
        log_returns(prices)


def test_correlation_trivial(rng):
    x = rng.standard_normal(50)
    assert correlation(x, x) == 1.0
    assert correlation(x, -x) == -1.0
    assert correlation_distance(correlation(x, x)) == 0.0
    assert correlation_distance(correlation(x, -x)) == 2.0
    assert correlation(x, 3.0 * x + 7.0) == pytest.approx(1.0, abs=1e-14)
    assert -1.0 <= correlation(x, rng.standard_normal(50)) <= 1.0


def test_correlation_uses_population_moments(rng):
    x, y = rng.standard_normal((2, 40))
    mx, my = x.mean(), y.mean()
    cov = np.mean((x - mx) * (y - my))
    sx = math.sqrt(np.mean(x * x) - mx * mx)
    sy = math.sqrt(np.mean(y * y) - my * my)
    assert correlation(x, y) == pytest.approx(cov / (sx * sy), rel=1e-12)
    assert correlation(x, y) == pytest.approx(np.corrcoef(x, y)[0, 1], rel=1e-12)


def test_correlation_errors():
    with pytest.raises(ValueError, match="length"):
        correlation([1, 2, 3], [1, 2])
    with pytest.raises(ValueError, match="variance"):
        correlation([1, 1, 1], [1, 2, 3])


paired = st.integers(3, 30).flatmap(
    lambda k: st.tuples(st.lists(finite, min_size=k, max_size=k), st.lists(finite, min_size=k, max_size=k))
)


@given(paired, st.floats(0.01, 100), st.floats(-100, 100))
def test_correlation_affine_invariance(xy, a, b):
    x, y = map(np.array, xy)
    # skip near-constant series, where correlation is ill-conditioned
    if np.std(x) < 1e-3 or np.std(y) < 1e-3:
        return
    assert abs(correlation(a * x + b, y) - correlation(x, y)) <= 1e-9
    assert abs(correlation(x, a * y + b) - correlation(x, y)) <= 1e-9


def test_correlation_distance_values():
    assert correlation_distance(1.0) == 0.0
    assert correlation_distance(-1.0) == 2.0
    assert correlation_distance(0.0) == pytest.approx(1.4142135623730951, rel=1e-16)
    with pytest.raises(ValueError):
        correlation_distance(1.0000001)


@given(st.floats(-1, 1), st.floats(-1, 1))
def test_correlation_distance_monotone(r1, r2):
    if r1 < r2:
        assert correlation_distance(r1) >= correlation_distance(r2)


def test_distance_matrix_single_point():
    D = build_distance_matrix([[1.0, 2.0]])
    assert D.d.tolist() == [[0.0]]


def test_distance_matrix_identical_series(rng):
    x = rng.standard_normal(20)
    D = build_distance_matrix([ReturnSeries(x, "a"), ReturnSeries(x.copy(), "b")], "correlation")
    assert D.d[0, 1] == 0.0
    assert D.labels == ["a", "b"]


def test_distance_matrix_30_series_pairwise(rng):
    series = [ReturnSeries(v, f"s{i}") for i, v in enumerate(rng.standard_normal((30, 252)))]
    D = build_distance_matrix(series, "correlation")
    assert D.d.shape == (30, 30)
    assert np.array_equal(D.d, D.d.T)
    assert D.d.min() >= 0 and D.d.max() <= 2
    for i in range(30):
        for j in range(30):
            if i != j:
                expect = math.sqrt(2 * (1 - np.corrcoef(series[i].values, series[j].values)[0, 1]))
                assert D.d[i, j] == pytest.approx(expect, abs=1e-12)


def test_euclidean_matrix_matches_pairs(rng):
    pts = rng.normal(size=(25, 3))
    D = build_distance_matrix(pts)
    assert np.all(np.diag(D.d) == 0)
    assert np.array_equal(D.d, D.d.T)
    for i in range(25):
        for j in range(25):
            assert D.d[i, j] == pytest.approx(math.dist(pts[i], pts[j]), rel=1e-14, abs=0)


def test_build_propagates_errors():
    with pytest.raises(ValueError, match="variance"):
        build_distance_matrix([[1, 2, 3], [5, 5, 5]], "correlation")
    with pytest.raises(ValueError):
        build_distance_matrix([[1, 2], [3]], "euclidean")
    with pytest.raises(ValueError):
        build_distance_matrix([[1, 2]], "manhattan")


@pytest.mark.parametrize("bad", [
    [[0, 1], [2, 0]],
    [[0, -1], [-1, 0]],
    [[1, 1], [1, 0]],
    [[0, np.inf], [np.inf, 0]],
    [[0, 1, 2]],
])
def test_distance_matrix_rejects(bad):
    with pytest.raises(ValueError):
        DistanceMatrix(np.array(bad, dtype=float))


def test_axioms_clean_on_random_inputs(rng):
    assert check_metric_axioms(build_distance_matrix(rng.normal(size=(30, 2))), 1e-9).ok
    series = rng.standard_normal((20, 60))
    assert check_metric_axioms(build_distance_matrix(series, "correlation"), 1e-9).ok


def test_axioms_flag_triangle():
    d = np.array([[0, 5, 1], [5, 0, 1], [1, 1, 0]], dtype=float)
    rep = check_metric_axioms(DistanceMatrix(d), 1e-9)
    assert (0, 1, 2) in rep.triangle
    assert not rep.ok


def test_axioms_brute_triple_scan(rng):
    d = rng.uniform(0.1, 1, (9, 9))
    d = np.triu(d, 1)
    d = d + d.T
    rep = check_metric_axioms(d, 1e-9)
    expect = sorted(
        (i, j, k)
        for i in range(9) for j in range(9) for k in range(9)
        if len({i, j, k}) == 3 and d[i, j] > d[i, k] + d[k, j] + 1e-9
    )
    assert rep.triangle == expect


def test_axioms_flag_pseudometric_and_asymmetry():
    d = np.array([[0, 0, 1], [0, 0, 1], [1, 1.5, 0]], dtype=float)
    rep = check_metric_axioms(d)
    assert rep.zero_distance == [(0, 1)]
    assert rep.asymmetric == [(1, 2)]
    assert not rep.is_pseudometric


def test_price_table_validation():
    with pytest.raises(ValueError, match="'B'"):
        PriceTable(["A", "B"], ["d1", "d2"], [[1, 2], [1, 0]])
    t = PriceTable(["A"], ["d1", "d2", "d3"], [[1], [2], [4]])
    assert_allclose(t.returns()[0].values, [math.log(2)] * 2)
