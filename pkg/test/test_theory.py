#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import math

import numpy as np
import pytest
from scipy.integrate import quad

from sbmlab.graphs import make_planted_partition
from sbmlab.theory import (
    SingularityError,
    UnsupportedRegimeError,
    accuracy_from_alpha_squared,
    alpha_squared,
    band_edge,
    bulk_radius,
    catalan,
    detectability_margin,
    expected_accuracy,
    order_parameter,
    predict,
    semicircle_cdf,
    semicircle_density,
    stieltjes_trace,
    trace_moment,
    z1_theory,
    z2_adjacency_theory,
)


def test_closed_forms_at_reference_point():
    assert band_edge(12.0, 4.0) == pytest.approx(math.sqrt(32.0))
    assert z1_theory(12.0, 4.0) == pytest.approx(6.0)
    assert z1_theory(24.0, 8.0) == pytest.approx(10.0)
    assert z2_adjacency_theory(24.0, 8.0) == pytest.approx(17.0)
    assert alpha_squared(12.0, 4.0) == pytest.approx(0.5)
    assert expected_accuracy(12.0, 4.0) == pytest.approx(
        0.841344746, abs=1e-9
    )


def test_z1_singular_without_structure():
    with pytest.raises(SingularityError):
        z1_theory(8.0, 8.0)


def test_tangency_at_threshold():
    total = 16.0
    difference = math.sqrt(2.0 * total)
    cin, cout = (total + difference) / 2, (total - difference) / 2
    assert z1_theory(cin, cout) == pytest.approx(
        band_edge(cin, cout), abs=1e-12
    )
    assert alpha_squared(cin, cout) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize(
    "cin,cout", [(12.0, 4.0), (8.0, 8.0), (20.0, 1.0), (5.5, 2.5)]
)
def test_two_group_margin_matches_band_edge_condition(cin, cout):
    assert detectability_margin(2, cin, cout) == pytest.approx(
        (cin - cout) - band_edge(cin, cout)
    )


def test_margin_four_groups():
    # cin + 3 cout = 64, threshold at cin - cout = 4 sqrt(16) = 16
    assert detectability_margin(4, 28.0, 12.0) == pytest.approx(0.0)
    assert detectability_margin(4, 40.0, 8.0) > 0
    assert detectability_margin(4, 22.0, 14.0) < 0


@pytest.mark.parametrize(
    "fn,args",
    [
        (detectability_margin, (2, 4.0, 8.0)),
        (alpha_squared, (4.0, 8.0)),
        (expected_accuracy, (1.0, 2.0)),
    ],
)
def test_disassortative_rejected(fn, args):
    with pytest.raises(UnsupportedRegimeError):
        fn(*args)


def test_margin_rejects_bad_inputs():
    with pytest.raises(ValueError):
        detectability_margin(1, 8.0, 4.0)
    with pytest.raises(ValueError):
        detectability_margin(2, 8.0, -1.0)


def test_alpha_squared_range_and_accuracy_bounds():
    assert alpha_squared(8.0, 8.0) == 0.0
    assert alpha_squared(9.0, 7.0) == 0.0
    for cin in np.linspace(8.0, 16.0, 17):
        value = alpha_squared(cin, 16.0 - cin)
        assert 0.0 <= value < 1.0
    assert accuracy_from_alpha_squared(0.0) == 0.5
    assert accuracy_from_alpha_squared(1.0) == 1.0
    assert expected_accuracy(8.0, 8.0) == 0.5
    assert order_parameter(0.75) == pytest.approx(0.25)


def test_accuracy_monotone_in_difference():
    total = 16.0
    differences = np.linspace(0.0, 16.0, 65)
    accuracies = [
        expected_accuracy((total + d) / 2, (total - d) / 2)
        for d in differences
    ]
    assert np.all(np.diff(accuracies) >= 0)
    assert accuracies[0] == 0.5
    assert accuracies[-1] > 0.99


def test_semicircle_density():
    edge = band_edge(6.0, 2.0)
    assert semicircle_density(edge + 0.1, 6.0, 2.0) == 0.0
    assert semicircle_density(0.0, 6.0, 2.0, n=100.0) == pytest.approx(
        100.0 * math.sqrt(16.0) / (math.pi * 8.0)
    )
    values = semicircle_density(np.array([-edge, 0.0, edge]), 6.0, 2.0)
    assert values.shape == (3,)
    integral, _ = quad(
        lambda z: semicircle_density(z, 6.0, 2.0, normalized=True),
        -edge,
        edge,
    )
    assert integral == pytest.approx(1.0, abs=1e-8)
    with pytest.raises(ValueError):
        semicircle_density(0.0, 0.0, 0.0)


def test_semicircle_cdf():
    edge = band_edge(6.0, 2.0)
    assert semicircle_cdf(-edge, 6.0, 2.0) == pytest.approx(0.0)
    assert semicircle_cdf(0.0, 6.0, 2.0) == pytest.approx(0.5)
    assert semicircle_cdf(2.0 * edge, 6.0, 2.0) == pytest.approx(1.0)
    half, _ = quad(
        lambda z: semicircle_density(z, 6.0, 2.0, normalized=True),
        -edge,
        1.0,
    )
    assert semicircle_cdf(1.0, 6.0, 2.0) == pytest.approx(half, abs=1e-8)


def test_bulk_radius_for_several_groups():
    assert bulk_radius(2, 12.0, 4.0) == pytest.approx(band_edge(12.0, 4.0))
    assert bulk_radius(4, 60.0, 4.0) == pytest.approx(2.0 * math.sqrt(18.0))
    assert bulk_radius(3, 9.0, 0.0) == pytest.approx(2.0 * math.sqrt(3.0))
    with pytest.raises(ValueError):
        bulk_radius(1, 12.0, 4.0)
    with pytest.raises(ValueError):
        bulk_radius(4, -1.0, 4.0)


def test_semicircle_with_several_groups():
    radius = bulk_radius(4, 60.0, 4.0)
    assert semicircle_density(radius + 0.1, 60.0, 4.0, q=4) == 0.0
    assert semicircle_density(0.0, 60.0, 4.0, n=800.0, q=4) == pytest.approx(
        800.0 * 2.0 / (math.pi * radius)
    )
    integral, _ = quad(
        lambda z: semicircle_density(z, 60.0, 4.0, normalized=True, q=4),
        -radius,
        radius,
    )
    assert integral == pytest.approx(1.0, abs=1e-8)
    assert semicircle_cdf(-radius, 60.0, 4.0, q=4) == pytest.approx(0.0)
    assert semicircle_cdf(0.0, 60.0, 4.0, q=4) == pytest.approx(0.5)
    assert semicircle_cdf(radius, 60.0, 4.0, q=4) == pytest.approx(1.0)
    assert semicircle_cdf(radius / 2, 60.0, 4.0, q=4) > semicircle_cdf(
        radius / 2, 60.0, 4.0
    )


def test_predict_band_edge_for_four_groups():
    params, _ = make_planted_partition(800, 4, 60.0, 4.0)
    expected = bulk_radius(4, 60.0, 4.0)
    assert predict(params).band_edge == pytest.approx(expected)


def test_stieltjes_trace():
    n, cin, cout = 1000.0, 6.0, 2.0
    assert stieltjes_trace(1e4, cin, cout, n) == pytest.approx(
        n / 1e4, rel=1e-6
    )
    z = 5.0
    integral, _ = quad(
        lambda x: semicircle_density(x, cin, cout, n=n) / (z - x),
        -band_edge(cin, cout),
        band_edge(cin, cout),
    )
    assert stieltjes_trace(z, cin, cout, n) == pytest.approx(
        integral, rel=1e-6
    )
    with pytest.raises(ValueError):
        stieltjes_trace(1.0, cin, cout, n)


def test_catalan():
    assert [catalan(m) for m in range(6)] == [1, 1, 2, 5, 14, 42]
    assert catalan(30) == 3814986502092304
    with pytest.raises(ValueError):
        catalan(-1)
    with pytest.raises(ValueError):
        catalan(31)


def test_trace_moment():
    assert trace_moment(0, 24.0, 8.0, 2000) == 2000.0
    assert trace_moment(2, 24.0, 8.0, 2000) == pytest.approx(1024000.0)
    assert trace_moment(3, 48.0, 16.0, 5000) == pytest.approx(
        5000 * 32.0 ** 3 * 5
    )


def test_predict_two_groups():
    params, _ = make_planted_partition(10000, 2, 12.0, 4.0)
    prediction = predict(params)
    assert prediction.z1 == pytest.approx(6.0)
    assert prediction.z2_adjacency == pytest.approx(9.0)
    assert prediction.band_edge == pytest.approx(math.sqrt(32.0))
    assert prediction.detectable
    assert prediction.flags == {}
    report = prediction.to_dict()
    assert report["expected_accuracy"] == pytest.approx(0.8413, abs=1e-4)


def test_predict_without_structure():
    params, _ = make_planted_partition(1000, 2, 8.0, 8.0)
    prediction = predict(params)
    assert prediction.z1 is None
    assert prediction.flags == {"z1": "undefined"}
    assert prediction.alpha_squared == 0.0
    assert prediction.expected_accuracy == 0.5
    assert not prediction.detectable


def test_predict_four_groups():
    params, _ = make_planted_partition(8192, 4, 40.0, 8.0)
    prediction = predict(params)
    assert prediction.band_edge == pytest.approx(2.0 * math.sqrt(16.0))
    assert prediction.detectability_margin == pytest.approx(16.0)
    assert prediction.detectable
    for field in ("z1", "z2_adjacency", "alpha_squared", "expected_accuracy"):
        assert getattr(prediction, field) is None
        assert prediction.flags[field] == "not_applicable"
