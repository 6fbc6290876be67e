#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import numpy as np
import pytest

from sbmlab.detect import (
    DetectionOptions,
    EmptyClusterError,
    accuracy,
    confusion_matrix,
    eigenvector_overlap,
    kmeans_labels,
    sign_labels,
    spectral_partition_general,
    spectral_partition_q2,
)
from sbmlab.graphs import Graph, Partition, make_planted_partition
from sbmlab.graphs import sample_graph
from sbmlab.linalg import modularity_er_operator
from sbmlab.theory import alpha_squared, expected_accuracy


def _instance(n, q, cin, cout, seed):
    params, truth = make_planted_partition(n, q, cin, cout)
    return truth, sample_graph(params, truth, seed)


def test_accuracy_examples():
    truth = Partition([0, 0, 1, 1], 2)
    assert accuracy(Partition([1, 1, 0, 0], 2), truth) == 1.0
    assert accuracy(Partition([0, 1, 0, 1], 2), truth) == 0.5
    assert accuracy(truth, truth) == 1.0
    assert confusion_matrix(truth, truth).tolist() == [[2, 0], [0, 2]]


def test_accuracy_permutation_invariant():
    rng = np.random.default_rng(0)
    truth = Partition(rng.integers(0, 4, size=200), 4)
    inferred = Partition(rng.integers(0, 4, size=200), 4)
    score = accuracy(inferred, truth)
    assert score >= 0.25
    for permutation in ([1, 0, 3, 2], [3, 2, 1, 0], [2, 0, 1, 3]):
        assert accuracy(inferred.relabel(permutation), truth) == score


def test_accuracy_rejects_mismatch():
    with pytest.raises(ValueError):
        accuracy(Partition([0, 1], 2), Partition([0, 1, 1], 2))
    with pytest.raises(ValueError):
        accuracy(Partition([0, 1], 2), Partition([0, 1], 3))
    with pytest.raises(ValueError):
        accuracy(Partition(range(9), 9), Partition(range(9), 9))


def test_sign_labels_zero_goes_to_group_zero():
    assert sign_labels(np.array([0.5, 0.0, -0.1])).tolist() == [0, 0, 1]


def test_q2_detection_above_threshold():
    truth, graph = _instance(10000, 2, 12.0, 4.0, seed=42)
    result = spectral_partition_q2(graph, DetectionOptions(seed=42))
    theory = expected_accuracy(12.0, 4.0)
    assert abs(accuracy(result.labels, truth) - theory) <= 0.05
    assert result.detected
    assert result.leading_eigenvalue > result.band_edge_estimate
    assert result.spectrum.converged
    overlap = eigenvector_overlap(result.spectrum.eigenvectors[:, 0], truth)
    assert overlap == pytest.approx(alpha_squared(12.0, 4.0), abs=0.1)


def test_q2_detection_below_threshold():
    truth, graph = _instance(10000, 2, 8.0, 8.0, seed=43)
    result = spectral_partition_q2(graph, DetectionOptions(seed=43))
    assert accuracy(result.labels, truth) <= 0.55
    assert not result.detected


def test_q2_report():
    truth, graph = _instance(2000, 2, 20.0, 2.0, seed=44)
    result = spectral_partition_q2(graph)
    report = result.to_report(accuracy=accuracy(result.labels, truth))
    assert sorted(report) == [
        "accuracy",
        "band_edge_estimate",
        "detected",
        "iterations",
        "leading_eigenvalue",
    ]
    assert report["accuracy"] > 0.95
    assert "accuracy" not in result.to_report()


def test_sign_flip_invariance():
    truth, graph = _instance(2000, 2, 20.0, 2.0, seed=45)
    result = spectral_partition_q2(graph)
    flipped = Partition(sign_labels(-result.spectrum.eigenvectors[:, 0]), 2)
    assert accuracy(flipped, truth) == pytest.approx(
        accuracy(result.labels, truth), abs=1.0 / truth.n
    )


def test_detection_rejects_empty_graph():
    with pytest.raises(ValueError):
        spectral_partition_q2(Graph.empty(100))


def test_general_reduces_to_sign_rule():
    _, graph = _instance(1000, 2, 16.0, 4.0, seed=46)
    options = DetectionOptions(seed=3)
    general = spectral_partition_general(graph, 2, options)
    two_group = spectral_partition_q2(graph, options)
    assert general.labels == two_group.labels
    assert general.leading_eigenvalue == two_group.leading_eigenvalue


def test_general_three_groups():
    truth, graph = _instance(1200, 3, 30.0, 3.0, seed=47)
    result = spectral_partition_general(graph, 3, DetectionOptions(seed=5))
    assert accuracy(result.labels, truth) > 0.9
    assert result.detected
    assert result.spectrum.eigenvalues.size == 3


def test_general_configuration_null_model():
    truth, graph = _instance(1200, 3, 30.0, 3.0, seed=48)
    options = DetectionOptions(seed=6, null_model="configuration")
    result = spectral_partition_general(graph, 3, options)
    assert accuracy(result.labels, truth) > 0.9


def test_kmeans_labels_separated_clusters():
    rng = np.random.default_rng(1)
    centers = np.array([[0.0, 0.0], [5.0, 0.0], [0.0, 5.0]])
    points = np.concatenate(
        [c + 0.1 * rng.standard_normal((30, 2)) for c in centers]
    )
    labels = kmeans_labels(points, 3, restarts=5, retries=1, seed=2)
    truth = Partition(np.repeat(np.arange(3), 30), 3)
    assert accuracy(Partition(labels, 3), truth) == 1.0
    again = kmeans_labels(points, 3, restarts=5, retries=1, seed=2)
    assert np.array_equal(labels, again)


def test_kmeans_labels_empty_clusters(monkeypatch):
    def always_empty(points, k, **kwargs):
        return np.zeros((k, points.shape[1])), np.zeros(
            points.shape[0], dtype=np.int64
        )

    monkeypatch.setattr(
        "sbmlab.detect.spectral.kmeans2", always_empty
    )
    with pytest.raises(EmptyClusterError):
        kmeans_labels(np.ones((10, 2)), 3, restarts=2, retries=1, seed=0)


def test_options_from_config():
    from sbmlab.config import get_config

    config = get_config(opts=["DETECT.NULL_MODEL", "configuration"])
    options = DetectionOptions.from_config(config)
    assert options.null_model == "configuration"
    assert options.seed == config.SEED
    assert DetectionOptions.from_config(config, seed=9).seed == 9


def _clique_edges(vertices):
    vertices = list(vertices)
    return [
        (u, v) for i, u in enumerate(vertices) for v in vertices[i + 1 :]
    ]


def _max_modularity_bipartition(graph):
    # every split with vertex 0 in group 0, scored by s^T B s
    n = graph.n
    modularity = modularity_er_operator(graph).matmat(np.eye(n))
    best_score, best_code = -np.inf, None
    chunk = 1 << 15
    for start in range(0, 1 << (n - 1), chunk):
        codes = np.arange(start, start + chunk, dtype=np.int64)
        bits = (codes[:, None] >> np.arange(n - 1)) & 1
        signs = np.ones((codes.size, n))
        signs[:, 1:] = 1.0 - 2.0 * bits
        scores = np.sum((signs @ modularity) * signs, axis=1)
        top = int(np.argmax(scores))
        if scores[top] > best_score:
            best_score, best_code = scores[top], codes[top]
    bits = (best_code >> np.arange(n - 1)) & 1
    return Partition(np.concatenate([[0], bits]), 2)


def test_two_joined_cliques_recovered_exactly():
    edges = (
        _clique_edges(range(10))
        + _clique_edges(range(10, 20))
        + [(9, 10)]
    )
    graph = Graph.from_edges(20, np.array(edges))
    truth = Partition(np.repeat([0, 1], 10), 2)
    best = _max_modularity_bipartition(graph)
    assert accuracy(best, truth) == 1.0
    result = spectral_partition_q2(graph, DetectionOptions(seed=0))
    assert accuracy(result.labels, best) == 1.0
    assert result.detected


def test_four_disjoint_cliques_recovered_exactly():
    edges = []
    for group in range(4):
        edges += _clique_edges(range(8 * group, 8 * group + 8))
    graph = Graph.from_edges(32, np.array(edges))
    truth = Partition(np.repeat(np.arange(4), 8), 4)
    result = spectral_partition_general(graph, 4, DetectionOptions(seed=1))
    assert accuracy(result.labels, truth) == 1.0
    assert result.leading_eigenvalue == pytest.approx(7.0)


@pytest.mark.parametrize("seed", range(10))
def test_four_groups_far_above_threshold(seed):
    truth, graph = _instance(2048, 4, 48.0, 8.0, seed=100 + seed)
    result = spectral_partition_general(
        graph, 4, DetectionOptions(seed=seed)
    )
    assert accuracy(result.labels, truth) > 0.95
    assert result.detected


@pytest.mark.parametrize("q", [2, 3, 4])
def test_accuracy_at_least_chance(q):
    rng = np.random.default_rng(q)
    balanced = np.repeat(np.arange(q), 12)
    for _ in range(200):
        truth = Partition(rng.permutation(balanced), q)
        inferred = Partition(rng.permutation(balanced), q)
        assert accuracy(inferred, truth) >= 1.0 / q
