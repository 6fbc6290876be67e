#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Spectral modularity community detection.

For two groups the vertices are split by the signs of the leading
modularity eigenvector. For ``q`` groups the top ``q - 1`` eigenvectors
embed every vertex in ``R^(q-1)`` and the embedding is clustered with
k-means. In both cases the next eigenvalue stands in for the edge of the
continuous band, and the structure counts as detected when the outliers
clear it by a relative tolerance.
"""

from typing import Any, Dict, Optional

import attr
import numpy as np
from scipy.cluster.vq import ClusterError, kmeans2

from sbmlab.config import Config
from sbmlab.core.logging import logger
from sbmlab.core.utils import make_generator
from sbmlab.graphs.block_model import Partition
from sbmlab.graphs.graph import Graph
from sbmlab.linalg.eigensolvers import (
    DEFAULT_DENSE_FALLBACK,
    DEFAULT_TOL,
    SpectrumResult,
    extremal_eigenpairs,
)
from sbmlab.linalg.operators import make_modularity_operator


class EmptyClusterError(RuntimeError):
    r"""Raised when k-means keeps leaving a cluster empty."""


@attr.s(auto_attribs=True, kw_only=True)
class DetectionOptions:
    tol: float = DEFAULT_TOL
    max_iter: Optional[int] = None
    ncv: Optional[int] = None
    dense_fallback: int = DEFAULT_DENSE_FALLBACK
    seed: int = 0
    null_model: str = "erdos_renyi"
    separation_tolerance: float = 0.05
    kmeans_restarts: int = 10
    kmeans_retries: int = 3

    @classmethod
    def from_config(cls, config: Config, seed: Optional[int] = None):
        return cls(
            tol=config.SOLVER.TOL,
            max_iter=config.SOLVER.MAX_ITER,
            ncv=config.SOLVER.NCV,
            dense_fallback=config.SOLVER.DENSE_FALLBACK,
            seed=config.SEED if seed is None else seed,
            null_model=config.DETECT.NULL_MODEL,
            separation_tolerance=config.DETECT.SEPARATION_TOLERANCE,
            kmeans_restarts=config.DETECT.KMEANS_RESTARTS,
            kmeans_retries=config.DETECT.KMEANS_RETRIES,
        )


@attr.s(auto_attribs=True, kw_only=True, eq=False)
class DetectionResult:
    r"""Inferred groups plus the spectral evidence behind them.

    :property labels: inferred partition.
    :property leading_eigenvalue: largest modularity eigenvalue.
    :property band_edge_estimate: first eigenvalue past the outliers, the
        proxy for the edge of the continuous band.
    :property detected: whether the outliers are separated from the band.
    :property spectrum: solver output, for diagnostics.
    """

    labels: Partition
    leading_eigenvalue: float
    band_edge_estimate: float
    detected: bool
    spectrum: SpectrumResult

    def to_report(self, accuracy: Optional[float] = None) -> Dict[str, Any]:
        report: Dict[str, Any] = {
            "leading_eigenvalue": self.leading_eigenvalue,
            "band_edge_estimate": self.band_edge_estimate,
            "detected": self.detected,
            "iterations": self.spectrum.iterations,
        }
        if accuracy is not None:
            report["accuracy"] = accuracy
        return report


def is_separated(
    outlier: float, band_edge_estimate: float, tolerance: float
) -> bool:
    return outlier > band_edge_estimate + tolerance * abs(band_edge_estimate)


def sign_labels(vector: np.ndarray) -> np.ndarray:
    r"""Group 0 for non-negative entries (zeros included), group 1
    otherwise.
    """
    return np.where(vector >= 0.0, 0, 1).astype(np.int64)


def eigenvector_overlap(vector: np.ndarray, partition: Partition) -> float:
    r"""``(u^T v)^2`` between a unit vector and the two-group indicator
    vector; its large-``n`` value is alpha squared.
    """
    vector = np.asarray(vector, dtype=np.float64)
    vector = vector / np.linalg.norm(vector)
    return float(partition.indicator_vector() @ vector) ** 2


def _modularity_spectrum(
    graph: Graph, k: int, options: DetectionOptions
) -> SpectrumResult:
    if graph.m == 0:
        raise ValueError("community detection needs a graph with edges")
    op = make_modularity_operator(options.null_model, graph)
    return extremal_eigenpairs(
        op,
        k=k,
        tol=options.tol,
        max_iter=options.max_iter,
        seed=options.seed,
        ncv=options.ncv,
        dense_fallback=options.dense_fallback,
    )


def spectral_partition_q2(
    graph: Graph, options: Optional[DetectionOptions] = None
) -> DetectionResult:
    r"""Two-group split by the signs of the leading modularity eigenvector.

    :raise ValueError: the graph has no edges.
    :raise ConvergenceError: propagated from the eigensolver.
    """
    options = options or DetectionOptions()
    spectrum = _modularity_spectrum(graph, 2, options)
    leading, bulk = spectrum.eigenvalues[:2]
    return DetectionResult(
        labels=Partition(sign_labels(spectrum.eigenvectors[:, 0]), 2),
        leading_eigenvalue=float(leading),
        band_edge_estimate=float(bulk),
        detected=is_separated(leading, bulk, options.separation_tolerance),
        spectrum=spectrum,
    )


def _within_cluster_ss(
    points: np.ndarray, centroids: np.ndarray, labels: np.ndarray
) -> float:
    return float(np.sum((points - centroids[labels]) ** 2))


def kmeans_labels(
    points: np.ndarray, q: int, restarts: int, retries: int, seed: int
) -> np.ndarray:
    r"""Best of :p:`restarts` seeded k-means++ runs by within-cluster sum of
    squares. Runs that leave a cluster empty are discarded; when a whole
    round is discarded it is repeated with fresh seeds up to :p:`retries`
    times.
    """
    for attempt in range(retries + 1):
        best_score = np.inf
        best_labels = None
        for restart in range(restarts):
            rng = make_generator(seed, attempt, restart)
            try:
                centroids, labels = kmeans2(
                    points, q, minit="++", missing="raise", seed=rng
                )
            except ClusterError:
                continue
            if np.bincount(labels, minlength=q).min() == 0:
                continue
            score = _within_cluster_ss(points, centroids, labels)
            if score < best_score:
                best_score, best_labels = score, labels
        if best_labels is not None:
            return best_labels.astype(np.int64)
        logger.warning(
            "k-means left empty clusters in every restart "
            "(attempt {} of {})".format(attempt + 1, retries + 1)
        )
    raise EmptyClusterError(
        "k-means produced empty clusters after {} attempts".format(
            retries + 1
        )
    )


def spectral_partition_general(
    graph: Graph, q: int, options: Optional[DetectionOptions] = None
) -> DetectionResult:
    r"""``q``-group detection from the top ``q - 1`` modularity eigenvectors.

    With ``q = 2`` the embedding is one dimensional and the sign rule of
    :ref:`spectral_partition_q2` is used, so both give identical labels.

    :raise EmptyClusterError: k-means kept producing empty clusters.
    """
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    options = options or DetectionOptions()
    if q == 2:
        return spectral_partition_q2(graph, options)

    spectrum = _modularity_spectrum(graph, q, options)
    embedding = spectrum.eigenvectors[:, : q - 1]
    labels = kmeans_labels(
        embedding,
        q,
        options.kmeans_restarts,
        options.kmeans_retries,
        options.seed,
    )
    smallest_outlier = spectrum.eigenvalues[q - 2]
    bulk = spectrum.eigenvalues[q - 1]
    return DetectionResult(
        labels=Partition(labels, q),
        leading_eigenvalue=float(spectrum.eigenvalues[0]),
        band_edge_estimate=float(bulk),
        detected=is_separated(
            smallest_outlier, bulk, options.separation_tolerance
        ),
        spectrum=spectrum,
    )
