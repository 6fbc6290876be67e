#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Matrix-free symmetric operators over a :ref:`Graph`.

All operators follow the ``scipy.sparse.linalg.LinearOperator`` protocol,
so they plug directly into ARPACK and the trace estimators. Rank-one null
model terms are applied as outer products on the fly and never stored as
dense matrices.
"""

from typing import Optional

import numpy as np
from scipy.sparse.linalg import LinearOperator

from sbmlab.core.logging import logger
from sbmlab.core.registry import registry
from sbmlab.core.utils import make_generator
from sbmlab.graphs.block_model import BlockParams, Partition
from sbmlab.graphs.graph import Graph


class GraphOperator(LinearOperator):
    r"""Square real operator with a symmetry flag.

    Subclasses implement :py:`_matmat` on an ``(n, k)`` block; single vectors
    are handled by the base class.
    """

    name: str = "operator"

    def __init__(self, n: int, symmetric: bool = True) -> None:
        super().__init__(dtype=np.float64, shape=(n, n))
        self.symmetric = symmetric

    @property
    def dimension(self) -> int:
        return self.shape[0]

    def _matvec(self, x):
        return self._matmat(np.asarray(x).reshape(-1, 1)).ravel()

    def _matmat(self, X):
        raise NotImplementedError

    def _adjoint(self):
        assert self.symmetric, "adjoint of a non-symmetric operator"
        return self

    def __repr__(self):
        return "<{} {}x{}>".format(self.name, *self.shape)


class AdjacencyOperator(GraphOperator):
    name = "adjacency"

    def __init__(self, graph: Graph) -> None:
        super().__init__(graph.n)
        self.graph = graph
        self._adjacency = graph.adjacency.astype(np.float64)

    def _matmat(self, X):
        return np.asarray(self._adjacency @ X)


@registry.register_null_model(name="erdos_renyi")
class ErdosRenyiModularityOperator(AdjacencyOperator):
    r"""``B = A - p J`` with ``J`` the all-ones matrix."""

    name = "modularity_erdos_renyi"

    def __init__(self, graph: Graph, p: Optional[float] = None) -> None:
        super().__init__(graph)
        if p is None:
            p = 2.0 * graph.m / float(graph.n) ** 2
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"null model probability p={p} is outside [0, 1]")
        self.p = float(p)

    def _matmat(self, X):
        return super()._matmat(X) - self.p * X.sum(axis=0, keepdims=True)


@registry.register_null_model(name="configuration")
class ConfigurationModularityOperator(AdjacencyOperator):
    r"""``B = A - k k^T / 2m`` with ``k`` the degree vector."""

    name = "modularity_configuration"

    def __init__(self, graph: Graph) -> None:
        if graph.m == 0:
            raise ValueError(
                "configuration null model is undefined for a graph "
                "without edges"
            )
        super().__init__(graph)
        self._degrees = graph.degrees.astype(np.float64)
        self._two_m = 2.0 * graph.m

    def _matmat(self, X):
        weights = (self._degrees @ X) / self._two_m
        return super()._matmat(X) - np.outer(self._degrees, weights)


class CenteredOperator(AdjacencyOperator):
    r"""``X = A - <A>`` where ``<A>`` is the ensemble mean of the planted
    partition: ``pin`` for pairs in the same group, ``pout`` otherwise.
    """

    name = "centered"

    def __init__(
        self, graph: Graph, params: BlockParams, partition: Partition
    ) -> None:
        super().__init__(graph)
        if partition.n != graph.n:
            raise ValueError("partition and graph sizes differ")
        self.params = params
        self.partition = partition

    def _matmat(self, X):
        labels = self.partition.labels
        group_sums = np.zeros((self.partition.q, X.shape[1]))
        np.add.at(group_sums, labels, X)
        mean_part = (
            self.params.pout * X.sum(axis=0, keepdims=True)
            + (self.params.pin - self.params.pout) * group_sums[labels]
        )
        return super()._matmat(X) - mean_part


class DenseOperator(GraphOperator):
    r"""Wraps an explicit dense matrix, for fixtures and small instances."""

    name = "dense"

    def __init__(self, matrix: np.ndarray, symmetric: bool = True) -> None:
        matrix = np.asarray(matrix, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError("dense operator needs a square matrix")
        super().__init__(matrix.shape[0], symmetric=symmetric)
        self.matrix = matrix

    def _matmat(self, X):
        return self.matrix @ X


class RankOneOperator(GraphOperator):
    r"""``v -> beta (u^T v) u``."""

    name = "rank_one"

    def __init__(self, u: np.ndarray, beta: float = 1.0) -> None:
        u = np.asarray(u, dtype=np.float64).ravel()
        super().__init__(u.size)
        self.u = u
        self.beta = float(beta)

    def _matmat(self, X):
        return self.beta * np.outer(self.u, self.u @ X)


def adjacency_operator(graph: Graph) -> AdjacencyOperator:
    return AdjacencyOperator(graph)


def modularity_er_operator(
    graph: Graph, p: Optional[float] = None
) -> ErdosRenyiModularityOperator:
    r"""Modularity operator with the Erdos-Renyi null model. Without :p:`p`
    the empirical edge density ``2m / n^2`` is used, so nothing about the
    generating parameters leaks into detection.
    """
    return ErdosRenyiModularityOperator(graph, p=p)


def modularity_cm_operator(graph: Graph) -> ConfigurationModularityOperator:
    return ConfigurationModularityOperator(graph)


def centered_operator(
    graph: Graph, params: BlockParams, partition: Partition
) -> CenteredOperator:
    return CenteredOperator(graph, params, partition)


def dense_operator(matrix: np.ndarray) -> DenseOperator:
    return DenseOperator(matrix)


def rank_one_operator(u: np.ndarray, beta: float = 1.0) -> RankOneOperator:
    return RankOneOperator(u, beta)


def make_modularity_operator(null_model: str, graph: Graph, **kwargs):
    logger.debug("Initializing {} modularity operator".format(null_model))
    _operator = registry.get_null_model(null_model)
    assert _operator is not None, "Could not find null model {}".format(
        null_model
    )

    return _operator(graph, **kwargs)


def symmetry_defect(op: LinearOperator, seed: int = 0) -> float:
    r"""``|x^T (Op y) - y^T (Op x)|`` for random Gaussian vectors ``x, y``,
    relative to ``n`` times the largest magnitude involved.
    """
    n = op.shape[0]
    rng = make_generator(seed)
    x = rng.standard_normal(n)
    y = rng.standard_normal(n)
    op_x = op.matvec(x)
    op_y = op.matvec(y)
    scale = max(
        1.0,
        float(np.max(np.abs(op_x))),
        float(np.max(np.abs(op_y))),
        float(np.max(np.abs(x))),
        float(np.max(np.abs(y))),
    )
    return abs(float(x @ op_y - y @ op_x)) / (n * scale)
