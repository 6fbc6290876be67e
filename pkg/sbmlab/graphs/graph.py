#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import attr
import numpy as np
import scipy.sparse as sp


def _validate_adjacency(graph: "Graph", attribute, adjacency) -> None:
    if adjacency.shape != (graph.n, graph.n):
        raise ValueError(
            f"adjacency shape {adjacency.shape} does not match n={graph.n}"
        )


@attr.s(auto_attribs=True, frozen=True, eq=False)
class Graph:
    r"""Undirected simple graph in compressed sparse row form.

    Every edge ``{i, j}`` is stored in both rows ``i`` and ``j``. Column
    indices are sorted within each row, there are no self-loops and no
    duplicate entries.

    :property n: number of vertices.
    :property adjacency: symmetric ``scipy.sparse.csr_matrix`` with unit
        entries.
    :property degrees: per-vertex degree.
    :property m: number of undirected edges.
    """

    n: int = attr.ib(converter=int)
    adjacency: sp.csr_matrix = attr.ib(validator=_validate_adjacency)
    degrees: np.ndarray = attr.ib(init=False)
    m: int = attr.ib(init=False)

    def __attrs_post_init__(self):
        degrees = np.diff(self.adjacency.indptr).astype(np.int64)
        degrees.setflags(write=False)
        # frozen class
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "m", int(degrees.sum()) // 2)

    @classmethod
    def from_edges(cls, n: int, edges: np.ndarray) -> "Graph":
        r"""Builds the graph from an ``(m, 2)`` array of vertex pairs. Each
        unordered pair must appear once and no pair may be a self-loop.
        """
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if edges.size and (edges.min() < 0 or edges.max() >= n):
            raise ValueError(f"edge endpoints must lie in [0, {n})")
        if np.any(edges[:, 0] == edges[:, 1]):
            raise ValueError("self-loops are not allowed")
        rows = np.concatenate([edges[:, 0], edges[:, 1]])
        cols = np.concatenate([edges[:, 1], edges[:, 0]])
        data = np.ones(rows.size, dtype=np.int8)
        adjacency = sp.coo_matrix((data, (rows, cols)), shape=(n, n)).tocsr()
        adjacency.sort_indices()
        if adjacency.nnz != rows.size:
            raise ValueError("duplicate edges are not allowed")
        return cls(n, adjacency)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, np.empty((0, 2), dtype=np.int64))

    def neighbors(self, vertex: int) -> np.ndarray:
        start, stop = self.adjacency.indptr[vertex : vertex + 2]
        return self.adjacency.indices[start:stop]

    def edges(self) -> np.ndarray:
        r"""Returns the ``(m, 2)`` array of edges ``(i, j)`` with ``i < j``,
        sorted lexicographically.
        """
        upper = sp.triu(self.adjacency, k=1, format="csr")
        upper.sort_indices()
        rows = np.repeat(
            np.arange(self.n, dtype=np.int64), np.diff(upper.indptr)
        )
        return np.column_stack([rows, upper.indices.astype(np.int64)])

    def is_symmetric(self) -> bool:
        return (self.adjacency != self.adjacency.T).nnz == 0

    def has_self_loops(self) -> bool:
        return bool(np.any(self.adjacency.diagonal() != 0))
