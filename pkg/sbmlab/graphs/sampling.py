#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Sparse sampling of planted partition graphs.

Each block pair ``(r, s)``, ``r <= s``, is a grid of candidate cells (row
members of ``r`` times column members of ``s``). Cells are visited by
geometric skipping, so the cost is proportional to the number of edges
drawn rather than to the number of pairs. Diagonal blocks are laid out as
their upper triangle only, so every unordered pair has exactly one cell.
Every block pair draws from its own substream of the seed.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import numpy as np

from sbmlab.core.logging import logger
from sbmlab.core.utils import make_generator
from sbmlab.graphs.block_model import BlockParams, Partition
from sbmlab.graphs.graph import Graph


def sample_cells(
    rng: np.random.Generator, total: int, probability: float
) -> np.ndarray:
    r"""Indices in ``[0, total)`` each kept independently with
    :p:`probability`, in increasing order.
    """
    if total <= 0 or probability <= 0.0:
        return np.empty(0, dtype=np.int64)
    if probability >= 1.0:
        return np.arange(total, dtype=np.int64)

    expected = total * probability
    chunk = int(expected + 5.0 * np.sqrt(expected) + 16)
    found = []
    position = -1
    while True:
        gaps = rng.geometric(probability, size=chunk)
        cells = position + np.cumsum(gaps, dtype=np.int64)
        inside = cells[cells < total]
        found.append(inside)
        if inside.size < chunk:
            break
        position = int(inside[-1])
    return np.concatenate(found)


def triangle_coordinates(
    cells: np.ndarray, size: int
) -> Tuple[np.ndarray, np.ndarray]:
    r"""Maps row-major indices of the strict upper triangle of a
    ``size x size`` grid to their ``(row, column)`` pairs, ``row < column``.
    """
    cells = np.asarray(cells, dtype=np.int64)
    lengths = np.arange(size - 1, 0, -1, dtype=np.int64)
    offsets = np.concatenate([[0], np.cumsum(lengths)])
    row = np.searchsorted(offsets, cells, side="right") - 1
    column = cells - offsets[row] + row + 1
    return row, column


def _sample_block_pair(
    params: BlockParams,
    partition: Partition,
    seed: int,
    block: Tuple[int, int],
) -> np.ndarray:
    r, s = block
    rows = partition.members(r)
    cols = partition.members(s)
    rng = make_generator(seed, r, s)
    if r == s:
        size = rows.size
        cells = sample_cells(rng, size * (size - 1) // 2, params.pin)
        a, b = triangle_coordinates(cells, size)
        i, j = rows[a], rows[b]
    else:
        cells = sample_cells(rng, rows.size * cols.size, params.pout)
        i = rows[cells // cols.size]
        j = cols[cells % cols.size]
    return np.column_stack([np.minimum(i, j), np.maximum(i, j)])


def sample_graph(
    params: BlockParams,
    partition: Partition,
    seed: int,
    num_workers: Optional[int] = None,
) -> Graph:
    r"""Draws a graph from the planted partition ensemble.

    :param params: validated model parameters.
    :param partition: group of every vertex, ``partition.n == params.n``.
    :param seed: 64-bit seed; identical arguments give identical graphs.
    :param num_workers: threads used to generate block pairs concurrently.
        The result does not depend on it.
    """
    if partition.n != params.n or partition.q != params.q:
        raise ValueError(
            "partition (n={}, q={}) does not match params (n={}, q={})".format(
                partition.n, partition.q, params.n, params.q
            )
        )
    blocks = [
        (r, s) for r in range(params.q) for s in range(r, params.q)
    ]

    def _sample(block):
        return _sample_block_pair(params, partition, seed, block)

    if num_workers is not None and num_workers > 1:
        with ThreadPoolExecutor(max_workers=num_workers) as pool:
            pieces: List[np.ndarray] = list(pool.map(_sample, blocks))
    else:
        pieces = [_sample(block) for block in blocks]

    graph = Graph.from_edges(params.n, np.concatenate(pieces))
    if graph.m == 0:
        logger.warning(
            "Sampled an empty graph (n={}, cin={}, cout={})".format(
                params.n, params.cin, params.cout
            )
        )
    return graph


def block_pair_counts(graph: Graph, partition: Partition) -> np.ndarray:
    r"""Number of edges between every pair of groups as a symmetric ``q x q``
    matrix; the diagonal counts within-group edges.
    """
    edges = graph.edges()
    counts = np.zeros((partition.q, partition.q), dtype=np.int64)
    r = partition.labels[edges[:, 0]]
    s = partition.labels[edges[:, 1]]
    np.add.at(counts, (np.minimum(r, s), np.maximum(r, s)), 1)
    return counts + np.triu(counts, k=1).T
