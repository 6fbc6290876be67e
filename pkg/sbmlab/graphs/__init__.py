#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from sbmlab.graphs.block_model import (
    BlockParams,
    Partition,
    expected_edge_count,
    make_planted_partition,
    mean_degree,
)
from sbmlab.graphs.graph import Graph
from sbmlab.graphs.io import (
    read_edge_list,
    read_partition,
    write_edge_list,
    write_partition,
)
from sbmlab.graphs.sampling import block_pair_counts, sample_graph

__all__ = [
    "BlockParams",
    "Graph",
    "Partition",
    "block_pair_counts",
    "expected_edge_count",
    "make_planted_partition",
    "mean_degree",
    "read_edge_list",
    "read_partition",
    "sample_graph",
    "write_edge_list",
    "write_partition",
]
