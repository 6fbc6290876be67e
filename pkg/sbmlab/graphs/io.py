#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Text formats for graphs and partitions.

Edge list::

    # n=<n> q=<q> seed=<seed>
    0 1
    0 7
    ...

one ``i j`` pair per line with ``i < j``, 0-indexed, sorted. Partition
files hold one group label per line.
"""

import re
from typing import Dict, Optional, Tuple

import numpy as np

from sbmlab.graphs.block_model import Partition
from sbmlab.graphs.graph import Graph

HEADER_PATTERN = re.compile(r"^#\s*(.*)$")


def format_edge_list(graph: Graph, q: int, seed: int) -> str:
    lines = ["# n={} q={} seed={}".format(graph.n, q, seed)]
    lines.extend("{} {}".format(i, j) for i, j in graph.edges().tolist())
    return "\n".join(lines) + "\n"


def write_edge_list(path: str, graph: Graph, q: int, seed: int) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(format_edge_list(graph, q, seed))


def _parse_header(line: str) -> Dict[str, int]:
    match = HEADER_PATTERN.match(line.strip())
    if match is None:
        raise ValueError("edge list must start with '# n=<n> q=<q> seed=<s>'")
    header = {}
    for token in match.group(1).split():
        key, _, value = token.partition("=")
        header[key] = int(value)
    if "n" not in header:
        raise ValueError("edge list header does not declare n")
    return header


def read_edge_list(path: str) -> Tuple[Graph, Dict[str, int]]:
    with open(path, encoding="ascii") as f:
        header = _parse_header(f.readline())
        edges = np.loadtxt(f, dtype=np.int64, ndmin=2).reshape(-1, 2)
    if np.any(edges[:, 0] >= edges[:, 1]):
        raise ValueError("every edge line must satisfy i < j")
    return Graph.from_edges(header["n"], edges), header


def write_partition(path: str, partition: Partition) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write("".join("{}\n".format(x) for x in partition.labels.tolist()))


def read_partition(path: str, q: Optional[int] = None) -> Partition:
    labels = np.loadtxt(path, dtype=np.int64, ndmin=1)
    if q is None:
        q = int(labels.max()) + 1 if labels.size else 1
    return Partition(labels, q)
