#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Planted partition ensemble: ``q`` equal groups, edge probability
``cin / n`` within a group and ``cout / n`` between groups.
"""

from typing import Tuple

import attr
import numpy as np

from sbmlab.core.utils import non_negative_validator


def _validate_block_params(params: "BlockParams") -> None:
    if params.n <= 0:
        raise ValueError(f"n must be positive, got {params.n}")
    if params.q < 2:
        raise ValueError(f"q must be at least 2, got {params.q}")
    if params.n % params.q != 0:
        raise ValueError(
            f"n={params.n} is not divisible by q={params.q}; "
            "groups must have equal size"
        )
    for name in ("cin", "cout"):
        probability = getattr(params, name) / params.n
        if probability > 1.0:
            raise ValueError(
                f"{name}/n = {probability} is not a valid edge probability"
            )


@attr.s(auto_attribs=True, frozen=True, kw_only=True)
class BlockParams:
    r"""Parameters of the planted partition model.

    :property n: number of vertices.
    :property q: number of groups, each of size ``n / q``.
    :property cin: expected within-group degree parameter, ``n * pin``.
    :property cout: expected between-group degree parameter, ``n * pout``.
    """

    n: int = attr.ib(converter=int)
    q: int = attr.ib(converter=int)
    cin: float = attr.ib(converter=float, validator=non_negative_validator)
    cout: float = attr.ib(converter=float, validator=non_negative_validator)

    def __attrs_post_init__(self):
        _validate_block_params(self)

    @property
    def pin(self) -> float:
        return self.cin / self.n

    @property
    def pout(self) -> float:
        return self.cout / self.n

    @property
    def group_size(self) -> int:
        return self.n // self.q

    @property
    def mean_degree(self) -> float:
        return mean_degree(self)


def _validate_labels(partition: "Partition", attribute, labels) -> None:
    if labels.ndim != 1:
        raise ValueError("labels must be a one dimensional array")
    if labels.size and (labels.min() < 0 or labels.max() >= partition.q):
        raise ValueError(f"every label must lie in [0, {partition.q})")


@attr.s(auto_attribs=True, frozen=True, eq=False)
class Partition:
    r"""Group labels of the vertices, ground truth or inferred."""

    labels: np.ndarray = attr.ib(
        converter=lambda x: np.array(x, dtype=np.int64),
        validator=_validate_labels,
    )
    q: int = attr.ib(converter=int)

    def __attrs_post_init__(self):
        self.labels.setflags(write=False)

    @property
    def n(self) -> int:
        return int(self.labels.size)

    @property
    def group_sizes(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.q)

    def members(self, group: int) -> np.ndarray:
        return np.flatnonzero(self.labels == group)

    def indicator_vector(self) -> np.ndarray:
        r"""The unit vector ``u`` with entries ``+1/sqrt(n)`` for group 0 and
        ``-1/sqrt(n)`` for group 1 (two groups only).
        """
        assert self.q == 2, "indicator vector is defined for two groups"
        return np.where(self.labels == 0, 1.0, -1.0) / np.sqrt(self.n)

    def relabel(self, permutation) -> "Partition":
        return Partition(np.asarray(permutation)[self.labels], self.q)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.q == other.q and np.array_equal(self.labels, other.labels)


def make_planted_partition(
    n: int, q: int, cin: float, cout: float
) -> Tuple[BlockParams, Partition]:
    r"""Validates the planted partition parameters and returns them with the
    canonical ground truth, vertex ``i`` in group ``floor(i * q / n)``.
    """
    params = BlockParams(n=n, q=q, cin=cin, cout=cout)
    labels = (np.arange(params.n, dtype=np.int64) * params.q) // params.n
    return params, Partition(labels, params.q)


def mean_degree(params: BlockParams) -> float:
    return (params.cin + (params.q - 1) * params.cout) / params.q


def expected_edge_count(params: BlockParams) -> Tuple[float, float]:
    r"""Mean and variance of the edge count. The count is a sum of two
    binomials over the within-group and between-group vertex pairs.
    """
    size = params.group_size
    within_pairs = params.q * size * (size - 1) / 2
    between_pairs = params.q * (params.q - 1) / 2 * size * size
    mean = within_pairs * params.pin + between_pairs * params.pout
    variance = within_pairs * params.pin * (
        1 - params.pin
    ) + between_pairs * params.pout * (1 - params.pout)
    return mean, variance
