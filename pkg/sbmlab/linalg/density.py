#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import Callable, Optional, Tuple

import attr
import numpy as np


@attr.s(auto_attribs=True, frozen=True, eq=False)
class DensityTable:
    r"""Normalised histogram: ``sum(densities * width) == 1``."""

    edges: np.ndarray
    densities: np.ndarray
    counts: np.ndarray

    @property
    def centers(self) -> np.ndarray:
        return 0.5 * (self.edges[:-1] + self.edges[1:])

    @property
    def width(self) -> float:
        return float(self.edges[1] - self.edges[0])

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def spectral_histogram(
    eigenvalues,
    bins: int,
    value_range: Optional[Tuple[float, float]] = None,
) -> DensityTable:
    r"""Histogram of :p:`eigenvalues` normalised to unit area over
    :p:`value_range` (default ``[min, max]``). Values outside the range are
    not counted.
    """
    values = np.asarray(eigenvalues, dtype=np.float64).ravel()
    if values.size == 0:
        raise ValueError("spectral histogram needs at least one eigenvalue")
    if bins < 1:
        raise ValueError(f"bins must be positive, got {bins}")
    if value_range is None:
        value_range = (float(values.min()), float(values.max()))
    low, high = float(value_range[0]), float(value_range[1])
    if not high > low:
        raise ValueError(f"histogram range [{low}, {high}] has zero width")

    counts, edges = np.histogram(values, bins=bins, range=(low, high))
    inside = counts.sum()
    if inside == 0:
        raise ValueError(
            f"no eigenvalue falls inside the range [{low}, {high}]"
        )
    widths = np.diff(edges)
    densities = counts / (inside * widths)
    return DensityTable(edges=edges, densities=densities, counts=counts)


def bin_averages(
    table: DensityTable, cdf: Callable[[np.ndarray], np.ndarray]
) -> np.ndarray:
    r"""Average of a probability density over every bin, from its
    cumulative distribution function :p:`cdf`.
    """
    mass = np.diff(cdf(table.edges))
    return mass / np.diff(table.edges)


def histogram_l1_distance(
    table: DensityTable, cdf: Callable[[np.ndarray], np.ndarray]
) -> float:
    r"""``sum |empirical - theory| * width`` with the theory density averaged
    over each bin.
    """
    theory = bin_averages(table, cdf)
    widths = np.diff(table.edges)
    return float(np.sum(np.abs(table.densities - theory) * widths))
