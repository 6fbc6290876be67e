#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import Any, Dict, Optional, Tuple

import numpy as np
import pandas as pd

from sbmlab.core.logging import logger
from sbmlab.graphs import (
    BlockParams,
    Partition,
    make_planted_partition,
    sample_graph,
)
from sbmlab.linalg import (
    dense_full_spectrum,
    histogram_l1_distance,
    make_modularity_operator,
    spectral_histogram,
)
from sbmlab.linalg.density import bin_averages
from sbmlab.linalg.eigensolvers import DEFAULT_DENSE_LIMIT
from sbmlab.theory import bulk_radius, semicircle_cdf, z1_theory
from sbmlab_experiments.common.base_experiment import BaseExperiment
from sbmlab_experiments.common.experiment_registry import (
    experiment_registry,
)

SPECTRUM_COLUMNS = ["bin_center", "empirical_density", "theory_density"]


def _degenerate_summary() -> Dict[str, Any]:
    return {
        "z1_empirical": None,
        "z1_theory": None,
        "outliers": [],
        "band_edge": 0.0,
        "l1_distance": None,
        "largest_bulk": None,
        "degenerate": True,
    }


def run_spectrum_experiment(
    params: BlockParams,
    seed: int,
    bins: int = 60,
    range_scale: float = 1.2,
    dense_limit: int = DEFAULT_DENSE_LIMIT,
    null_model: str = "erdos_renyi",
    partition: Optional[Partition] = None,
) -> Tuple[pd.DataFrame, Dict[str, Any]]:
    r"""Full modularity spectrum of one sampled graph against the semicircle.

    The ``q - 1`` largest eigenvalues are the outliers and are reported
    separately; the rest is histogrammed over ``[-range_scale, range_scale]``
    times the bulk radius ``2 sqrt(c)`` and compared with the bin averages of
    the semicircle density of that radius.

    :return: density table and summary
        ``{z1_empirical, z1_theory, outliers, band_edge, l1_distance,
        largest_bulk, degenerate}``.
    :raise ValueError: ``n`` exceeds :p:`dense_limit`.
    """
    if params.n > dense_limit:
        raise ValueError(
            f"n={params.n} exceeds the dense spectrum limit {dense_limit}"
        )
    if params.cin + params.cout == 0:
        logger.warning(
            "cin + cout = 0 gives an empty graph with no bulk spectrum"
        )
        return pd.DataFrame(columns=SPECTRUM_COLUMNS), _degenerate_summary()

    if partition is None:
        _, partition = make_planted_partition(
            params.n, params.q, params.cin, params.cout
        )
    graph = sample_graph(params, partition, seed)
    op = make_modularity_operator(null_model, graph)
    eigenvalues = dense_full_spectrum(op, n_limit=dense_limit).eigenvalues
    n_outliers = params.q - 1
    outliers, bulk = eigenvalues[:n_outliers], eigenvalues[n_outliers:]

    edge = bulk_radius(params.q, params.cin, params.cout)
    table = spectral_histogram(
        bulk, bins, value_range=(-range_scale * edge, range_scale * edge)
    )

    def cdf(z):
        return semicircle_cdf(z, params.cin, params.cout, q=params.q)

    theory = bin_averages(table, cdf)
    frame = pd.DataFrame(
        {
            "bin_center": table.centers,
            "empirical_density": table.densities,
            "theory_density": theory,
        }
    )[SPECTRUM_COLUMNS]

    z1 = None
    if params.q == 2 and params.cin != params.cout:
        z1 = z1_theory(params.cin, params.cout)
    summary = {
        "z1_empirical": float(outliers[0]),
        "z1_theory": z1,
        "outliers": [float(value) for value in outliers],
        "band_edge": edge,
        "l1_distance": histogram_l1_distance(table, cdf),
        "largest_bulk": float(np.max(bulk)) if bulk.size else None,
        "degenerate": False,
    }
    return frame, summary


@experiment_registry.register_experiment(name="spectrum")
class SpectrumExperiment(BaseExperiment):
    table_name = "spectrum"

    def run(self) -> None:
        params, partition = self.planted_model()
        frame, summary = run_spectrum_experiment(
            params,
            self.seed,
            bins=self.model_config.SPECTRUM.BINS,
            range_scale=self.model_config.SPECTRUM.RANGE_SCALE,
            dense_limit=self.model_config.SOLVER.DENSE_LIMIT,
            null_model=self.model_config.DETECT.NULL_MODEL,
            partition=partition,
        )
        self.save_table(frame, "spectrum.csv")
        self.save_report(summary, "spectrum.json")
