#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Locates the detectability transition empirically.

For every mean degree ``c`` a grid of ``delta = cin - cout`` values is
swept; the empirical threshold is the smallest ``delta`` at which the
outlier is separated from the band in at least ``DETECTION_FRACTION`` of
the seeds. It is compared with ``q sqrt(c)``, the point where the margin
``delta - sqrt(q [cin + (q - 1) cout])`` changes sign.
"""

import math
from typing import List, Optional, Tuple

import attr
import numpy as np
import pandas as pd

from sbmlab.config import Config
from sbmlab.core.logging import logger
from sbmlab_experiments.common.base_experiment import BaseExperiment
from sbmlab_experiments.common.experiment_registry import (
    experiment_registry,
)
from sbmlab_experiments.experiments.sweep import (
    SweepConfig,
    aggregate_sweep,
    feasible_deltas,
    run_sweep_replicates,
)

SCAN_COLUMNS = [
    "mean_degree",
    "delta",
    "cin",
    "cout",
    "detected_fraction",
    "mean_accuracy",
    "n_failed",
]
THRESHOLD_COLUMNS = [
    "mean_degree",
    "threshold_empirical",
    "threshold_theory",
    "relative_error",
]


def delta_grid(
    delta_min: float, delta_max: float, step: float
) -> List[float]:
    if step <= 0:
        raise ValueError(f"DELTA_STEP must be positive, got {step}")
    if delta_max < delta_min:
        raise ValueError(
            f"empty delta range [{delta_min}, {delta_max}]"
        )
    count = int(math.floor((delta_max - delta_min) / step + 1e-9)) + 1
    return [delta_min + i * step for i in range(count)]


def threshold_theory(q: int, mean_degree: float) -> float:
    return q * math.sqrt(mean_degree)


def empirical_threshold(
    deltas, fractions, detection_fraction: float
) -> Optional[float]:
    r"""Smallest delta whose detected fraction reaches
    :p:`detection_fraction`, or :py:`None`.
    """
    for delta, fraction in zip(deltas, fractions):
        if not np.isnan(fraction) and fraction >= detection_fraction:
            return float(delta)
    return None


def run_transition_scan(
    config: Config,
) -> Tuple[pd.DataFrame, pd.DataFrame]:
    r"""Detected fraction on the delta grid for every mean degree in
    ``TRANSITION.MEAN_DEGREES``.

    :return: per-point scan table and per-degree threshold table.
    """
    q = config.MODEL_CONFIG.MODEL.Q
    scan = config.TRANSITION
    grid = delta_grid(scan.DELTA_MIN, scan.DELTA_MAX, scan.DELTA_STEP)

    scan_frames = []
    thresholds = []
    for mean_degree in scan.MEAN_DEGREES:
        deltas = feasible_deltas(grid, q, mean_degree)
        sweep_config = attr.evolve(
            SweepConfig.from_config(
                config, deltas=deltas, mean_degree=float(mean_degree)
            ),
            seeds_per_point=scan.SEEDS_PER_POINT,
        )
        table = aggregate_sweep(
            sweep_config, run_sweep_replicates(sweep_config)
        )
        table.insert(0, "mean_degree", float(mean_degree))
        scan_frames.append(table.reindex(columns=SCAN_COLUMNS))

        found = empirical_threshold(
            table["delta"],
            table["detected_fraction"],
            scan.DETECTION_FRACTION,
        )
        expected = threshold_theory(q, mean_degree)
        thresholds.append(
            {
                "mean_degree": float(mean_degree),
                "threshold_empirical": found,
                "threshold_theory": expected,
                "relative_error": (
                    None if found is None else abs(found - expected) / expected
                ),
            }
        )
        logger.info(
            "c={}: empirical threshold {} against {:.4f}".format(
                mean_degree, found, expected
            )
        )

    if scan_frames:
        scan_table = pd.concat(scan_frames, ignore_index=True)
    else:
        scan_table = pd.DataFrame(columns=SCAN_COLUMNS)
    return scan_table, pd.DataFrame(thresholds, columns=THRESHOLD_COLUMNS)


@experiment_registry.register_experiment(name="transition")
class TransitionExperiment(BaseExperiment):
    table_name = "transition"

    def run(self) -> None:
        scan_table, threshold_table = run_transition_scan(self.config)
        self.save_table(scan_table, "transition.csv")
        self.save_table(
            threshold_table,
            "transition_thresholds.csv",
            "transition_thresholds",
        )
