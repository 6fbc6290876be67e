#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Outlier eigenvalues of sampled graphs against their closed forms.

For two groups the modularity matrix has one outlier at ``z1`` above the
band, while the adjacency matrix has two: the uniform component near
``(cin + cout) / 2 + 1`` and the community component near ``z1``.
"""

from typing import Any, Dict, List, Optional, Sequence, Tuple

import attr
import numpy as np
import pandas as pd

from sbmlab.detect import DetectionOptions
from sbmlab.graphs import BlockParams, make_planted_partition, sample_graph
from sbmlab.linalg import (
    adjacency_operator,
    extremal_eigenpairs,
    make_modularity_operator,
)
from sbmlab.theory import z1_theory, z2_adjacency_theory
from sbmlab_experiments.common.base_experiment import BaseExperiment
from sbmlab_experiments.common.experiment_registry import (
    experiment_registry,
)
from sbmlab_experiments.utils.common import run_tasks

OUTLIER_COLUMNS = [
    "row",
    "seed",
    "z1_empirical",
    "z1_theory",
    "z1_relative_error",
    "adjacency_first",
    "adjacency_second",
    "z2_theory",
    "z2_relative_error",
]


@attr.s(auto_attribs=True, frozen=True, kw_only=True)
class OutlierTask:
    params: BlockParams
    seed: int
    options: DetectionOptions


def _relative_error(
    value: float, reference: Optional[float]
) -> Optional[float]:
    if reference is None or reference == 0:
        return None
    return abs(value - reference) / abs(reference)


def _top_eigenvalues(op, k: int, options: DetectionOptions, seed: int):
    return extremal_eigenpairs(
        op,
        k=k,
        tol=options.tol,
        max_iter=options.max_iter,
        seed=seed,
        ncv=options.ncv,
        dense_fallback=options.dense_fallback,
    ).eigenvalues


def measure_outliers(task: OutlierTask) -> Dict[str, float]:
    params = task.params
    _, partition = make_planted_partition(
        params.n, params.q, params.cin, params.cout
    )
    graph = sample_graph(params, partition, task.seed)
    modularity = _top_eigenvalues(
        make_modularity_operator(task.options.null_model, graph),
        1,
        task.options,
        task.seed,
    )
    adjacency = _top_eigenvalues(
        adjacency_operator(graph), 2, task.options, task.seed
    )
    return {
        "z1_empirical": float(modularity[0]),
        "adjacency_first": float(adjacency[0]),
        "adjacency_second": float(adjacency[1]),
    }


def run_outlier_check(
    params: BlockParams,
    seeds: Sequence[int],
    options: Optional[DetectionOptions] = None,
    num_jobs: int = 1,
) -> Tuple[pd.DataFrame, Dict[str, Any]]:
    r"""Top modularity eigenvalue and top two adjacency eigenvalues for
    every seed, followed by a ``mean`` row.

    :return: table with one ``seed`` row per seed plus the ``mean`` row, and
        a summary of the means and their relative errors.
    """
    if params.q != 2:
        raise ValueError(
            f"outlier closed forms are two-group results, got q={params.q}"
        )
    if not seeds:
        raise ValueError("the outlier check needs at least one seed")
    options = options or DetectionOptions()
    z1 = None if params.cin == params.cout else z1_theory(
        params.cin, params.cout
    )
    z2 = z2_adjacency_theory(params.cin, params.cout)

    tasks = [
        OutlierTask(params=params, seed=int(seed), options=options)
        for seed in seeds
    ]
    measured = run_tasks(
        measure_outliers, tasks, num_jobs=num_jobs, desc="outliers"
    )

    rows: List[Dict[str, Any]] = []
    for task, values in zip(tasks, measured):
        rows.append(dict(row="seed", seed=task.seed, **values))
    means = {
        key: float(np.mean([values[key] for values in measured]))
        for key in ("z1_empirical", "adjacency_first", "adjacency_second")
    }
    rows.append(dict(row="mean", seed=None, **means))
    for row in rows:
        row.update(
            z1_theory=z1,
            z1_relative_error=_relative_error(row["z1_empirical"], z1),
            z2_theory=z2,
            z2_relative_error=_relative_error(row["adjacency_first"], z2),
        )

    summary = dict(
        means,
        n_seeds=len(tasks),
        z1_theory=z1,
        z2_theory=z2,
        z1_relative_error=rows[-1]["z1_relative_error"],
        z2_relative_error=rows[-1]["z2_relative_error"],
    )
    return pd.DataFrame(rows, columns=OUTLIER_COLUMNS), summary


@experiment_registry.register_experiment(name="outliers")
class OutliersExperiment(BaseExperiment):
    table_name = "outliers"

    def run(self) -> None:
        params, _ = self.planted_model()
        seeds = [
            self.seed + i for i in range(self.config.OUTLIERS.NUM_SEEDS)
        ]
        frame, summary = run_outlier_check(
            params,
            seeds,
            options=DetectionOptions.from_config(self.model_config),
            num_jobs=self.config.NUM_JOBS,
        )
        self.save_table(frame, "outliers.csv")
        self.save_report(summary, "outliers.json")
