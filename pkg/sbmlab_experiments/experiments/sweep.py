#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Accuracy sweep over the strength of the planted structure.

At fixed mean degree ``c`` every grid point ``delta = cin - cout`` maps to

    cin = c + (q - 1) delta / q,    cout = c - delta / q.

Each point is sampled :ref:`SweepConfig.seeds_per_point` times with seeds
``seed_base + point_index * seed_stride + replicate``; replicates run in a
process pool and are reduced in ``(point_index, replicate)`` order, so the
table does not depend on the number of jobs.
"""

from typing import Any, Dict, List, Optional, Sequence

import attr
import numpy as np
import pandas as pd

from sbmlab.config import Config
from sbmlab.core.logging import logger
from sbmlab.detect import (
    DetectionOptions,
    EmptyClusterError,
    accuracy,
    spectral_partition_general,
    spectral_partition_q2,
)
from sbmlab.graphs import BlockParams, make_planted_partition, sample_graph
from sbmlab.linalg import ConvergenceError
from sbmlab.theory import predict
from sbmlab_experiments.common.base_experiment import BaseExperiment
from sbmlab_experiments.common.experiment_registry import (
    experiment_registry,
)
from sbmlab_experiments.utils.common import (
    derive_seed,
    mean_and_stderr,
    run_tasks,
)

STATUS_OK = "ok"
STATUS_PARTIAL = "partial"
STATUS_FAILED = "failed"


@attr.s(auto_attribs=True, frozen=True, kw_only=True)
class SweepPoint:
    point_index: int
    delta: float
    params: BlockParams


@attr.s(auto_attribs=True, kw_only=True)
class SweepConfig:
    n: int
    q: int = 2
    mean_degree: float
    deltas: List[float] = attr.Factory(list)
    seeds_per_point: int = 10
    seed_base: int = 0
    seed_stride: int = 1000
    output_dir: str = "data/results"
    num_jobs: int = 1
    detection: DetectionOptions = attr.Factory(DetectionOptions)

    @classmethod
    def from_config(cls, config: Config, deltas=None, mean_degree=None):
        model_config = config.MODEL_CONFIG
        return cls(
            n=model_config.MODEL.N,
            q=model_config.MODEL.Q,
            mean_degree=(
                config.SWEEP.MEAN_DEGREE
                if mean_degree is None
                else mean_degree
            ),
            deltas=list(config.SWEEP.DELTAS if deltas is None else deltas),
            seeds_per_point=config.SWEEP.SEEDS_PER_POINT,
            seed_base=model_config.SEED,
            seed_stride=config.SWEEP.SEED_STRIDE,
            output_dir=config.OUTPUT_DIR,
            num_jobs=config.NUM_JOBS,
            detection=DetectionOptions.from_config(model_config),
        )

    def grid(self) -> List[SweepPoint]:
        r"""Validated model parameters for every grid point.

        :raise ValueError: a point has ``cin < cout``, a negative ``cout``
            or an edge probability above one.
        """
        points = []
        for index, delta in enumerate(self.deltas):
            delta = float(delta)
            if delta < 0:
                raise ValueError(
                    f"grid point {index}: delta={delta} gives cin < cout"
                )
            cin = self.mean_degree + (self.q - 1) * delta / self.q
            cout = self.mean_degree - delta / self.q
            if cout < 0:
                raise ValueError(
                    f"grid point {index}: delta={delta} gives cout={cout} "
                    f"below zero at mean degree {self.mean_degree}"
                )
            params, _ = make_planted_partition(self.n, self.q, cin, cout)
            points.append(
                SweepPoint(point_index=index, delta=delta, params=params)
            )
        return points


@attr.s(auto_attribs=True, frozen=True, kw_only=True)
class SweepTask:
    point_index: int
    replicate: int
    seed: int
    delta: float
    params: BlockParams
    detection: DetectionOptions


@attr.s(auto_attribs=True, kw_only=True)
class SweepRow:
    point_index: int
    cin: float
    cout: float
    delta: float
    mean_accuracy: float
    accuracy_stderr: float
    mean_z1_empirical: float
    z1_theory: Optional[float]
    band_edge: float
    expected_accuracy_theory: Optional[float]
    detected_fraction: float
    n_seeds: int
    n_failed: int
    status: str


SWEEP_COLUMNS = [field.name for field in attr.fields(SweepRow)]
REPLICATE_COLUMNS = [
    "point_index",
    "replicate",
    "seed",
    "cin",
    "cout",
    "delta",
    "accuracy",
    "leading_eigenvalue",
    "band_edge_estimate",
    "detected",
    "error",
]


def run_replicate(task: SweepTask) -> Dict[str, Any]:
    r"""Samples one graph, detects its groups and scores them. Solver
    failures are recorded in the ``error`` field instead of raised.
    """
    params = task.params
    _, truth = make_planted_partition(
        params.n, params.q, params.cin, params.cout
    )
    record: Dict[str, Any] = {
        "point_index": task.point_index,
        "replicate": task.replicate,
        "seed": task.seed,
        "cin": params.cin,
        "cout": params.cout,
        "delta": task.delta,
        "accuracy": np.nan,
        "leading_eigenvalue": np.nan,
        "band_edge_estimate": np.nan,
        "detected": False,
        "error": "",
    }
    options = attr.evolve(task.detection, seed=task.seed)
    graph = sample_graph(params, truth, task.seed)
    try:
        if params.q == 2:
            result = spectral_partition_q2(graph, options)
        else:
            result = spectral_partition_general(graph, params.q, options)
    except (ConvergenceError, EmptyClusterError, ValueError) as e:
        logger.warning(
            "point {} replicate {} (seed {}) failed: {}".format(
                task.point_index, task.replicate, task.seed, e
            )
        )
        record["error"] = type(e).__name__
        return record

    record.update(
        accuracy=accuracy(result.labels, truth),
        leading_eigenvalue=result.leading_eigenvalue,
        band_edge_estimate=result.band_edge_estimate,
        detected=result.detected,
    )
    return record


def make_tasks(config: SweepConfig) -> List[SweepTask]:
    return [
        SweepTask(
            point_index=point.point_index,
            replicate=replicate,
            seed=derive_seed(
                config.seed_base,
                point.point_index,
                config.seed_stride,
                replicate,
            ),
            delta=point.delta,
            params=point.params,
            detection=config.detection,
        )
        for point in config.grid()
        for replicate in range(config.seeds_per_point)
    ]


def run_sweep_replicates(config: SweepConfig) -> pd.DataFrame:
    r"""One row per ``(point_index, replicate)`` in that order."""
    tasks = make_tasks(config)
    records = run_tasks(
        run_replicate, tasks, num_jobs=config.num_jobs, desc="sweep"
    )
    if not records:
        return pd.DataFrame(columns=REPLICATE_COLUMNS)
    frame = pd.DataFrame.from_records(records, columns=REPLICATE_COLUMNS)
    return frame.sort_values(
        ["point_index", "replicate"], kind="mergesort"
    ).reset_index(drop=True)


def _status(n_seeds: int, n_failed: int) -> str:
    if n_failed == 0:
        return STATUS_OK
    if n_failed == n_seeds:
        return STATUS_FAILED
    return STATUS_PARTIAL


def aggregate_sweep(
    config: SweepConfig, replicates: pd.DataFrame
) -> pd.DataFrame:
    r"""Reduces replicate rows to one :ref:`SweepRow` per grid point. Means
    and standard errors only use replicates that did not fail.
    """
    rows = []
    for point in config.grid():
        group = replicates[replicates["point_index"] == point.point_index]
        succeeded = group[group["error"].fillna("") == ""]
        n_seeds, n_failed = len(group), len(group) - len(succeeded)
        mean_accuracy, stderr = mean_and_stderr(succeeded["accuracy"])
        mean_z1, _ = mean_and_stderr(succeeded["leading_eigenvalue"])
        detected_fraction = (
            float(succeeded["detected"].astype(bool).mean())
            if len(succeeded)
            else np.nan
        )
        prediction = predict(point.params)
        rows.append(
            SweepRow(
                point_index=point.point_index,
                cin=point.params.cin,
                cout=point.params.cout,
                delta=point.delta,
                mean_accuracy=mean_accuracy,
                accuracy_stderr=stderr,
                mean_z1_empirical=mean_z1,
                z1_theory=prediction.z1,
                band_edge=prediction.band_edge,
                expected_accuracy_theory=prediction.expected_accuracy,
                detected_fraction=detected_fraction,
                n_seeds=n_seeds,
                n_failed=n_failed,
                status=_status(n_seeds, n_failed),
            )
        )
    if not rows:
        return pd.DataFrame(columns=SWEEP_COLUMNS)
    return pd.DataFrame([attr.asdict(row) for row in rows])[SWEEP_COLUMNS]


def run_sweep(config: SweepConfig) -> pd.DataFrame:
    return aggregate_sweep(config, run_sweep_replicates(config))


def feasible_deltas(
    deltas: Sequence[float], q: int, mean_degree: float
) -> List[float]:
    r"""Grid values that keep ``cout = c - delta / q`` non-negative."""
    kept = [float(d) for d in deltas if float(d) <= q * mean_degree]
    if len(kept) < len(deltas):
        logger.warning(
            "dropping {} grid points with cout < 0 at c={}".format(
                len(deltas) - len(kept), mean_degree
            )
        )
    return kept


@experiment_registry.register_experiment(name="sweep")
class SweepExperiment(BaseExperiment):
    r"""Mean detection accuracy against ``cin - cout`` at fixed mean
    degree, next to the predicted accuracy curve. With
    ``SWEEP.MEAN_DEGREES`` set, one curve per mean degree is swept and the
    grid is trimmed to the values each degree allows.
    """

    table_name = "sweep"

    def run(self) -> None:
        if not self.config.SWEEP.DELTAS:
            logger.warning("SWEEP.DELTAS is empty, writing an empty table")

        degrees = self.config.SWEEP.MEAN_DEGREES
        tables, replicate_tables = [], []
        for mean_degree in degrees or [self.config.SWEEP.MEAN_DEGREE]:
            deltas = self.config.SWEEP.DELTAS
            if degrees:
                deltas = feasible_deltas(
                    deltas, self.model_config.MODEL.Q, mean_degree
                )
            sweep_config = SweepConfig.from_config(
                self.config, deltas=deltas, mean_degree=float(mean_degree)
            )
            replicates = run_sweep_replicates(sweep_config)
            table = aggregate_sweep(sweep_config, replicates)
            table.insert(0, "mean_degree", float(mean_degree))
            replicates.insert(0, "mean_degree", float(mean_degree))
            tables.append(table)
            replicate_tables.append(replicates)

        self.save_table(pd.concat(tables, ignore_index=True), "sweep.csv")
        self.save_table(
            pd.concat(replicate_tables, ignore_index=True),
            "sweep_replicates.csv",
            "sweep_replicates",
        )
