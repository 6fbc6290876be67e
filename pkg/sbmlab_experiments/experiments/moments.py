#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import Optional

import pandas as pd

from sbmlab.graphs import (
    BlockParams,
    Partition,
    make_planted_partition,
    sample_graph,
)
from sbmlab.linalg import centered_operator, moment_trace_estimate
from sbmlab.theory import trace_moment
from sbmlab_experiments.common.base_experiment import BaseExperiment
from sbmlab_experiments.common.experiment_registry import (
    experiment_registry,
)

MAX_MOMENT = 6
MOMENT_COLUMNS = ["m", "estimate", "stderr", "theory", "relative_error"]


def run_moment_check(
    params: BlockParams,
    seed: int,
    m_max: int = 3,
    n_probes: int = 30,
    partition: Optional[Partition] = None,
) -> pd.DataFrame:
    r"""Stochastic estimates of ``Tr X^(2m)`` for the centered adjacency
    matrix of one sampled graph, next to ``n c^m C_m`` with
    ``c = (cin + cout) / 2``.

    :raise ValueError: :p:`m_max` outside ``[0, 6]``.
    """
    if not 0 <= m_max <= MAX_MOMENT:
        raise ValueError(
            f"m_max={m_max} must lie in [0, {MAX_MOMENT}]; higher moments "
            f"are dominated by finite-degree corrections"
        )
    if partition is None:
        _, partition = make_planted_partition(
            params.n, params.q, params.cin, params.cout
        )
    graph = sample_graph(params, partition, seed)
    op = centered_operator(graph, params, partition)

    rows = []
    for m_power in range(m_max + 1):
        estimate = moment_trace_estimate(op, m_power, n_probes, seed=seed)
        theory = trace_moment(m_power, params.cin, params.cout, params.n)
        relative_error = (
            abs(estimate.estimate - theory) / theory if theory else 0.0
        )
        rows.append(
            {
                "m": m_power,
                "estimate": estimate.estimate,
                "stderr": estimate.stderr,
                "theory": theory,
                "relative_error": relative_error,
            }
        )
    return pd.DataFrame(rows, columns=MOMENT_COLUMNS)


@experiment_registry.register_experiment(name="moments")
class MomentsExperiment(BaseExperiment):
    table_name = "moments"

    def run(self) -> None:
        params, partition = self.planted_model()
        frame = run_moment_check(
            params,
            self.seed,
            m_max=self.model_config.MOMENTS.M_MAX,
            n_probes=self.model_config.MOMENTS.N_PROBES,
            partition=partition,
        )
        self.save_table(frame, "moments.csv")
