#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from sbmlab.core.logging import logger
from sbmlab.graphs import sample_graph, write_edge_list, write_partition
from sbmlab_experiments.common.base_experiment import BaseExperiment
from sbmlab_experiments.common.experiment_registry import (
    experiment_registry,
)

EDGE_LIST_FILENAME = "graph.edges"
TRUTH_FILENAME = "truth.partition"


@experiment_registry.register_experiment(name="generate")
class GenerateExperiment(BaseExperiment):
    r"""Samples one planted partition graph and writes it with its ground
    truth labels.
    """

    def run(self) -> None:
        params, partition = self.planted_model()
        graph = sample_graph(
            params, partition, self.seed, num_workers=self.config.NUM_JOBS
        )
        logger.info(
            "sampled n={} m={} (mean degree {:.4f}, expected {:.4f})".format(
                graph.n, graph.m, 2.0 * graph.m / graph.n, params.mean_degree
            )
        )
        write_edge_list(
            self.output_path(EDGE_LIST_FILENAME), graph, params.q, self.seed
        )
        write_partition(self.output_path(TRUTH_FILENAME), partition)
