#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from sbmlab.core.logging import logger
from sbmlab.detect import (
    DetectionOptions,
    accuracy,
    spectral_partition_general,
)
from sbmlab.graphs import read_edge_list, read_partition, write_partition
from sbmlab_experiments.common.base_experiment import BaseExperiment
from sbmlab_experiments.common.experiment_registry import (
    experiment_registry,
)

INFERRED_FILENAME = "inferred.partition"
REPORT_FILENAME = "detect.json"


@experiment_registry.register_experiment(name="detect")
class DetectExperiment(BaseExperiment):
    r"""Spectral detection on an edge list file. The group count comes from
    the edge list header and falls back to ``MODEL.Q``; accuracy is reported
    when a ground truth partition is given.
    """

    def run(self) -> None:
        edge_list = self.config.INPUT.EDGE_LIST
        assert edge_list, "detect needs INPUT.EDGE_LIST (--edges)"
        graph, header = read_edge_list(edge_list)
        q = header.get("q", self.model_config.MODEL.Q)
        if q != self.model_config.MODEL.Q:
            logger.info(
                "using q={} from the edge list header over MODEL.Q={}".format(
                    q, self.model_config.MODEL.Q
                )
            )

        options = DetectionOptions.from_config(self.model_config)
        result = spectral_partition_general(graph, q, options)
        write_partition(self.output_path(INFERRED_FILENAME), result.labels)

        score = None
        if self.config.INPUT.PARTITION:
            truth = read_partition(self.config.INPUT.PARTITION, q)
            score = accuracy(result.labels, truth)
            logger.info("accuracy {:.4f}".format(score))
        self.save_report(result.to_report(accuracy=score), REPORT_FILENAME)
