#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from sbmlab.core.utils import to_json
from sbmlab.theory import predict
from sbmlab_experiments.common.base_experiment import BaseExperiment
from sbmlab_experiments.common.experiment_registry import (
    experiment_registry,
)


@experiment_registry.register_experiment(name="theory")
class TheoryExperiment(BaseExperiment):
    def run(self) -> None:
        params, _ = self.planted_model()
        report = predict(params).to_dict()
        print(to_json(report))
        self.save_report(report, "theory.json")
