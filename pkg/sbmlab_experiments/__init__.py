#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from sbmlab_experiments.common.base_experiment import BaseExperiment
from sbmlab_experiments.common.experiment_registry import (
    experiment_registry,
)

__all__ = ["BaseExperiment", "experiment_registry"]
