#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Importing this package registers every experiment with
:ref:`experiment_registry`.
"""

from sbmlab_experiments.experiments.detect import DetectExperiment
from sbmlab_experiments.experiments.generate import GenerateExperiment
from sbmlab_experiments.experiments.moments import (
    MomentsExperiment,
    run_moment_check,
)
from sbmlab_experiments.experiments.outliers import (
    OutliersExperiment,
    run_outlier_check,
)
from sbmlab_experiments.experiments.spectrum import (
    SpectrumExperiment,
    run_spectrum_experiment,
)
from sbmlab_experiments.experiments.sweep import (
    SweepConfig,
    SweepExperiment,
    SweepRow,
    run_sweep,
)
from sbmlab_experiments.experiments.theory import TheoryExperiment
from sbmlab_experiments.experiments.transition import (
    TransitionExperiment,
    run_transition_scan,
)

__all__ = [
    "DetectExperiment",
    "GenerateExperiment",
    "MomentsExperiment",
    "OutliersExperiment",
    "SpectrumExperiment",
    "SweepConfig",
    "SweepExperiment",
    "SweepRow",
    "TheoryExperiment",
    "TransitionExperiment",
    "run_moment_check",
    "run_outlier_check",
    "run_spectrum_experiment",
    "run_sweep",
    "run_transition_scan",
]
