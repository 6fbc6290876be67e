#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from sbmlab.config import Config, get_config
from sbmlab.core.logging import logger
from sbmlab.core.registry import registry  # noqa : F401
from sbmlab.detect import (
    DetectionOptions,
    DetectionResult,
    accuracy,
    spectral_partition_general,
    spectral_partition_q2,
)
from sbmlab.graphs import (
    BlockParams,
    Graph,
    Partition,
    make_planted_partition,
    mean_degree,
    sample_graph,
)
from sbmlab.linalg import (
    ConvergenceError,
    SpectrumResult,
    dense_full_spectrum,
    extremal_eigenpairs,
)
from sbmlab.theory import TheoryPrediction, predict
from sbmlab.version import VERSION as __version__  # noqa

__all__ = [
    "BlockParams",
    "Config",
    "ConvergenceError",
    "DetectionOptions",
    "DetectionResult",
    "Graph",
    "Partition",
    "SpectrumResult",
    "TheoryPrediction",
    "accuracy",
    "dense_full_spectrum",
    "extremal_eigenpairs",
    "get_config",
    "logger",
    "make_planted_partition",
    "mean_degree",
    "predict",
    "sample_graph",
    "spectral_partition_general",
    "spectral_partition_q2",
]
