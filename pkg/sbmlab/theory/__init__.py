#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from sbmlab.theory.detectability import (
    TheoryPrediction,
    UnsupportedRegimeError,
    accuracy_from_alpha_squared,
    alpha_squared,
    detectability_margin,
    expected_accuracy,
    order_parameter,
    predict,
)
from sbmlab.theory.spectrum import (
    SingularityError,
    band_edge,
    bulk_radius,
    catalan,
    semicircle_cdf,
    semicircle_density,
    stieltjes_trace,
    trace_moment,
    z1_theory,
    z2_adjacency_theory,
)

__all__ = [
    "SingularityError",
    "TheoryPrediction",
    "UnsupportedRegimeError",
    "accuracy_from_alpha_squared",
    "alpha_squared",
    "band_edge",
    "bulk_radius",
    "catalan",
    "detectability_margin",
    "expected_accuracy",
    "order_parameter",
    "predict",
    "semicircle_cdf",
    "semicircle_density",
    "stieltjes_trace",
    "trace_moment",
    "z1_theory",
    "z2_adjacency_theory",
]
