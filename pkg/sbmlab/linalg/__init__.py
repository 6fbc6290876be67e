#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from sbmlab.linalg.density import (
    DensityTable,
    bin_averages,
    histogram_l1_distance,
    spectral_histogram,
)
from sbmlab.linalg.eigensolvers import (
    ConvergenceError,
    SpectrumResult,
    dense_full_spectrum,
    extremal_eigenpairs,
    load_eigenvectors,
)
from sbmlab.linalg.operators import (
    GraphOperator,
    adjacency_operator,
    centered_operator,
    dense_operator,
    make_modularity_operator,
    modularity_cm_operator,
    modularity_er_operator,
    rank_one_operator,
    symmetry_defect,
)
from sbmlab.linalg.trace import TraceEstimate, moment_trace_estimate

__all__ = [
    "ConvergenceError",
    "DensityTable",
    "GraphOperator",
    "SpectrumResult",
    "TraceEstimate",
    "adjacency_operator",
    "bin_averages",
    "centered_operator",
    "dense_full_spectrum",
    "dense_operator",
    "extremal_eigenpairs",
    "histogram_l1_distance",
    "load_eigenvectors",
    "make_modularity_operator",
    "modularity_cm_operator",
    "modularity_er_operator",
    "moment_trace_estimate",
    "rank_one_operator",
    "spectral_histogram",
    "symmetry_defect",
]
