#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from sbmlab.detect.scoring import accuracy, confusion_matrix
from sbmlab.detect.spectral import (
    DetectionOptions,
    DetectionResult,
    EmptyClusterError,
    eigenvector_overlap,
    kmeans_labels,
    sign_labels,
    spectral_partition_general,
    spectral_partition_q2,
)

__all__ = [
    "DetectionOptions",
    "DetectionResult",
    "EmptyClusterError",
    "accuracy",
    "confusion_matrix",
    "eigenvector_overlap",
    "kmeans_labels",
    "sign_labels",
    "spectral_partition_general",
    "spectral_partition_q2",
]
