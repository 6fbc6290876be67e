#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import itertools

import numpy as np

from sbmlab.graphs.block_model import Partition

MAX_PERMUTATION_GROUPS = 8


def confusion_matrix(inferred: Partition, truth: Partition) -> np.ndarray:
    r"""``C[r, s]`` counts vertices with true group ``r`` and inferred group
    ``s``.
    """
    q = truth.q
    flat = truth.labels * q + inferred.labels
    return np.bincount(flat, minlength=q * q).reshape(q, q)


def accuracy(inferred: Partition, truth: Partition) -> float:
    r"""Fraction of correctly classified vertices, maximised over all
    relabelings of the inferred groups. Brute force over the ``q!``
    permutations, so ``q`` is limited to 8.
    """
    if inferred.n != truth.n:
        raise ValueError(
            f"partitions have different sizes {inferred.n} != {truth.n}"
        )
    if inferred.q != truth.q:
        raise ValueError(
            f"partitions have different group counts {inferred.q} != "
            f"{truth.q}"
        )
    if truth.q > MAX_PERMUTATION_GROUPS:
        raise ValueError(
            f"accuracy enumerates q! relabelings; q={truth.q} exceeds "
            f"{MAX_PERMUTATION_GROUPS}"
        )
    if truth.n == 0:
        return 1.0

    q = truth.q
    confusion = confusion_matrix(inferred, truth)
    permutations = np.array(list(itertools.permutations(range(q))))
    agreements = confusion[np.arange(q), permutations].sum(axis=1)
    return float(agreements.max()) / truth.n
