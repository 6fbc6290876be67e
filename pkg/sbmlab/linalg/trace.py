#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import attr
import numpy as np
from scipy.sparse.linalg import LinearOperator

from sbmlab.core.utils import make_generator


@attr.s(auto_attribs=True, frozen=True)
class TraceEstimate:
    estimate: float
    stderr: float
    n_probes: int


def rademacher_probes(n: int, n_probes: int, seed: int) -> np.ndarray:
    rng = make_generator(seed)
    return rng.choice(np.array([-1.0, 1.0]), size=(n, n_probes))


def moment_trace_estimate(
    op: LinearOperator, m_power: int, n_probes: int, seed: int = 0
) -> TraceEstimate:
    r"""Hutchinson estimate of ``Tr(Op^(2 m_power))`` for a symmetric
    operator.

    With Rademacher probes ``z`` the quadratic form ``z^T Op^(2m) z`` equals
    ``||Op^m z||^2``, so only ``m_power`` block applications are needed.
    ``m_power = 0`` returns ``n`` exactly.
    """
    if m_power < 0:
        raise ValueError(f"m_power must be non-negative, got {m_power}")
    if n_probes < 1:
        raise ValueError(f"n_probes must be positive, got {n_probes}")
    if getattr(op, "symmetric", True) is False:
        raise ValueError("moment_trace_estimate needs a symmetric operator")

    block = rademacher_probes(op.shape[0], n_probes, seed)
    for _ in range(m_power):
        block = op.matmat(block)
    samples = np.einsum("ij,ij->j", block, block)

    stderr = 0.0
    if n_probes > 1:
        stderr = float(samples.std(ddof=1) / np.sqrt(n_probes))
    return TraceEstimate(
        estimate=float(samples.mean()), stderr=stderr, n_probes=n_probes
    )
