#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import math
from typing import Any, Dict, Optional

import attr
from scipy.special import erf

from sbmlab.graphs.block_model import BlockParams
from sbmlab.theory.spectrum import (
    band_edge,
    bulk_radius,
    z1_theory,
    z2_adjacency_theory,
)

UNDEFINED = "undefined"
NOT_APPLICABLE = "not_applicable"


class UnsupportedRegimeError(ValueError):
    r"""Raised for disassortative parameters (``cin < cout``)."""


def _check_assortative(cin: float, cout: float) -> None:
    if cin < 0 or cout < 0:
        raise ValueError("cin and cout must be non-negative")
    if cin < cout:
        raise UnsupportedRegimeError(
            "disassortative parameters cin={} < cout={} are not "
            "supported".format(cin, cout)
        )


def detectability_margin(q: int, cin: float, cout: float) -> float:
    r"""``(cin - cout) - sqrt(q [cin + (q - 1) cout])``; communities are
    detectable by the spectral method exactly when it is positive.
    """
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    _check_assortative(cin, cout)
    return (float(cin) - float(cout)) - math.sqrt(
        q * (float(cin) + (q - 1) * float(cout))
    )


def alpha_squared(cin: float, cout: float) -> float:
    r"""Squared overlap between the leading modularity eigenvector and the
    planted indicator vector, ``[D^2 - 2S] / D^2``, clamped below at zero.
    """
    _check_assortative(cin, cout)
    difference = float(cin) - float(cout)
    if difference == 0.0:
        return 0.0
    value = (difference ** 2 - 2.0 * (float(cin) + float(cout))) / (
        difference ** 2
    )
    return max(value, 0.0)


def accuracy_from_alpha_squared(alpha2: float) -> float:
    if alpha2 <= 0.0:
        return 0.5
    if alpha2 >= 1.0:
        return 1.0
    argument = math.sqrt(alpha2 / (2.0 * (1.0 - alpha2)))
    return 0.5 * (1.0 + float(erf(argument)))


def expected_accuracy(cin: float, cout: float) -> float:
    r"""Expected fraction of vertices whose sign in the leading eigenvector
    matches their group, ``(1 + erf sqrt(a / 2(1 - a))) / 2`` with ``a`` the
    clamped alpha squared. ``scipy.special.erf`` is accurate to about
    ``1e-16`` relative.
    """
    return accuracy_from_alpha_squared(alpha_squared(cin, cout))


def order_parameter(accuracy: float) -> float:
    return float(accuracy) - 0.5


@attr.s(auto_attribs=True, kw_only=True)
class TheoryPrediction:
    r"""Closed-form predictions for one parameter set. Fields that cannot be
    evaluated are :py:`None` and explained in :p:`flags`.
    """

    n: int
    q: int
    cin: float
    cout: float
    band_edge: float
    z1: Optional[float]
    z2_adjacency: Optional[float]
    detectability_margin: float
    detectable: bool
    alpha_squared: Optional[float]
    expected_accuracy: Optional[float]
    flags: Dict[str, str] = attr.Factory(dict)

    def to_dict(self) -> Dict[str, Any]:
        return attr.asdict(self)


def predict(params: BlockParams) -> TheoryPrediction:
    r"""Bundles the closed forms for :p:`params`. The outlier eigenvalues and
    the accuracy curve are two-group results; for ``q > 2`` only the margin,
    the detectable flag and the bulk edge ``2 sqrt(c)`` are filled in.
    """
    margin = detectability_margin(params.q, params.cin, params.cout)
    flags: Dict[str, str] = {}
    if params.q == 2:
        edge = band_edge(params.cin, params.cout)
        z2 = z2_adjacency_theory(params.cin, params.cout)
        alpha2: Optional[float] = alpha_squared(params.cin, params.cout)
        accuracy: Optional[float] = accuracy_from_alpha_squared(alpha2)
        if params.cin == params.cout:
            z1: Optional[float] = None
            flags["z1"] = UNDEFINED
        else:
            z1 = z1_theory(params.cin, params.cout)
    else:
        edge = bulk_radius(params.q, params.cin, params.cout)
        z1 = z2 = alpha2 = accuracy = None
        for field in (
            "z1",
            "z2_adjacency",
            "alpha_squared",
            "expected_accuracy",
        ):
            flags[field] = NOT_APPLICABLE

    return TheoryPrediction(
        n=params.n,
        q=params.q,
        cin=params.cin,
        cout=params.cout,
        band_edge=edge,
        z1=z1,
        z2_adjacency=z2,
        detectability_margin=margin,
        detectable=margin > 0.0,
        alpha_squared=alpha2,
        expected_accuracy=accuracy,
        flags=flags,
    )
