#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Large-``n`` spectrum of the planted partition.

``S = cin + cout`` and ``D = cin - cout`` throughout. The centered matrix
``X = A - <A>`` has a semicircular bulk of radius ``2 sqrt(c)``, with ``c``
the mean degree, which is ``sqrt(2 S)`` for two groups. With two groups
the modularity matrix adds a single outlier ``z1`` and the adjacency matrix
a second one ``z2``; with ``q`` groups there are ``q - 1`` modularity
outliers.
"""

import math
from typing import Union

import numpy as np

ArrayLike = Union[float, np.ndarray]

MAX_CATALAN_INDEX = 30


class SingularityError(ValueError):
    r"""Raised when a closed form is evaluated at its pole."""


def _total(cin: float, cout: float) -> float:
    total = float(cin) + float(cout)
    if total <= 0.0:
        raise ValueError(
            "the semicircle law needs cin + cout > 0, got {}".format(total)
        )
    return total


def band_edge(cin: float, cout: float) -> float:
    total = float(cin) + float(cout)
    if total < 0.0:
        raise ValueError(f"cin + cout must be non-negative, got {total}")
    return math.sqrt(2.0 * total)


def bulk_radius(q: int, cin: float, cout: float) -> float:
    r"""Edge of the bulk for ``q`` groups, ``2 sqrt(c)`` with ``c`` the mean
    degree ``[cin + (q - 1) cout] / q``.
    """
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    if cin < 0 or cout < 0:
        raise ValueError("cin and cout must be non-negative")
    return 2.0 * math.sqrt((float(cin) + (q - 1) * float(cout)) / q)


def _radius(q: int, cin: float, cout: float) -> float:
    _total(cin, cout)
    return bulk_radius(q, cin, cout)


def semicircle_density(
    z: ArrayLike,
    cin: float,
    cout: float,
    n: float = 1.0,
    normalized: bool = False,
    q: int = 2,
) -> ArrayLike:
    r"""Eigenvalue density ``(2 n / pi R^2) sqrt(R^2 - z^2)`` inside the band
    ``|z| <= R = 2 sqrt(c)`` and zero outside; for two groups this is
    ``(n / pi) sqrt(2S - z^2) / S``. With :p:`normalized` the ``n``
    prefactor is dropped and the density integrates to one.
    """
    radius = _radius(q, cin, cout)
    z = np.asarray(z, dtype=np.float64)
    radicand = np.clip(radius * radius - z * z, 0.0, None)
    density = 2.0 * np.sqrt(radicand) / (math.pi * radius * radius)
    if not normalized:
        density = float(n) * density
    return density if density.ndim else float(density)


def semicircle_cdf(
    z: ArrayLike, cin: float, cout: float, q: int = 2
) -> ArrayLike:
    r"""Cumulative distribution of the normalised semicircle density."""
    radius = _radius(q, cin, cout)
    x = np.clip(np.asarray(z, dtype=np.float64) / radius, -1.0, 1.0)
    cdf = 0.5 + (x * np.sqrt(1.0 - x * x) + np.arcsin(x)) / math.pi
    return cdf if cdf.ndim else float(cdf)


def stieltjes_trace(z: float, cin: float, cout: float, n: float) -> float:
    r"""Ensemble-averaged resolvent trace ``<Tr (zI - X)^-1>`` for real ``z``
    above the band edge, ``(n / S) [z - sqrt(z^2 - 2S)]``.
    """
    total = _total(cin, cout)
    if z <= math.sqrt(2.0 * total):
        raise ValueError(
            "the resolvent trace is real only above the band edge"
        )
    return float(n) / total * (z - math.sqrt(z * z - 2.0 * total))


def catalan(m_index: int) -> int:
    r"""Catalan number ``C_m = binom(2m, m) / (m + 1)`` in exact integer
    arithmetic; indices above 30 would overflow a signed 64-bit integer
    elsewhere and are rejected.
    """
    m_index = int(m_index)
    if m_index < 0:
        raise ValueError(f"Catalan index must be non-negative, got {m_index}")
    if m_index > MAX_CATALAN_INDEX:
        raise ValueError(
            f"Catalan index {m_index} exceeds {MAX_CATALAN_INDEX}"
        )
    return math.comb(2 * m_index, m_index) // (m_index + 1)


def trace_moment(m_index: int, cin: float, cout: float, n: float) -> float:
    r"""``Tr <X^(2m)> = n [S / 2]^m C_m`` for average degree much larger
    than one.
    """
    return float(n) * (0.5 * (float(cin) + float(cout))) ** m_index * catalan(
        m_index
    )


def z1_theory(cin: float, cout: float) -> float:
    r"""Leading modularity eigenvalue ``D / 2 + S / D``."""
    difference = float(cin) - float(cout)
    if difference == 0.0:
        raise SingularityError(
            "z1 is singular at cin == cout (no planted structure)"
        )
    return 0.5 * difference + (float(cin) + float(cout)) / difference


def z2_adjacency_theory(cin: float, cout: float) -> float:
    r"""Leading adjacency eigenvalue from the uniform component,
    ``S / 2 + 1``.
    """
    if cin < 0 or cout < 0:
        raise ValueError("cin and cout must be non-negative")
    return 0.5 * (float(cin) + float(cout)) + 1.0
