#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Symmetric eigensolvers.

``extremal_eigenpairs`` runs ARPACK's implicitly restarted Lanczos method
(``scipy.sparse.linalg.eigsh``, which reorthogonalises every new Lanczos
vector against the whole basis and replaces breakdown vectors by fresh
random ones) on a matrix-free operator. ``dense_full_spectrum`` materialises
the operator and calls LAPACK ``dsyev``: Householder reduction to
tridiagonal form followed by the implicit-shift QL/QR iteration.
"""

import struct
from typing import Optional

import attr
import numpy as np
import scipy.linalg
from scipy.sparse.linalg import ArpackNoConvergence, LinearOperator, eigsh

from sbmlab.core.logging import logger
from sbmlab.core.utils import make_generator

DEFAULT_TOL = 1e-8
DEFAULT_DENSE_LIMIT = 4096
DEFAULT_DENSE_FALLBACK = 64
# the Krylov solver is asked for a tighter tolerance than the residual check
ARPACK_TOL_FACTOR = 0.01
SYMMETRY_RTOL = 1e-10
EIGENVECTOR_HEADER = struct.Struct("<Q")


@attr.s(auto_attribs=True, eq=False)
class SpectrumResult:
    r"""Eigenvalues sorted in descending order with optional eigenvectors.

    :property eigenvalues: descending array of length ``k``.
    :property eigenvectors: ``(n, k)`` array of unit columns aligned with
        :p:`eigenvalues`, or :py:`None`.
    :property residuals: ``||Op v - z v||`` per pair, :py:`None` when no
        vectors were computed.
    :property iterations: number of operator applications.
    :property converged: whether every pair met the tolerance.
    """

    eigenvalues: np.ndarray
    eigenvectors: Optional[np.ndarray] = None
    residuals: Optional[np.ndarray] = None
    iterations: int = 0
    converged: bool = True
    solver: str = "lanczos"

    def to_dict(self):
        return {
            "eigenvalues": self.eigenvalues,
            "residuals": []
            if self.residuals is None
            else self.residuals,
            "iterations": int(self.iterations),
        }

    def save_eigenvectors(self, path: str) -> None:
        r"""Binary layout: an 8-byte little-endian unsigned count ``k``
        followed by ``k`` rows of ``n`` little-endian float64 values, one
        eigenvector per row.
        """
        assert self.eigenvectors is not None, "no eigenvectors to save"
        rows = np.ascontiguousarray(self.eigenvectors.T, dtype="<f8")
        with open(path, "wb") as f:
            f.write(EIGENVECTOR_HEADER.pack(rows.shape[0]))
            f.write(rows.tobytes(order="C"))


def load_eigenvectors(path: str) -> np.ndarray:
    r"""Reads a file written by :ref:`SpectrumResult.save_eigenvectors` and
    returns the ``(n, k)`` array of column eigenvectors.
    """
    with open(path, "rb") as f:
        (count,) = EIGENVECTOR_HEADER.unpack(f.read(EIGENVECTOR_HEADER.size))
        values = np.frombuffer(f.read(), dtype="<f8")
    if count == 0:
        return np.empty((0, 0))
    if values.size % count != 0:
        raise ValueError("eigenvector file is truncated")
    return values.reshape(count, -1).T.astype(np.float64)


class ConvergenceError(RuntimeError):
    r"""Raised when an eigensolver stops before reaching its tolerance. The
    best available result is kept in :py:`result`.
    """

    def __init__(self, message: str, result: Optional[SpectrumResult] = None):
        super().__init__(message)
        self.result = result


class _CountingOperator(LinearOperator):
    def __init__(self, op: LinearOperator) -> None:
        super().__init__(dtype=np.float64, shape=op.shape)
        self._op = op
        self.count = 0

    def _matvec(self, x):
        self.count += 1
        return self._op.matvec(x)

    def _matmat(self, X):
        self.count += X.shape[1]
        return self._op.matmat(X)


def default_max_iter(n: int) -> int:
    return int(10 * np.sqrt(n) + 200)


def _canonical_signs(vectors: np.ndarray) -> np.ndarray:
    r"""Flips each column so that its largest-magnitude entry is positive."""
    if vectors.size == 0:
        return vectors
    pivots = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[pivots, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    return vectors * signs


def _residuals(
    op: LinearOperator, values: np.ndarray, vectors: np.ndarray
) -> np.ndarray:
    return np.linalg.norm(op.matmat(vectors) - vectors * values, axis=0)


def _materialize(op: LinearOperator) -> np.ndarray:
    n = op.shape[0]
    # column j is Op e_j
    matrix = np.asarray(op.matmat(np.eye(n)), dtype=np.float64)
    scale = max(1.0, float(np.max(np.abs(matrix))) if n else 1.0)
    asymmetry = float(np.max(np.abs(matrix - matrix.T))) if n else 0.0
    if asymmetry > SYMMETRY_RTOL * n * scale:
        raise ValueError(
            f"operator is not symmetric (max |M - M^T| = {asymmetry})"
        )
    return 0.5 * (matrix + matrix.T)


def dense_full_spectrum(
    op: LinearOperator,
    n_limit: int = DEFAULT_DENSE_LIMIT,
    compute_eigenvectors: bool = False,
) -> SpectrumResult:
    r"""All eigenvalues (and optionally eigenvectors) of a symmetric operator
    of dimension at most :p:`n_limit`.
    """
    n = op.shape[0]
    if n > n_limit:
        raise ValueError(
            f"dimension {n} exceeds the dense solver limit {n_limit}"
        )
    matrix = _materialize(op)
    try:
        if compute_eigenvectors:
            values, vectors = scipy.linalg.eigh(
                matrix, driver="ev", overwrite_a=False
            )
        else:
            values = scipy.linalg.eigh(
                matrix, eigvals_only=True, driver="ev", overwrite_a=False
            )
            vectors = None
    except np.linalg.LinAlgError as e:
        raise ConvergenceError(
            "dense QL iteration failed: {}".format(e)
        ) from e

    order = np.argsort(values, kind="stable")[::-1]
    values = values[order]
    residuals = None
    if vectors is not None:
        vectors = _canonical_signs(vectors[:, order])
        residuals = np.linalg.norm(matrix @ vectors - vectors * values, axis=0)
    return SpectrumResult(
        eigenvalues=values,
        eigenvectors=vectors,
        residuals=residuals,
        iterations=n,
        converged=True,
        solver="dense",
    )


def _dense_top(
    op: LinearOperator, k: int, tol: float
) -> SpectrumResult:
    full = dense_full_spectrum(
        op, n_limit=op.shape[0], compute_eigenvectors=True
    )
    values = full.eigenvalues[:k]
    vectors = full.eigenvectors[:, :k]
    residuals = _residuals(op, values, vectors)
    return SpectrumResult(
        eigenvalues=values,
        eigenvectors=vectors,
        residuals=residuals,
        iterations=full.iterations,
        converged=bool(
            np.all(residuals <= tol * np.maximum(1.0, np.abs(values)))
        ),
        solver="dense",
    )


def extremal_eigenpairs(
    op: LinearOperator,
    k: int,
    tol: float = DEFAULT_TOL,
    max_iter: Optional[int] = None,
    seed: int = 0,
    ncv: Optional[int] = None,
    dense_fallback: int = DEFAULT_DENSE_FALLBACK,
) -> SpectrumResult:
    r"""The :p:`k` algebraically largest eigenpairs of a symmetric operator.

    :param op: symmetric operator of dimension ``n``.
    :param k: number of eigenpairs, ``1 <= k``.
    :param tol: every pair satisfies ``||Op v - z v|| <= tol * max(1, |z|)``.
    :param max_iter: restart budget, defaults to ``10 sqrt(n) + 200``.
    :param seed: seeds the Lanczos start vector.
    :param ncv: Krylov subspace size, defaults to ``max(2k + 1, 20)``.
    :param dense_fallback: operators of at most this dimension, or with
        ``k >= n / 2``, are solved densely.
    :raise ConvergenceError: the tolerance was not met; the exception
        carries the best pairs found.
    """
    n = op.shape[0]
    if not 1 <= k <= n:
        raise ValueError(f"k={k} must lie in [1, {n}]")
    if getattr(op, "symmetric", True) is False:
        raise ValueError("extremal_eigenpairs needs a symmetric operator")

    if n <= dense_fallback or 2 * k >= n:
        result = _dense_top(op, k, tol)
        if not result.converged:
            raise ConvergenceError(
                "dense eigenpairs exceed tolerance {}".format(tol), result
            )
        return result

    if max_iter is None or max_iter <= 0:
        max_iter = default_max_iter(n)
    if ncv is None or ncv <= 0:
        ncv = max(2 * k + 1, 20)
    ncv = min(ncv, n)

    rng = make_generator(seed)
    v0 = rng.standard_normal(n)
    counting = _CountingOperator(op)
    try:
        values, vectors = eigsh(
            counting,
            k=k,
            which="LA",
            v0=v0,
            ncv=ncv,
            maxiter=max_iter,
            tol=tol * ARPACK_TOL_FACTOR,
        )
    except ArpackNoConvergence as e:
        values = np.asarray(e.eigenvalues)
        vectors = np.asarray(e.eigenvectors)
        partial = None
        if values.size:
            order = np.argsort(values)[::-1]
            values, vectors = values[order], vectors[:, order]
            partial = SpectrumResult(
                eigenvalues=values,
                eigenvectors=vectors,
                residuals=_residuals(op, values, vectors),
                iterations=counting.count,
                converged=False,
            )
        else:
            partial = SpectrumResult(
                eigenvalues=values, iterations=counting.count, converged=False
            )
        raise ConvergenceError(
            "Lanczos did not converge in {} restarts ({} of {} pairs)".format(
                max_iter, values.size, k
            ),
            partial,
        ) from e

    order = np.argsort(values)[::-1]
    values = values[order]
    vectors = _canonical_signs(vectors[:, order])
    vectors = vectors / np.linalg.norm(vectors, axis=0)
    residuals = _residuals(op, values, vectors)
    result = SpectrumResult(
        eigenvalues=values,
        eigenvectors=vectors,
        residuals=residuals,
        iterations=counting.count,
        converged=True,
    )
    bound = tol * np.maximum(1.0, np.abs(values))
    if np.any(residuals > bound):
        result.converged = False
        raise ConvergenceError(
            "Lanczos residuals {} exceed tolerance {}".format(
                residuals.tolist(), tol
            ),
            result,
        )
    logger.debug(
        "Lanczos found {} pairs of {} in {} operator applications".format(
            k, repr(op), counting.count
        )
    )
    return result
