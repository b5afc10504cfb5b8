"""Dense complex linear algebra with explicit numeric tolerances.

Everything operates on plain numpy arrays in complex double precision.
Matrices are dense and desk-scale (dimensions up to a few dozen); there is
no sparse or iterative path. Invertibility always means numeric: smallest
singular value (or pivot) above a relative cutoff.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadIndexSet,
    DimensionMismatch,
    NonFiniteInput,
    NotHermitian,
    NotPositiveDefinite,
    SingularMatrix,
)

__all__ = [
    "Tolerances",
    "DEFAULT_TOL",
    "as_matrix",
    "as_vector",
    "inner",
    "rank_one",
    "max_abs",
    "solve_linear",
    "hermitian_inv_sqrt",
    "minor_det",
    "numeric_rank",
    "is_invertible",
]


@dataclass(frozen=True)
class Tolerances:
    """Numeric thresholds used across the library.

    rank_rel:  relative singular-value / pivot cutoff for invertibility.
    eq_abs:    absolute entrywise tolerance for matrix equality.
    psd_floor: smallest admissible eigenvalue of a positive operator.
    """

    rank_rel: float = 1e-10
    eq_abs: float = 1e-9
    psd_floor: float = 1e-12

    def __post_init__(self) -> None:
        if min(self.rank_rel, self.eq_abs, self.psd_floor) <= 0.0:
            raise ValueError("all tolerances must be strictly positive")
        if self.rank_rel >= 1.0:
            raise ValueError("rank_rel must be below 1")


DEFAULT_TOL = Tolerances()


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce to a finite 2-D complex array."""
    arr = np.asarray(getattr(a, "matrix", a), dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise DimensionMismatch(f"{name} must be 2-D with positive shape, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput(f"{name} contains NaN or Inf entries")
    return arr


def as_vector(x, length: int | None = None, name: str = "vector") -> np.ndarray:
    """Coerce to a finite 1-D complex array, optionally of a fixed length."""
    arr = np.asarray(x, dtype=np.complex128)
    if arr.ndim != 1:
        raise DimensionMismatch(f"{name} must be 1-D, got shape {arr.shape}")
    if length is not None and arr.shape[0] != length:
        raise DimensionMismatch(f"{name} has length {arr.shape[0]}, expected {length}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput(f"{name} contains NaN or Inf entries")
    return arr


def inner(x: np.ndarray, y: np.ndarray) -> complex:
    """Hermitian inner product, linear in x and conjugate-linear in y."""
    return complex(np.vdot(y, x))


def rank_one(y: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Matrix of v -> <v, x> y, i.e. the outer product y x*."""
    return np.outer(y, np.conj(x))


def max_abs(a: np.ndarray) -> float:
    """Largest entry magnitude (max norm); 0 for empty arrays."""
    return float(np.max(np.abs(a))) if a.size else 0.0


def solve_linear(a, b, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Solve A X = B by partially pivoted Gaussian elimination.

    B may be a vector or a matrix of stacked right-hand sides; the result
    has B's shape. Raises SingularMatrix as soon as a pivot falls below
    rank_rel times the largest entry magnitude of the initial matrix.
    """
    a = as_matrix(a, "A")
    k = a.shape[0]
    if a.shape[1] != k:
        raise DimensionMismatch(f"A must be square, got {a.shape}")
    b_arr = np.asarray(b, dtype=np.complex128)
    vector_rhs = b_arr.ndim == 1
    rhs = as_matrix(b_arr[:, None] if vector_rhs else b_arr, "B")
    if rhs.shape[0] != k:
        raise DimensionMismatch(f"B has {rhs.shape[0]} rows, expected {k}")

    aug = np.hstack([a, rhs])
    cutoff = tol.rank_rel * max_abs(a)
    for col in range(k):
        p = col + int(np.argmax(np.abs(aug[col:, col])))
        pivot = aug[p, col]
        if abs(pivot) < cutoff or pivot == 0:
            raise SingularMatrix(
                f"pivot {abs(pivot):.3e} below cutoff {cutoff:.3e} at step {col + 1}"
            )
        if p != col:
            aug[[col, p]] = aug[[p, col]]
        factors = aug[col + 1 :, col] / pivot
        aug[col + 1 :, col:] -= np.outer(factors, aug[col, col:])

    x = np.zeros((k, rhs.shape[1]), dtype=np.complex128)
    for i in range(k - 1, -1, -1):
        x[i] = (aug[i, k:] - aug[i, i + 1 : k] @ x[i + 1 :]) / aug[i, i]
    return x[:, 0] if vector_rhs else x


def hermitian_inv_sqrt(a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Inverse square root of a Hermitian positive definite matrix.

    The input is symmetrized to (A + A*)/2 before the eigendecomposition,
    which guards against drift accumulated in operator products. The
    result S is Hermitian positive and satisfies S A S = I.
    """
    a = as_matrix(a, "A")
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"A must be square, got {a.shape}")
    if max_abs(a - a.conj().T) > tol.eq_abs:
        raise NotHermitian("matrix is not Hermitian within eq_abs")
    h = (a + a.conj().T) / 2.0
    w, q = np.linalg.eigh(h)
    if w[0] < tol.psd_floor:
        raise NotPositiveDefinite(f"eigenvalue {w[0]:.3e} below floor {tol.psd_floor:.1e}")
    s = (q / np.sqrt(w)) @ q.conj().T
    return (s + s.conj().T) / 2.0


def check_index_set(indices, bound: int, name: str = "index set") -> np.ndarray:
    """Validate 1-based strictly increasing indices; return them 0-based."""
    idx = []
    for i in indices:
        if not isinstance(i, (int, np.integer)):
            raise BadIndexSet(f"{name}: index {i!r} is not an integer")
        idx.append(int(i))
    if len(idx) == 0:
        raise BadIndexSet(f"{name} is empty")
    for prev, cur in zip(idx, idx[1:]):
        if cur <= prev:
            raise BadIndexSet(f"{name} must be strictly increasing, got {idx}")
    if idx[0] < 1 or idx[-1] > bound:
        raise BadIndexSet(f"{name} {idx} out of range 1..{bound}")
    return np.asarray(idx, dtype=np.intp) - 1


def minor_det(a, rows, cols) -> complex:
    """Determinant of the submatrix selected by 1-based index sets.

    Both sets must be strictly increasing and of equal positive size; the
    determinant is computed by pivoted elimination.
    """
    arr = as_matrix(a, "A")
    ri = check_index_set(rows, arr.shape[0], "row set")
    ci = check_index_set(cols, arr.shape[1], "col set")
    if ri.shape[0] != ci.shape[0]:
        raise BadIndexSet(f"row/col sets differ in size: {ri.size} vs {ci.size}")
    return complex(np.linalg.det(arr[np.ix_(ri, ci)]))


def numeric_rank(a, tol: Tolerances = DEFAULT_TOL) -> int:
    """Number of singular values above rank_rel times the largest one."""
    arr = as_matrix(a, "A")
    s = np.linalg.svd(arr, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol.rank_rel * s[0]))


def is_invertible(a, tol: Tolerances = DEFAULT_TOL, scale_floor: float = 1.0) -> bool:
    """Numeric invertibility of a square matrix (empty counts as invertible).

    The smallest singular value is compared against rank_rel times
    max(scale_floor, largest singular value). The default floor of 1 suits
    the identity-shifted matrices tested throughout this library (G - I,
    I - sum theta): when such a matrix is numerically zero its own scale
    is meaningless, but the subtracted identity fixes the scale at 1.
    """
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got {arr.shape}")
    if arr.size == 0:
        return True
    s = np.linalg.svd(arr, compute_uv=False)
    return bool(s[-1] > tol.rank_rel * max(scale_floor, s[0]))
