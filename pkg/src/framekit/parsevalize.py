"""Converting frames to Parseval form.

Two routes are exposed. The positive route scales every vector by the
inverse square root of the frame operator. The iterative route applies a
product R of rank-one inverse square roots, one per vector beyond an
orthonormal leading block: R is invertible (not positive in general),
satisfies R (I + sum theta_{f_n, f_n}) R* = I, and preserves the full
spark property because it is invertible. A unit-norm vector in a Parseval
frame is orthogonal to everything else, so it blocks single erasures;
plane rotations against a shorter partner remove such vectors while
keeping the frame Parseval, yielding a 1-robust Parseval frame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    FirstBlockNotOrthonormal,
    IsOrthonormalBasis,
    NoPartner,
    NotParseval,
)
from .frames import Frame, frame_operator, is_parseval
from .linalg import DEFAULT_TOL, Tolerances, as_matrix, as_vector, hermitian_inv_sqrt, max_abs, rank_one

__all__ = [
    "CorrectionOperator",
    "associated_parseval",
    "inv_sqrt_rank_one",
    "correction_operator",
    "orthobasis_extension_parseval",
    "paulsen_rotation",
    "make_1_robust",
]


@dataclass(frozen=True)
class CorrectionOperator:
    """The operator R and its rank-one inverse-square-root factors.

    ``factors`` is ordered by application: R equals the reversed product
    factors[-1] @ ... @ factors[0].
    """

    matrix: np.ndarray
    factors: tuple


def associated_parseval(f: Frame, tol: Tolerances = DEFAULT_TOL) -> Frame:
    """Parseval frame obtained through the inverse square root of the frame operator."""
    s = hermitian_inv_sqrt(frame_operator(f), tol)
    return Frame(s @ f.matrix, tol)


def inv_sqrt_rank_one(x) -> np.ndarray:
    """Closed-form inverse square root of I + theta_{x, x}.

    (I + theta_{x,x})^{-1/2}
        = I + (1/|x|^2) (1/sqrt(1 + |x|^2) - 1) theta_{x,x};
    the zero vector yields the identity.
    """
    x = as_vector(x, name="x")
    ns = float(np.vdot(x, x).real)
    if ns == 0.0:
        return np.eye(x.shape[0], dtype=np.complex128)
    coef = (1.0 / math.sqrt(1.0 + ns) - 1.0) / ns
    return np.eye(x.shape[0]) + coef * rank_one(x, x)


def correction_operator(vectors) -> CorrectionOperator:
    """Iterative correction for an operator of the form I + sum theta_{f_n, f_n}.

    Pass the vectors as an N x M matrix of columns (M may be zero) or as a
    non-empty list of vectors. Step k replaces every remaining vector by
    its image under the inverse square root of I + theta taken at the
    current k-th vector; the product of the M factors is returned.
    """
    work = _column_matrix(vectors)
    n, m = work.shape
    r = np.eye(n, dtype=np.complex128)
    factors = []
    for k in range(m):
        factor = inv_sqrt_rank_one(work[:, k])
        work = factor @ work
        r = factor @ r
        factors.append(factor)
    return CorrectionOperator(r, tuple(factors))


def _column_matrix(vectors) -> np.ndarray:
    arr = np.asarray(vectors, dtype=np.complex128)
    if arr.ndim == 2 and not isinstance(vectors, (list, tuple)):
        if arr.shape[1] == 0:
            return arr
        return as_matrix(arr, "vectors")
    cols = [as_vector(v, name="vector") for v in vectors]
    if not cols:
        raise ValueError("pass an N x 0 matrix for the empty family")
    return np.column_stack(cols)


def orthobasis_extension_parseval(f: Frame, tol: Tolerances = DEFAULT_TOL) -> Frame:
    """Parseval-ize a frame whose leading dim-many vectors are orthonormal.

    The correction operator of the tail is applied to every vector. The
    output is Parseval, and full spark frames stay full spark because the
    correction is invertible.
    """
    n = f.dim
    b = f.matrix[:, :n]
    if max_abs(b.conj().T @ b - np.eye(n)) > tol.eq_abs:
        raise FirstBlockNotOrthonormal("leading vectors are not an orthonormal basis")
    co = correction_operator(f.matrix[:, n:])
    return Frame(co.matrix @ f.matrix, tol)


def paulsen_rotation(f: Frame, i: int, phi: float, tol: Tolerances = DEFAULT_TOL) -> Frame:
    """Rotate a unit-norm vector against a shorter partner, staying Parseval.

    Position i must hold a unit-norm vector; the partner is the smallest
    index j != i with norm below 1. Both rotated vectors end up strictly
    shorter than 1. The angle must lie strictly inside (0, pi/2).
    """
    if not is_parseval(f, tol):
        raise NotParseval("rotation requires a Parseval frame")
    if not 1 <= i <= f.count:
        raise ValueError(f"index {i} out of range 1..{f.count}")
    if not 0.0 < phi < math.pi / 2.0:
        raise ValueError(f"angle must lie strictly inside (0, pi/2), got {phi}")
    norms = f.norms()
    if abs(norms[i - 1] - 1.0) > tol.eq_abs:
        raise ValueError(f"vector {i} has norm {norms[i - 1]:.6f}, expected 1")
    partners = [j for j in range(1, f.count + 1)
                if j != i and norms[j - 1] < 1.0 - tol.rank_rel]
    if not partners:
        raise NoPartner("every other vector has unit norm")
    j = partners[0]
    new = np.array(f.matrix)
    xi = f.matrix[:, i - 1]
    xj = f.matrix[:, j - 1]
    new[:, i - 1] = math.cos(phi) * xi + math.sin(phi) * xj
    new[:, j - 1] = -math.sin(phi) * xi + math.cos(phi) * xj
    return Frame(new, tol)


def make_1_robust(f: Frame, tol: Tolerances = DEFAULT_TOL) -> Frame:
    """Rotate away unit-norm vectors until the Parseval frame is 1-robust.

    Each quarter-pi rotation strictly lowers both affected norms below 1,
    so at most M rotations are needed. A frame that is already 1-robust is
    returned unchanged; an orthonormal basis is rejected since every
    single erasure destroys it.
    """
    if not is_parseval(f, tol):
        raise NotParseval("only Parseval frames are handled")
    current = f
    for _ in range(f.count):
        units = [n for n in range(1, current.count + 1)
                 if current.norms()[n - 1] >= 1.0 - tol.rank_rel]
        if not units:
            return current
        if len(units) == current.count:
            raise IsOrthonormalBasis("all vectors have unit norm")
        current = paulsen_rotation(current, units[0], math.pi / 4.0, tol)
    units = [n for n in range(1, current.count + 1)
             if current.norms()[n - 1] >= 1.0 - tol.rank_rel]
    if units:
        raise AssertionError("rotation failed to clear unit-norm vectors")
    return current
