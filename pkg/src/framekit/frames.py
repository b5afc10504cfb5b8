"""Frames for C^N and the basic frame calculus.

A family of M vectors in C^N is stored as the N x M matrix whose columns
are the vectors (the synthesis matrix). The analysis map sends a signal x
to its coefficient vector (<x, x_n>)_n; inner products are linear in the
first slot and conjugate-linear in the second. Public indices are 1-based.
"""

from __future__ import annotations

import numpy as np

from .errors import BadIndexSet, DimensionMismatch, NotADual, NotAFrame
from .linalg import (
    DEFAULT_TOL,
    Tolerances,
    as_matrix,
    as_vector,
    max_abs,
    numeric_rank,
    solve_linear,
)

__all__ = [
    "VectorFamily",
    "Frame",
    "DualFrame",
    "analysis",
    "synthesis",
    "frame_operator",
    "frame_bounds",
    "canonical_dual",
    "is_parseval",
    "cross_gramian",
    "is_dual_pair",
]


class VectorFamily:
    """An ordered family of vectors in C^N, with no spanning requirement."""

    __slots__ = ("_matrix",)

    def __init__(self, matrix):
        m = as_matrix(matrix, "synthesis matrix").copy()
        m.flags.writeable = False
        self._matrix = m

    @classmethod
    def from_vectors(cls, vectors):
        """Build from an iterable of equal-length vectors."""
        cols = [as_vector(v, name="family vector") for v in vectors]
        if not cols:
            raise DimensionMismatch("a family needs at least one vector")
        lengths = {c.shape[0] for c in cols}
        if len(lengths) != 1:
            raise DimensionMismatch(f"vectors of mixed lengths {sorted(lengths)}")
        return cls(np.column_stack(cols))

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    @property
    def count(self) -> int:
        return self._matrix.shape[1]

    def vector(self, n: int) -> np.ndarray:
        """The n-th vector, 1-based."""
        if not 1 <= n <= self.count:
            raise BadIndexSet(f"vector index {n} out of range 1..{self.count}")
        return self._matrix[:, n - 1].copy()

    def norms(self) -> np.ndarray:
        return np.linalg.norm(self._matrix, axis=0)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self.dim}, count={self.count})"


class Frame(VectorFamily):
    """A spanning family: the synthesis matrix has full numeric row rank."""

    def __init__(self, matrix, tol: Tolerances = DEFAULT_TOL):
        super().__init__(matrix)
        if numeric_rank(self._matrix, tol) != self.dim:
            raise NotAFrame(
                f"{self.count} vectors do not span C^{self.dim} at rank_rel={tol.rank_rel}"
            )

    @classmethod
    def from_vectors(cls, vectors, tol: Tolerances = DEFAULT_TOL):
        fam = VectorFamily.from_vectors(vectors)
        return cls(fam.matrix, tol)


class DualFrame:
    """A frame paired with the frame it reconstructs.

    Validated eagerly: sum_n theta_{v_n, x_n} must equal the identity
    within eq_abs, which is the reconstruction identity in matrix form.
    """

    __slots__ = ("frame", "original")

    def __init__(self, frame: Frame, original: Frame, tol: Tolerances = DEFAULT_TOL):
        if not isinstance(frame, Frame) or not isinstance(original, Frame):
            raise TypeError("DualFrame needs two Frame instances")
        if not is_dual_pair(original, frame, tol):
            raise NotADual("reconstruction identity fails within eq_abs")
        self.frame = frame
        self.original = original

    @property
    def matrix(self) -> np.ndarray:
        return self.frame.matrix

    def vector(self, n: int) -> np.ndarray:
        return self.frame.vector(n)

    def __repr__(self) -> str:
        return f"DualFrame(dim={self.frame.dim}, count={self.frame.count})"


def _family_matrix(d) -> np.ndarray:
    if isinstance(d, DualFrame):
        return d.frame.matrix
    if isinstance(d, VectorFamily):
        return d.matrix
    return as_matrix(d, "vector family")


def sorted_index_array(indices, bound: int, name: str = "index set") -> np.ndarray:
    """Normalize 1-based indices: sort, reject duplicates/range errors; 0-based out."""
    idx = []
    for i in indices:
        if not isinstance(i, (int, np.integer)):
            raise BadIndexSet(f"{name}: index {i!r} is not an integer")
        idx.append(int(i))
    if len(set(idx)) != len(idx):
        raise BadIndexSet(f"{name} contains duplicates: {sorted(idx)}")
    if idx and (min(idx) < 1 or max(idx) > bound):
        raise BadIndexSet(f"{name} {sorted(idx)} out of range 1..{bound}")
    return np.asarray(sorted(idx), dtype=np.intp) - 1


def analysis(f: VectorFamily, x) -> np.ndarray:
    """Coefficients (<x, x_n>)_{n=1..M} of a signal against the family."""
    x = as_vector(x, f.dim, "signal")
    return f.matrix.conj().T @ x


def synthesis(f: VectorFamily, coeffs) -> np.ndarray:
    """Weighted sum sum_n c_n x_n of the family vectors."""
    c = as_vector(coeffs, f.count, "coefficients")
    return f.matrix @ c


def frame_operator(f: VectorFamily) -> np.ndarray:
    """The N x N positive operator sum_n theta_{x_n, x_n}."""
    return f.matrix @ f.matrix.conj().T


def frame_bounds(f: Frame) -> tuple[float, float]:
    """Optimal frame bounds: extreme eigenvalues of the frame operator."""
    op = frame_operator(f)
    w = np.linalg.eigvalsh((op + op.conj().T) / 2.0)
    return float(w[0]), float(w[-1])


def canonical_dual(f: Frame, tol: Tolerances = DEFAULT_TOL) -> DualFrame:
    """The dual frame obtained by applying the inverse frame operator."""
    dual_matrix = solve_linear(frame_operator(f), f.matrix, tol)
    return DualFrame(Frame(dual_matrix, tol), f, tol)


def is_parseval(f: VectorFamily, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True when the frame operator equals the identity within eq_abs."""
    return max_abs(frame_operator(f) - np.eye(f.dim)) <= tol.eq_abs


def cross_gramian(f: VectorFamily, d, erased) -> np.ndarray:
    """The k x k matrix with entry (i, j) = <z_{n_j}, x_{n_i}>.

    Here (z_n) is the candidate dual family and {n_1 < ... < n_k} the
    erased positions. The family may be a DualFrame, a VectorFamily or a
    raw matrix with one column per vector.
    """
    z = _family_matrix(d)
    if z.shape != f.matrix.shape:
        raise DimensionMismatch(
            f"family shape {z.shape} does not match frame shape {f.matrix.shape}"
        )
    idx = sorted_index_array(erased, f.count, "erased set")
    xe = f.matrix[:, idx]
    ze = z[:, idx]
    return xe.conj().T @ ze


def is_dual_pair(f: VectorFamily, g, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True when sum_n theta_{g_n, f_n} equals the identity within eq_abs."""
    gm = _family_matrix(g)
    if gm.shape != f.matrix.shape:
        raise DimensionMismatch(
            f"dual candidate shape {gm.shape} does not match frame shape {f.matrix.shape}"
        )
    return max_abs(gm @ f.matrix.conj().T - np.eye(f.dim)) <= tol.eq_abs
