"""Minimal-redundancy checks and erasure-compensating dual frames.

An erasure set E marks coefficient positions lost in transit. When the
surviving vectors still span the space (the minimal redundancy condition,
MRC), there is a dual frame that vanishes on E, so the lost coefficients
never enter the reconstruction at all. Four interchangeable constructions
of that dual are provided, together with three equivalent MRC criteria and
a witness-style sufficient criterion.

Construction routes, all yielding the same dual:

* ``system``:   solve the k x k linear system for the correction
  coefficients alpha and form v_n = y_n - sum_i alpha_ni y_{n_i};
* ``operator``: v_n = (I - sum_i theta_{y_{n_i}, x_{n_i}})^{-1} y_n;
* ``single``:   closed form for one erased index, no linear solve;
* ``chain``:    the inverse above assembled as an ordered product of k
  rank-one inverses;
* ``closed``:   the inverse above in closed form I + sum c_ij theta.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BadIndexSet,
    DimensionMismatch,
    MrcViolated,
    NotADual,
    NotInvertible,
    PrefixNotInvertible,
)
from .frames import DualFrame, Frame, VectorFamily, canonical_dual, cross_gramian, is_dual_pair
from .linalg import (
    DEFAULT_TOL,
    Tolerances,
    as_vector,
    inner,
    is_invertible,
    rank_one,
    solve_linear,
)

__all__ = [
    "ErasureSet",
    "CompensatingDual",
    "mrc_by_span",
    "mrc_by_gramian",
    "mrc_by_operator",
    "mrc_witness",
    "compensating_dual_system",
    "compensating_dual_operator",
    "single_erasure_dual",
    "compensating_dual",
    "ALGORITHMS",
    "rank_one_inverse",
    "chain_inverse",
    "closed_form_inverse",
    "reconstruct",
]


class ErasureSet:
    """Sorted distinct 1-based coefficient positions marked as lost.

    The empty set is allowed as the degenerate no-erasure case; bounds
    against a concrete frame are checked by the operations that use it.
    """

    __slots__ = ("_indices",)

    def __init__(self, indices=()):
        idx = []
        for i in indices:
            if not isinstance(i, (int, np.integer)):
                raise BadIndexSet(f"erased index {i!r} is not an integer")
            idx.append(int(i))
        if idx and min(idx) < 1:
            raise BadIndexSet(f"erased indices must be >= 1, got {sorted(idx)}")
        if len(set(idx)) != len(idx):
            raise BadIndexSet(f"erased indices contain duplicates: {sorted(idx)}")
        self._indices = tuple(sorted(idx))

    @property
    def indices(self) -> tuple[int, ...]:
        return self._indices

    @property
    def k(self) -> int:
        return len(self._indices)

    def check_bound(self, count: int) -> None:
        if self._indices and self._indices[-1] > count:
            raise BadIndexSet(
                f"erased index {self._indices[-1]} exceeds family size {count}"
            )

    def survivors(self, count: int) -> tuple[int, ...]:
        """The complementary 1-based positions among 1..count."""
        self.check_bound(count)
        gone = set(self._indices)
        return tuple(n for n in range(1, count + 1) if n not in gone)

    def zero_based(self) -> np.ndarray:
        return np.asarray(self._indices, dtype=np.intp) - 1

    def __len__(self) -> int:
        return len(self._indices)

    def __iter__(self):
        return iter(self._indices)

    def __getitem__(self, i):
        return self._indices[i]

    def __contains__(self, n) -> bool:
        return n in self._indices

    def __eq__(self, other) -> bool:
        return isinstance(other, ErasureSet) and self._indices == other._indices

    def __hash__(self) -> int:
        return hash(self._indices)

    def __repr__(self) -> str:
        return f"ErasureSet({list(self._indices)})"


def _as_erasure(erased) -> ErasureSet:
    return erased if isinstance(erased, ErasureSet) else ErasureSet(erased)


@dataclass(frozen=True)
class CompensatingDual:
    """A dual frame vanishing on the erased positions, plus its corrections.

    ``alphas`` maps each surviving index n to the k-vector of correction
    coefficients alpha_n; rows for erased indices are the Kronecker
    pattern and are never materialized.
    """

    dual: DualFrame
    erased: ErasureSet
    alphas: dict = field(default_factory=dict)

    @property
    def matrix(self) -> np.ndarray:
        return self.dual.frame.matrix

    def vector(self, n: int) -> np.ndarray:
        return self.dual.frame.vector(n)


def mrc_by_span(f: Frame, erased, tol: Tolerances = DEFAULT_TOL) -> bool:
    """MRC via spanning: do the surviving vectors still span C^N?"""
    e = _as_erasure(erased)
    keep = e.survivors(f.count)
    if len(keep) < f.dim:
        return False
    sub = f.matrix[:, np.asarray(keep, dtype=np.intp) - 1]
    s = np.linalg.svd(sub, compute_uv=False)
    rank = int(np.count_nonzero(s > tol.rank_rel * s[0])) if s[0] > 0 else 0
    return rank == f.dim


def mrc_by_gramian(f: Frame, erased, tol: Tolerances = DEFAULT_TOL) -> bool:
    """MRC via the canonical cross-Gramian: invertibility of G - I."""
    e = _as_erasure(erased)
    e.check_bound(f.count)
    if e.k == 0:
        return True
    g = cross_gramian(f, canonical_dual(f, tol), e)
    return is_invertible(g - np.eye(e.k), tol)


def mrc_by_operator(f: Frame, erased, tol: Tolerances = DEFAULT_TOL) -> bool:
    """MRC via the reduced operator: invertibility of I - sum theta_{y,x}."""
    e = _as_erasure(erased)
    e.check_bound(f.count)
    if e.k == 0:
        return True
    return is_invertible(_reduced_operator(f, e, tol), tol)


def mrc_witness(f: Frame, dual_candidate, erased, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Witness criterion against an arbitrary dual family.

    True means the MRC holds; False is inconclusive, since a particular
    dual can produce a singular matrix even when the MRC is satisfied.
    """
    if not is_dual_pair(f, dual_candidate, tol):
        raise NotADual("candidate family is not dual to the frame")
    e = _as_erasure(erased)
    e.check_bound(f.count)
    if e.k == 0:
        return True
    g = cross_gramian(f, dual_candidate, e)
    return is_invertible(g - np.eye(e.k), tol)


def _reduced_operator(f: Frame, e: ErasureSet, tol: Tolerances) -> np.ndarray:
    """I - sum_i theta_{y_{n_i}, x_{n_i}} with y the canonical dual."""
    y = canonical_dual(f, tol).frame.matrix
    idx = e.zero_based()
    return np.eye(f.dim) - y[:, idx] @ f.matrix[:, idx].conj().T


def _smallest_sv(m: np.ndarray) -> float:
    s = np.linalg.svd(m, compute_uv=False)
    return float(s[-1]) if s.size else float("inf")


def _assemble(f: Frame, e: ErasureSet, v_keep: np.ndarray, alph: np.ndarray,
              tol: Tolerances) -> CompensatingDual:
    """Pack surviving dual vectors and corrections into a CompensatingDual."""
    keep = e.survivors(f.count)
    v = np.zeros_like(f.matrix)
    v[:, np.asarray(keep, dtype=np.intp) - 1] = v_keep
    dual = DualFrame(Frame(v, tol), f, tol)
    alphas = {n: alph[:, j].copy() for j, n in enumerate(keep)}
    return CompensatingDual(dual, e, alphas)


def compensating_dual_system(f: Frame, erased, tol: Tolerances = DEFAULT_TOL) -> CompensatingDual:
    """Compensating dual via the k x k correction system.

    The system matrix (cross-Gramian of the canonical dual minus the
    identity) does not depend on the surviving index, so it is factored
    once against all right-hand sides at once.
    """
    e = _as_erasure(erased)
    dual = canonical_dual(f, tol)
    y = dual.frame.matrix
    if e.k == 0:
        return CompensatingDual(dual, e, {n: np.zeros(0) for n in range(1, f.count + 1)})
    e.check_bound(f.count)
    keep0 = np.asarray(e.survivors(f.count), dtype=np.intp) - 1
    idx = e.zero_based()
    sysm = cross_gramian(f, dual, e) - np.eye(e.k)
    rhs = f.matrix[:, idx].conj().T @ y[:, keep0]
    if not is_invertible(sysm, tol):
        raise MrcViolated("gramian", _smallest_sv(sysm))
    alph = solve_linear(sysm, rhs, tol)
    v_keep = y[:, keep0] - y[:, idx] @ alph
    return _assemble(f, e, v_keep, alph, tol)


def compensating_dual_operator(f: Frame, erased, tol: Tolerances = DEFAULT_TOL) -> CompensatingDual:
    """Compensating dual via one N x N solve with the reduced operator."""
    e = _as_erasure(erased)
    dual = canonical_dual(f, tol)
    y = dual.frame.matrix
    if e.k == 0:
        return CompensatingDual(dual, e, {n: np.zeros(0) for n in range(1, f.count + 1)})
    e.check_bound(f.count)
    keep0 = np.asarray(e.survivors(f.count), dtype=np.intp) - 1
    op = _reduced_operator(f, e, tol)
    if not is_invertible(op, tol):
        raise MrcViolated("operator", _smallest_sv(op))
    v_keep = solve_linear(op, y[:, keep0], tol)
    alph = -(f.matrix[:, e.zero_based()].conj().T @ v_keep)
    return _assemble(f, e, v_keep, alph, tol)


def single_erasure_dual(f: Frame, m: int, tol: Tolerances = DEFAULT_TOL) -> CompensatingDual:
    """Closed-form compensating dual for one erased position, no solve.

    Valid whenever <y_m, x_m> differs from 1; each surviving vector is
    shifted along y_m by <y_n, x_m> / (1 - <y_m, x_m>).
    """
    e = ErasureSet([m])
    e.check_bound(f.count)
    y = canonical_dual(f, tol).frame.matrix
    xm = f.matrix[:, m - 1]
    ym = y[:, m - 1]
    denom = 1.0 - inner(ym, xm)
    if abs(denom) <= tol.rank_rel:
        raise MrcViolated("single", abs(denom))
    keep0 = np.asarray(e.survivors(f.count), dtype=np.intp) - 1
    shifts = (xm.conj() @ y[:, keep0]) / denom
    v_keep = y[:, keep0] + np.outer(ym, shifts)
    alph = (-shifts)[None, :]
    return _assemble(f, e, v_keep, alph, tol)


def rank_one_inverse(y, x, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Inverse of I - theta_{y, x} in closed form.

    (I - theta_{y,x})^{-1} = I + theta_{y,x} / (1 - <y, x>), defined
    exactly when <y, x> differs from 1.
    """
    y = as_vector(y, name="y")
    x = as_vector(x, y.shape[0], "x")
    denom = 1.0 - inner(y, x)
    if abs(denom) <= tol.rank_rel:
        raise NotInvertible(f"1 - <y, x> = {denom:.3e} is numerically zero")
    return np.eye(y.shape[0]) + rank_one(y, x) / denom


def chain_inverse(xs, ys, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Inverse of I - sum_i theta_{y_i, x_i} as a product of rank-one inverses.

    Runs k iterations: step n forms ybar_n by pushing y_n through the
    inverses accumulated so far and appends the rank-one inverse of
    I - theta_{ybar_n, x_n} to the product. Each prefix
    I - sum_{i<=n} theta_{y_i, x_i} must be invertible; the first failing
    prefix is reported by index.
    """
    xm = _column_matrix(xs, "xs")
    ym = _column_matrix(ys, "ys")
    if xm.shape != ym.shape:
        raise DimensionMismatch(f"xs shape {xm.shape} differs from ys shape {ym.shape}")
    n_dim, k = xm.shape
    prod = np.eye(n_dim, dtype=np.complex128)
    for n in range(k):
        ybar = prod @ ym[:, n]
        try:
            factor = rank_one_inverse(ybar, xm[:, n], tol)
        except NotInvertible:
            raise PrefixNotInvertible(n + 1) from None
        prod = factor @ prod
    return prod


def closed_form_inverse(xs, ys, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Inverse of I - sum_j theta_{y_j, x_j} in closed form.

    Returns I + sum_{i,j} c_ij theta_{y_i, x_j} with C = -(G - I)^{-1}
    and G_ij = <y_j, x_i>. No linear independence of the y's is needed;
    only numeric invertibility of G - I.
    """
    xm = _column_matrix(xs, "xs")
    ym = _column_matrix(ys, "ys")
    if xm.shape != ym.shape:
        raise DimensionMismatch(f"xs shape {xm.shape} differs from ys shape {ym.shape}")
    n_dim, k = xm.shape
    if k == 0:
        return np.eye(n_dim, dtype=np.complex128)
    g = xm.conj().T @ ym
    m = g - np.eye(k)
    if not is_invertible(m, tol):
        raise NotInvertible(
            f"G - I is numerically singular (smallest sv {_smallest_sv(m):.3e})"
        )
    c = -solve_linear(m, np.eye(k), tol)
    return np.eye(n_dim) + ym @ c @ xm.conj().T


def _column_matrix(vectors, name: str) -> np.ndarray:
    arr = np.asarray(vectors, dtype=np.complex128)
    if arr.ndim == 2 and not isinstance(vectors, (list, tuple)):
        return arr
    cols = [as_vector(v, name=name) for v in vectors]
    if not cols:
        raise DimensionMismatch(f"{name} must contain at least one vector")
    return np.column_stack(cols)


ALGORITHMS = ("system", "operator", "single", "chain", "closed")


def compensating_dual(f: Frame, erased, tol: Tolerances = DEFAULT_TOL,
                      method: str = "operator") -> CompensatingDual:
    """Construct the compensating dual by the chosen algorithm.

    All methods produce the same dual; ``single`` requires exactly one
    erased index. ``chain`` and ``closed`` build the reduced-operator
    inverse explicitly and then apply it to the canonical dual vectors.
    """
    e = _as_erasure(erased)
    if method == "system":
        return compensating_dual_system(f, e, tol)
    if method == "operator":
        return compensating_dual_operator(f, e, tol)
    if method == "single":
        if e.k != 1:
            raise ValueError("the single-erasure algorithm needs exactly one index")
        return single_erasure_dual(f, e[0], tol)
    if method not in ("chain", "closed"):
        raise ValueError(f"unknown algorithm {method!r}; choose one of {ALGORITHMS}")

    dual = canonical_dual(f, tol)
    y = dual.frame.matrix
    if e.k == 0:
        return CompensatingDual(dual, e, {n: np.zeros(0) for n in range(1, f.count + 1)})
    e.check_bound(f.count)
    idx = e.zero_based()
    xs = f.matrix[:, idx]
    ys = y[:, idx]
    try:
        if method == "chain":
            inv = chain_inverse(xs, ys, tol)
        else:
            inv = closed_form_inverse(xs, ys, tol)
    except PrefixNotInvertible as exc:
        raise MrcViolated(f"chain prefix {exc.prefix}", 0.0) from exc
    except NotInvertible:
        raise MrcViolated("closed-form gramian",
                          _smallest_sv(xs.conj().T @ ys - np.eye(e.k))) from None
    keep0 = np.asarray(e.survivors(f.count), dtype=np.intp) - 1
    v_keep = inv @ y[:, keep0]
    alph = -(xs.conj().T @ v_keep)
    return _assemble(f, e, v_keep, alph, tol)


def reconstruct(d: CompensatingDual, coeffs) -> np.ndarray:
    """Rebuild the signal from coefficients with garbage at erased slots.

    Entries at erased positions are never read; surviving entries must be
    finite. Returns sum over survivors of coeffs_n * v_n.
    """
    c = np.asarray(coeffs, dtype=np.complex128)
    m = d.dual.frame.count
    if c.ndim != 1 or c.shape[0] != m:
        raise DimensionMismatch(f"expected {m} coefficients, got shape {c.shape}")
    keep0 = np.asarray(d.erased.survivors(m), dtype=np.intp) - 1
    kept = as_vector(c[keep0], name="surviving coefficients")
    return d.matrix[:, keep0] @ kept
