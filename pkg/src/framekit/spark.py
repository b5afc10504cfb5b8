"""Robustness and spark diagnostics for finite frames.

The spark of a family is the size of its smallest linearly dependent
subset of vectors. A frame of M vectors in C^N is full spark when every
selection of N vectors is a basis, i.e. spark = N + 1. Full spark frames
are exactly those generated from a basis by a matrix whose square
submatrices are all nonsingular; both directions of that correspondence
are implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .errors import (
    DimensionMismatch,
    GeneratorNotTotallyNonsingular,
    NotCanonicalOrder,
    NotFullSpark,
    NotParseval,
    TooManySubsets,
)
from .frames import Frame, VectorFamily, frame_bounds, is_parseval
from .linalg import DEFAULT_TOL, Tolerances, as_matrix, numeric_rank, solve_linear
from .erasures import mrc_by_span
from .totally_positive import first_singular_submatrix

__all__ = [
    "ENUMERATION_CAP",
    "GeneratorMatrix",
    "SparkReport",
    "is_m_robust",
    "norm_criterion_single",
    "spark",
    "full_spark_from_generator",
    "generator_from_full_spark",
    "parseval_1robust",
]

ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class GeneratorMatrix:
    """An N x M coefficient matrix expanding a basis into extra vectors."""

    matrix: np.ndarray
    certified: bool = False

    def __post_init__(self):
        object.__setattr__(self, "matrix", as_matrix(self.matrix, "generator"))


@dataclass(frozen=True)
class SparkReport:
    """Spark value, full-spark flag, and a smallest dependent subset if any."""

    spark: int
    is_full_spark: bool
    witness: tuple[int, ...] | None


def is_m_robust(f: Frame, m: int, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True when every erasure set of size m leaves a spanning family."""
    if not 1 <= m <= f.count:
        raise ValueError(f"m must lie in 1..{f.count}, got {m}")
    if comb(f.count, m) > ENUMERATION_CAP:
        raise TooManySubsets(f"C({f.count},{m}) exceeds the {ENUMERATION_CAP} cap")
    return all(
        mrc_by_span(f, subset, tol)
        for subset in combinations(range(1, f.count + 1), m)
    )


def norm_criterion_single(f: Frame, m: int) -> bool:
    """Sufficient single-erasure test: is the m-th norm below sqrt(A)?

    A is the lower frame bound. True guarantees position m can be erased;
    False decides nothing.
    """
    if not 1 <= m <= f.count:
        raise ValueError(f"m must lie in 1..{f.count}, got {m}")
    lower, _ = frame_bounds(f)
    return bool(np.linalg.norm(f.matrix[:, m - 1]) < np.sqrt(lower))


def spark(family: VectorFamily, tol: Tolerances = DEFAULT_TOL) -> SparkReport:
    """Brute-force spark by subset enumeration in increasing cardinality.

    Returns the first (lexicographically smallest) dependent subset as the
    witness. When no dependent subset of size <= min(N, M) exists the
    spark is min(N, M) + 1, which equals N + 1 exactly for families of at
    least N vectors; those are the full spark families.
    """
    s_mat = family.matrix
    n, m = s_mat.shape
    smax = min(n, m)
    total = sum(comb(m, size) for size in range(1, smax + 1))
    if total > ENUMERATION_CAP:
        raise TooManySubsets(f"{total} subsets exceed the {ENUMERATION_CAP} cap")
    for size in range(1, smax + 1):
        witness = _first_dependent(s_mat, size, tol)
        if witness is not None:
            return SparkReport(spark=size, is_full_spark=False, witness=witness)
    value = smax + 1
    return SparkReport(spark=value, is_full_spark=(value == n + 1), witness=None)


_BATCH = 2048


def _first_dependent(s_mat: np.ndarray, size: int, tol: Tolerances) -> tuple[int, ...] | None:
    """Lexicographically first size-subset of columns with deficient rank."""
    m = s_mat.shape[1]
    subsets = list(combinations(range(m), size))
    for start in range(0, len(subsets), _BATCH):
        chunk = np.asarray(subsets[start : start + _BATCH], dtype=np.intp)
        stacked = np.moveaxis(s_mat[:, chunk], 1, 0)  # (batch, N, size)
        sv = np.linalg.svd(stacked, compute_uv=False)
        top = sv[:, :1]
        ranks = np.count_nonzero(sv > tol.rank_rel * np.where(top > 0, top, 1.0), axis=1)
        deficient = np.flatnonzero(ranks < size)
        if deficient.size:
            return tuple(int(c) + 1 for c in chunk[deficient[0]])
    return None


def full_spark_from_generator(basis: Frame, generator, tol: Tolerances = DEFAULT_TOL,
                              unchecked: bool = False) -> Frame:
    """Extend a basis by generator columns into a full spark frame.

    The generator must be totally nonsingular (every square submatrix
    numerically invertible); the check can be skipped explicitly with
    ``unchecked=True`` when the generator is certified by construction.
    """
    if basis.count != basis.dim:
        raise DimensionMismatch(
            f"basis must consist of exactly {basis.dim} vectors, got {basis.count}"
        )
    t = generator.matrix if isinstance(generator, GeneratorMatrix) else as_matrix(generator, "generator")
    if t.shape[0] != basis.dim:
        raise DimensionMismatch(
            f"generator has {t.shape[0]} rows, expected {basis.dim}"
        )
    if not unchecked and not (isinstance(generator, GeneratorMatrix) and generator.certified):
        offending = first_singular_submatrix(t, tol)
        if offending is not None:
            raise GeneratorNotTotallyNonsingular(*offending)
    b = basis.matrix
    return Frame(np.hstack([b, b @ t]), tol)


def generator_from_full_spark(f: Frame, tol: Tolerances = DEFAULT_TOL) -> GeneratorMatrix:
    """Express the tail of a full spark frame over its leading basis.

    Requires the leading dim-many vectors to be the basis (no reordering
    is attempted) and more vectors than dimensions. The returned matrix
    is certified: all of its square submatrices are nonsingular.
    """
    n, m = f.dim, f.count
    if m <= n:
        raise DimensionMismatch(f"need more than {n} vectors, got {m}")
    b = f.matrix[:, :n]
    if numeric_rank(b, tol) != n:
        raise NotCanonicalOrder("the leading dim-many vectors do not form a basis")
    report = spark(f, tol)
    if not report.is_full_spark:
        raise NotFullSpark(f"dependent subset {report.witness} of size {report.spark}")
    t = solve_linear(b, f.matrix[:, n:], tol)
    return GeneratorMatrix(t, certified=True)


def parseval_1robust(f: Frame, tol: Tolerances = DEFAULT_TOL) -> bool:
    """For Parseval frames, 1-robustness reduces to all norms below one."""
    if not is_parseval(f, tol):
        raise NotParseval("frame operator differs from the identity")
    return bool(np.max(f.norms()) < 1.0 - tol.rank_rel)
