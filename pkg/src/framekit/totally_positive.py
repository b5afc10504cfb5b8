"""Symmetric integer totally positive matrices from seed sequences.

Given positive integer sequences (a_n), (b_n) with b_1 = a_2 and
a_n b_{n+1} - b_n a_{n+1} = 1, an infinite symmetric matrix exists whose
first two rows are the seeds and whose solid lower-left minors of every
size >= 2 equal exactly 1; all of its minors are positive. The inductive
construction below realizes its upper-left n x n corner in exact integer
arithmetic. The choice a_n = 1, b_n = n reproduces the Pascal matrix.

Verification helpers: total positivity is certified by the n^2 initial
minors (each entry is the lower-right corner of exactly one solid minor
touching the first row or column), total nonsingularity by enumerating
all square submatrices with a scaled determinant test.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

import numpy as np

from .errors import (
    BadSeeds,
    DimensionMismatch,
    IntegerOverflow,
    IntegralityBroken,
    TooManySubsets,
)
from .linalg import DEFAULT_TOL, Tolerances, as_matrix, minor_det

__all__ = [
    "SeedSequences",
    "TPMatrix",
    "build_tp",
    "pascal",
    "is_totally_positive",
    "is_totally_nonsingular",
    "first_singular_submatrix",
]

_MAX_EXACT = 2**53


class SeedSequences:
    """Accessor pair for the integer seeds (a_n) and (b_n), 1-based."""

    __slots__ = ("_a", "_b")

    def __init__(self, a, b):
        self._a = a
        self._b = b

    @classmethod
    def affine(cls, a0: int, da: int, b0: int, db: int) -> "SeedSequences":
        """Arithmetic seeds a_n = a0 + da (n-1), b_n = b0 + db (n-1)."""
        return cls(lambda n: a0 + da * (n - 1), lambda n: b0 + db * (n - 1))

    @classmethod
    def pascal(cls) -> "SeedSequences":
        """The seeds a_n = 1, b_n = n of the Pascal matrix."""
        return cls.affine(1, 0, 1, 1)

    @classmethod
    def from_lists(cls, a_values, b_values) -> "SeedSequences":
        a_list = [int(v) for v in a_values]
        b_list = [int(v) for v in b_values]

        def pick(values, n):
            if not 1 <= n <= len(values):
                raise BadSeeds(f"seed index {n} beyond the {len(values)} provided values")
            return values[n - 1]

        return cls(lambda n: pick(a_list, n), lambda n: pick(b_list, n))

    def a(self, n: int) -> int:
        return self._value(self._a, "a", n)

    def b(self, n: int) -> int:
        return self._value(self._b, "b", n)

    @staticmethod
    def _value(fn, name: str, n: int) -> int:
        v = fn(n)
        if not isinstance(v, (int, np.integer)):
            raise BadSeeds(f"{name}_{n} = {v!r} is not an integer")
        v = int(v)
        if v < 1:
            raise BadSeeds(f"{name}_{n} = {v} must be a positive integer")
        return v

    def validate(self, n_max: int) -> None:
        """Check positivity, b_1 = a_2 and the unit cross determinants."""
        if n_max < 2:
            raise ValueError(f"seed validation needs n_max >= 2, got {n_max}")
        a_vals = [self.a(n) for n in range(1, n_max + 1)]
        b_vals = [self.b(n) for n in range(1, n_max + 1)]
        if b_vals[0] != a_vals[1]:
            raise BadSeeds(f"b_1 = {b_vals[0]} must equal a_2 = {a_vals[1]}")
        for n in range(1, n_max):
            det = a_vals[n - 1] * b_vals[n] - b_vals[n - 1] * a_vals[n]
            if det != 1:
                raise BadSeeds(
                    f"a_{n} b_{n + 1} - b_{n} a_{n + 1} = {det}, expected 1"
                )


class TPMatrix:
    """A symmetric matrix with exact integer entries, all minors positive."""

    __slots__ = ("_ints",)

    def __init__(self, entries):
        arr = np.asarray(entries)
        if not np.issubdtype(arr.dtype, np.integer):
            raise IntegralityBroken(f"entries must be integers, got dtype {arr.dtype}")
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise DimensionMismatch(f"expected a square matrix, got shape {arr.shape}")
        if not np.array_equal(arr, arr.T):
            raise IntegralityBroken("matrix is not symmetric")
        arr = arr.astype(np.int64, copy=True)
        arr.flags.writeable = False
        self._ints = arr

    @property
    def ints(self) -> np.ndarray:
        return self._ints

    @property
    def matrix(self) -> np.ndarray:
        return self._ints.astype(np.complex128)

    @property
    def size(self) -> int:
        return self._ints.shape[0]

    def entry(self, i: int, j: int) -> int:
        """Entry t_{ij}, 1-based."""
        return int(self._ints[i - 1, j - 1])

    def __repr__(self) -> str:
        return f"TPMatrix(size={self.size})"


def int_det(rows) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    a = [[int(v) for v in row] for row in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def build_tp(seeds: SeedSequences, n: int) -> TPMatrix:
    """Build the n x n totally positive matrix determined by the seeds.

    Starting from the 2 x 2 seed corner, each extension appends one row
    and column. The new entries are fixed, one by one, so that every
    solid lower-left minor of the extended matrix equals 1: expanding
    such a minor along its bottom row, the unknown entry appears with
    cofactor equal to the previous solid minor, which is 1, so each entry
    is a uniquely determined integer.
    """
    if n < 2:
        raise ValueError(f"matrix size must be at least 2, got {n}")
    seeds.validate(n)
    t: list[list[int]] = [
        [seeds.a(1), seeds.b(1)],
        [seeds.a(2), seeds.b(2)],
    ]
    for m in range(2, n):
        row = [seeds.a(m + 1), seeds.b(m + 1)]

        def cell(r: int, c: int) -> int:
            # entries of the extended matrix; column m exists only via symmetry
            return t[r][c] if c < m else row[r]

        for j in range(3, m + 2):
            rows_idx = range(m + 1 - j, m)
            base = [[cell(r, c) for c in range(j)] for r in rows_idx]
            # the minor is affine in the unknown corner entry x: d0 + cofactor * x,
            # and its cofactor is the previous solid minor, forced to 1 by induction
            d0 = int_det(base + [row[: j - 1] + [0]])
            cofactor = int_det(base + [row[: j - 1] + [1]]) - d0
            if cofactor != 1:
                raise IntegralityBroken(
                    f"solid minor cofactor equals {cofactor}, expected 1"
                )
            row.append(1 - d0)
        if max(abs(v) for v in row) > _MAX_EXACT:
            raise IntegerOverflow(
                f"entry magnitude exceeds 2^53 while extending to size {m + 1}"
            )
        for r in range(m):
            t[r].append(row[r])
        t.append(row)
    return TPMatrix(np.asarray(t, dtype=np.int64))


def pascal(n: int) -> TPMatrix:
    """The n x n Pascal matrix t_{ij} = C(i + j - 2, j - 1), exact integers."""
    if n < 1:
        raise ValueError(f"size must be at least 1, got {n}")
    if n > 30:
        raise ValueError("pascal is capped at size 30 to keep entries exact")
    entries = [[comb(i + j - 2, j - 1) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return TPMatrix(np.asarray(entries, dtype=np.int64))


def _initial_minor_indices(i: int, j: int) -> tuple[range, range]:
    """The unique solid minor touching row 1 or column 1 with corner (i, j)."""
    k = min(i, j)
    return range(i - k + 1, i + 1), range(j - k + 1, j + 1)


def is_totally_positive(a, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Certify total positivity through the n^2 initial minors.

    All initial minors positive is equivalent to all minors positive, so
    only n^2 determinants are evaluated. Positivity means real part above
    eq_abs with negligible imaginary part.
    """
    arr = as_matrix(a, "A")
    if arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got {arr.shape}")
    n = arr.shape[0]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            rows, cols = _initial_minor_indices(i, j)
            d = minor_det(arr, list(rows), list(cols))
            if d.real <= tol.eq_abs or abs(d.imag) > tol.eq_abs:
                return False
    return True


def _row_scaled_det_ok(sub: np.ndarray, rank_rel: float) -> bool:
    """Nonsingularity via |det| relative to the product of row norms."""
    norms = np.linalg.norm(sub, axis=1)
    if np.any(norms == 0.0):
        return False
    return bool(abs(np.linalg.det(sub)) > rank_rel * float(np.prod(norms)))


def first_singular_submatrix(a, tol: Tolerances = DEFAULT_TOL):
    """First square submatrix failing the scaled determinant test, or None.

    Enumerates sizes in increasing order and index sets lexicographically;
    returns 1-based (rows, cols) of the first failure. Raises
    TooManySubsets when the enumeration would exceed the cap.
    """
    arr = as_matrix(a, "A")
    r, c = arr.shape
    total = sum(comb(r, k) * comb(c, k) for k in range(1, min(r, c) + 1))
    if total > 10**6:
        raise TooManySubsets(f"{total} square submatrices exceed the cap")
    for k in range(1, min(r, c) + 1):
        for rows in combinations(range(r), k):
            block = arr[rows, :]
            for cols in combinations(range(c), k):
                if not _row_scaled_det_ok(block[:, cols], tol.rank_rel):
                    return (tuple(i + 1 for i in rows), tuple(j + 1 for j in cols))
    return None


def is_totally_nonsingular(a, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True when every square submatrix passes the scaled determinant test."""
    return first_singular_submatrix(a, tol) is None
