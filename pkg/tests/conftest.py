"""Shared frames, oracles and random generators for the test suite."""

import numpy as np
import pytest
from hypothesis import settings

import framekit as fk

settings.register_profile("suite", deadline=None, max_examples=40)
settings.load_profile("suite")

RT2 = np.sqrt(2.0)


def tight_c2_frame() -> fk.Frame:
    """Four half-scale vectors in C^2; tight with frame operator (3/4) I."""
    return fk.Frame(np.array([
        [0.5, 0.0, 0.5, 0.5],
        [0.0, 0.5, -0.5, 0.5],
    ]))


def parseval_c3_frame() -> fk.Frame:
    """Parseval frame in C^3: a short vector, a symmetric pair, a unit tail."""
    return fk.Frame(np.array([
        [1 / 3, 2 / 3, 2 / 3, 0.0],
        [0.0, -1 / RT2, 1 / RT2, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]))


def witness_gap_pair():
    """Frame (e1, e1+e2, e2) with the dual (e1, 0, e2) that hides the MRC."""
    frame = fk.Frame(np.array([[1.0, 1.0, 0.0], [0.0, 1.0, 1.0]]))
    dual = fk.VectorFamily(np.array([[1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]))
    return frame, dual


def pascal_extended_frame() -> fk.Frame:
    """[I_3 | T] with T the upper-left 3 x 2 Pascal block; full spark."""
    t = fk.pascal(3).matrix[:, :2]
    return fk.full_spark_from_generator(fk.Frame(np.eye(3)), t, unchecked=True)


def random_frame(rng: np.random.Generator, n: int, m: int) -> fk.Frame:
    """Complex Gaussian frame; spanning holds almost surely."""
    mat = rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))
    return fk.Frame(mat)


def random_real_frame(rng: np.random.Generator, n: int, m: int) -> fk.Frame:
    return fk.Frame(rng.standard_normal((n, m)))


def random_parseval_frame(rng: np.random.Generator, n: int, m: int) -> fk.Frame:
    return fk.associated_parseval(random_frame(rng, n, m))


def random_admissible_erasure(rng: np.random.Generator, f: fk.Frame, k: int) -> fk.ErasureSet:
    """A size-k erasure set satisfying the minimal redundancy condition."""
    for _ in range(200):
        picks = rng.choice(f.count, size=k, replace=False) + 1
        e = fk.ErasureSet(int(p) for p in picks)
        if fk.mrc_by_span(f, e):
            return e
    raise AssertionError("no admissible erasure found; loosen the test setup")


def parseval_with_units(rng: np.random.Generator, units: int,
                        inner_dim: int = 2, inner_count: int = 4) -> fk.Frame:
    """Direct sum of a standard basis block and a short-norm Parseval block.

    The first ``units`` vectors have exactly unit norm; the rest come from
    a Parseval frame on the orthocomplement with all norms below one,
    which requires strictly more inner vectors than inner dimensions.
    """
    if inner_count <= inner_dim:
        raise ValueError("need inner_count > inner_dim for short tail norms")
    n = units + inner_dim
    for _ in range(50):
        tail = fk.associated_parseval(
            fk.Frame(rng.standard_normal((inner_dim, inner_count))
                     + 1j * rng.standard_normal((inner_dim, inner_count)))
        )
        if np.max(tail.norms()) < 1.0 - 1e-8:
            break
    else:
        raise AssertionError("could not draw a short-norm Parseval tail")
    mat = np.zeros((n, units + inner_count), dtype=np.complex128)
    mat[:units, :units] = np.eye(units)
    mat[units:, units:] = tail.matrix
    return fk.Frame(mat)


def cofactor_det(a) -> complex:
    """Independent determinant oracle by first-row cofactor expansion."""
    a = np.asarray(a)
    n = a.shape[0]
    if n == 1:
        return complex(a[0, 0])
    total = 0.0 + 0.0j
    for c in range(n):
        sub = np.delete(np.delete(a, 0, axis=0), c, axis=1)
        total += (-1) ** c * complex(a[0, c]) * cofactor_det(sub)
    return total


def int_cofactor_det(a) -> int:
    """Exact integer determinant oracle by cofactor expansion."""
    rows = [[int(v) for v in row] for row in a]
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for c in range(n):
        sub = [r[:c] + r[c + 1 :] for r in rows[1:]]
        total += (-1) ** c * rows[0][c] * int_cofactor_det(sub)
    return total


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240811)
