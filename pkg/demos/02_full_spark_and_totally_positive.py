#!/usr/bin/env python3
"""Full spark frames from totally positive integer matrices.

A frame is full spark when every selection of dim-many vectors is a
basis; such frames tolerate the largest possible number of erasures.
Full spark frames are exactly the ones generated from a basis by a
matrix whose every square submatrix is invertible, and totally positive
matrices supply those generators in exact integer arithmetic.
"""

import numpy as np

import framekit as fk

# Seed pair (a_n) = 1, 2, 3, ... and (b_n) = 2, 5, 8, ... satisfies
# b_1 = a_2 and a_n b_{n+1} - b_n a_{n+1} = 1; that is all the
# construction needs.
seeds = fk.SeedSequences.affine(1, 1, 2, 3)
tp = fk.build_tp(seeds, 5)
print("totally positive matrix:")
print(tp.ints)
print("initial minors positive:", fk.is_totally_positive(tp))

# The classic special case: seeds 1, 1, 1, ... and 1, 2, 3, ... give the
# binomial coefficients.
print("\nbinomial matrix:")
print(fk.pascal(6).ints)
print("matches the seed construction:",
      np.array_equal(fk.pascal(6).ints, fk.build_tp(fk.SeedSequences.pascal(), 6).ints))

# Any block of a totally positive matrix is totally nonsingular, so it
# generates a full spark frame over the standard basis.
block = fk.pascal(3).matrix[:, :2]
frame = fk.full_spark_from_generator(fk.Frame(np.eye(3)), block)
print("\nextended frame (columns are vectors):")
print(frame.matrix.real)

report = fk.spark(frame)
print("spark:", report.spark, "full spark:", report.is_full_spark)
print("robust to any 1 erasure:", fk.is_m_robust(frame, 1))
print("robust to any 2 erasures:", fk.is_m_robust(frame, 2))

# The correspondence runs both ways: the generator is recovered by
# expressing the tail vectors over the leading basis.
recovered = fk.generator_from_full_spark(frame)
print("recovered generator:")
print(recovered.matrix.real)

# A dependent family is detected with a witness.
broken = fk.VectorFamily(np.array([
    [1.0, 0.0, 1.0, 2.0],
    [0.0, 1.0, 0.0, 1.0],
]))
print("\ndependent family report:", fk.spark(broken))
