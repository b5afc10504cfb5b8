#!/usr/bin/env python3
"""Turning frames into Parseval frames, two ways, plus 1-robust repair.

A Parseval frame reconstructs with its own vectors: no dual needed. The
inverse square root of the frame operator always produces one; when the
frame is a basis extended by extra vectors, a cheaper product of
rank-one corrections does the same job and preserves full spark.
"""

import numpy as np

import framekit as fk

rng = np.random.default_rng(3)

# Route 1: positive square root. Works for every frame.
frame = fk.Frame(rng.standard_normal((3, 5)))
parseval = fk.associated_parseval(frame)
print("frame operator after conversion (should be I):")
print(np.round(fk.frame_operator(parseval).real, 12))

# Route 2: rank-one corrections, for a frame [I | T]. Each step applies
# the closed-form inverse square root of I + theta at one tail vector.
f35 = fk.full_spark_from_generator(fk.Frame(np.eye(3)), fk.pascal(3).matrix[:, :2])
co = fk.correction_operator(f35.matrix[:, 3:])
print("\ncorrection operator R (not Hermitian, still works):")
print(np.round(co.matrix.real, 6))
converted = fk.orthobasis_extension_parseval(f35)
print("is Parseval:", fk.is_parseval(converted))
print("full spark preserved:", fk.spark(converted).is_full_spark)
print("vectors after conversion:")
print(np.round(converted.matrix.real, 6))

# The two routes give different Parseval frames; both are valid.
other = fk.associated_parseval(f35)
print("\nroutes differ by:",
      float(np.max(np.abs(other.matrix - converted.matrix))))

# 1-robust repair: a unit-norm vector in a Parseval frame is orthogonal
# to all others, so losing its coefficient is fatal. Rotating it against
# a shorter partner removes the obstruction while staying Parseval.
stuck = fk.Frame(np.array([
    [1 / 3, 2 / 3, 2 / 3, 0.0],
    [0.0, -1 / np.sqrt(2), 1 / np.sqrt(2), 0.0],
    [0.0, 0.0, 0.0, 1.0],
]))
print("\nnorms before:", np.round(stuck.norms(), 6))
print("1-robust before:", fk.is_m_robust(stuck, 1))
repaired = fk.make_1_robust(stuck)
print("norms after:  ", np.round(repaired.norms(), 6))
print("1-robust after:", fk.is_m_robust(repaired, 1))
print("still Parseval:", fk.is_parseval(repaired))
