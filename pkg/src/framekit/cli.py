"""Command line interface.

Subcommands: encode, erase, reconstruct, analyze, tp, gen-full-spark.
JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success,
2 parse error, 3 dimension or index error, 4 minimal redundancy
violation, 5 certification failure. The FRAMEKIT_TOL environment
variable overrides the entrywise equality tolerance.
"""

from __future__ import annotations

import argparse
import os
import sys
from math import comb

import numpy as np

from . import io
from .erasures import ALGORITHMS, ErasureSet, compensating_dual, reconstruct
from .errors import (
    BadIndexSet,
    BadSeeds,
    DimensionMismatch,
    FirstBlockNotOrthonormal,
    FramekitError,
    GeneratorNotTotallyNonsingular,
    IntegerOverflow,
    MrcViolated,
    NonFiniteInput,
    NotAFrame,
    NotCanonicalOrder,
    NotFullSpark,
    TooManySubsets,
)
from .frames import Frame, analysis, frame_bounds, is_dual_pair, is_parseval
from .linalg import DEFAULT_TOL, Tolerances
from .parsevalize import orthobasis_extension_parseval
from .spark import ENUMERATION_CAP, full_spark_from_generator, is_m_robust, spark
from .totally_positive import SeedSequences, build_tp, is_totally_positive

EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_MRC = 4
EXIT_CERTIFICATION = 5

_LCG_A = 6364136223846793005
_LCG_C = 1442695040888963407
_LCG_MASK = (1 << 64) - 1

ERASED_PLACEHOLDER = 999.0


def _tolerances() -> Tolerances:
    raw = os.environ.get("FRAMEKIT_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        value = float(raw)
    except ValueError as exc:
        raise io.ParseError(f"FRAMEKIT_TOL={raw!r} is not a number") from exc
    return Tolerances(eq_abs=value)


def _emit(doc) -> None:
    sys.stdout.write(io.dump(doc))


def _parse_index_csv(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise BadIndexSet(f"bad index list {text!r}") from exc


def _lcg_pick(seed: int, total: int, count: int) -> list[int]:
    """Deterministic distinct 1-based indices from a 64-bit LCG stream."""
    state = seed & _LCG_MASK
    chosen: list[int] = []
    while len(chosen) < count:
        state = (_LCG_A * state + _LCG_C) & _LCG_MASK
        candidate = (state >> 32) % total + 1
        if candidate not in chosen:
            chosen.append(candidate)
    return sorted(chosen)


def _load_frame(path: str, tol: Tolerances) -> Frame:
    family = io.parse_frame_file(io.load_document(path), tol)
    if isinstance(family, Frame):
        return family
    return Frame(family.matrix, tol)


def cmd_encode(args, tol: Tolerances) -> int:
    frame = _load_frame(args.frame, tol)
    if args.signal is not None:
        try:
            signal = np.array([float(tok) for tok in args.signal.split(",")],
                              dtype=np.complex128)
        except ValueError as exc:
            raise io.ParseError(f"bad inline signal {args.signal!r}") from exc
    else:
        signal = io.parse_signal_document(io.load_document(args.signal_file))
    coeffs = analysis(frame, signal)
    _emit(io.coeff_document(coeffs, []))
    return 0


def cmd_erase(args, tol: Tolerances) -> int:
    coeffs, already = io.parse_coeff_file(io.load_document(args.coeffs))
    total = coeffs.shape[0]
    if args.indices is not None:
        new = _parse_index_csv(args.indices)
    else:
        new = _lcg_pick(args.seed, total, args.random)
    erased = ErasureSet(sorted(set(already) | set(new)))
    erased.check_bound(total)
    if erased.k >= total:
        raise MrcViolated("erase-all", 0.0)
    out = np.array(coeffs)
    out[erased.zero_based()] = ERASED_PLACEHOLDER
    _emit(io.coeff_document(out, erased))
    return 0


def cmd_reconstruct(args, tol: Tolerances) -> int:
    frame = _load_frame(args.frame, tol)
    coeffs, erased_list = io.parse_coeff_file(io.load_document(args.coeffs))
    if coeffs.shape[0] != frame.count:
        raise DimensionMismatch(
            f"{coeffs.shape[0]} coefficients for a frame of {frame.count} vectors"
        )
    erased = ErasureSet(erased_list)
    erased.check_bound(frame.count)
    if args.algo == "single" and erased.k != 1:
        raise DimensionMismatch(
            f"--algo single needs exactly one erased index, got {erased.k}"
        )
    dual = compensating_dual(frame, erased, tol, method=args.algo)
    signal = reconstruct(dual, coeffs)
    residual = float(np.max(np.abs(
        dual.matrix @ frame.matrix.conj().T - np.eye(frame.dim)
    )))
    _emit({
        "signal": [[complex(v).real, complex(v).imag] for v in signal],
        "norm": float(np.linalg.norm(signal)),
        "erased": list(erased.indices),
        "algorithm": args.algo,
        "duality_residual": residual,
    })
    return 0


def cmd_analyze(args, tol: Tolerances) -> int:
    frame = _load_frame(args.frame, tol)
    lower, upper = frame_bounds(frame)
    robust: dict[str, object] = {}
    for m in range(1, max(1, frame.count - frame.dim) + 1):
        if comb(frame.count, m) > ENUMERATION_CAP:
            robust[str(m)] = "skipped"
        else:
            robust[str(m)] = is_m_robust(frame, m, tol)
    doc = {
        "dim": frame.dim,
        "count": frame.count,
        "bounds": [lower, upper],
        "parseval": is_parseval(frame, tol),
        "excess": frame.count - frame.dim,
        "robust": robust,
    }
    try:
        report = spark(frame, tol)
        doc["spark"] = report.spark
        doc["full_spark"] = report.is_full_spark
        doc["witness"] = list(report.witness) if report.witness else None
    except TooManySubsets:
        doc["spark"] = "skipped"
        doc["full_spark"] = "skipped"
        doc["witness"] = None
    _emit(doc)
    return 0


def _seeds_from_args(seeds_args, seeds_file) -> SeedSequences:
    if seeds_file is not None:
        doc = io.load_document(seeds_file)
        if not isinstance(doc, dict) or "a" not in doc or "b" not in doc:
            raise io.ParseError("seeds file must be an object with 'a' and 'b' lists")
        return SeedSequences.from_lists(doc["a"], doc["b"])
    if not seeds_args:
        return SeedSequences.pascal()
    kind = seeds_args[0]
    if kind == "pascal":
        if len(seeds_args) != 1:
            raise io.ParseError("pascal seeds take no parameters")
        return SeedSequences.pascal()
    if kind == "affine":
        if len(seeds_args) != 2:
            raise io.ParseError("affine seeds need one a0,da,b0,db parameter")
        try:
            a0, da, b0, db = (int(tok) for tok in seeds_args[1].split(","))
        except ValueError as exc:
            raise io.ParseError(f"bad affine parameters {seeds_args[1]!r}") from exc
        return SeedSequences.affine(a0, da, b0, db)
    raise io.ParseError(f"unknown seed kind {kind!r}; use pascal or affine")


def cmd_tp(args, tol: Tolerances) -> int:
    seeds = _seeds_from_args(args.seeds, args.file)
    matrix = build_tp(seeds, args.size)
    _emit({
        "size": matrix.size,
        "entries": [[int(v) for v in row] for row in matrix.ints],
        "certification": {
            "initial_minors_positive": is_totally_positive(matrix, tol),
        },
    })
    return 0


def cmd_gen_full_spark(args, tol: Tolerances) -> int:
    n, total = args.dim, args.count
    if n < 1 or total < n:
        raise DimensionMismatch(f"need count >= dim >= 1, got dim={n} count={total}")
    tail = total - n
    basis = Frame(np.eye(n), tol)
    certification = {"generator_totally_nonsingular": True, "full_spark": True}
    if tail == 0:
        frame = basis
    else:
        if args.generator is not None:
            gen = io.parse_generator_document(io.load_document(args.generator))
            if gen.shape != (n, tail):
                raise DimensionMismatch(
                    f"generator shape {gen.shape} does not match ({n}, {tail})"
                )
        else:
            seeds = _seeds_from_args(args.tp_seeds, None)
            block = build_tp(seeds, max(2, n, tail))
            gen = block.matrix[:n, :tail]
        frame = full_spark_from_generator(basis, gen, tol)
    if args.parseval:
        frame = orthobasis_extension_parseval(frame, tol)
        certification["parseval"] = is_parseval(frame, tol)
    _emit(io.frame_document(frame.matrix, {"certification": certification}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framekit",
        description="Finite-frame erasure coding, spark diagnostics and "
                    "totally positive generators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="compute frame coefficients of a signal")
    p.add_argument("frame", help="frame JSON file ('-' for stdin)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--signal", help="inline comma-separated real signal")
    group.add_argument("--signal-file", help="signal JSON file ('-' for stdin)")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("erase", help="overwrite chosen coefficients with a placeholder")
    p.add_argument("coeffs", help="coefficient JSON file ('-' for stdin)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--indices", help="comma-separated 1-based indices")
    group.add_argument("--random", type=int, metavar="M", help="erase M random positions")
    p.add_argument("--seed", type=int, default=0, help="seed for --random (default 0)")
    p.set_defaults(func=cmd_erase)

    p = sub.add_parser("reconstruct", help="rebuild the signal around erased coefficients")
    p.add_argument("frame")
    p.add_argument("coeffs")
    p.add_argument("--algo", choices=ALGORITHMS, default="operator")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("analyze", help="frame bounds, robustness and spark report")
    p.add_argument("frame")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("tp", help="build a totally positive matrix from seeds")
    p.add_argument("--seeds", nargs="+", metavar="SPEC",
                   help="'pascal' or 'affine a0,da,b0,db' (default pascal)")
    p.add_argument("--file", help="JSON seeds file with 'a' and 'b' lists")
    p.add_argument("--size", type=int, required=True)
    p.set_defaults(func=cmd_tp)

    p = sub.add_parser("gen-full-spark", help="emit a certified full spark frame")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--tp-seeds", nargs="+", metavar="SPEC",
                   help="seeds for the generator block (default pascal)")
    p.add_argument("--generator", help="JSON generator file ('-' for stdin)")
    p.add_argument("--parseval", action="store_true",
                   help="convert the output to a Parseval frame")
    p.set_defaults(func=cmd_gen_full_spark)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        tol = _tolerances()
        return args.func(args, tol)
    except (io.ParseError, NonFiniteInput) as exc:
        print(f"framekit: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DimensionMismatch, BadIndexSet, NotAFrame, ValueError) as exc:
        print(f"framekit: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except MrcViolated as exc:
        print(f"framekit: {exc}", file=sys.stderr)
        return EXIT_MRC
    except (BadSeeds, GeneratorNotTotallyNonsingular, NotFullSpark, NotCanonicalOrder,
            IntegerOverflow, FirstBlockNotOrthonormal, TooManySubsets) as exc:
        print(f"framekit: certification failure: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATION
    except FramekitError as exc:
        print(f"framekit: {exc}", file=sys.stderr)
        return EXIT_DIMENSION


if __name__ == "__main__":
    sys.exit(main())
