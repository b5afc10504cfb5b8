"""JSON file formats for frames, coefficients and generators.

Frame files: ``{"dim": N, "vectors": [[entry, ...] x M], "frame": true}``
where an entry is a bare real or an ``[re, im]`` pair. Coefficient files:
``{"coeffs": [entry x M], "erased": [1-based indices]}``; erased slots may
hold any finite placeholder, but NaN or Inf anywhere is rejected at parse
time. Output floats use the shortest round-trip representation.
"""

from __future__ import annotations

import json
import sys

import numpy as np

from .errors import DimensionMismatch, FramekitError
from .frames import Frame, VectorFamily
from .linalg import DEFAULT_TOL, Tolerances

__all__ = [
    "ParseError",
    "load_document",
    "parse_frame_file",
    "parse_coeff_file",
    "parse_signal_document",
    "parse_generator_document",
    "frame_document",
    "coeff_document",
    "dump",
]


class ParseError(FramekitError):
    """The document is not valid JSON or not the expected shape."""


def load_document(path: str):
    """Read JSON from a file path, or stdin when the path is '-'."""
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc


def _entry_to_complex(entry, where: str) -> complex:
    if isinstance(entry, bool):
        raise ParseError(f"{where}: boolean is not a number")
    if isinstance(entry, (int, float)):
        value = complex(float(entry), 0.0)
    elif isinstance(entry, list) and len(entry) == 2 and all(
        isinstance(p, (int, float)) and not isinstance(p, bool) for p in entry
    ):
        value = complex(float(entry[0]), float(entry[1]))
    else:
        raise ParseError(f"{where}: expected a number or [re, im] pair, got {entry!r}")
    if not (np.isfinite(value.real) and np.isfinite(value.imag)):
        raise ParseError(f"{where}: NaN/Inf is not admitted")
    return value


def _entry_list(values, where: str) -> list[complex]:
    if not isinstance(values, list) or not values:
        raise ParseError(f"{where}: expected a non-empty list")
    return [_entry_to_complex(v, f"{where}[{i + 1}]") for i, v in enumerate(values)]


def parse_frame_file(doc, tol: Tolerances = DEFAULT_TOL):
    """Parse a frame document into a Frame (or VectorFamily if unflagged).

    The spanning check is run whenever the document carries a true
    ``frame`` flag (the default).
    """
    if not isinstance(doc, dict):
        raise ParseError("frame file must be a JSON object")
    dim = doc.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError(f"'dim' must be a positive integer, got {dim!r}")
    raw = doc.get("vectors")
    if not isinstance(raw, list) or not raw:
        raise ParseError("'vectors' must be a non-empty list")
    columns = []
    for i, vec in enumerate(raw):
        col = _entry_list(vec, f"vectors[{i + 1}]")
        if len(col) != dim:
            raise DimensionMismatch(
                f"vector {i + 1} has length {len(col)}, expected dim {dim}"
            )
        columns.append(col)
    matrix = np.array(columns, dtype=np.complex128).T
    wants_frame = bool(doc.get("frame", True))
    if wants_frame:
        return Frame(matrix, tol)
    return VectorFamily(matrix)


def parse_coeff_file(doc):
    """Parse a coefficient document into (coeffs array, erased index list)."""
    if not isinstance(doc, dict):
        raise ParseError("coefficient file must be a JSON object")
    coeffs = np.array(_entry_list(doc.get("coeffs"), "coeffs"), dtype=np.complex128)
    raw_erased = doc.get("erased", [])
    if not isinstance(raw_erased, list):
        raise ParseError("'erased' must be a list of indices")
    erased = []
    for v in raw_erased:
        if isinstance(v, bool) or not isinstance(v, int):
            raise ParseError(f"erased index {v!r} is not an integer")
        erased.append(v)
    return coeffs, erased


def parse_signal_document(doc) -> np.ndarray:
    """Parse a signal document: a bare list or {'signal': [...]}."""
    values = doc.get("signal") if isinstance(doc, dict) else doc
    return np.array(_entry_list(values, "signal"), dtype=np.complex128)


def parse_generator_document(doc) -> np.ndarray:
    """Parse a generator document {'entries': [[row], ...]} into a matrix."""
    if not isinstance(doc, dict):
        raise ParseError("generator file must be a JSON object")
    rows = doc.get("entries")
    if not isinstance(rows, list) or not rows:
        raise ParseError("'entries' must be a non-empty list of rows")
    parsed = [_entry_list(row, f"entries[{i + 1}]") for i, row in enumerate(rows)]
    width = {len(r) for r in parsed}
    if len(width) != 1:
        raise ParseError("generator rows have mixed lengths")
    return np.array(parsed, dtype=np.complex128)


def _encode_entry(z: complex):
    z = complex(z)
    if z.imag == 0.0:
        return z.real
    return [z.real, z.imag]


def frame_document(matrix: np.ndarray, extra: dict | None = None) -> dict:
    doc = {
        "dim": int(matrix.shape[0]),
        "vectors": [[_encode_entry(v) for v in matrix[:, j]] for j in range(matrix.shape[1])],
        "frame": True,
    }
    if extra:
        doc.update(extra)
    return doc


def coeff_document(coeffs: np.ndarray, erased) -> dict:
    return {
        "coeffs": [[complex(c).real, complex(c).imag] for c in coeffs],
        "erased": [int(i) for i in erased],
    }


def dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"
