"""File formats: boundary and coefficient JSON, field CSV, report JSON.

Complex numbers are stored as ``[re, im]`` pairs in JSON.  Floats are
written with 17 significant digits so a binary64 value survives a round
trip through text unchanged.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .errors import DomainError
from .series import AlphaHarmonicSeries
from .solver import BoundaryData

FIELD_COLUMNS = ("x", "y", "f_re", "f_im", "fz_re", "fz_im", "fzbar_re", "fzbar_im")


def fmt_float(x) -> str:
    return format(float(x), ".17g")


def _complex(pair, what):
    if isinstance(pair, (int, float)):
        return complex(pair)
    if isinstance(pair, (list, tuple)) and len(pair) == 2 and all(isinstance(v, (int, float)) for v in pair):
        return complex(pair[0], pair[1])
    raise DomainError(f"{what}: expected [re, im], got {pair!r}")


def _coeff_map(raw, what):
    if not isinstance(raw, dict):
        raise DomainError(f"{what} must be an object keyed by integer index")
    out = {}
    for k, v in raw.items():
        try:
            idx = int(k)
        except (TypeError, ValueError):
            raise DomainError(f"{what}: index {k!r} is not an integer") from None
        out[idx] = _complex(v, f"{what}[{k}]")
    return out


def boundary_from_json(obj, interp_order: int = 0) -> BoundaryData:
    """``{"fourier": {"k": [re, im]}}`` or ``{"samples": [[re, im], ...]}``."""
    if not isinstance(obj, dict) or len({"fourier", "samples"} & obj.keys()) != 1:
        raise DomainError('boundary JSON needs exactly one of "fourier" or "samples"')
    if "fourier" in obj:
        return BoundaryData.from_fourier(_coeff_map(obj["fourier"], "fourier"))
    samples = obj["samples"]
    if not isinstance(samples, list):
        raise DomainError("samples must be a list of [re, im] pairs")
    return BoundaryData.from_samples([_complex(s, "sample") for s in samples], interp_order=interp_order)


def boundary_to_json(data: BoundaryData) -> dict:
    if data.fourier is not None:
        return {"fourier": {str(k): [c.real, c.imag] for k, c in sorted(data.fourier.items())}}
    return {"samples": [[c.real, c.imag] for c in data.samples]}


def series_from_json(obj, alpha: float | None = None) -> AlphaHarmonicSeries:
    """``{"alpha": a, "coeffs": {"k": [re, im]}}``; ``alpha`` overrides the file."""
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise DomainError('coefficient JSON needs a "coeffs" object')
    if alpha is None:
        if "alpha" not in obj or not isinstance(obj["alpha"], (int, float)):
            raise DomainError('coefficient JSON needs a numeric "alpha"')
        alpha = obj["alpha"]
    return AlphaHarmonicSeries(_coeff_map(obj["coeffs"], "coeffs"), float(alpha))


def series_to_json(s: AlphaHarmonicSeries) -> dict:
    return {"alpha": s.alpha, "coeffs": {str(k): [c.real, c.imag] for k, c in sorted(s.coeffs.coeffs.items())}}


def read_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def write_json(obj, path=None) -> str:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if path is not None:
        Path(path).write_text(text + "\n", encoding="utf-8")
    return text


def write_field_csv(path_or_file, z, f, fz, fzbar) -> None:
    z, f, fz, fzbar = (np.asarray(a, dtype=complex).ravel() for a in (z, f, fz, fzbar))
    rows = np.stack([z.real, z.imag, f.real, f.imag, fz.real, fz.imag, fzbar.real, fzbar.imag], axis=1)

    def dump(fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(FIELD_COLUMNS)
        for row in rows:
            w.writerow([fmt_float(v) for v in row])

    if hasattr(path_or_file, "write"):
        dump(path_or_file)
    else:
        with open(path_or_file, "w", newline="", encoding="utf-8") as fh:
            dump(fh)


def read_field_csv(path):
    """Inverse of :func:`write_field_csv`: returns ``(z, f, fz, fzbar)``."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if tuple(header or ()) != FIELD_COLUMNS:
            raise DomainError(f"unexpected field CSV header {header!r}")
        data = np.array([[float(v) for v in row] for row in reader], dtype=float).reshape(-1, 8)
    pairs = data[:, 0::2] + 1j * data[:, 1::2]
    return tuple(pairs[:, i] for i in range(4))
