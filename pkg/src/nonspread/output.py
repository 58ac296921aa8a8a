"""
CSV emission for propagation results.

For a path prefix ``out/run`` a result with N snapshots produces::

    out/run_t0000.csv ... out/run_t{N-1:04d}.csv   columns x, re, im, density
    out/run_manifest.json                          times, method, dispersion, config_hash, files

Numbers are written with 17 significant digits (``%.17g``), which is enough
to round-trip any float64. Output is a pure function of the result, so the
same configuration always yields the same bytes.
"""
from __future__ import annotations

import hashlib
import io
import json
import os
from pathlib import Path

import numpy as np

from .core import Doppler
from .propagator import PropagationResult

OUTPUT_DIR_ENV = "NONSPREAD_OUTPUT_DIR"


class OutputError(OSError):
    """Writing an output file failed; the message names the path."""


def resolve_prefix(prefix) -> Path:
    """Relative prefixes are placed under ``$NONSPREAD_OUTPUT_DIR`` when it is set."""
    prefix = Path(prefix)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not prefix.is_absolute():
        return Path(base) / prefix
    return prefix


def _dispersion_record(d) -> dict:
    if isinstance(d, Doppler):
        return {"kind": "doppler", "v": d.v}
    return {"kind": "quadratic"}


def snapshot_csv(x, psi) -> str:
    buf = io.StringIO()
    buf.write("x,re,im,density\n")
    re, im = psi.real, psi.imag
    table = np.column_stack([x, re, im, re * re + im * im])
    np.savetxt(buf, table, fmt="%.17g", delimiter=",")
    return buf.getvalue()


def _result_hash(result: PropagationResult) -> str:
    h = hashlib.sha256()
    h.update(repr((result.times, result.method.value, _dispersion_record(result.dispersion))).encode())
    for snap in result.snapshots:
        h.update(snap.samples.tobytes())
    return h.hexdigest()


def _write(path: Path, text: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc.strerror or exc}") from exc


def emit_csv(result: PropagationResult, prefix, config_hash: str | None = None) -> list[Path]:
    """
    Write one CSV per snapshot plus a JSON manifest.

    ``config_hash`` identifies the run configuration; when omitted a hash of
    the result itself is recorded. Returns the written paths, manifest last.
    """
    prefix = Path(prefix)
    paths = []
    for i, snap in enumerate(result.snapshots):
        path = prefix.with_name(f"{prefix.name}_t{i:04d}.csv")
        _write(path, snapshot_csv(snap.grid.x, snap.samples))
        paths.append(path)
    manifest = {
        "times": [float(t) for t in result.times],
        "method": result.method.value,
        "dispersion": _dispersion_record(result.dispersion),
        "config_hash": config_hash or _result_hash(result),
        "files": [p.name for p in paths],
    }
    mpath = prefix.with_name(f"{prefix.name}_manifest.json")
    _write(mpath, json.dumps(manifest, indent=2) + "\n")
    paths.append(mpath)
    return paths


def read_snapshot(path) -> np.ndarray:
    """Load a snapshot CSV as a structured array with fields x, re, im, density."""
    return np.genfromtxt(path, delimiter=",", names=True)
