"""Observables of a sampled packet and distances between packets."""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .core import WavePacket


@dataclass(frozen=True)
class PacketObservables:
    norm: float
    mean_x: float
    var_x: float
    width: float
    peak_x: float
    peak_density: float

    def as_dict(self) -> dict:
        return asdict(self)


def observables(w: WavePacket) -> PacketObservables:
    """
    Moments of |psi|^2 on the grid.

    On a periodic grid the trapezoid rule gives every sample the weight dx,
    so the moments are plain dx-weighted sums. ``mean_x`` and ``var_x`` are
    normalised by ``norm``; they are not meaningful for a packet that wraps
    around the cell.
    """
    rho = w.density
    dx = w.grid.dx
    x = w.grid.x
    norm = float(np.sum(rho) * dx)
    if norm == 0:
        raise ValueError("packet has zero norm; moments are undefined")
    mean = float(np.sum(x * rho) * dx / norm)
    var = float(np.sum((x - mean) ** 2 * rho) * dx / norm)
    var = max(var, 0.0)
    j = int(np.argmax(rho))
    return PacketObservables(norm, mean, var, float(np.sqrt(var)), float(x[j]), float(rho[j]))


@dataclass(frozen=True)
class Comparison:
    """
    Distances between two packets on the same grid.

    ``l2_relative_error`` and ``global_phase_aligned_l2`` are normalised by
    the larger of the two norms, which keeps the record symmetric.
    """

    l2_relative_error: float
    max_abs_error: float
    global_phase_aligned_l2: float

    def as_dict(self) -> dict:
        return asdict(self)


def compare(w1: WavePacket, w2: WavePacket) -> Comparison:
    if w1.grid != w2.grid:
        raise ValueError(f"grid mismatch: {w1.grid} vs {w2.grid}")
    a, b = w1.samples, w2.samples
    # fixed argument order for the phase fit so compare(a, b) == compare(b, a) bitwise
    if a.tobytes() > b.tobytes():
        a, b = b, a
    scale = max(np.linalg.norm(a), np.linalg.norm(b))
    if scale == 0:
        return Comparison(0.0, 0.0, 0.0)
    diff = a - b
    overlap = np.vdot(b, a)
    phase = overlap / abs(overlap) if overlap != 0 else 1.0
    aligned = np.linalg.norm(a - phase * b)
    return Comparison(
        float(np.linalg.norm(diff) / scale),
        float(np.max(np.abs(diff))),
        float(aligned / scale),
    )
