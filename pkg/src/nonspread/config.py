"""
Run configuration and its YAML file format.

A config file is a YAML mapping with these keys (all required except
``method`` and ``output``)::

    grid:       {n: 1024, x_min: -40.0, x_max: 40.0}
    constants:  {hbar: 1.0, m0: 1.0, c: 10.0}
    initial:    {kind: gaussian, x0: 0.0, a: 1.0, p_x: 1.0, normalize: true, amplitude: 1.0}
    dispersion: {kind: doppler, v: 1.0}        # or {kind: quadratic}
    times:      [0.0, 1.0, 2.0]
    method:     spectral                       # or convolution
    output:     runs/demo                      # path prefix for CSV files

Floats are written with ``repr`` so a dump/load cycle is exact.
"""
from __future__ import annotations

import hashlib
import math
import re
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .core import (DispersionRelation, Doppler, GaussianParams, Grid1D,
                   PhysicalConstants, Quadratic, make_grid)
from .propagator import Method


class ConfigError(ValueError):
    """Malformed or invalid run configuration."""


class _Loader(yaml.SafeLoader):
    """SafeLoader that also reads exponent floats without a dot, such as 1e5."""


_Loader.add_implicit_resolver(
    "tag:yaml.org,2002:float",
    re.compile(r"""^(?:[-+]?(?:[0-9][0-9_]*)\.[0-9_]*(?:[eE][-+]?[0-9]+)?
                    |[-+]?(?:[0-9][0-9_]*)(?:[eE][-+]?[0-9]+)
                    |\.[0-9_]+(?:[eE][-+]?[0-9]+)?
                    |[-+]?\.(?:inf|Inf|INF)
                    |\.(?:nan|NaN|NAN))$""", re.X),
    list("-+0123456789."))


@dataclass(frozen=True)
class GridSpec:
    n: int = 1024
    x_min: float = -40.0
    x_max: float = 40.0

    def build(self) -> Grid1D:
        return make_grid(self.n, self.x_min, self.x_max)


@dataclass(frozen=True)
class RunConfig:
    grid: GridSpec = field(default_factory=GridSpec)
    constants: PhysicalConstants = field(default_factory=PhysicalConstants)
    initial: GaussianParams = field(default_factory=lambda: GaussianParams(0.0, 1.0, 1.0))
    dispersion: DispersionRelation = field(default_factory=Quadratic)
    times: tuple = (0.0, 1.0, 2.0)
    method: Method = Method.SPECTRAL
    output: str = "run"

    def __post_init__(self):
        object.__setattr__(self, "times", tuple(float(t) for t in self.times))
        object.__setattr__(self, "method", Method(self.method))
        if not all(math.isfinite(t) for t in self.times):
            raise ConfigError("times must be finite")
        if any(b <= a for a, b in zip(self.times, self.times[1:])):
            raise ConfigError(f"times must be strictly increasing, got {list(self.times)}")
        if self.method is Method.CONVOLUTION and not isinstance(self.dispersion, Quadratic):
            raise ConfigError("method 'convolution' requires the quadratic dispersion")
        if isinstance(self.dispersion, Doppler):
            try:
                self.dispersion.check(self.constants)
            except ValueError as exc:
                raise ConfigError(str(exc)) from exc
        try:
            self.grid.build()
        except ValueError as exc:
            raise ConfigError(f"grid: {exc}") from exc

    def to_dict(self) -> dict:
        d = self.dispersion
        disp = {"kind": "quadratic"} if isinstance(d, Quadratic) else {"kind": "doppler", "v": d.v}
        p = self.initial
        return {
            "grid": {"n": self.grid.n, "x_min": self.grid.x_min, "x_max": self.grid.x_max},
            "constants": {"hbar": self.constants.hbar, "m0": self.constants.m0,
                          "c": self.constants.c},
            "initial": {"kind": "gaussian", "x0": p.x0, "a": p.a, "p_x": p.p_x,
                        "normalize": p.normalize, "amplitude": p.amplitude},
            "dispersion": disp,
            "times": list(self.times),
            "method": self.method.value,
            "output": self.output,
        }

    def hash(self) -> str:
        return hashlib.sha256(dumps(self).encode()).hexdigest()


def _section(data: dict, key: str) -> dict:
    sec = data.get(key)
    if not isinstance(sec, dict):
        raise ConfigError(f"missing or malformed section '{key}'")
    return sec


def _num(sec: dict, key: str, where: str, kind=float, default=None):
    if key not in sec:
        if default is None:
            raise ConfigError(f"{where}.{key} is required")
        return default
    val = sec[key]
    if isinstance(val, bool) or not isinstance(val, (int, float)):
        raise ConfigError(f"{where}.{key} must be a number, got {val!r}")
    if kind is int:
        if not isinstance(val, int):
            raise ConfigError(f"{where}.{key} must be an integer, got {val!r}")
        return val
    return float(val)


def from_dict(data) -> RunConfig:
    if not isinstance(data, dict):
        raise ConfigError("config must be a mapping")
    known = {"grid", "constants", "initial", "dispersion", "times", "method", "output"}
    extra = set(data) - known
    if extra:
        raise ConfigError(f"unknown keys: {sorted(extra)}")
    try:
        g = _section(data, "grid")
        grid = GridSpec(_num(g, "n", "grid", int), _num(g, "x_min", "grid"),
                        _num(g, "x_max", "grid"))
        c = _section(data, "constants")
        consts = PhysicalConstants(_num(c, "hbar", "constants", default=1.0),
                                   _num(c, "m0", "constants", default=1.0),
                                   _num(c, "c", "constants", default=10.0))
        i = _section(data, "initial")
        if i.get("kind", "gaussian") != "gaussian":
            raise ConfigError(f"initial.kind must be 'gaussian', got {i.get('kind')!r}")
        normalize = i.get("normalize", True)
        if not isinstance(normalize, bool):
            raise ConfigError("initial.normalize must be true or false")
        initial = GaussianParams(_num(i, "x0", "initial"), _num(i, "a", "initial"),
                                 _num(i, "p_x", "initial", default=0.0), normalize,
                                 _num(i, "amplitude", "initial", default=1.0))
        d = _section(data, "dispersion")
        kind = d.get("kind")
        if kind == "quadratic":
            disp = Quadratic()
        elif kind == "doppler":
            disp = Doppler(_num(d, "v", "dispersion"))
        else:
            raise ConfigError(f"dispersion.kind must be 'quadratic' or 'doppler', got {kind!r}")
        times = data.get("times")
        if not isinstance(times, list) or not all(
                isinstance(t, (int, float)) and not isinstance(t, bool) for t in times):
            raise ConfigError("times must be a list of numbers")
        method = data.get("method", "spectral")
        if method not in {m.value for m in Method}:
            raise ConfigError(f"method must be 'spectral' or 'convolution', got {method!r}")
        output = data.get("output", "run")
        if not isinstance(output, str) or not output:
            raise ConfigError("output must be a non-empty string")
        return RunConfig(grid, consts, initial, disp, tuple(times), Method(method), output)
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def dumps(cfg: RunConfig) -> str:
    return yaml.safe_dump(cfg.to_dict(), sort_keys=False, default_flow_style=None)


def loads(text: str) -> RunConfig:
    try:
        data = yaml.load(text, Loader=_Loader)
    except yaml.YAMLError as exc:
        raise ConfigError(f"not valid YAML: {exc}") from exc
    return from_dict(data)


def load(path) -> RunConfig:
    """Read a config file. ``OSError`` propagates with the path attached."""
    path = Path(path)
    return loads(path.read_text())


def save(cfg: RunConfig, path) -> None:
    Path(path).write_text(dumps(cfg))
