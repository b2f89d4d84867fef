"""Scenario files: flat ``key = value`` text with optional section headers.

Example::

    # isotropic dipoles, nu = 2
    [geometry]
    nu = 2
    omega_r = 0.5
    omega_L = 0.5
    [dipoles]
    d1 = 1, 1, 1      # normalised on load
    d2 = 1, 1, 1
    [evolution]
    t_max = 30
    dt = 0.005
    method = exact
    [sweep]
    sweep_param = omega_L
    sweep_values = 0.5, 1.0, 1.5

Section headers are accepted for readability only; keys are global.
"""

import logging
import math
from dataclasses import dataclass, replace

import numpy as np

from .dynamics import EvolutionSettings
from .errors import ConfigError
from .kossakowski import ISOTROPIC, DipolePair
from .response import GeometryParams, SummationControl

log = logging.getLogger(__name__)

SECTIONS = ("geometry", "dipoles", "evolution", "numerics", "sweep")
KEYS = (
    "nu", "omega_r", "omega_L", "d1", "d2", "werner_p", "t_max", "dt", "method",
    "n_max", "term_tol", "quad_points", "quad_tol", "sweep_param", "sweep_values",
)
SWEEP_PARAMS = ("nu", "omega_r", "omega_L")
_REQUIRED = ("nu", "omega_r", "omega_L")
_CANONICAL = {k.lower(): k for k in KEYS}


@dataclass(frozen=True)
class Sweep:
    param: str
    values: tuple

    def __post_init__(self):
        if self.param not in SWEEP_PARAMS:
            raise ConfigError(f"sweep_param must be one of {SWEEP_PARAMS}, got {self.param!r}")
        if not self.values:
            raise ConfigError("sweep_values must not be empty")
        if not all(math.isfinite(v) for v in self.values):
            raise ConfigError("sweep_values must be finite")


@dataclass(frozen=True)
class Scenario:
    geometry: GeometryParams
    dipoles: DipolePair
    werner_p: float = 2 / 3
    evolution: EvolutionSettings = EvolutionSettings()
    numerics: SummationControl = SummationControl()
    sweep: Sweep = None

    def __post_init__(self):
        if not (0 <= self.werner_p <= 1):
            raise ConfigError(f"werner_p must lie in [0, 1], got {self.werner_p}")

    def points(self):
        """One sweep-free scenario per sweep value (or just ``self``)."""
        if self.sweep is None:
            return [self]
        out = []
        for value in self.sweep.values:
            geom = replace(self.geometry, **{self.sweep.param: float(value)})
            out.append(replace(self, geometry=geom, sweep=None))
        return out


def read_config(path):
    """Parse a scenario file into a ``{key: raw string}`` mapping."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("[") and line.endswith("]"):
                section = line[1:-1].strip().lower()
                if section not in SECTIONS:
                    raise ConfigError(f"{path}:{lineno}: unknown section [{section}]")
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            canonical = _CANONICAL.get(key.lower())
            if canonical is None:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            if canonical in values:
                raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
            values[canonical] = value
    return values


def _float(values, key, default=None):
    if key not in values:
        if default is None:
            raise ConfigError(f"missing required key {key!r}")
        return default
    try:
        return float(values[key])
    except ValueError:
        raise ConfigError(f"{key}: expected a number, got {values[key]!r}") from None


def _int(values, key, default):
    if key not in values:
        return default
    try:
        return int(values[key])
    except ValueError:
        raise ConfigError(f"{key}: expected an integer, got {values[key]!r}") from None


def _floats(text, key):
    try:
        return tuple(float(v) for v in text.replace(",", " ").split())
    except ValueError:
        raise ConfigError(f"{key}: expected comma-separated numbers, got {text!r}") from None


def _vector(values, key):
    if key not in values:
        return np.array(ISOTROPIC)
    vec = np.array(_floats(values[key], key))
    if vec.shape != (3,):
        raise ConfigError(f"{key}: expected three components, got {values[key]!r}")
    norm = np.linalg.norm(vec)
    if norm == 0:
        raise ConfigError(f"{key} must be non-zero")
    if abs(norm - 1) > 1e-6:
        log.warning("%s has norm %.6g; normalising to a unit vector", key, norm)
    return vec


def build_scenario(values):
    """Validate a raw mapping (from :func:`read_config` plus overrides)."""
    unknown = set(values) - set(KEYS)
    if unknown:
        raise ConfigError(f"unknown keys: {sorted(unknown)}")
    sweep = None
    if "sweep_param" in values or "sweep_values" in values:
        if "sweep_param" not in values or "sweep_values" not in values:
            raise ConfigError("sweep_param and sweep_values must be given together")
        sweep = Sweep(values["sweep_param"], _floats(values["sweep_values"], "sweep_values"))
    geo = {}
    for key in _REQUIRED:
        if sweep is not None and key == sweep.param and key not in values:
            geo[key] = float(sweep.values[0])
        else:
            geo[key] = _float(values, key)
    defaults = SummationControl()
    evo_default = EvolutionSettings()
    scenario = Scenario(
        geometry=GeometryParams(**geo),
        dipoles=DipolePair.normalized(_vector(values, "d1"), _vector(values, "d2")),
        werner_p=_float(values, "werner_p", 2 / 3),
        evolution=EvolutionSettings(
            t_max=_float(values, "t_max", evo_default.t_max),
            dt=_float(values, "dt", evo_default.dt),
            method=values.get("method", evo_default.method).strip(),
        ),
        numerics=SummationControl(
            n_max=_int(values, "n_max", defaults.n_max),
            term_tol=_float(values, "term_tol", defaults.term_tol),
            quad_points=_int(values, "quad_points", defaults.quad_points),
            quad_tol=_float(values, "quad_tol", defaults.quad_tol),
        ),
        sweep=sweep,
    )
    scenario.points()  # sweep values must each give a valid geometry
    return scenario


def load_scenario(path=None, overrides=None):
    values = read_config(path) if path else {}
    values.update(overrides or {})
    return build_scenario(values)
