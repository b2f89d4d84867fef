"""Curve families for the ``figures`` command, keyed by figure id.

Each family holds ``omega_r = 1/2``, ``omega_L = 1/2``, ``nu = 2`` and the
polarisation fixed except along its one varied axis.  The values along that
axis are chosen to show each regime: small separations for ids 1 and 5, the
first integers for the deficit angle in id 2, near-string distances
(including the on-string limit) for id 3 and far distances for id 4.
"""

from dataclasses import dataclass

from .analysis import first_death_time
from .dynamics import werner_state
from .errors import ConfigError
from .kossakowski import ISOTROPIC, RADIAL, TANGENTIAL, DipolePair, coefficients_from_response
from .response import GeometryParams, SummationControl, cross_response, flat_space_response

ISOTROPIC_PAIR = DipolePair(ISOTROPIC, ISOTROPIC)
RADIAL_TANGENTIAL_PAIR = DipolePair(RADIAL, TANGENTIAL)

FIG1_OMEGA_L = (0.5, 1.0, 1.5)
FIG2_NU = (1.0, 2.0, 3.0, 4.0)
FIG3_OMEGA_R = (0.0, 0.1, 0.3, 0.5, 1.0)
FIG4_OMEGA_R = (2.0, 4.0, 6.0, 8.0, 10.0)
FIG5_OMEGA_L = (0.5, 1.0, 1.5, 2.0)


@dataclass(frozen=True)
class Curve:
    """One plotted line; ``minkowski`` curves ignore ``nu`` and ``omega_r``."""

    label: str
    geometry: GeometryParams
    dipoles: DipolePair
    minkowski: bool = False

    @property
    def dipole_label(self):
        return "isotropic" if self.dipoles == ISOTROPIC_PAIR else "radial-tangential"

    def response(self, ctl=None):
        if self.minkowski:
            return flat_space_response(self.geometry.omega_L)
        return cross_response(self.geometry, ctl or SummationControl())

    def coefficients(self, ctl=None):
        return coefficients_from_response(self.response(ctl), self.dipoles)


def _num(x):
    return f"{x:g}"


def _fig1():
    out = []
    for L in FIG1_OMEGA_L:
        out.append(Curve(f"cs_nu2_omegaL{_num(L)}", GeometryParams(2.0, 0.5, L), ISOTROPIC_PAIR))
    for L in FIG1_OMEGA_L:
        out.append(Curve(f"minkowski_omegaL{_num(L)}", GeometryParams(1.0, 0.5, L),
                         ISOTROPIC_PAIR, minkowski=True))
    return out


def _fig2(dipoles):
    return [Curve(f"nu{_num(nu)}", GeometryParams(nu, 0.5, 0.5), dipoles) for nu in FIG2_NU]


def _radial_family(values, dipoles, far=False):
    out = [Curve(f"omegar{_num(r)}", GeometryParams(2.0, r, 0.5), dipoles) for r in values]
    if far:
        out.append(Curve("minkowski", GeometryParams(1.0, 0.0, 0.5), dipoles, minkowski=True))
    return out


def _fig5():
    return [Curve(f"omegaL{_num(L)}", GeometryParams(2.0, 0.5, L), ISOTROPIC_PAIR)
            for L in FIG5_OMEGA_L]


FIGURES = {
    "1": _fig1,
    "2a": lambda: _fig2(ISOTROPIC_PAIR),
    "2b": lambda: _fig2(RADIAL_TANGENTIAL_PAIR),
    "3a": lambda: _radial_family(FIG3_OMEGA_R, ISOTROPIC_PAIR),
    "3b": lambda: _radial_family(FIG3_OMEGA_R, RADIAL_TANGENTIAL_PAIR),
    "4a": lambda: _radial_family(FIG4_OMEGA_R, ISOTROPIC_PAIR, far=True),
    "4b": lambda: _radial_family(FIG4_OMEGA_R, RADIAL_TANGENTIAL_PAIR, far=True),
    "5": _fig5,
}


def figure_curves(figure_id):
    try:
        return FIGURES[str(figure_id).lower()]()
    except KeyError:
        raise ConfigError(f"unknown figure id {figure_id!r}; choose from {sorted(FIGURES)}") from None


def curve_lifetime(curve, werner_p=2 / 3, t_max=30.0, ctl=None):
    """First sudden-death time of ``curve``'s Werner start (inf if none)."""
    return first_death_time(werner_state(werner_p), curve.coefficients(ctl), t_max=t_max)
