"""Offline flight-planning calculations for light aircraft.

The package covers the arithmetic a pilot otherwise does on a slide-rule
flight computer and the margins pages of the flight manual: the ICAO
standard atmosphere, airspeed conversions, wind triangles, holding
patterns, take-off and landing distance factoring, weight and balance,
and carburettor-icing risk.  Everything runs locally from bundled data.

Most callers want either :func:`flightcalc.api.dispatch` (name + JSON-ish
inputs, as used by the CLI and the local service) or the typed functions
in the topic modules (:mod:`flightcalc.atmosphere`,
:mod:`flightcalc.windnav`, ...).
"""

from __future__ import annotations

from flightcalc.errors import CalcError, UnitError, UnsolvableError
from flightcalc.units import Quantity, convert, make

__all__ = [
    "CalcError",
    "UnitError",
    "UnsolvableError",
    "Quantity",
    "convert",
    "make",
]

__version__ = "0.1.0"
