"""Unit registry and conversion engine.

Each category has one canonical unit; a conversion is two affine steps
through it (canonical = value * scale + offset). Only temperature has
non-zero offsets, everything else is a pure scale. The engine never
rounds: display formatting is the caller's concern.

Conversion constants (exact standard definitions):

    1 ft      = 0.3048 m            1 NM     = 1852 m
    1 SM      = 1609.344 m          1 in     = 0.0254 m
    1 kt      = 1852/3600 m/s
    1 mph     = 0.44704 m/s         1 km/h   = 1000/3600 m/s
    1 lb      = 0.45359237 kg       1 US gal = 3.785411784 L
    1 imp gal = 4.54609 L           1 inHg   = 33.8639 hPa
    1 psi     = 68.94757293168361 hPa
    K = degC + 273.15               K = (degF + 459.67) * 5/9
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import UnitError


@dataclass(frozen=True)
class UnitDef:
    ident: str
    category: str
    display: str
    scale: float       # canonical = value * scale + offset
    offset: float = 0.0


_DEFS = (
    # distance, canonical metre
    UnitDef("m", "distance", "m", 1.0),
    UnitDef("km", "distance", "km", 1000.0),
    UnitDef("nm", "distance", "NM", 1852.0),
    UnitDef("sm", "distance", "SM", 1609.344),
    UnitDef("ft", "distance", "ft", 0.3048),
    UnitDef("in", "distance", "in", 0.0254),
    # speed, canonical metre/second
    UnitDef("ms", "speed", "m/s", 1.0),
    UnitDef("kt", "speed", "kt", 1852.0 / 3600.0),
    UnitDef("mph", "speed", "mph", 0.44704),
    UnitDef("kmh", "speed", "km/h", 1000.0 / 3600.0),
    # mass, canonical kilogram
    UnitDef("kg", "mass", "kg", 1.0),
    UnitDef("lb", "mass", "lb", 0.45359237),
    # volume, canonical litre
    UnitDef("l", "volume", "L", 1.0),
    UnitDef("usgal", "volume", "US gal", 3.785411784),
    UnitDef("impgal", "volume", "imp gal", 4.54609),
    # temperature, canonical kelvin
    UnitDef("k", "temperature", "K", 1.0),
    UnitDef("degc", "temperature", "degC", 1.0, 273.15),
    UnitDef("degf", "temperature", "degF", 5.0 / 9.0, 459.67 * 5.0 / 9.0),
    # pressure, canonical hectopascal
    UnitDef("hpa", "pressure", "hPa", 1.0),
    UnitDef("inhg", "pressure", "inHg", 33.8639),
    UnitDef("psi", "pressure", "psi", 68.94757293168361),
    # angle, canonical degree
    UnitDef("deg", "angle", "deg", 1.0),
    UnitDef("rad", "angle", "rad", 180.0 / math.pi),
    # time, canonical second
    UnitDef("s", "time", "s", 1.0),
    UnitDef("min", "time", "min", 60.0),
    UnitDef("hr", "time", "hr", 3600.0),
    # dimensionless, canonical ratio (1.0); lets every numeric payload
    # field carry a unit identifier even when there is no dimension
    UnitDef("ratio", "ratio", "", 1.0),
    UnitDef("percent", "ratio", "%", 0.01),
    # density, canonical kg per cubic metre
    UnitDef("kgm3", "density", "kg/m^3", 1.0),
    # moment (mass * arm), canonical kilogram-metre
    UnitDef("kgm", "moment", "kg.m", 1.0),
    UnitDef("lbin", "moment", "lb.in", 0.45359237 * 0.0254),
)

UNITS: dict[str, UnitDef] = {d.ident: d for d in _DEFS}

CATEGORIES: dict[str, list[str]] = {}
for _d in _DEFS:
    CATEGORIES.setdefault(_d.category, []).append(_d.ident)

# canonical unit = first listed per category
CANONICAL: dict[str, str] = {cat: idents[0] for cat, idents in CATEGORIES.items()}


def unit_def(ident: str) -> UnitDef:
    try:
        return UNITS[ident]
    except KeyError:
        raise UnitError(f"unknown unit identifier {ident!r}") from None


@dataclass(frozen=True)
class Quantity:
    """An immutable value tagged with a unit identifier."""

    value: float
    unit: str

    def __post_init__(self) -> None:
        unit_def(self.unit)
        if not math.isfinite(self.value):
            raise UnitError(f"non-finite quantity {self.value!r} {self.unit}")

    @property
    def category(self) -> str:
        return UNITS[self.unit].category

    def to(self, target: str) -> "Quantity":
        return convert(self, target)

    def value_in(self, target: str) -> float:
        return convert(self, target).value

    def __str__(self) -> str:
        disp = UNITS[self.unit].display
        return f"{self.value:g} {disp}".rstrip()


def convert(q: Quantity, target: str) -> Quantity:
    """Convert a Quantity to another unit of the same category."""
    src = unit_def(q.unit)
    dst = unit_def(target)
    if src.category != dst.category:
        raise UnitError(
            f"cannot convert {q.unit!r} ({src.category}) to {target!r} ({dst.category})"
        )
    if src.ident == dst.ident:
        return q
    canonical = q.value * src.scale + src.offset
    return Quantity((canonical - dst.offset) / dst.scale, target)


def make(value: float, unit: str) -> Quantity:
    return Quantity(float(value), unit)


def list_units() -> list[dict]:
    """Registry listing for the catalogue: one record per unit."""
    out = []
    for d in _DEFS:
        out.append(
            {
                "ident": d.ident,
                "category": d.category,
                "display": d.display,
                "scale": d.scale,
                "offset": d.offset,
                "canonical": CANONICAL[d.category] == d.ident,
            }
        )
    return out
