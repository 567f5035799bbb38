"""Wind decomposition, the wind triangle and spherical navigation.

Angle convention throughout: degrees true, wind directions are the
direction the wind blows FROM, positive wind correction angle means the
nose goes right of course. The navigation sphere uses the classic
1 arc-minute = 1 NM radius so great-circle distances come out in
nautical miles directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CalcError, UnsolvableError

# sphere radius in NM per radian of arc: 1 arc-minute subtends 1 NM
NM_PER_RAD = 180.0 * 60.0 / math.pi

LOS_COEFF = 1.23  # NM per sqrt(ft), radio horizon approximation


def normalize_deg(angle: float) -> float:
    """Normalise an angle to [0, 360)."""
    a = angle % 360.0
    # float % can round a tiny negative up to exactly 360.0
    return 0.0 if a >= 360.0 else a


def signed_delta_deg(from_deg: float, to_deg: float) -> float:
    """Smallest signed angle from one direction to another, in [-180, 180)."""
    return normalize_deg(to_deg - from_deg + 180.0) - 180.0


@dataclass(frozen=True)
class Wind:
    direction_from_deg: float
    speed_kt: float

    def __post_init__(self) -> None:
        if self.speed_kt < 0.0:
            raise CalcError(f"wind speed must be >= 0, got {self.speed_kt:g} kt")
        if not math.isfinite(self.direction_from_deg):
            raise CalcError("wind direction must be finite")
        object.__setattr__(
            self, "direction_from_deg", normalize_deg(self.direction_from_deg)
        )


@dataclass(frozen=True)
class WindComponents:
    headwind_kt: float   # positive = headwind, negative = tailwind
    crosswind_kt: float  # magnitude, >= 0
    side: str            # 'left', 'right' or 'none'


def wind_components(reference_heading_deg: float, wind: Wind) -> WindComponents:
    """Decompose wind onto a reference heading (runway or course)."""
    delta = math.radians(signed_delta_deg(reference_heading_deg, wind.direction_from_deg))
    head = wind.speed_kt * math.cos(delta)
    cross = wind.speed_kt * math.sin(delta)
    if wind.speed_kt == 0.0 or cross == 0.0:
        side = "none"
    else:
        side = "right" if cross > 0.0 else "left"
    return WindComponents(head, abs(cross), side)


def clock_code_crosswind(angle_off_deg: float, wind_speed_kt: float) -> float:
    """Mental-math crosswind estimate: the angle off in minutes past the
    hour, capped at 60, gives the fraction of the wind speed."""
    if not (0.0 <= angle_off_deg <= 180.0):
        raise CalcError(f"angle off must be in [0, 180] deg, got {angle_off_deg:g}")
    if wind_speed_kt < 0.0:
        raise CalcError(f"wind speed must be >= 0, got {wind_speed_kt:g} kt")
    return wind_speed_kt * min(angle_off_deg / 60.0, 1.0)


@dataclass(frozen=True)
class WindSolution:
    wind_correction_deg: float  # positive = nose right of course
    heading_deg: float
    ground_speed_kt: float


def solve_wind_triangle(course_deg: float, tas_kt: float, wind: Wind) -> WindSolution:
    """Heading and ground speed to make good a course through wind.

    With beta the wind-from direction relative to course:
        sin(WCA) = ws * sin(beta) / tas
        GS = tas * cos(WCA) - ws * cos(beta)
    """
    if tas_kt <= 0.0:
        raise CalcError(f"TAS must be positive, got {tas_kt:g} kt")
    beta = math.radians(signed_delta_deg(course_deg, wind.direction_from_deg))
    swc = wind.speed_kt * math.sin(beta) / tas_kt
    if abs(swc) > 1.0:
        limit = math.degrees(math.asin(tas_kt / wind.speed_kt))
        raise UnsolvableError(
            f"crosswind component {abs(wind.speed_kt * math.sin(beta)):.1f} kt exceeds "
            f"TAS {tas_kt:g} kt; course cannot be held (solvable only within "
            f"{limit:.1f} deg of the wind axis)"
        )
    wca = math.asin(swc)
    gs = tas_kt * math.cos(wca) - wind.speed_kt * math.cos(beta)
    if gs <= 0.0:
        raise UnsolvableError(
            f"wind {wind.direction_from_deg:g} deg at {wind.speed_kt:g} kt leaves no "
            f"positive ground speed on course {course_deg:g} deg at TAS {tas_kt:g} kt"
        )
    wca_deg = math.degrees(wca)
    return WindSolution(wca_deg, normalize_deg(course_deg + wca_deg), gs)


def _check_latlon(lat_deg: float, lon_deg: float, name: str) -> None:
    if not (math.isfinite(lat_deg) and math.isfinite(lon_deg)):
        raise CalcError(f"{name} must be finite")
    if not (-90.0 <= lat_deg <= 90.0):
        raise CalcError(f"{name} latitude {lat_deg:g} outside [-90, 90]")
    if not (-540.0 <= lon_deg <= 540.0):
        raise CalcError(f"{name} longitude {lon_deg:g} outside [-540, 540]")


@dataclass(frozen=True)
class GreatCircle:
    distance_nm: float
    initial_bearing_deg: float | None  # None when coincident or antipodal


def great_circle(lat1: float, lon1: float, lat2: float, lon2: float) -> GreatCircle:
    """Great-circle distance and initial bearing on the navigation sphere."""
    _check_latlon(lat1, lon1, "start")
    _check_latlon(lat2, lon2, "end")
    p1, l1 = math.radians(lat1), math.radians(lon1)
    p2, l2 = math.radians(lat2), math.radians(lon2)
    dlon = l2 - l1
    sa = math.sin((p2 - p1) / 2.0)
    so = math.sin(dlon / 2.0)
    a = sa * sa + math.cos(p1) * math.cos(p2) * so * so
    c = 2.0 * math.asin(min(1.0, math.sqrt(a)))
    if c < 1e-12 or math.pi - c < 1e-9:
        # coincident or antipodal: every (or no) bearing works
        return GreatCircle(c * NM_PER_RAD, None)
    y = math.sin(dlon) * math.cos(p2)
    x = math.cos(p1) * math.sin(p2) - math.sin(p1) * math.cos(p2) * math.cos(dlon)
    return GreatCircle(c * NM_PER_RAD, normalize_deg(math.degrees(math.atan2(y, x))))


@dataclass(frozen=True)
class RhumbLine:
    distance_nm: float
    bearing_deg: float


def rhumb_line(lat1: float, lon1: float, lat2: float, lon2: float) -> RhumbLine:
    """Constant-bearing (loxodrome) track between two points.

    Uses meridional parts: bearing = atan2(dlon, dpsi) with
    psi = ln(tan(pi/4 + lat/2)); the longitude difference is taken the
    short way round.
    """
    _check_latlon(lat1, lon1, "start")
    _check_latlon(lat2, lon2, "end")
    if abs(lat1) == 90.0 or abs(lat2) == 90.0:
        raise CalcError("rhumb line undefined at the poles")
    p1, p2 = math.radians(lat1), math.radians(lat2)
    dphi = p2 - p1
    dlon = math.radians(signed_delta_deg(0.0, lon2 - lon1))
    dpsi = math.log(math.tan(math.pi / 4.0 + p2 / 2.0) / math.tan(math.pi / 4.0 + p1 / 2.0))
    bearing = math.atan2(dlon, dpsi)
    if abs(dpsi) > 1e-12:
        q = dphi / dpsi
    else:
        q = math.cos(p1)
    dist = math.hypot(dphi, q * dlon) * NM_PER_RAD
    return RhumbLine(dist, normalize_deg(math.degrees(bearing)))


def line_of_sight_range_nm(altitude1_ft: float, altitude2_ft: float = 0.0) -> float:
    """VHF radio horizon: 1.23 * (sqrt(h1) + sqrt(h2)) NM with h in ft."""
    if altitude1_ft < 0.0 or altitude2_ft < 0.0:
        raise CalcError("altitudes must be >= 0 ft for line-of-sight range")
    return LOS_COEFF * (math.sqrt(altitude1_ft) + math.sqrt(altitude2_ft))
