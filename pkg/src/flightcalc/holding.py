"""Holding pattern entry classification and wind-corrected hold plans.

Entry sectors follow the standard construction: a line at 70 degrees to
the holding axis through the fix bounds the 180-degree direct sector;
the opposite half is split by the holding axis into a 70-degree teardrop
sector (holding side, adjacent to the outbound direction) and a
110-degree parallel sector. Sector membership depends on the aircraft
heading when crossing the fix, relative to the inbound course. Boundary
headings resolve direct over teardrop over parallel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CalcError, UnsolvableError
from .windnav import Wind, normalize_deg, solve_wind_triangle

TURNS = ("right", "left")

DEFAULT_LEG_TIME_S = 60.0
DEFAULT_DRIFT_MULTIPLIER = 3.0
TEARDROP_OFFSET_DEG = 30.0


@dataclass(frozen=True)
class HoldEntry:
    entry: str           # 'direct', 'teardrop' or 'parallel'
    relative_deg: float  # arrival heading relative to inbound course, [0, 360)


def classify_entry(inbound_course_deg: float, heading_deg: float, turns: str) -> HoldEntry:
    """Entry sector for an arrival heading over the fix."""
    if turns not in TURNS:
        raise CalcError(f"turn direction must be 'right' or 'left', got {turns!r}")
    r = normalize_deg(heading_deg - inbound_course_deg)
    if turns == "right":
        if r <= 110.0 or r >= 290.0:
            entry = "direct"
        elif r <= 180.0:
            entry = "teardrop"
        else:
            entry = "parallel"
    else:
        if r <= 70.0 or r >= 250.0:
            entry = "direct"
        elif r >= 180.0:
            entry = "teardrop"
        else:
            entry = "parallel"
    return HoldEntry(entry, r)


@dataclass(frozen=True)
class HoldPlan:
    entry: str
    turns: str
    inbound_course_deg: float
    inbound_heading_deg: float
    inbound_wind_correction_deg: float
    inbound_ground_speed_kt: float
    outbound_heading_deg: float
    outbound_time_s: float
    leg_time_s: float
    steps: tuple[str, ...]


def plan_hold(
    inbound_course_deg: float,
    arrival_heading_deg: float,
    turns: str,
    tas_kt: float,
    wind: Wind,
    leg_time_s: float = DEFAULT_LEG_TIME_S,
    drift_multiplier: float = DEFAULT_DRIFT_MULTIPLIER,
) -> HoldPlan:
    """Wind-corrected hold: entry, headings and outbound timing.

    The outbound heading applies the inbound drift correction times the
    drift multiplier (default 3) on the opposite side, compensating for
    drift in the two turns. Outbound time is stretched or shrunk so the
    inbound leg takes leg_time at the inbound ground speed.
    """
    if leg_time_s <= 0.0:
        raise CalcError(f"leg time must be positive, got {leg_time_s:g} s")
    if drift_multiplier <= 0.0:
        raise CalcError(f"drift multiplier must be positive, got {drift_multiplier:g}")
    ent = classify_entry(inbound_course_deg, arrival_heading_deg, turns)
    sol = solve_wind_triangle(inbound_course_deg, tas_kt, wind)
    inbound_course = normalize_deg(inbound_course_deg)
    outbound_course = normalize_deg(inbound_course + 180.0)
    outbound_heading = normalize_deg(
        outbound_course - drift_multiplier * sol.wind_correction_deg
    )
    # ground speed made good along the outbound course direction
    gs_out = tas_kt * math.cos(
        math.radians(outbound_heading - outbound_course)
    ) - wind.speed_kt * math.cos(math.radians(wind.direction_from_deg - outbound_course))
    if gs_out <= 0.0:
        raise UnsolvableError(
            f"wind {wind.direction_from_deg:g} deg at {wind.speed_kt:g} kt leaves no "
            f"positive ground speed on the outbound leg"
        )
    outbound_time = leg_time_s * (sol.ground_speed_kt / gs_out)
    steps = _build_steps(
        ent.entry, turns, inbound_course, sol.heading_deg, outbound_heading,
        outbound_time, leg_time_s,
    )
    return HoldPlan(
        ent.entry, turns, inbound_course, sol.heading_deg, sol.wind_correction_deg,
        sol.ground_speed_kt, outbound_heading, outbound_time, leg_time_s, steps,
    )


def _fmt_hdg(angle: float) -> str:
    whole = round(angle) % 360
    return f"{whole:03d}"


def _build_steps(
    entry: str,
    turns: str,
    inbound_course: float,
    inbound_heading: float,
    outbound_heading: float,
    outbound_time: float,
    leg_time: float,
) -> tuple[str, ...]:
    opposite = "left" if turns == "right" else "right"
    if entry == "direct":
        first = f"Cross the fix and turn {turns} onto the outbound leg."
    elif entry == "teardrop":
        offset = -TEARDROP_OFFSET_DEG if turns == "right" else TEARDROP_OFFSET_DEG
        tear = normalize_deg(outbound_heading + offset)
        first = (
            f"Cross the fix, turn to heading {_fmt_hdg(tear)} (30 deg into the "
            f"pattern), fly {outbound_time:.0f} s, then turn {turns} to intercept "
            f"the inbound course."
        )
    else:
        first = (
            f"Cross the fix, parallel the inbound track outbound on heading "
            f"{_fmt_hdg(outbound_heading)} for {outbound_time:.0f} s, then turn "
            f"{opposite} through more than 180 deg to intercept the inbound course."
        )
    return (
        first,
        f"Outbound: heading {_fmt_hdg(outbound_heading)} for {outbound_time:.1f} s.",
        f"Turn {turns} 180 deg at standard rate.",
        f"Inbound: heading {_fmt_hdg(inbound_heading)}, course "
        f"{_fmt_hdg(inbound_course)}, {leg_time:.0f} s to the fix.",
    )
