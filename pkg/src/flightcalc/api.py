"""Operation registry shared by the command line and the local service.

Every calculation is exposed as a named operation taking a flat dict of
inputs and returning a JSON-friendly response envelope::

    {"ok": true, "operation": ..., "result": ..., "warnings": [...],
     "assumptions": [...]}

or, on failure::

    {"ok": false, "operation": ..., "error": {"code": ..., "message": ...}}

Numeric inputs may be given as bare numbers (interpreted in the
operation's default unit), as strings with a unit suffix ("2000ft",
"12.5usgal"), or as tagged objects {"value": 390, "unit": "m"}.  Every
numeric leaf in a result is a tagged object, so callers never have to
guess units.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable

from flightcalc import __version__, atmosphere, carbicing, holding, performance
from flightcalc import profiles_io, units, weightbalance, windnav
from flightcalc.errors import CalcError
from flightcalc.units import Quantity

_REQUIRED = object()

_QUANTITY_RE = re.compile(
    r"^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*([a-zA-Z%]*)\s*$"
)

_UNIT_ALIASES = {"%": "percent"}


def tag(value: float, unit: str) -> dict:
    """Unit-tagged numeric leaf for a response."""
    return {"value": float(value), "unit": unit}


def parse_quantity_text(text: str, default_unit: str) -> Quantity:
    """Parse "390", "390m" or "2000 ft" into a Quantity."""
    m = _QUANTITY_RE.match(text)
    if m is None:
        raise CalcError(f"cannot parse quantity {text!r}")
    value = float(m.group(1))
    suffix = m.group(2)
    if not suffix:
        return units.make(value, default_unit)
    ident = _UNIT_ALIASES.get(suffix, suffix.lower())
    return units.make(value, ident)


def _quantity(raw: Any, key: str, default_unit: str) -> Quantity:
    if isinstance(raw, bool):
        raise CalcError(f"input {key!r} must be a number, got a boolean")
    if isinstance(raw, (int, float)):
        return units.make(float(raw), default_unit)
    if isinstance(raw, str):
        return parse_quantity_text(raw, default_unit)
    if isinstance(raw, dict):
        if "value" not in raw:
            raise CalcError(f"input {key!r} is an object but has no 'value' field")
        value = raw["value"]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise CalcError(f"input {key!r} has a non-numeric 'value'")
        unit = raw.get("unit") or default_unit
        if not isinstance(unit, str):
            raise CalcError(f"input {key!r} has a non-string 'unit'")
        return units.make(float(value), unit)
    raise CalcError(f"input {key!r} must be a number, string or tagged object")


def _num(inputs: dict, key: str, unit: str, default: Any = _REQUIRED) -> float:
    """Numeric input in the given unit, converting tagged values."""
    raw = inputs.get(key)
    if raw is None:
        if default is _REQUIRED:
            raise CalcError(f"missing required input {key!r}")
        return default
    return units.convert(_quantity(raw, key, unit), unit).value


def _raw_num(inputs: dict, key: str, default: Any = _REQUIRED) -> float:
    """Plain number input (no unit interpretation)."""
    raw = inputs.get(key)
    if raw is None:
        if default is _REQUIRED:
            raise CalcError(f"missing required input {key!r}")
        return default
    if isinstance(raw, bool):
        raise CalcError(f"input {key!r} must be a number, got a boolean")
    if isinstance(raw, (int, float)):
        return float(raw)
    if isinstance(raw, str):
        try:
            return float(raw)
        except ValueError:
            raise CalcError(f"input {key!r} must be a number, got {raw!r}") from None
    raise CalcError(f"input {key!r} must be a number")


def _str(inputs: dict, key: str, default: Any = _REQUIRED,
         choices: tuple[str, ...] | None = None) -> str:
    raw = inputs.get(key)
    if raw is None:
        if default is _REQUIRED:
            raise CalcError(f"missing required input {key!r}")
        return default
    if not isinstance(raw, str):
        raise CalcError(f"input {key!r} must be a string")
    value = raw.strip().lower() if choices is not None else raw.strip()
    if choices is not None and value not in choices:
        raise CalcError(
            f"input {key!r} must be one of: {', '.join(choices)}; got {raw!r}"
        )
    return value


def _int(inputs: dict, key: str, default: Any = _REQUIRED) -> int:
    raw = inputs.get(key)
    if raw is None:
        if default is _REQUIRED:
            raise CalcError(f"missing required input {key!r}")
        return default
    if isinstance(raw, bool):
        raise CalcError(f"input {key!r} must be an integer")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, float) and raw == int(raw):
        return int(raw)
    if isinstance(raw, str):
        try:
            return int(raw)
        except ValueError:
            raise CalcError(f"input {key!r} must be an integer, got {raw!r}") from None
    raise CalcError(f"input {key!r} must be an integer")


# ---------------------------------------------------------------------------
# operation runners: each returns (result, warnings, assumptions)

_ISA_NOTE = (
    "International Standard Atmosphere (1976): 15 degC and 1013.25 hPa at sea "
    "level, 6.5 degC/km lapse to 36089 ft, isothermal -56.5 degC above."
)
_SPHERE_NOTE = (
    "Spherical earth with one nautical mile per minute of arc "
    "(radius 3437.75 NM); bearings are true."
)
_WIND_REF_NOTE = (
    "Course, heading and wind direction must share one reference "
    "(all true or all magnetic); wind direction is where the wind blows from."
)


def _run_convert(inputs: dict):
    value = _raw_num(inputs, "value")
    src = _str(inputs, "from")
    dst = _str(inputs, "to")
    q = units.make(value, src.lower())
    out = units.convert(q, dst.lower())
    result = {
        "category": q.category,
        "input": tag(q.value, q.unit),
        "output": tag(out.value, out.unit),
    }
    return result, [], []


def _run_list_units(inputs: dict):
    category = inputs.get("category")
    records = units.list_units()
    if category is not None:
        category = _str(inputs, "category")
        known = sorted({r["category"] for r in records})
        if category not in known:
            raise CalcError(
                f"unknown unit category {category!r}; expected one of: "
                + ", ".join(known)
            )
        records = [r for r in records if r["category"] == category]
    listed = [
        {
            "ident": r["ident"],
            "display": r["display"],
            "category": r["category"],
            "canonical": r["canonical"],
        }
        for r in records
    ]
    return {"units": listed}, [], []


def _run_isa(inputs: dict):
    altitude = _num(inputs, "altitude", "ft")
    state = atmosphere.isa_conditions(altitude)
    result = {
        "altitude": tag(state.altitude_ft, "ft"),
        "temperature": tag(state.temperature_c, "degc"),
        "pressure": tag(state.pressure_hpa, "hpa"),
        "density": tag(state.density_kgm3, "kgm3"),
    }
    return result, [], [_ISA_NOTE]


def _run_pa(inputs: dict):
    elevation = _num(inputs, "elevation", "ft")
    qnh = _num(inputs, "qnh", "hpa", 1013.25)
    pa = atmosphere.pressure_altitude(elevation, qnh)
    result = {
        "elevation": tag(elevation, "ft"),
        "qnh": tag(qnh, "hpa"),
        "pressure_altitude": tag(pa, "ft"),
    }
    return result, [], [_ISA_NOTE]


def _run_da(inputs: dict):
    pa = _num(inputs, "pressure_altitude", "ft")
    oat = _num(inputs, "oat", "degc")
    da = atmosphere.density_altitude(pa, oat)
    state = atmosphere.isa_conditions(pa)
    density = state.pressure_hpa * 100.0 / (atmosphere.R_AIR * (oat + 273.15))
    result = {
        "pressure_altitude": tag(pa, "ft"),
        "oat": tag(oat, "degc"),
        "isa_temperature": tag(state.temperature_c, "degc"),
        "isa_deviation": tag(oat - state.temperature_c, "degc"),
        "density": tag(density, "kgm3"),
        "density_altitude": tag(da, "ft"),
    }
    return result, [], [_ISA_NOTE, "Dry air."]


def _run_tas(inputs: dict):
    cas = _num(inputs, "cas", "kt")
    pa = _num(inputs, "pressure_altitude", "ft", 0.0)
    oat = _num(inputs, "oat", "degc", None)
    assumptions = [_ISA_NOTE, "Zero instrument and position error (CAS = IAS)."]
    if oat is None:
        oat = atmosphere.isa_conditions(pa).temperature_c
        assumptions.append("OAT not given: ISA temperature at altitude assumed.")
    speeds = atmosphere.tas_from_cas(cas, pa, oat)
    result = {
        "pressure_altitude": tag(pa, "ft"),
        "oat": tag(oat, "degc"),
        "cas": tag(speeds.cas_kt, "kt"),
        "eas": tag(speeds.eas_kt, "kt"),
        "tas": tag(speeds.tas_kt, "kt"),
        "mach": tag(speeds.mach, "ratio"),
    }
    return result, [], assumptions


def _run_mach(inputs: dict):
    tas = _num(inputs, "tas", "kt")
    oat = _num(inputs, "oat", "degc", None)
    assumptions = []
    if oat is None:
        oat = 15.0
        assumptions.append("OAT not given: ISA sea-level 15 degC assumed.")
    m = atmosphere.mach_number(tas, oat)
    a = atmosphere.SOUND_KT_PER_SQRT_K * (oat + 273.15) ** 0.5
    result = {
        "tas": tag(tas, "kt"),
        "oat": tag(oat, "degc"),
        "speed_of_sound": tag(a, "kt"),
        "mach": tag(m, "ratio"),
    }
    return result, [], assumptions


def _run_humidity(inputs: dict):
    oat = _num(inputs, "oat", "degc")
    dp = _num(inputs, "dew_point", "degc")
    h = atmosphere.humidity(oat, dp)
    warnings = []
    if h.saturated:
        warnings.append(
            "Dew point at or above air temperature: treated as saturated "
            "(100% relative humidity)."
        )
    result = {
        "oat": tag(oat, "degc"),
        "dew_point": tag(dp, "degc"),
        "relative_humidity": tag(h.relative_humidity_pct, "percent"),
        "spread": tag(h.spread_c, "degc"),
        "saturated": h.saturated,
    }
    note = "Magnus saturation vapour pressure over water."
    return result, warnings, [note]


def _run_wind_components(inputs: dict):
    direction = _num(inputs, "direction", "deg")
    wind = windnav.Wind(
        _num(inputs, "wind_from", "deg"), _num(inputs, "wind_speed", "kt")
    )
    comp = windnav.wind_components(direction, wind)
    warnings = []
    if comp.headwind_kt < 0.0:
        warnings.append(
            f"Tailwind component {-comp.headwind_kt:.1f} kt on this heading."
        )
    result = {
        "reference_heading": tag(windnav.normalize_deg(direction), "deg"),
        "wind_from": tag(wind.direction_from_deg, "deg"),
        "wind_speed": tag(wind.speed_kt, "kt"),
        "angle_off": tag(
            abs(windnav.signed_delta_deg(direction, wind.direction_from_deg)), "deg"
        ),
        "headwind": tag(comp.headwind_kt, "kt"),
        "crosswind": tag(comp.crosswind_kt, "kt"),
        "side": comp.side,
    }
    return result, warnings, [_WIND_REF_NOTE, "Negative headwind is a tailwind."]


def _run_wind_triangle(inputs: dict):
    course = _num(inputs, "course", "deg")
    tas = _num(inputs, "tas", "kt")
    wind = windnav.Wind(
        _num(inputs, "wind_from", "deg"), _num(inputs, "wind_speed", "kt")
    )
    sol = windnav.solve_wind_triangle(course, tas, wind)
    result = {
        "course": tag(windnav.normalize_deg(course), "deg"),
        "tas": tag(tas, "kt"),
        "wind_from": tag(wind.direction_from_deg, "deg"),
        "wind_speed": tag(wind.speed_kt, "kt"),
        "wind_correction": tag(sol.wind_correction_deg, "deg"),
        "heading": tag(sol.heading_deg, "deg"),
        "ground_speed": tag(sol.ground_speed_kt, "kt"),
    }
    note = "Positive wind correction is flown to the right of course."
    return result, [], [_WIND_REF_NOTE, note]


def _run_clock_code(inputs: dict):
    angle = _num(inputs, "angle_off", "deg")
    speed = _num(inputs, "wind_speed", "kt")
    xw = windnav.clock_code_crosswind(angle, speed)
    fraction = xw / speed if speed > 0.0 else 0.0
    result = {
        "angle_off": tag(angle, "deg"),
        "wind_speed": tag(speed, "kt"),
        "fraction": tag(fraction, "ratio"),
        "crosswind": tag(xw, "kt"),
    }
    note = (
        "Clock-code estimate: crosswind = wind speed x (angle off / 60), "
        "capped at the full wind speed."
    )
    return result, [], [note]


def _latlon_inputs(inputs: dict):
    return (
        _num(inputs, "lat1", "deg"), _num(inputs, "lon1", "deg"),
        _num(inputs, "lat2", "deg"), _num(inputs, "lon2", "deg"),
    )


def _run_gc(inputs: dict):
    lat1, lon1, lat2, lon2 = _latlon_inputs(inputs)
    leg = windnav.great_circle(lat1, lon1, lat2, lon2)
    warnings = []
    bearing = None
    if leg.initial_bearing_deg is None:
        warnings.append(
            "Points are coincident or antipodal: initial bearing is undefined."
        )
    else:
        bearing = tag(leg.initial_bearing_deg, "deg")
    result = {
        "from": {"lat": tag(lat1, "deg"), "lon": tag(lon1, "deg")},
        "to": {"lat": tag(lat2, "deg"), "lon": tag(lon2, "deg")},
        "distance": tag(leg.distance_nm, "nm"),
        "initial_bearing": bearing,
    }
    return result, warnings, [_SPHERE_NOTE]


def _run_rhumb(inputs: dict):
    lat1, lon1, lat2, lon2 = _latlon_inputs(inputs)
    leg = windnav.rhumb_line(lat1, lon1, lat2, lon2)
    result = {
        "from": {"lat": tag(lat1, "deg"), "lon": tag(lon1, "deg")},
        "to": {"lat": tag(lat2, "deg"), "lon": tag(lon2, "deg")},
        "distance": tag(leg.distance_nm, "nm"),
        "bearing": tag(leg.bearing_deg, "deg"),
    }
    note = "Constant-bearing track (Mercator meridional parts)."
    return result, [], [_SPHERE_NOTE, note]


def _run_los(inputs: dict):
    alt1 = _num(inputs, "altitude1", "ft")
    alt2 = _num(inputs, "altitude2", "ft", 0.0)
    rng = windnav.line_of_sight_range_nm(alt1, alt2)
    result = {
        "altitude1": tag(alt1, "ft"),
        "altitude2": tag(alt2, "ft"),
        "range": tag(rng, "nm"),
    }
    note = (
        "VHF radio horizon 1.23 x sqrt(height ft) NM per terminal "
        "(standard refraction); terrain not considered."
    )
    return result, [], [note]


def _run_hold_entry(inputs: dict):
    course = _num(inputs, "inbound_course", "deg")
    heading = _num(inputs, "heading", "deg")
    turns = _str(inputs, "turns", "right", holding.TURNS)
    ent = holding.classify_entry(course, heading, turns)
    result = {
        "turns": turns,
        "inbound_course": tag(windnav.normalize_deg(course), "deg"),
        "heading": tag(windnav.normalize_deg(heading), "deg"),
        "relative_bearing": tag(ent.relative_deg, "deg"),
        "entry": ent.entry,
    }
    note = (
        "ICAO entry sectors (70-degree boundary); sector-boundary arrivals "
        "resolve to the simpler entry."
    )
    return result, [], [note]


def _run_hold_plan(inputs: dict):
    course = _num(inputs, "inbound_course", "deg")
    heading = _num(inputs, "heading", "deg")
    turns = _str(inputs, "turns", "right", holding.TURNS)
    tas = _num(inputs, "tas", "kt")
    wind = windnav.Wind(
        _num(inputs, "wind_from", "deg", 0.0), _num(inputs, "wind_speed", "kt", 0.0)
    )
    leg_time = _num(inputs, "leg_time", "s", holding.DEFAULT_LEG_TIME_S)
    mult = _raw_num(inputs, "drift_multiplier", holding.DEFAULT_DRIFT_MULTIPLIER)
    plan = holding.plan_hold(course, heading, turns, tas, wind, leg_time, mult)
    result = {
        "entry": plan.entry,
        "turns": plan.turns,
        "inbound_course": tag(plan.inbound_course_deg, "deg"),
        "inbound_heading": tag(plan.inbound_heading_deg, "deg"),
        "inbound_wind_correction": tag(plan.inbound_wind_correction_deg, "deg"),
        "inbound_ground_speed": tag(plan.inbound_ground_speed_kt, "kt"),
        "outbound_heading": tag(plan.outbound_heading_deg, "deg"),
        "outbound_time": tag(plan.outbound_time_s, "s"),
        "leg_time": tag(plan.leg_time_s, "s"),
        "steps": list(plan.steps),
    }
    assumptions = [
        _WIND_REF_NOTE,
        f"Outbound heading offsets {mult:g}x the inbound drift correction "
        "to compensate for drift in the turns.",
        "Outbound time scaled by the inbound/outbound ground speed ratio "
        "so the inbound leg flies in the still-air leg time.",
        "Turn time itself is not modelled.",
    ]
    return result, [], assumptions


def _chain_result(chain: performance.FactorChain) -> dict:
    entries = []
    product = 1.0
    for e in chain.entries:
        product *= e.factor
        if isinstance(e.input_value, str):
            value: Any = e.input_value
        else:
            value = float(e.input_value)
        entries.append(
            {
                "name": e.name,
                "input": {"value": value, "unit": e.input_unit},
                "factor": tag(e.factor, "ratio"),
            }
        )
    base = chain.base_distance
    env = chain.environmental_distance
    result = {
        "phase": chain.phase,
        "mode": chain.mode,
        "base_distance": tag(base.value, base.unit),
        "entries": entries,
        "environmental_factor": tag(product, "ratio"),
        "environmental_distance": tag(env.value, env.unit),
    }
    if chain.general_safety_factor is not None and chain.final_distance is not None:
        final = chain.final_distance
        result["general_safety_factor"] = tag(chain.general_safety_factor, "ratio")
        result["final_distance"] = tag(final.value, final.unit)
        result["total_factor"] = tag(final.value / base.value, "ratio")
    return result


def _run_distance(inputs: dict, phase: str):
    base = _quantity(inputs.get("base_distance"), "base_distance", "m") \
        if inputs.get("base_distance") is not None else None
    if base is None:
        raise CalcError("missing required input 'base_distance'")
    weight_ratio = _num(inputs, "weight_ratio", "ratio", 1.0)
    elevation = _num(inputs, "elevation", "ft", 0.0)
    oat = _num(inputs, "oat", "degc", None)
    tailwind = _num(inputs, "tailwind", "kt", 0.0)
    headwind = _num(inputs, "headwind", "kt", 0.0)
    v_lo = _num(inputs, "v_lo", "kt", None)
    slope = _num(inputs, "slope", "percent", 0.0)
    surface = _str(inputs, "surface", "paved_dry", performance.SURFACES)
    mode = _str(inputs, "mode", "continuous", performance.MODES)

    table = profiles_io.default_factor_table()
    assumptions = [f"Factor table: {table.name} (version {table.version})."]
    if oat is None:
        oat = atmosphere.isa_conditions(elevation).temperature_c
        assumptions.append("OAT not given: ISA temperature at field elevation assumed.")
    if v_lo is None:
        if tailwind > 0.0 or headwind > 0.0:
            raise CalcError(
                "v_lo (lift-off/threshold speed) is required when a wind "
                "component is given"
            )
        v_lo = 1.0  # unused by the wind factor at zero wind
    cond = performance.Conditions(
        weight_ratio=weight_ratio, elevation_ft=elevation, oat_c=oat,
        v_lo_kt=v_lo, tailwind_kt=tailwind, headwind_kt=headwind,
        slope_percent=slope, surface=surface,
    )
    fn = performance.todr if phase == "takeoff" else performance.ldr
    chain = fn(base, cond, table, mode)
    warnings = []
    if tailwind > 0.0:
        warnings.append(
            "Tailwind operation: distance grows rapidly with tailwind; "
            "prefer the into-wind direction."
        )
    assumptions += [
        "Factors compound multiplicatively in the fixed order: weight, "
        "elevation, temperature, wind, slope, surface.",
        "continuous mode interpolates between table increments; stepped mode "
        "rounds penalties up and credits down to whole increments.",
        f"General safety factor {chain.general_safety_factor:g} applied last.",
        "Distances are advisory planning figures, not flight-manual data.",
    ]
    return _chain_result(chain), warnings, assumptions


def _run_todr(inputs: dict):
    return _run_distance(inputs, "takeoff")


def _run_ldr(inputs: dict):
    return _run_distance(inputs, "landing")


def _run_load_factor(inputs: dict):
    bank = _num(inputs, "bank", "deg")
    n = performance.load_factor(bank)
    result = {
        "bank": tag(bank, "deg"),
        "load_factor": tag(n, "ratio"),
    }
    vs = _num(inputs, "stall_speed", "kt", None)
    if vs is not None:
        result["stall_speed_level"] = tag(vs, "kt")
        result["stall_speed_turn"] = tag(
            performance.stall_speed_in_turn(vs, bank), "kt"
        )
    note = "Level coordinated turn: load factor n = 1/cos(bank), Vs_turn = Vs x sqrt(n)."
    return result, [], [note]


def _run_wb(inputs: dict):
    ident = _str(inputs, "profile")
    profile = profiles_io.load_profile(ident)
    raw_loads = inputs.get("loads", {})
    if not isinstance(raw_loads, dict):
        raise CalcError("input 'loads' must be an object mapping station to load")
    loads = {
        name: _quantity(raw, f"loads.{name}", profile.weight_unit)
        for name, raw in raw_loads.items()
    }
    fuel = _quantity(inputs.get("fuel", 0.0), "fuel", "l")
    taxi = inputs.get("taxi_fuel")
    trip = inputs.get("trip_fuel")
    taxi_q = _quantity(taxi, "taxi_fuel", "l") if taxi is not None else None
    trip_q = _quantity(trip, "trip_fuel", "l") if trip is not None else None
    envelope = inputs.get("envelope")
    if envelope is not None and not isinstance(envelope, str):
        raise CalcError("input 'envelope' must be a string")
    samples = _int(inputs, "track_samples", weightbalance.DEFAULT_TRACK_SAMPLES)

    res = weightbalance.compute_loading(
        profile, loads, fuel, taxi_q, trip_q, envelope, samples
    )
    wu, au, mu = res.weight_unit, res.arm_unit, res.moment_unit
    phases = []
    warnings = list(res.flags)
    for p in res.phases:
        phases.append(
            {
                "phase": p.phase,
                "weight": tag(p.weight, wu),
                "moment": tag(p.moment, mu),
                "cg_arm": tag(p.cg_arm, au),
                "fuel": tag(p.fuel_volume_l, "l"),
                "verdict": p.verdict,
                "margin": tag(p.margin, "ratio"),
            }
        )
        if p.verdict == "outside":
            warnings.append(
                f"{p.phase}: CG {p.cg_arm:.2f} {au} at {p.weight:.1f} {wu} is "
                f"outside the {res.envelope_name} envelope."
            )
    track = {
        "first_violation": (
            None if res.track.first_violation is None
            else tag(res.track.first_violation, "ratio")
        ),
        "samples": [
            {
                "fraction": tag(s.fraction, "ratio"),
                "weight": tag(s.weight, wu),
                "cg_arm": tag(s.cg_arm, au),
                "verdict": s.verdict,
            }
            for s in res.track.samples
        ],
    }
    result = {
        "profile": res.profile_ident,
        "envelope": res.envelope_name,
        "phases": phases,
        "flags": list(res.flags),
        "track": track,
    }
    assumptions = [
        f"Fuel density {profile.fuel.density_kg_per_l:g} kg/L from the "
        "aircraft profile.",
        "Envelope boundary points count as inside (verdict on_boundary).",
        "CG track runs from the take-off to the landing state as fuel burns.",
        "Illustrative profile data: use the weighing record of the actual "
        "aircraft for flight.",
    ]
    return result, warnings, assumptions


def _run_carb_icing(inputs: dict):
    oat = _num(inputs, "oat", "degc")
    dp = _num(inputs, "dew_point", "degc")
    chart = profiles_io.default_icing_chart()
    a = carbicing.assess(chart, oat, dp)
    warnings = []
    if a.saturated:
        warnings.append(
            "Dew point at or above air temperature: treated as saturated."
        )
    worst = max(
        a.category_cruise, a.category_descent, key=lambda c: carbicing.SEVERITY[c]
    )
    if carbicing.SEVERITY[worst] >= carbicing.SEVERITY["moderate"]:
        warnings.append(
            f"{worst.capitalize()} carburettor icing risk: use carburettor "
            "heat as the flight manual directs."
        )
    result = {
        "oat": tag(oat, "degc"),
        "dew_point": tag(dp, "degc"),
        "relative_humidity": tag(a.relative_humidity_pct, "percent"),
        "spread": tag(a.spread_c, "degc"),
        "saturated": a.saturated,
        "cruise": a.category_cruise,
        "descent": a.category_descent,
        "disclaimer": a.disclaimer,
    }
    return result, warnings, [f"Chart: {chart.name} (version {chart.version})."]


def _run_risk_grid(inputs: dict):
    resolution = _int(inputs, "resolution", carbicing.DEFAULT_GRID_RESOLUTION)
    chart = profiles_io.default_icing_chart()
    grid = carbicing.risk_grid(chart, resolution)
    result = {
        "oat_centres": [tag(v, "degc") for v in grid["oat_centres_c"]],
        "dew_point_centres": [tag(v, "degc") for v in grid["dew_point_centres_c"]],
        "cruise": grid["cruise"],
        "descent": grid["descent"],
        "categories": list(carbicing.CATEGORIES),
        "disclaimer": chart.disclaimer,
    }
    note = (
        "Cells above the saturation line (dew point > OAT) are null; "
        "rows follow dew point, columns OAT."
    )
    return result, [], [f"Chart: {chart.name} (version {chart.version}).", note]


def _serialize_profile(profile: weightbalance.AircraftProfile) -> dict:
    au, wu = profile.arm_unit, profile.weight_unit
    stations = [
        {
            "name": s.name,
            "arm": tag(s.arm, au),
            "max_load": None if s.max_load is None else tag(s.max_load, wu),
        }
        for s in profile.stations
    ]
    envelopes = {
        name: [{"arm": tag(a, au), "weight": tag(w, wu)} for a, w in poly]
        for name, poly in profile.envelopes.items()
    }
    return {
        "ident": profile.ident,
        "name": profile.name,
        "weight_unit": wu,
        "arm_unit": au,
        "moment_unit": profile.moment_unit,
        "empty_weight": tag(profile.empty_weight, wu),
        "empty_arm": tag(profile.empty_arm, au),
        "stations": stations,
        "fuel": {
            "arm": tag(profile.fuel.arm, au),
            "usable_capacity": tag(profile.fuel.usable_capacity_l, "l"),
            "density": tag(profile.fuel.density_kg_per_l * 1000.0, "kgm3"),
        },
        "limits": {k: tag(v, wu) for k, v in sorted(profile.limits.items())},
        "envelopes": envelopes,
        "default_envelope": profile.default_envelope,
    }


def _run_profiles(inputs: dict):
    bundles = [
        {"ident": b.ident, "kind": b.kind, "name": b.name}
        for b in profiles_io.list_bundles()
    ]
    aircraft = [
        _serialize_profile(profiles_io.load_profile(b.ident))
        for b in profiles_io.list_bundles()
        if b.kind == "aircraft_profile"
    ]
    result = {"bundles": bundles, "aircraft": aircraft}
    note = "Bundled data is illustrative; verify against current official sources."
    return result, [], [note]


# ---------------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class Operation:
    name: str
    summary: str
    inputs: dict[str, str]
    run: Callable[[dict], tuple]


def _op(name: str, summary: str, inputs: dict[str, str], run) -> Operation:
    return Operation(name, summary, inputs, run)


REGISTRY: dict[str, Operation] = {
    op.name: op
    for op in (
        _op(
            "convert",
            "Convert a value between units of one category.",
            {
                "value": "number to convert (required)",
                "from": "source unit ident (required)",
                "to": "target unit ident (required)",
            },
            _run_convert,
        ),
        _op(
            "list-units",
            "List the unit registry, optionally for one category.",
            {"category": "unit category filter (optional)"},
            _run_list_units,
        ),
        _op(
            "isa",
            "Standard-atmosphere temperature, pressure and density at altitude.",
            {"altitude": "geopotential altitude [ft] (required)"},
            _run_isa,
        ),
        _op(
            "pa",
            "Pressure altitude of a field elevation for a QNH setting.",
            {
                "elevation": "field elevation [ft] (required)",
                "qnh": "altimeter setting [hpa] (default 1013.25)",
            },
            _run_pa,
        ),
        _op(
            "da",
            "Density altitude from pressure altitude and temperature.",
            {
                "pressure_altitude": "pressure altitude [ft] (required)",
                "oat": "outside air temperature [degc] (required)",
            },
            _run_da,
        ),
        _op(
            "tas",
            "True airspeed and Mach from calibrated airspeed at altitude.",
            {
                "cas": "calibrated airspeed [kt] (required)",
                "pressure_altitude": "pressure altitude [ft] (default 0)",
                "oat": "outside air temperature [degc] (default ISA)",
            },
            _run_tas,
        ),
        _op(
            "mach",
            "Mach number and local speed of sound for a true airspeed.",
            {
                "tas": "true airspeed [kt] (required)",
                "oat": "outside air temperature [degc] (default 15)",
            },
            _run_mach,
        ),
        _op(
            "humidity",
            "Relative humidity and spread from temperature and dew point.",
            {
                "oat": "air temperature [degc] (required)",
                "dew_point": "dew point [degc] (required)",
            },
            _run_humidity,
        ),
        _op(
            "wind-components",
            "Head/tailwind and crosswind on a runway or course.",
            {
                "direction": "runway heading or course [deg] (required)",
                "wind_from": "wind direction (from) [deg] (required)",
                "wind_speed": "wind speed [kt] (required)",
            },
            _run_wind_components,
        ),
        _op(
            "wind-triangle",
            "Heading and ground speed to hold a course in wind.",
            {
                "course": "desired track [deg] (required)",
                "tas": "true airspeed [kt] (required)",
                "wind_from": "wind direction (from) [deg] (required)",
                "wind_speed": "wind speed [kt] (required)",
            },
            _run_wind_triangle,
        ),
        _op(
            "clock-code",
            "Clock-code crosswind estimate from the angle off the nose.",
            {
                "angle_off": "angle between wind and heading [deg] (required)",
                "wind_speed": "wind speed [kt] (required)",
            },
            _run_clock_code,
        ),
        _op(
            "gc",
            "Great-circle distance and initial bearing between two points.",
            {
                "lat1": "start latitude [deg] (required)",
                "lon1": "start longitude [deg] (required)",
                "lat2": "end latitude [deg] (required)",
                "lon2": "end longitude [deg] (required)",
            },
            _run_gc,
        ),
        _op(
            "rhumb",
            "Rhumb-line distance and constant bearing between two points.",
            {
                "lat1": "start latitude [deg] (required)",
                "lon1": "start longitude [deg] (required)",
                "lat2": "end latitude [deg] (required)",
                "lon2": "end longitude [deg] (required)",
            },
            _run_rhumb,
        ),
        _op(
            "los",
            "VHF line-of-sight range between two altitudes.",
            {
                "altitude1": "first altitude [ft] (required)",
                "altitude2": "second altitude [ft] (default 0)",
            },
            _run_los,
        ),
        _op(
            "hold-entry",
            "Holding-pattern entry sector for an arrival heading.",
            {
                "inbound_course": "inbound holding course [deg] (required)",
                "heading": "arrival heading over the fix [deg] (required)",
                "turns": "'right' or 'left' (default right)",
            },
            _run_hold_entry,
        ),
        _op(
            "hold-plan",
            "Wind-corrected holding plan: entry, headings and timing.",
            {
                "inbound_course": "inbound holding course [deg] (required)",
                "heading": "arrival heading over the fix [deg] (required)",
                "turns": "'right' or 'left' (default right)",
                "tas": "holding true airspeed [kt] (required)",
                "wind_from": "wind direction (from) [deg] (default 0)",
                "wind_speed": "wind speed [kt] (default 0)",
                "leg_time": "still-air inbound leg time [s] (default 60)",
                "drift_multiplier": "outbound drift correction multiple (default 3)",
            },
            _run_hold_plan,
        ),
        _op(
            "todr",
            "Factored take-off distance for weight, field and wind conditions.",
            {
                "base_distance": "flight-manual distance [m] (required)",
                "weight_ratio": "actual/reference weight [ratio] (default 1)",
                "elevation": "field elevation [ft] (default 0)",
                "oat": "outside air temperature [degc] (default ISA)",
                "tailwind": "tailwind component [kt] (default 0)",
                "headwind": "headwind component [kt] (default 0)",
                "v_lo": "lift-off speed [kt] (required with wind)",
                "slope": "runway slope, + uphill [percent] (default 0)",
                "surface": "runway surface (default paved_dry)",
                "mode": "'continuous' or 'stepped' (default continuous)",
            },
            _run_todr,
        ),
        _op(
            "ldr",
            "Factored landing distance for weight, field and wind conditions.",
            {
                "base_distance": "flight-manual distance [m] (required)",
                "weight_ratio": "actual/reference weight [ratio] (default 1)",
                "elevation": "field elevation [ft] (default 0)",
                "oat": "outside air temperature [degc] (default ISA)",
                "tailwind": "tailwind component [kt] (default 0)",
                "headwind": "headwind component [kt] (default 0)",
                "v_lo": "threshold speed [kt] (required with wind)",
                "slope": "runway slope, + uphill [percent] (default 0)",
                "surface": "runway surface (default paved_dry)",
                "mode": "'continuous' or 'stepped' (default continuous)",
            },
            _run_ldr,
        ),
        _op(
            "load-factor",
            "Load factor and stall speed increase in a level turn.",
            {
                "bank": "bank angle [deg] (required)",
                "stall_speed": "level stall speed [kt] (optional)",
            },
            _run_load_factor,
        ),
        _op(
            "wb",
            "Weight, balance and CG envelope check for an aircraft profile.",
            {
                "profile": "aircraft profile ident (required)",
                "loads": "object: station name -> load [profile weight unit]",
                "fuel": "fuel at engine start [l] (default 0)",
                "taxi_fuel": "fuel burned before take-off [l] (optional)",
                "trip_fuel": "fuel burned in flight [l] (optional)",
                "envelope": "envelope name (default: profile default)",
                "track_samples": "CG track sample count (default 101)",
            },
            _run_wb,
        ),
        _op(
            "carb-icing",
            "Carburettor icing risk category from temperature and dew point.",
            {
                "oat": "outside air temperature [degc] (required)",
                "dew_point": "dew point [degc] (required)",
            },
            _run_carb_icing,
        ),
        _op(
            "risk-grid",
            "Carburettor icing category grid for rendering the chart.",
            {"resolution": "cells per axis (default 25)"},
            _run_risk_grid,
        ),
        _op(
            "profiles",
            "List bundled data and aircraft profile details.",
            {},
            _run_profiles,
        ),
    )
}


def _error_response(operation: str, code: str, message: str) -> dict:
    return {
        "ok": False,
        "operation": operation,
        "error": {"code": code, "message": message},
    }


def dispatch(operation: str, inputs: dict | None = None) -> dict:
    """Run one named operation; never raises, always returns an envelope."""
    op = REGISTRY.get(operation)
    if op is None:
        known = ", ".join(sorted(REGISTRY))
        return _error_response(
            operation, "unknown_operation",
            f"unknown operation {operation!r}; expected one of: {known}",
        )
    if inputs is None:
        inputs = {}
    try:
        if not isinstance(inputs, dict):
            raise CalcError("inputs must be an object of input name -> value")
        unknown = sorted(set(inputs) - set(op.inputs))
        if unknown:
            raise CalcError(
                f"unknown input(s) for {operation}: {', '.join(unknown)}; "
                f"expected: {', '.join(sorted(op.inputs)) or '(none)'}"
            )
        result, warnings, assumptions = op.run(inputs)
    except CalcError as exc:
        return _error_response(operation, exc.code, str(exc))
    except Exception as exc:  # pragma: no cover - defensive
        return _error_response(operation, "internal", f"{type(exc).__name__}: {exc}")
    return {
        "ok": True,
        "operation": operation,
        "result": result,
        "warnings": warnings,
        "assumptions": assumptions,
    }


def catalogue() -> dict:
    """Self-description of the service: operations, inputs and bundled data."""
    operations = [
        {"name": op.name, "summary": op.summary, "inputs": op.inputs}
        for op in sorted(REGISTRY.values(), key=lambda o: o.name)
    ]
    bundles = [
        {"ident": b.ident, "kind": b.kind, "name": b.name}
        for b in profiles_io.list_bundles()
    ]
    return {
        "service": "flightcalc",
        "version": __version__,
        "operations": operations,
        "profiles": bundles,
    }
