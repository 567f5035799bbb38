"""Weight and balance: moment sums, CG envelopes and the fuel-burn track.

All arithmetic runs in the profile's declared working units (lb/in or
kg/m); any tagged quantity fed in is converted first. Certification
limits never block the computation: exceedances come back as flags so a
marginal load can still be inspected. Points on an envelope boundary
count as inside.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import geometry
from .errors import CalcError
from .units import Quantity

PHASE_ORDER = ("ramp", "takeoff", "landing", "zero_fuel")

LIMIT_KEYS = ("max_ramp", "max_takeoff", "max_landing", "max_zero_fuel")

# (weight unit, arm unit) -> moment unit identifier
_MOMENT_UNITS = {("lb", "in"): "lbin", ("kg", "m"): "kgm"}

DEFAULT_FUEL_DENSITY_KG_L = 0.72  # AVGAS planning density

DEFAULT_TRACK_SAMPLES = 101


@dataclass(frozen=True)
class Station:
    name: str
    arm: float
    max_load: float | None = None


@dataclass(frozen=True)
class FuelSystem:
    arm: float
    usable_capacity_l: float
    density_kg_per_l: float = DEFAULT_FUEL_DENSITY_KG_L


@dataclass(frozen=True)
class AircraftProfile:
    ident: str
    name: str
    weight_unit: str
    arm_unit: str
    empty_weight: float
    empty_arm: float
    stations: tuple[Station, ...]
    fuel: FuelSystem
    limits: dict[str, float]
    envelopes: dict[str, tuple[geometry.Point, ...]]
    default_envelope: str

    @property
    def moment_unit(self) -> str:
        return _MOMENT_UNITS[(self.weight_unit, self.arm_unit)]

    def station(self, name: str) -> Station:
        for s in self.stations:
            if s.name == name:
                return s
        known = ", ".join(s.name for s in self.stations)
        raise CalcError(f"unknown station {name!r}; profile has: {known}")

    def envelope(self, name: str | None) -> tuple[str, tuple[geometry.Point, ...]]:
        key = name if name is not None else self.default_envelope
        if key not in self.envelopes:
            known = ", ".join(sorted(self.envelopes))
            raise CalcError(f"unknown envelope {key!r}; profile has: {known}")
        return key, self.envelopes[key]


@dataclass(frozen=True)
class PhasePoint:
    phase: str
    weight: float
    moment: float
    cg_arm: float
    fuel_volume_l: float
    verdict: str   # inside | outside | on_boundary
    margin: float  # signed, bbox-normalised axis units


@dataclass(frozen=True)
class TrackSample:
    fraction: float
    weight: float
    cg_arm: float
    verdict: str


@dataclass(frozen=True)
class CGTrack:
    samples: tuple[TrackSample, ...]
    first_violation: float | None


@dataclass(frozen=True)
class LoadingResult:
    profile_ident: str
    envelope_name: str
    weight_unit: str
    arm_unit: str
    moment_unit: str
    phases: tuple[PhasePoint, ...]
    flags: tuple[str, ...]
    track: CGTrack


def _mass_in(q: Quantity, unit: str, field: str) -> float:
    if q.category != "mass":
        raise CalcError(f"{field}: expected a mass quantity, got unit {q.unit!r}")
    return q.value_in(unit)


def _volume_l(q: Quantity, field: str) -> float:
    if q.category != "volume":
        raise CalcError(f"{field}: expected a volume quantity, got unit {q.unit!r}")
    v = q.value_in("l")
    if v < 0.0:
        raise CalcError(f"{field} must be >= 0, got {q.value:g} {q.unit}")
    return v


def compute_loading(
    profile: AircraftProfile,
    station_loads: dict[str, Quantity],
    fuel_at_start: Quantity,
    taxi_fuel: Quantity | None = None,
    trip_fuel: Quantity | None = None,
    envelope: str | None = None,
    track_samples: int = DEFAULT_TRACK_SAMPLES,
) -> LoadingResult:
    """Weights, moments, CG and envelope verdicts for the four phases.

    ramp carries the full starting fuel, takeoff deducts taxi fuel,
    landing also deducts the trip fuel, zero_fuel carries none.
    """
    env_name, env_poly = profile.envelope(envelope)

    start_l = _volume_l(fuel_at_start, "fuel_at_start")
    taxi_l = _volume_l(taxi_fuel, "taxi_fuel") if taxi_fuel is not None else 0.0
    trip_l = _volume_l(trip_fuel, "trip_fuel") if trip_fuel is not None else 0.0
    if start_l > profile.fuel.usable_capacity_l * (1.0 + 1e-9):
        raise CalcError(
            f"fuel at start {start_l:g} L exceeds usable capacity "
            f"{profile.fuel.usable_capacity_l:g} L"
        )
    if taxi_l + trip_l > start_l * (1.0 + 1e-9):
        raise CalcError(
            f"taxi + trip fuel {taxi_l + trip_l:g} L exceeds fuel at start {start_l:g} L"
        )

    flags: list[str] = []
    wu = profile.weight_unit
    dry_weight = profile.empty_weight
    dry_moment = profile.empty_weight * profile.empty_arm
    for name, load in station_loads.items():
        st = profile.station(name)
        w = _mass_in(load, wu, f"station {name}")
        if w < 0.0:
            raise CalcError(f"station {name} load must be >= 0, got {w:g} {wu}")
        if st.max_load is not None and w > st.max_load:
            flags.append(
                f"station {name} load {w:.1f} {wu} exceeds max {st.max_load:.1f} {wu}"
            )
        dry_weight += w
        dry_moment += w * st.arm

    kg_per_l = profile.fuel.density_kg_per_l
    to_wu = Quantity(1.0, "kg").value_in(wu)  # kg -> profile weight unit

    def fuel_mass(volume_l: float) -> float:
        return volume_l * kg_per_l * to_wu

    phase_fuel = {
        "ramp": start_l,
        "takeoff": start_l - taxi_l,
        "landing": start_l - taxi_l - trip_l,
        "zero_fuel": 0.0,
    }
    phases = []
    for phase in PHASE_ORDER:
        vol = phase_fuel[phase]
        fm = fuel_mass(vol)
        weight = dry_weight + fm
        moment = dry_moment + fm * profile.fuel.arm
        cg = moment / weight
        verdict = geometry.classify_point(list(env_poly), cg, weight)
        margin = geometry.signed_margin(list(env_poly), cg, weight)
        phases.append(PhasePoint(phase, weight, moment, cg, vol, verdict, margin))
        limit_key = f"max_{phase}"
        if limit_key in profile.limits and weight > profile.limits[limit_key]:
            flags.append(
                f"{phase} weight {weight:.1f} {wu} exceeds {limit_key} "
                f"{profile.limits[limit_key]:.1f} {wu}"
            )

    by_phase = {p.phase: p for p in phases}
    track = cg_track(profile, by_phase["takeoff"], by_phase["landing"],
                     envelope=env_name, samples=track_samples)
    return LoadingResult(
        profile.ident, env_name, wu, profile.arm_unit, profile.moment_unit,
        tuple(phases), tuple(flags), track,
    )


def cg_track(
    profile: AircraftProfile,
    start: PhasePoint,
    end: PhasePoint,
    envelope: str | None = None,
    samples: int = DEFAULT_TRACK_SAMPLES,
) -> CGTrack:
    """CG path between two loading states as fuel burns.

    Weight and moment are both linear in the burned mass, so the track
    is sampled along the straight segment in (weight, moment) space; the
    CG per sample then follows the true burn curve. first_violation is
    the smallest sampled fraction that falls outside the envelope
    (boundary points count as inside), or None.
    """
    if samples < 2:
        raise CalcError(f"track needs at least 2 samples, got {samples}")
    _, env_poly = profile.envelope(envelope)
    poly = list(env_poly)
    out: list[TrackSample] = []
    first_violation = None
    for i in range(samples):
        t = i / (samples - 1)
        weight = start.weight + t * (end.weight - start.weight)
        moment = start.moment + t * (end.moment - start.moment)
        cg = moment / weight
        verdict = geometry.classify_point(poly, cg, weight)
        if verdict == "outside" and first_violation is None:
            first_violation = t
        out.append(TrackSample(t, weight, cg, verdict))
    return CGTrack(tuple(out), first_violation)


def _q_node(node, field: str) -> Quantity:
    if not isinstance(node, dict) or "value" not in node or "unit" not in node:
        raise CalcError(f"{field}: expected {{'value', 'unit'}} object")
    return Quantity(float(node["value"]), str(node["unit"]))


def _distance_in(node, unit: str, field: str) -> float:
    q = _q_node(node, field)
    if q.category != "distance":
        raise CalcError(f"{field}: expected a distance quantity, got unit {q.unit!r}")
    return q.value_in(unit)


def profile_from_payload(payload: dict) -> AircraftProfile:
    """Build and validate an AircraftProfile from a data-bundle payload."""
    try:
        ident = str(payload["ident"])
        name = str(payload["name"])
        wu = str(payload["units"]["weight"])
        au = str(payload["units"]["arm"])
        if (wu, au) not in _MOMENT_UNITS:
            raise CalcError(
                f"profile working units must be lb/in or kg/m, got {wu}/{au}"
            )
        empty_w = _mass_in(_q_node(payload["empty"]["weight"], "empty.weight"), wu,
                           "empty.weight")
        empty_arm = _distance_in(payload["empty"]["arm"], au, "empty.arm")
        if empty_w <= 0.0:
            raise CalcError(f"empty weight must be positive, got {empty_w:g} {wu}")
        stations = []
        seen = set()
        for snode in payload["stations"]:
            sname = str(snode["name"])
            if sname in seen:
                raise CalcError(f"duplicate station name {sname!r}")
            seen.add(sname)
            arm = _distance_in(snode["arm"], au, f"station {sname} arm")
            max_load = None
            if "max_load" in snode:
                max_load = _mass_in(_q_node(snode["max_load"], f"station {sname} max_load"),
                                    wu, f"station {sname} max_load")
                if max_load <= 0.0:
                    raise CalcError(f"station {sname} max_load must be positive")
            stations.append(Station(sname, arm, max_load))
        fnode = payload["fuel"]
        fuel_arm = _distance_in(fnode["arm"], au, "fuel.arm")
        cap = _q_node(fnode["usable_capacity"], "fuel.usable_capacity")
        if cap.category != "volume":
            raise CalcError(f"fuel.usable_capacity: expected a volume, got {cap.unit!r}")
        cap_l = cap.value_in("l")
        if cap_l <= 0.0:
            raise CalcError(f"fuel capacity must be positive, got {cap_l:g} L")
        density = DEFAULT_FUEL_DENSITY_KG_L
        if "density" in fnode:
            dq = _q_node(fnode["density"], "fuel.density")
            if dq.category != "density":
                raise CalcError(f"fuel.density: expected a density, got {dq.unit!r}")
            density = dq.value_in("kgm3") / 1000.0
            if not (0.3 <= density <= 1.2):
                raise CalcError(f"fuel density {density:g} kg/L outside sane range [0.3, 1.2]")
        limits = {}
        for key, lnode in payload.get("limits", {}).items():
            if key not in LIMIT_KEYS:
                raise CalcError(f"unknown limit {key!r}; expected one of {LIMIT_KEYS}")
            v = _mass_in(_q_node(lnode, f"limits.{key}"), wu, f"limits.{key}")
            if v <= 0.0:
                raise CalcError(f"limits.{key} must be positive")
            limits[key] = v
        if ("max_ramp" in limits and "max_takeoff" in limits
                and limits["max_takeoff"] > limits["max_ramp"]):
            raise CalcError("max_takeoff cannot exceed max_ramp")
        envelopes = {}
        for ename, enode in payload["envelopes"].items():
            verts = []
            for vnode in enode["vertices"]:
                arm = _distance_in(vnode["arm"], au, f"envelope {ename} vertex arm")
                w = _mass_in(_q_node(vnode["weight"], f"envelope {ename} vertex weight"),
                             wu, f"envelope {ename} vertex weight")
                verts.append((arm, w))
            geometry.validate_polygon(verts, f"envelope {ename}")
            envelopes[ename] = tuple(verts)
        if not envelopes:
            raise CalcError("profile needs at least one envelope")
        default_env = str(payload.get("default_envelope", next(iter(envelopes))))
        if default_env not in envelopes:
            raise CalcError(f"default_envelope {default_env!r} not among envelopes")
    except KeyError as exc:
        raise CalcError(f"aircraft profile payload missing field {exc}") from None
    return AircraftProfile(
        ident, name, wu, au, empty_w, empty_arm, tuple(stations),
        FuelSystem(fuel_arm, cap_l, density), limits, envelopes, default_env,
    )
