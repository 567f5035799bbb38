"""Take-off and landing distance factoring, turn load factor and stall speed.

The distance model follows the UK CAA Safety Sense performance guidance:
the book figure is multiplied (never summed) by one factor per adverse
condition, in a fixed order (weight, elevation, temperature, wind,
slope, surface), then a separate general safety factor is applied as a
second visible stage. The factor values live in a versioned data bundle,
not in code.

Two evaluation modes:
  continuous - each factor is a smooth function of its variable; the
      per-increment factor compounds geometrically, f^(x/increment),
      except the tailwind law which is linear in the tailwind as a
      fraction of the lift-off speed: F = 1 + rate * (TW / (frac*V_LO)).
  stepped - the variable is first rounded up to the next whole tabulated
      increment (the mental-arithmetic procedure), so stepped results
      are always at least the continuous ones. Beneficial factors
      (configured credits below 1) round down instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from . import atmosphere
from .errors import CalcError
from .units import Quantity

PHASES = ("takeoff", "landing")
MODES = ("continuous", "stepped")
CHAIN_ORDER = ("weight", "elevation", "temperature", "wind", "slope", "surface")

SURFACES = ("paved_dry", "paved_wet", "dry_grass", "wet_grass", "soft_ground", "snow")

MAX_TAILWIND_VLO_FRACTION = 0.5  # reject tailwind beyond half the lift-off speed

# tolerance when deciding whether a variable sits exactly on an increment
_STEP_EPS = 1e-9


def _steps_up(x: float, increment: float) -> float:
    return math.ceil(x / increment - _STEP_EPS)


def _steps_down(x: float, increment: float) -> float:
    return math.floor(x / increment + _STEP_EPS)


@dataclass(frozen=True)
class VariableFactor:
    """Per-increment multiplicative factor for one adverse variable."""

    increment: float
    factor: float
    opposite_factor: float = 1.0  # credit (if any) when the variable is favourable

    def evaluate(self, x: float, mode: str) -> float:
        """Factor for a signed variable: positive x is adverse."""
        if x > 0.0:
            n = x / self.increment if mode == "continuous" else _steps_up(x, self.increment)
            return self.factor ** n
        if x < 0.0 and self.opposite_factor != 1.0:
            ax = -x
            n = ax / self.increment if mode == "continuous" else _steps_down(ax, self.increment)
            return self.opposite_factor ** n
        return 1.0


@dataclass(frozen=True)
class WindFactor:
    """Linear tailwind penalty and optional geometric headwind credit."""

    tailwind_rate: float        # distance increase per whole tailwind increment
    tailwind_increment: float   # tailwind increment as a fraction of V_LO
    headwind_factor: float      # per-increment credit, <= 1 (1 = no credit)
    headwind_increment: float   # headwind increment as a fraction of V_LO

    def evaluate(self, along_wind_kt: float, v_lo_kt: float, mode: str) -> float:
        if along_wind_kt > 0.0:  # tailwind
            v = along_wind_kt / (self.tailwind_increment * v_lo_kt)
            if mode == "stepped":
                v = _steps_up(v, 1.0)
            return 1.0 + self.tailwind_rate * v
        if along_wind_kt < 0.0 and self.headwind_factor != 1.0:
            v = -along_wind_kt / (self.headwind_increment * v_lo_kt)
            if mode == "stepped":
                v = _steps_down(v, 1.0)
            return self.headwind_factor ** v
        return 1.0


@dataclass(frozen=True)
class PhaseTable:
    weight: VariableFactor       # variable: fraction above reference weight
    elevation: VariableFactor    # variable: ft above sea level
    temperature: VariableFactor  # variable: degC above ISA at the elevation
    wind: WindFactor
    slope: VariableFactor        # variable: percent slope in the adverse sense
    surface: dict[str, float]


@dataclass(frozen=True)
class FactorTable:
    name: str
    version: str
    takeoff: PhaseTable
    landing: PhaseTable
    general_safety: dict[str, float]

    def phase(self, phase: str) -> PhaseTable:
        if phase not in PHASES:
            raise CalcError(f"phase must be one of {PHASES}, got {phase!r}")
        return self.takeoff if phase == "takeoff" else self.landing


@dataclass(frozen=True)
class Conditions:
    """Actual departure or arrival conditions against the book figure."""

    weight_ratio: float          # actual weight / reference weight
    elevation_ft: float
    oat_c: float
    v_lo_kt: float               # lift-off (or threshold) speed for the wind law
    tailwind_kt: float = 0.0
    headwind_kt: float = 0.0
    slope_percent: float = 0.0   # positive uphill, negative downhill
    surface: str = "paved_dry"


@dataclass(frozen=True)
class ChainEntry:
    name: str
    input_value: float | str
    input_unit: str
    factor: float


@dataclass(frozen=True)
class FactorChain:
    phase: str
    mode: str
    base_distance: Quantity
    entries: tuple[ChainEntry, ...]
    environmental_distance: Quantity
    general_safety_factor: float | None = None
    final_distance: Quantity | None = None


def _validate_conditions(cond: Conditions, table: PhaseTable) -> None:
    if cond.weight_ratio < 0.0:
        raise CalcError(f"weight ratio must be >= 0, got {cond.weight_ratio:g}")
    if cond.v_lo_kt <= 0.0:
        raise CalcError(f"V_LO must be positive, got {cond.v_lo_kt:g} kt")
    if cond.tailwind_kt < 0.0 or cond.headwind_kt < 0.0:
        raise CalcError("wind components must be given as non-negative magnitudes")
    if cond.tailwind_kt > 0.0 and cond.headwind_kt > 0.0:
        raise CalcError("give either a tailwind or a headwind component, not both")
    if cond.tailwind_kt > MAX_TAILWIND_VLO_FRACTION * cond.v_lo_kt:
        raise CalcError(
            f"tailwind {cond.tailwind_kt:g} kt exceeds "
            f"{MAX_TAILWIND_VLO_FRACTION:.0%} of V_LO {cond.v_lo_kt:g} kt; "
            f"outside the factoring model"
        )
    if cond.surface not in table.surface:
        known = ", ".join(sorted(table.surface))
        raise CalcError(f"unknown surface {cond.surface!r}; expected one of: {known}")


def environmental_distance(
    base: Quantity,
    cond: Conditions,
    table: FactorTable,
    phase: str,
    mode: str = "continuous",
) -> FactorChain:
    """Base distance times one factor per condition, in the fixed order."""
    if base.category != "distance":
        raise CalcError(f"base distance must be a distance, got {base.unit!r}")
    if base.value <= 0.0:
        raise CalcError(f"base distance must be positive, got {base.value:g}")
    if mode not in MODES:
        raise CalcError(f"mode must be one of {MODES}, got {mode!r}")
    pt = table.phase(phase)
    _validate_conditions(cond, pt)

    over_fraction = max(cond.weight_ratio - 1.0, 0.0)
    isa_c = atmosphere.isa_conditions(cond.elevation_ft).temperature_c
    atmosphere.check_temperature(cond.oat_c, "OAT")
    isa_excess = cond.oat_c - isa_c
    along_wind = cond.tailwind_kt if cond.tailwind_kt > 0.0 else -cond.headwind_kt
    # uphill penalises the take-off run, downhill the landing roll
    adverse_slope = cond.slope_percent if phase == "takeoff" else -cond.slope_percent

    entries = (
        ChainEntry("weight", over_fraction * 100.0, "percent",
                   pt.weight.evaluate(over_fraction, mode)),
        ChainEntry("elevation", cond.elevation_ft, "ft",
                   pt.elevation.evaluate(cond.elevation_ft, mode)),
        ChainEntry("temperature", isa_excess, "degc",
                   pt.temperature.evaluate(max(isa_excess, 0.0), mode)),
        ChainEntry("wind", along_wind, "kt",
                   pt.wind.evaluate(along_wind, cond.v_lo_kt, mode)),
        ChainEntry("slope", cond.slope_percent, "percent",
                   pt.slope.evaluate(adverse_slope, mode)),
        ChainEntry("surface", cond.surface, "",
                   pt.surface[cond.surface]),
    )
    product = 1.0
    for e in entries:
        product *= e.factor
    env = Quantity(base.value * product, base.unit)
    return FactorChain(phase, mode, base, entries, env)


def apply_general_safety(chain: FactorChain, table: FactorTable) -> FactorChain:
    """Second stage: the general safety factor on the environmental distance."""
    gs = table.general_safety[chain.phase]
    final = Quantity(chain.environmental_distance.value * gs,
                     chain.environmental_distance.unit)
    return replace(chain, general_safety_factor=gs, final_distance=final)


def todr(base: Quantity, cond: Conditions, table: FactorTable,
         mode: str = "continuous") -> FactorChain:
    """Take-off distance required: environmental chain plus safety factor."""
    return apply_general_safety(
        environmental_distance(base, cond, table, "takeoff", mode), table
    )


def ldr(base: Quantity, cond: Conditions, table: FactorTable,
        mode: str = "continuous") -> FactorChain:
    """Landing distance required: environmental chain plus safety factor."""
    return apply_general_safety(
        environmental_distance(base, cond, table, "landing", mode), table
    )


def tailwind_factor(tailwind_kt: float, v_lo_kt: float, rate: float = 0.2,
                    increment_fraction: float = 0.1, mode: str = "continuous") -> float:
    """Stand-alone tailwind factor: F = 1 + rate * TW/(increment_fraction*V_LO)."""
    if v_lo_kt <= 0.0:
        raise CalcError(f"V_LO must be positive, got {v_lo_kt:g} kt")
    if tailwind_kt < 0.0:
        raise CalcError(f"tailwind must be >= 0, got {tailwind_kt:g} kt")
    if tailwind_kt > MAX_TAILWIND_VLO_FRACTION * v_lo_kt:
        raise CalcError(
            f"tailwind {tailwind_kt:g} kt exceeds "
            f"{MAX_TAILWIND_VLO_FRACTION:.0%} of V_LO {v_lo_kt:g} kt"
        )
    wf = WindFactor(rate, increment_fraction, 1.0, increment_fraction)
    return wf.evaluate(tailwind_kt, v_lo_kt, mode)


MAX_BANK_DEG = 85.0


def load_factor(bank_deg: float) -> float:
    """Level-turn load factor n = 1 / cos(bank)."""
    if bank_deg >= 90.0:
        raise CalcError(
            f"bank {bank_deg:g} deg: the level-turn load factor is singular at 90 deg"
        )
    if not (0.0 <= bank_deg <= MAX_BANK_DEG):
        raise CalcError(
            f"bank angle {bank_deg:g} deg outside supported range [0, {MAX_BANK_DEG:g}]"
        )
    return 1.0 / math.cos(math.radians(bank_deg))


def stall_speed_in_turn(vs_level_kt: float, bank_deg: float) -> float:
    """Stall speed rises with the square root of the load factor."""
    if vs_level_kt <= 0.0:
        raise CalcError(f"level stall speed must be positive, got {vs_level_kt:g} kt")
    return vs_level_kt * math.sqrt(load_factor(bank_deg))


def _q(node, category: str, field: str) -> Quantity:
    """Parse a {"value","unit"} payload node into a checked Quantity."""
    if not isinstance(node, dict) or "value" not in node or "unit" not in node:
        raise CalcError(f"{field}: expected {{'value', 'unit'}} object")
    q = Quantity(float(node["value"]), str(node["unit"]))
    if q.category != category:
        raise CalcError(f"{field}: expected a {category} quantity, got unit {q.unit!r}")
    return q


def _variable(node: dict, field: str, variable_category: str,
              variable_unit: str) -> VariableFactor:
    inc = _q(node["increment"], variable_category, f"{field}.increment")
    if variable_category == "temperature":
        if inc.unit != "degc":
            raise CalcError(f"{field}.increment: temperature increments must be degc")
        inc_value = inc.value
    else:
        inc_value = inc.value_in(variable_unit)
    if inc_value <= 0.0:
        raise CalcError(f"{field}.increment must be positive")
    factor = _q(node["factor"], "ratio", f"{field}.factor").value_in("ratio")
    if factor < 1.0:
        raise CalcError(f"{field}.factor must be >= 1, got {factor:g}")
    opposite = 1.0
    if "opposite_factor" in node:
        opposite = _q(node["opposite_factor"], "ratio", f"{field}.opposite_factor").value_in("ratio")
        if not (0.0 < opposite <= 1.0):
            raise CalcError(f"{field}.opposite_factor must be in (0, 1], got {opposite:g}")
    return VariableFactor(inc_value, factor, opposite)


def _phase_table(node: dict, phase: str) -> PhaseTable:
    try:
        weight = _variable(node["weight"], f"{phase}.weight", "ratio", "ratio")
        elevation = _variable(node["elevation"], f"{phase}.elevation", "distance", "ft")
        temperature = _variable(node["temperature"], f"{phase}.temperature",
                                "temperature", "degc")
        slope = _variable(node["slope"], f"{phase}.slope", "ratio", "percent")
        wnode = node["wind"]
        tw_rate = _q(wnode["tailwind_rate"], "ratio", f"{phase}.wind.tailwind_rate").value_in("ratio")
        tw_inc = _q(wnode["tailwind_increment"], "ratio", f"{phase}.wind.tailwind_increment").value_in("ratio")
        hw_factor = _q(wnode["headwind_factor"], "ratio", f"{phase}.wind.headwind_factor").value_in("ratio")
        hw_inc = _q(wnode["headwind_increment"], "ratio", f"{phase}.wind.headwind_increment").value_in("ratio")
        if tw_rate <= 0.0 or tw_inc <= 0.0 or hw_inc <= 0.0:
            raise CalcError(f"{phase}.wind: rates and increments must be positive")
        if not (0.0 < hw_factor <= 1.0):
            raise CalcError(f"{phase}.wind.headwind_factor must be in (0, 1]")
        surface = {}
        for name, fnode in node["surface"].items():
            if name not in SURFACES:
                raise CalcError(f"{phase}.surface: unknown surface {name!r}")
            f = _q(fnode, "ratio", f"{phase}.surface.{name}").value_in("ratio")
            if f < 1.0:
                raise CalcError(f"{phase}.surface.{name} must be >= 1, got {f:g}")
            surface[name] = f
        if "paved_dry" not in surface:
            raise CalcError(f"{phase}.surface must include 'paved_dry'")
    except KeyError as exc:
        raise CalcError(f"factor table {phase} phase missing field {exc}") from None
    return PhaseTable(weight, elevation, temperature,
                      WindFactor(tw_rate, tw_inc, hw_factor, hw_inc), slope, surface)


def factor_table_from_payload(payload: dict) -> FactorTable:
    """Build and validate a FactorTable from a data-bundle payload."""
    try:
        name = str(payload["name"])
        version = str(payload["version"])
        phases = payload["phases"]
        takeoff = _phase_table(phases["takeoff"], "takeoff")
        landing = _phase_table(phases["landing"], "landing")
        gs_node = payload["general_safety"]
        gs = {
            "takeoff": _q(gs_node["takeoff"], "ratio", "general_safety.takeoff").value_in("ratio"),
            "landing": _q(gs_node["landing"], "ratio", "general_safety.landing").value_in("ratio"),
        }
    except KeyError as exc:
        raise CalcError(f"factor table payload missing field {exc}") from None
    for phase, f in gs.items():
        if f < 1.0:
            raise CalcError(f"general_safety.{phase} must be >= 1, got {f:g}")
    return FactorTable(name, version, takeoff, landing, gs)
