"""International Standard Atmosphere (1976) and airspeed/humidity relations.

Two-layer model: linear lapse troposphere up to 11 km geopotential, then
an isothermal layer at 216.65 K covering the rest of the supported range
(-2,000 ft to 65,617 ft). Pressure follows the barometric formula in each
layer and density the ideal gas law; pressure altitude and density
altitude are exact inversions of those formulas, not the linearised
rules of thumb.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CalcError

G0 = 9.80665          # m/s^2
R_AIR = 287.05287     # J/(kg K)
LAPSE = 0.0065        # K/m, troposphere
T0_K = 288.15         # sea level standard temperature
P0_HPA = 1013.25      # sea level standard pressure
RHO0 = 1.225          # kg/m^3 sea level standard density
TROP_ALT_M = 11000.0  # geopotential tropopause
T_TROP_K = 216.65     # isothermal layer temperature (-56.5 degC)
GAMMA = 1.4           # ratio of specific heats, dry air
SOUND_KT_PER_SQRT_K = 38.967854  # speed of sound in kt = this * sqrt(T kelvin)

FT_TO_M = 0.3048
MIN_ALT_FT = -2000.0
MAX_ALT_FT = 65617.0
QNH_MIN_HPA = 850.0
QNH_MAX_HPA = 1100.0

# barometric exponent g0/(R*L) and pressure at the tropopause
_BARO_EXP = G0 / (R_AIR * LAPSE)
P_TROP_HPA = P0_HPA * (T_TROP_K / T0_K) ** _BARO_EXP
RHO_TROP = P_TROP_HPA * 100.0 / (R_AIR * T_TROP_K)

# Magnus saturation vapour pressure coefficients (hPa over water)
MAGNUS_A_HPA = 6.112
MAGNUS_B = 17.62
MAGNUS_C_C = 243.12


@dataclass(frozen=True)
class AtmosphereState:
    altitude_ft: float
    temperature_c: float
    pressure_hpa: float
    density_kgm3: float


def _check_altitude(altitude_ft: float, name: str = "altitude") -> float:
    if not (MIN_ALT_FT <= altitude_ft <= MAX_ALT_FT):
        raise CalcError(
            f"{name} {altitude_ft:g} ft outside supported range "
            f"[{MIN_ALT_FT:g}, {MAX_ALT_FT:g}] ft"
        )
    return altitude_ft


def isa_conditions(altitude_ft: float) -> AtmosphereState:
    """Standard temperature, pressure and density at a geopotential altitude.

    Troposphere:  T = T0 - L*h,  p = p0 * (T/T0)^(g0/(R*L))
    Isothermal:   T = 216.65 K,  p = p_trop * exp(-g0*(h - 11 km)/(R*T))
    """
    _check_altitude(altitude_ft)
    h_m = altitude_ft * FT_TO_M
    if h_m <= TROP_ALT_M:
        t_k = T0_K - LAPSE * h_m
        p_hpa = P0_HPA * (t_k / T0_K) ** _BARO_EXP
    else:
        t_k = T_TROP_K
        p_hpa = P_TROP_HPA * math.exp(-G0 * (h_m - TROP_ALT_M) / (R_AIR * T_TROP_K))
    rho = p_hpa * 100.0 / (R_AIR * t_k)
    return AtmosphereState(altitude_ft, t_k - 273.15, p_hpa, rho)


def altitude_for_pressure(pressure_hpa: float) -> float:
    """Geopotential altitude (ft) where ISA pressure equals the given value."""
    if pressure_hpa <= 0.0:
        raise CalcError(f"pressure must be positive, got {pressure_hpa:g} hPa")
    if pressure_hpa >= P_TROP_HPA:
        t_k = T0_K * (pressure_hpa / P0_HPA) ** (1.0 / _BARO_EXP)
        h_m = (T0_K - t_k) / LAPSE
    else:
        h_m = TROP_ALT_M - (R_AIR * T_TROP_K / G0) * math.log(pressure_hpa / P_TROP_HPA)
    return _check_altitude(h_m / FT_TO_M, "resulting altitude")


def pressure_altitude(elevation_ft: float, qnh_hpa: float) -> float:
    """Pressure altitude for a field elevation and QNH altimeter setting.

    The altimeter model assumes the standard lapse structure below the
    station with the QNH as sea level datum, so the implied station
    pressure is qnh * (1 - L*elev/T0)^(g0/(R*L)); the pressure altitude
    is the ISA altitude at that pressure.
    """
    _check_altitude(elevation_ft, "elevation")
    if not (QNH_MIN_HPA <= qnh_hpa <= QNH_MAX_HPA):
        raise CalcError(
            f"QNH {qnh_hpa:g} hPa outside supported range "
            f"[{QNH_MIN_HPA:g}, {QNH_MAX_HPA:g}] hPa"
        )
    elev_m = elevation_ft * FT_TO_M
    station_hpa = qnh_hpa * (1.0 - LAPSE * elev_m / T0_K) ** _BARO_EXP
    return altitude_for_pressure(station_hpa)


def density_altitude(pressure_altitude_ft: float, oat_c: float) -> float:
    """Altitude where ISA density equals the actual density.

    Actual density comes from the ideal gas law at the pressure for the
    given pressure altitude and the actual outside air temperature; the
    ISA density profile is then inverted in closed form per layer.
    """
    _check_altitude(pressure_altitude_ft, "pressure altitude")
    check_temperature(oat_c)
    p_hpa = isa_conditions(pressure_altitude_ft).pressure_hpa
    rho = p_hpa * 100.0 / (R_AIR * (oat_c + 273.15))
    if rho >= RHO_TROP:
        # rho(h) = rho0 * (T/T0)^(g0/(R*L) - 1) in the troposphere
        t_k = T0_K * (rho / RHO0) ** (1.0 / (_BARO_EXP - 1.0))
        h_m = (T0_K - t_k) / LAPSE
    else:
        h_m = TROP_ALT_M - (R_AIR * T_TROP_K / G0) * math.log(rho / RHO_TROP)
    return _check_altitude(h_m / FT_TO_M, "resulting density altitude")


def check_temperature(value_c: float, name: str = "temperature") -> float:
    if not (-100.0 <= value_c <= 100.0):
        raise CalcError(f"{name} {value_c:g} degC outside supported range [-100, 100]")
    return value_c


@dataclass(frozen=True)
class TrueAirspeed:
    cas_kt: float
    eas_kt: float
    tas_kt: float
    mach: float


def tas_from_cas(cas_kt: float, pressure_altitude_ft: float, oat_c: float) -> TrueAirspeed:
    """True airspeed from calibrated airspeed via the compressible chain.

    CAS defines the sea level impact pressure; the same impact pressure
    at altitude gives Mach from the pressure ratio, and TAS = M * a(T).
    Valid subsonic only.
    """
    if cas_kt <= 0.0:
        raise CalcError(f"CAS must be positive, got {cas_kt:g} kt")
    _check_altitude(pressure_altitude_ft, "pressure altitude")
    check_temperature(oat_c, "OAT")
    kt_to_ms = 1852.0 / 3600.0
    p0 = P0_HPA * 100.0
    a0 = math.sqrt(GAMMA * R_AIR * T0_K)
    cas_ms = cas_kt * kt_to_ms
    if cas_ms >= a0:
        raise CalcError(f"CAS {cas_kt:g} kt is supersonic at sea level, not supported")
    qc = p0 * ((1.0 + 0.2 * (cas_ms / a0) ** 2) ** 3.5 - 1.0)
    p = isa_conditions(pressure_altitude_ft).pressure_hpa * 100.0
    mach = math.sqrt(5.0 * ((qc / p + 1.0) ** (1.0 / 3.5) - 1.0))
    if mach >= 1.0:
        raise CalcError(
            f"CAS {cas_kt:g} kt at {pressure_altitude_ft:g} ft implies supersonic "
            f"flow (Mach {mach:.3f}), not supported"
        )
    t_k = oat_c + 273.15
    tas_ms = mach * math.sqrt(GAMMA * R_AIR * t_k)
    rho = p / (R_AIR * t_k)
    eas_ms = tas_ms * math.sqrt(rho / RHO0)
    return TrueAirspeed(cas_kt, eas_ms / kt_to_ms, tas_ms / kt_to_ms, mach)


def mach_number(tas_kt: float, oat_c: float) -> float:
    """Mach number: TAS over the speed of sound a = 38.967854 * sqrt(T kelvin) kt."""
    if tas_kt <= 0.0:
        raise CalcError(f"TAS must be positive, got {tas_kt:g} kt")
    check_temperature(oat_c, "OAT")
    return tas_kt / (SOUND_KT_PER_SQRT_K * math.sqrt(oat_c + 273.15))


def saturation_vapour_pressure_hpa(temperature_c: float) -> float:
    """Magnus form over water: 6.112 * exp(17.62*T / (243.12 + T)) hPa."""
    return MAGNUS_A_HPA * math.exp(MAGNUS_B * temperature_c / (MAGNUS_C_C + temperature_c))


@dataclass(frozen=True)
class Humidity:
    relative_humidity_pct: float
    spread_c: float
    saturated: bool


def humidity(oat_c: float, dew_point_c: float) -> Humidity:
    """Relative humidity and dew point spread from OAT and dew point.

    The dew point may exceed the OAT by at most 0.5 degC (observation
    jitter); relative humidity is clamped to 100%.
    """
    check_temperature(oat_c, "OAT")
    check_temperature(dew_point_c, "dew point")
    if dew_point_c > oat_c + 0.5:
        raise CalcError(
            f"dew point {dew_point_c:g} degC exceeds OAT {oat_c:g} degC "
            f"by more than the 0.5 degC tolerance"
        )
    rh = 100.0 * saturation_vapour_pressure_hpa(dew_point_c) / saturation_vapour_pressure_hpa(oat_c)
    return Humidity(min(rh, 100.0), oat_c - dew_point_c, dew_point_c >= oat_c)
