"""Command-line front end.

Thin wrapper over the operation registry: every subcommand collects its
flags into the same inputs dict the local service accepts, runs
:func:`flightcalc.api.dispatch`, and renders the response.  With
``--json`` the raw response envelope is printed instead, byte-identical
to what the service returns for the same inputs.

Numeric flags accept an optional unit suffix ("2000ft", "75kg"); bare
numbers use the unit named in the flag's help text.

Exit codes: 0 success, 1 rejected input (including usage errors),
2 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys

from flightcalc import api, units
from flightcalc.errors import CalcError

_EXIT_OK = 0
_EXIT_INPUT = 1
_EXIT_INTERNAL = 2


# ---------------------------------------------------------------------------
# composite flag parsing

def parse_wind_text(text: str) -> tuple[str, str]:
    """Split "285/12" into (direction-from, speed) strings."""
    parts = text.split("/")
    if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
        raise CalcError(
            f"wind must be DIRECTION/SPEED, e.g. 285/12; got {text!r}"
        )
    return parts[0].strip(), parts[1].strip()


def parse_runway_text(text: str) -> float:
    """Runway designator or heading: "23" means 230 degrees, "230" stays."""
    try:
        value = float(text)
    except ValueError:
        raise CalcError(f"runway must be a designator or heading, got {text!r}") from None
    if 0.0 <= value <= 36.0 and value == int(value):
        return value * 10.0
    return value


def parse_load_item(text: str) -> tuple[str, str]:
    """Split a --load item "seats=340" into (station, load) strings."""
    name, sep, value = text.partition("=")
    if not sep or not name.strip() or not value.strip():
        raise CalcError(f"--load must be STATION=LOAD, e.g. seats=340; got {text!r}")
    return name.strip(), value.strip()


# ---------------------------------------------------------------------------
# subcommand table: (operation, [(flag, dest, help), ...])

_SUBCOMMANDS: dict[str, tuple[str, list[tuple[str, str, str]]]] = {
    "isa": ("isa", [("--altitude", "altitude", "altitude [ft]")]),
    "pa": ("pa", [
        ("--elevation", "elevation", "field elevation [ft]"),
        ("--qnh", "qnh", "altimeter setting [hPa], default 1013.25"),
    ]),
    "da": ("da", [
        ("--pressure-altitude", "pressure_altitude", "pressure altitude [ft]"),
        ("--oat", "oat", "outside air temperature [degC]"),
    ]),
    "tas": ("tas", [
        ("--cas", "cas", "calibrated airspeed [kt]"),
        ("--pressure-altitude", "pressure_altitude", "pressure altitude [ft], default 0"),
        ("--oat", "oat", "outside air temperature [degC], default ISA"),
    ]),
    "mach": ("mach", [
        ("--tas", "tas", "true airspeed [kt]"),
        ("--oat", "oat", "outside air temperature [degC], default 15"),
    ]),
    "humidity": ("humidity", [
        ("--oat", "oat", "air temperature [degC]"),
        ("--dew-point", "dew_point", "dew point [degC]"),
    ]),
    "wind-components": ("wind-components", [
        ("--direction", "direction", "runway heading or course [deg]"),
        ("--wind-from", "wind_from", "wind direction (from) [deg]"),
        ("--wind-speed", "wind_speed", "wind speed [kt]"),
    ]),
    "wind-triangle": ("wind-triangle", [
        ("--course", "course", "desired track [deg]"),
        ("--tas", "tas", "true airspeed [kt]"),
        ("--wind-from", "wind_from", "wind direction (from) [deg]"),
        ("--wind-speed", "wind_speed", "wind speed [kt]"),
    ]),
    "clock-code": ("clock-code", [
        ("--angle-off", "angle_off", "angle between wind and heading [deg]"),
        ("--wind-speed", "wind_speed", "wind speed [kt]"),
    ]),
    "gc": ("gc", [
        ("--lat1", "lat1", "start latitude [deg]"),
        ("--lon1", "lon1", "start longitude [deg]"),
        ("--lat2", "lat2", "end latitude [deg]"),
        ("--lon2", "lon2", "end longitude [deg]"),
    ]),
    "rhumb": ("rhumb", [
        ("--lat1", "lat1", "start latitude [deg]"),
        ("--lon1", "lon1", "start longitude [deg]"),
        ("--lat2", "lat2", "end latitude [deg]"),
        ("--lon2", "lon2", "end longitude [deg]"),
    ]),
    "los": ("los", [
        ("--altitude1", "altitude1", "first altitude [ft]"),
        ("--altitude2", "altitude2", "second altitude [ft], default 0"),
    ]),
    "hold-entry": ("hold-entry", [
        ("--inbound-course", "inbound_course", "inbound holding course [deg]"),
        ("--heading", "heading", "arrival heading over the fix [deg]"),
        ("--turns", "turns", "right or left, default right"),
    ]),
    "hold-plan": ("hold-plan", [
        ("--inbound-course", "inbound_course", "inbound holding course [deg]"),
        ("--heading", "heading", "arrival heading over the fix [deg]"),
        ("--turns", "turns", "right or left, default right"),
        ("--tas", "tas", "holding true airspeed [kt]"),
        ("--wind-from", "wind_from", "wind direction (from) [deg], default 0"),
        ("--wind-speed", "wind_speed", "wind speed [kt], default 0"),
        ("--leg-time", "leg_time", "still-air inbound leg time [s], default 60"),
        ("--drift-multiplier", "drift_multiplier", "outbound drift multiple, default 3"),
    ]),
    "todr": ("todr", [
        ("--base-distance", "base_distance", "flight-manual take-off distance [m]"),
        ("--weight-ratio", "weight_ratio", "actual/reference weight, default 1"),
        ("--elevation", "elevation", "field elevation [ft], default 0"),
        ("--oat", "oat", "outside air temperature [degC], default ISA"),
        ("--tailwind", "tailwind", "tailwind component [kt], default 0"),
        ("--headwind", "headwind", "headwind component [kt], default 0"),
        ("--v-lo", "v_lo", "lift-off speed [kt], required with wind"),
        ("--slope", "slope", "runway slope, + uphill [percent], default 0"),
        ("--surface", "surface", "runway surface, default paved_dry"),
        ("--mode", "mode", "continuous or stepped, default continuous"),
    ]),
    "ldr": ("ldr", [
        ("--base-distance", "base_distance", "flight-manual landing distance [m]"),
        ("--weight-ratio", "weight_ratio", "actual/reference weight, default 1"),
        ("--elevation", "elevation", "field elevation [ft], default 0"),
        ("--oat", "oat", "outside air temperature [degC], default ISA"),
        ("--tailwind", "tailwind", "tailwind component [kt], default 0"),
        ("--headwind", "headwind", "headwind component [kt], default 0"),
        ("--v-lo", "v_lo", "threshold speed [kt], required with wind"),
        ("--slope", "slope", "runway slope, + uphill [percent], default 0"),
        ("--surface", "surface", "runway surface, default paved_dry"),
        ("--mode", "mode", "continuous or stepped, default continuous"),
    ]),
    "load-factor": ("load-factor", [
        ("--bank", "bank", "bank angle [deg]"),
        ("--stall-speed", "stall_speed", "level stall speed [kt], optional"),
    ]),
    "wb": ("wb", [
        ("--profile", "profile", "aircraft profile ident (see 'profiles')"),
        ("--fuel", "fuel", "fuel at engine start [L], default 0"),
        ("--taxi-fuel", "taxi_fuel", "fuel burned before take-off [L]"),
        ("--trip-fuel", "trip_fuel", "fuel burned in flight [L]"),
        ("--envelope", "envelope", "envelope name, default from profile"),
        ("--track-samples", "track_samples", "CG track sample count, default 101"),
    ]),
    "carb-icing": ("carb-icing", [
        ("--oat", "oat", "outside air temperature [degC]"),
        ("--dew-point", "dew_point", "dew point [degC]"),
    ]),
    "risk-grid": ("risk-grid", [
        ("--resolution", "resolution", "cells per axis, default 25"),
    ]),
    "list-units": ("list-units", [
        ("--category", "category", "unit category filter"),
    ]),
    "profiles": ("profiles", []),
}

_WIND_FLAG_COMMANDS = ("wind-components", "wind-triangle", "hold-plan")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS,
        help="print the raw response envelope as JSON",
    )
    common.add_argument(
        "--units", choices=("metric", "imperial"), default=argparse.SUPPRESS,
        help="convert display output to this unit system (human output only)",
    )

    parser = argparse.ArgumentParser(
        prog="flightcalc",
        description="Offline flight-planning calculations for light aircraft.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    for name, (operation, specs) in _SUBCOMMANDS.items():
        op = api.REGISTRY[operation]
        p = sub.add_parser(name, help=op.summary, parents=[common])
        for flag, dest, help_text in specs:
            p.add_argument(flag, dest=dest, metavar="VALUE", help=help_text)
        if name in _WIND_FLAG_COMMANDS:
            p.add_argument(
                "--wind", metavar="FROM/SPEED",
                help="wind as one flag, e.g. 285/12",
            )
        if name == "wind-components":
            p.add_argument(
                "--runway", metavar="RWY",
                help="runway designator ('23' = 230 deg); alternative to --direction",
            )
        if name == "wb":
            p.add_argument(
                "--load", action="append", metavar="STATION=LOAD", default=[],
                help="station load, repeatable, e.g. --load seats=340",
            )

    p = sub.add_parser(
        "convert", help=api.REGISTRY["convert"].summary, parents=[common]
    )
    p.add_argument("value", nargs="?", help="number to convert")
    p.add_argument("src", nargs="?", metavar="from", help="source unit ident")
    p.add_argument("dst", nargs="?", metavar="to", help="target unit ident")

    p = sub.add_parser(
        "serve", help="run the local calculation service", parents=[common]
    )
    p.add_argument("--host", default="127.0.0.1", help="bind address, default loopback")
    p.add_argument("--port", type=int, default=8424, help="port, default 8424")
    p.add_argument("--static", default=None, metavar="DIR",
                   help="also serve a static UI from this directory")

    return parser


def collect_inputs(command: str, args: argparse.Namespace) -> dict:
    """Build the dispatch inputs dict from parsed flags."""
    if command == "convert":
        inputs = {}
        if args.value is not None:
            inputs["value"] = args.value
        if args.src is not None:
            inputs["from"] = args.src
        if args.dst is not None:
            inputs["to"] = args.dst
        return inputs

    _, specs = _SUBCOMMANDS[command]
    inputs: dict = {}
    for _, dest, _ in specs:
        value = getattr(args, dest, None)
        if value is not None:
            inputs[dest] = value
    if command in _WIND_FLAG_COMMANDS and getattr(args, "wind", None) is not None:
        wind_from, wind_speed = parse_wind_text(args.wind)
        inputs["wind_from"] = wind_from
        inputs["wind_speed"] = wind_speed
    if command == "wind-components" and getattr(args, "runway", None) is not None:
        inputs["direction"] = parse_runway_text(args.runway)
    if command == "wb":
        loads = {}
        for item in args.load:
            name, value = parse_load_item(item)
            loads[name] = value
        if loads:
            inputs["loads"] = loads
    return inputs


# ---------------------------------------------------------------------------
# human-readable rendering

_DISPLAY_MAP = {
    "imperial": {"m": "ft", "km": "nm", "kg": "lb", "hpa": "inhg",
                 "l": "usgal", "ms": "kt", "kmh": "kt"},
    "metric": {"ft": "m", "lb": "kg", "inhg": "hpa", "usgal": "l",
               "impgal": "l", "mph": "kmh"},
}


def _is_tag(node) -> bool:
    return (
        isinstance(node, dict)
        and set(node.keys()) == {"value", "unit"}
        and isinstance(node.get("unit"), str)
    )


def _display_tag(node: dict, system: str | None) -> dict:
    if system is None or not isinstance(node["value"], (int, float)):
        return node
    target = _DISPLAY_MAP[system].get(node["unit"])
    if target is None:
        return node
    q = units.convert(units.make(float(node["value"]), node["unit"]), target)
    return {"value": q.value, "unit": q.unit}


def _fmt_tag(node: dict, system: str | None) -> str:
    node = _display_tag(node, system)
    value = node["value"]
    if isinstance(value, str):
        text = value
    else:
        text = f"{value:.6g}"
    display = units.UNITS[node["unit"]].display if node["unit"] in units.UNITS else node["unit"]
    return f"{text} {display}".rstrip()


def _render(node, system: str | None, indent: int, lines: list[str], key: str | None):
    pad = "  " * indent
    label = f"{pad}{key}: " if key is not None else pad
    if _is_tag(node):
        lines.append(label + _fmt_tag(node, system))
    elif node is None:
        lines.append(label + "-")
    elif isinstance(node, bool):
        lines.append(label + ("yes" if node else "no"))
    elif isinstance(node, (int, float)):
        lines.append(label + f"{node:.6g}")
    elif isinstance(node, str):
        lines.append(label + node)
    elif isinstance(node, dict):
        if key is not None:
            lines.append(f"{pad}{key}:")
        for k, v in node.items():
            _render(v, system, indent + (0 if key is None else 1), lines, k)
    elif isinstance(node, list):
        if key is not None:
            lines.append(f"{pad}{key}:")
        inner = indent + (0 if key is None else 1)
        for item in node:
            if isinstance(item, (dict, list)) and not _is_tag(item):
                _render(item, system, inner + 1, lines, None)
                continue
            _render(item, system, inner, lines, "-")


def _render_chain(result: dict, system: str | None) -> list[str]:
    lines = [f"{result['phase']} distance ({result['mode']} factors)"]
    lines.append(f"  base distance: {_fmt_tag(result['base_distance'], system)}")
    for e in result["entries"]:
        value = e["input"]["value"]
        text = value if isinstance(value, str) else _fmt_tag(e["input"], system)
        lines.append(f"  {e['name']:<12} {text:>14}  x {e['factor']['value']:.4g}")
    lines.append(
        f"  environmental: {_fmt_tag(result['environmental_distance'], system)}"
        f"  (x {result['environmental_factor']['value']:.4g})"
    )
    if "final_distance" in result:
        lines.append(
            f"  safety factor: x {result['general_safety_factor']['value']:.4g}"
        )
        lines.append(
            f"  final:         {_fmt_tag(result['final_distance'], system)}"
            f"  (x {result['total_factor']['value']:.4g} overall)"
        )
    return lines


def _render_wb(result: dict, system: str | None) -> list[str]:
    lines = [f"profile {result['profile']}, envelope {result['envelope']}"]
    for p in result["phases"]:
        lines.append(
            f"  {p['phase']:<10} {_fmt_tag(p['weight'], system):>12}"
            f"  arm {_fmt_tag(p['cg_arm'], None)}"
            f"  fuel {_fmt_tag(p['fuel'], system)}"
            f"  {p['verdict']} (margin {p['margin']['value']:+.3f})"
        )
    for flag in result["flags"]:
        lines.append(f"  flag: {flag}")
    fv = result["track"]["first_violation"]
    if fv is None:
        lines.append("  CG track: inside the envelope for the whole fuel burn")
    else:
        lines.append(f"  CG track: leaves the envelope at {fv['value']:.0%} of the burn")
    return lines


_GRID_LETTERS = {"none": ".", "light": "L", "moderate": "M", "serious": "S"}


def _render_grid(result: dict, system: str | None) -> list[str]:
    lines = ["carburettor icing risk (rows: dew point high to low; cols: OAT)"]
    for ctx in ("cruise", "descent"):
        lines.append(f"{ctx}:")
        for row in reversed(result[ctx]):
            cells = "".join(" " if c is None else _GRID_LETTERS[c] for c in row)
            lines.append("  " + cells)
    lines.append("legend: . none, L light, M moderate, S serious, blank invalid")
    lines.append(result["disclaimer"])
    return lines


_CUSTOM_RENDERERS = {
    "todr": _render_chain,
    "ldr": _render_chain,
    "wb": _render_wb,
    "risk-grid": _render_grid,
}


def render_human(response: dict, system: str | None) -> str:
    if not response["ok"]:
        err = response["error"]
        return f"error ({err['code']}): {err['message']}"
    op = response["operation"]
    renderer = _CUSTOM_RENDERERS.get(op)
    if renderer is not None:
        lines = renderer(response["result"], system)
    else:
        lines = []
        _render(response["result"], system, 0, lines, None)
    for w in response["warnings"]:
        lines.append(f"warning: {w}")
    for a in response["assumptions"]:
        lines.append(f"note: {a}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# entry point

def _exit_code(response: dict) -> int:
    if response["ok"]:
        return _EXIT_OK
    return _EXIT_INTERNAL if response["error"]["code"] == "internal" else _EXIT_INPUT


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors; usage errors are
        # caller input problems, same class as validation failures
        return _EXIT_OK if exc.code in (0, None) else _EXIT_INPUT

    as_json = getattr(args, "json", False)
    system = getattr(args, "units", None)

    if args.command is None:
        parser.print_help()
        return _EXIT_INPUT

    if args.command == "serve":
        from flightcalc import service

        return service.run(args.host, args.port, args.static)

    try:
        inputs = collect_inputs(args.command, args)
    except CalcError as exc:
        operation = _SUBCOMMANDS.get(args.command, (args.command, []))[0]
        response = {
            "ok": False,
            "operation": operation,
            "error": {"code": exc.code, "message": str(exc)},
        }
        print(json.dumps(response, indent=2, sort_keys=True) if as_json
              else render_human(response, system))
        return _EXIT_INPUT

    operation = "convert" if args.command == "convert" else _SUBCOMMANDS[args.command][0]
    response = api.dispatch(operation, inputs)
    if as_json:
        print(json.dumps(response, indent=2, sort_keys=True))
    else:
        print(render_human(response, system))
    return _exit_code(response)


if __name__ == "__main__":
    sys.exit(main())
