#!/usr/bin/env python3
"""Capture live service responses as TypeScript test fixtures.

The planner's tests compare what the panels display against real service
responses, so the fixtures must be captured verbatim from a running
service rather than written by hand:

    flightcalc serve --port 8424
    python3 scripts/capture_fixtures.py --port 8424

Two requests are chained the same way the panels chain them: the
imperial take-off run uses the convert output as its base distance, and
the clock-code request uses the angle-off from the wind components.
Re-run this script whenever the engine or the scripted inputs change.
"""

import argparse
import json
import urllib.request
from pathlib import Path

HEADER = '''\
// Service responses captured verbatim by scripts/capture_fixtures.py.
// Do not edit by hand; re-run the script against a local service.

export interface Fixture {
  op: string
  inputs: unknown
  response: unknown
}
'''


def post(base: str, op: str, inputs: dict) -> dict:
    req = urllib.request.Request(
        f"{base}/api/v1/calc/{op}",
        data=json.dumps(inputs).encode("utf-8"),
        headers={"Content-Type": "application/json"},
        method="POST",
    )
    with urllib.request.urlopen(req) as resp:
        return json.load(resp)


def get(base: str, path: str) -> dict:
    with urllib.request.urlopen(f"{base}/api/v1/{path}") as resp:
        return json.load(resp)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8424)
    parser.add_argument(
        "--out", default=str(Path(__file__).resolve().parent.parent / "tests" / "fixtures.ts")
    )
    args = parser.parse_args()
    base = f"http://{args.host}:{args.port}"

    perf_conditions = {
        "weight_ratio": 1.05,
        "elevation": 800,
        "oat": 23,
        "headwind": 8,
        "tailwind": 0,
        "v_lo": 55,
        "slope": 1.0,
        "surface": "paved_dry",
        "mode": "continuous",
    }

    fixtures: list[tuple[str, str, dict]] = []

    def capture(name: str, op: str, inputs: dict) -> dict:
        response = post(base, op, inputs)
        if not response.get("ok"):
            raise SystemExit(f"{op} fixture failed: {response}")
        fixtures.append((name, op, {"inputs": inputs, "response": response}))
        return response

    capture("UNITS", "list-units", {})
    capture("PROFILES", "profiles", {})
    capture(
        "WB_OK",
        "wb",
        {
            "profile": "c152",
            "loads": {"seats": 340, "baggage1": 50},
            "envelope": "normal",
            "fuel": 90,
            "taxi_fuel": 4,
            "trip_fuel": 60,
        },
    )
    capture(
        "WB_OVERLOADED",
        "wb",
        {
            "profile": "c152",
            "loads": {"seats": 400, "baggage1": 120, "baggage2": 40},
            "envelope": "normal",
            "fuel": 92,
            "taxi_fuel": 2,
            "trip_fuel": 80,
        },
    )
    capture("TODR_METRIC", "todr", {"base_distance": 390, **perf_conditions})
    convert = capture("CONVERT_BASE_FT", "convert", {"value": 390, "from": "m", "to": "ft"})
    base_ft = convert["result"]["output"]["value"]
    capture(
        "TODR_IMPERIAL",
        "todr",
        {"base_distance": {"value": base_ft, "unit": "ft"}, **perf_conditions},
    )
    capture("LDR_METRIC", "ldr", {"base_distance": 550, **perf_conditions})
    components = capture(
        "WIND_COMPONENTS",
        "wind-components",
        {"direction": 230, "wind_from": 285, "wind_speed": 12},
    )
    angle_off = components["result"]["angle_off"]["value"]
    capture("CLOCK_CODE", "clock-code", {"angle_off": angle_off, "wind_speed": 12})
    capture(
        "WIND_TRIANGLE",
        "wind-triangle",
        {"course": 90, "tas": 100, "wind_from": 285, "wind_speed": 12},
    )
    capture(
        "HOLD_PLAN",
        "hold-plan",
        {
            "inbound_course": 270,
            "heading": 200,
            "turns": "right",
            "tas": 100,
            "wind_from": 320,
            "wind_speed": 15,
            "leg_time": 60,
        },
    )
    capture("CARB_ICING", "carb-icing", {"oat": 12, "dew_point": 8})
    capture("RISK_GRID", "risk-grid", {})

    health = get(base, "health")

    blocks = [HEADER]
    for name, op, data in fixtures:
        blocks.append(
            f"export const {name}: Fixture = {{\n"
            f"  op: {json.dumps(op)},\n"
            f"  inputs: {indent(json.dumps(data['inputs'], indent=2))},\n"
            f"  response: {indent(json.dumps(data['response'], indent=2))},\n"
            f"}}\n"
        )
    blocks.append(f"export const HEALTH: unknown = {indent(json.dumps(health, indent=2))}\n")

    out = Path(args.out)
    out.write_text("\n".join(blocks), encoding="utf-8")
    print(f"wrote {out} with {len(fixtures) + 1} fixtures")


def indent(text: str) -> str:
    return text.replace("\n", "\n  ")


if __name__ == "__main__":
    main()
