"""Carburettor icing risk from temperature and dew point.

The chart is configuration: named polygon regions over the
(OAT, dew point) plane, one set per power context (cruise and descent),
partitioning the valid area below the saturation line into categories
none / light / moderate / serious. Lookup is categorical only - the
result is a region name, never a numeric probability - and every
assessment carries the chart's safety disclaimer verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import geometry
from .atmosphere import humidity
from .errors import CalcError

CATEGORIES = ("none", "light", "moderate", "serious")
SEVERITY = {name: i for i, name in enumerate(CATEGORIES)}
POWER_CONTEXTS = ("cruise", "descent")

DEFAULT_GRID_RESOLUTION = 25


@dataclass(frozen=True)
class IcingRegion:
    category: str
    power_context: str
    polygon: tuple[geometry.Point, ...]


@dataclass(frozen=True)
class IcingChart:
    name: str
    version: str
    oat_range_c: tuple[float, float]
    dew_point_range_c: tuple[float, float]
    regions: tuple[IcingRegion, ...]
    disclaimer: str

    def category(self, power_context: str, oat_c: float, dew_point_c: float) -> str:
        """Region category at a chart point; highest severity wins on shared edges."""
        if power_context not in POWER_CONTEXTS:
            raise CalcError(
                f"power context must be one of {POWER_CONTEXTS}, got {power_context!r}"
            )
        # points in the observation tolerance band above saturation sit on the line
        dp = min(dew_point_c, oat_c)
        regions = [r for r in self.regions if r.power_context == power_context]
        regions.sort(key=lambda r: -SEVERITY[r.category])
        for region in regions:
            if geometry.classify_point(list(region.polygon), oat_c, dp) != "outside":
                return region.category
        raise CalcError(
            f"chart {self.name!r} does not cover OAT {oat_c:g} degC / "
            f"dew point {dp:g} degC for {power_context}"
        )


@dataclass(frozen=True)
class IcingAssessment:
    category_cruise: str
    category_descent: str
    relative_humidity_pct: float
    spread_c: float
    saturated: bool
    disclaimer: str


def assess(chart: IcingChart, oat_c: float, dew_point_c: float) -> IcingAssessment:
    """Categorical icing risk for both power contexts at one observation."""
    lo, hi = chart.oat_range_c
    if not (lo <= oat_c <= hi):
        raise CalcError(f"OAT {oat_c:g} degC outside chart range [{lo:g}, {hi:g}]")
    dlo, dhi = chart.dew_point_range_c
    if not (dlo <= dew_point_c <= dhi):
        raise CalcError(
            f"dew point {dew_point_c:g} degC outside chart range [{dlo:g}, {dhi:g}]"
        )
    hum = humidity(oat_c, dew_point_c)  # also enforces the +0.5 degC tolerance
    return IcingAssessment(
        chart.category("cruise", oat_c, dew_point_c),
        chart.category("descent", oat_c, dew_point_c),
        hum.relative_humidity_pct,
        hum.spread_c,
        hum.saturated,
        chart.disclaimer,
    )


def risk_grid(chart: IcingChart, resolution: int = DEFAULT_GRID_RESOLUTION) -> dict:
    """Cell-centre category grid for rendering the chart.

    Rows follow the dew point axis, columns the OAT axis. Cells whose
    centre lies above the saturation line are None (invalid region).
    """
    if resolution < 2:
        raise CalcError(f"grid resolution must be >= 2, got {resolution}")
    olo, ohi = chart.oat_range_c
    dlo, dhi = chart.dew_point_range_c
    do = (ohi - olo) / resolution
    dd = (dhi - dlo) / resolution
    oat_centres = [olo + (i + 0.5) * do for i in range(resolution)]
    dp_centres = [dlo + (j + 0.5) * dd for j in range(resolution)]
    grids: dict[str, list[list[str | None]]] = {}
    for ctx in POWER_CONTEXTS:
        rows = []
        for dp in dp_centres:
            row: list[str | None] = []
            for oat in oat_centres:
                if dp > oat:
                    row.append(None)
                else:
                    row.append(chart.category(ctx, oat, dp))
            rows.append(row)
        grids[ctx] = rows
    return {
        "oat_centres_c": oat_centres,
        "dew_point_centres_c": dp_centres,
        "cruise": grids["cruise"],
        "descent": grids["descent"],
    }


def icing_chart_from_payload(payload: dict) -> IcingChart:
    """Build and validate an IcingChart from a data-bundle payload.

    Validation walks a probe grid over the valid domain and requires
    every point to be covered for both power contexts, and the descent
    category to be at least the cruise category everywhere.
    """
    try:
        name = str(payload["name"])
        version = str(payload["version"])
        oat_range = _range_c(payload["domain"]["oat"], "domain.oat")
        dp_range = _range_c(payload["domain"]["dew_point"], "domain.dew_point")
        disclaimer = str(payload["disclaimer"])
        if not disclaimer.strip():
            raise CalcError("icing chart disclaimer must be non-empty")
        regions = []
        for i, rnode in enumerate(payload["regions"]):
            cat = str(rnode["category"])
            if cat not in CATEGORIES:
                raise CalcError(f"region {i}: unknown category {cat!r}")
            ctx = str(rnode["power_context"])
            if ctx not in POWER_CONTEXTS:
                raise CalcError(f"region {i}: unknown power context {ctx!r}")
            verts = []
            for vnode in rnode["vertices"]:
                verts.append((
                    _temp_c(vnode["oat"], f"region {i} vertex oat"),
                    _temp_c(vnode["dew_point"], f"region {i} vertex dew_point"),
                ))
            geometry.validate_polygon(verts, f"icing region {i} ({ctx}/{cat})")
            regions.append(IcingRegion(cat, ctx, tuple(verts)))
    except KeyError as exc:
        raise CalcError(f"icing chart payload missing field {exc}") from None
    chart = IcingChart(name, version, oat_range, dp_range, tuple(regions), disclaimer)
    _validate_coverage(chart)
    return chart


def _temp_c(node, field: str) -> float:
    if not isinstance(node, dict) or "value" not in node or "unit" not in node:
        raise CalcError(f"{field}: expected {{'value', 'unit'}} object")
    if node["unit"] != "degc":
        raise CalcError(f"{field}: chart coordinates must be degc, got {node['unit']!r}")
    return float(node["value"])


def _range_c(node, field: str) -> tuple[float, float]:
    lo = _temp_c(node["min"], f"{field}.min")
    hi = _temp_c(node["max"], f"{field}.max")
    if not lo < hi:
        raise CalcError(f"{field}: min must be below max, got [{lo:g}, {hi:g}]")
    return (lo, hi)


def _validate_coverage(chart: IcingChart, probes: int = 41) -> None:
    olo, ohi = chart.oat_range_c
    dlo, dhi = chart.dew_point_range_c
    for ctx in POWER_CONTEXTS:
        if not any(r.power_context == ctx for r in chart.regions):
            raise CalcError(f"icing chart has no regions for {ctx} power")
    for i in range(probes):
        oat = olo + (ohi - olo) * i / (probes - 1)
        for j in range(probes):
            dp = dlo + (dhi - dlo) * j / (probes - 1)
            if dp > oat:
                continue
            cruise = chart.category("cruise", oat, dp)
            descent = chart.category("descent", oat, dp)
            if SEVERITY[descent] < SEVERITY[cruise]:
                raise CalcError(
                    f"icing chart is inconsistent at OAT {oat:g} / dew point {dp:g}: "
                    f"descent {descent} below cruise {cruise}"
                )
