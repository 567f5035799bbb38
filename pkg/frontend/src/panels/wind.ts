// Wind panel: runway versus wind with the numeric components, the exact
// wind triangle for a course, and the clock-code estimate alongside.

import type {
  CalcSuccess,
  ClockCodeResult,
  WindComponentsResult,
  WindTriangleResult,
} from "../api"
import { fmtHeading, fmtNumber, fmtQuantity, fmtSigned } from "../format"
import { clearChildren, createSvgNode, svgText } from "../svg"

export interface WindViewModel {
  runwayText: string
  windText: string
  angleOffText: string
  headwindText: string
  crosswindText: string
  side: string
  clockFractionText: string | null
  clockCrosswindText: string | null
  triangle: {
    headingText: string
    wcaText: string
    gsText: string
  } | null
  vector: { runwayDeg: number; windFromDeg: number; windSpeed: number }
}

export function buildWindView(
  comp: CalcSuccess<WindComponentsResult>,
  clock: CalcSuccess<ClockCodeResult> | null,
  tri: CalcSuccess<WindTriangleResult> | null,
): WindViewModel {
  const r = comp.result
  return {
    runwayText: fmtHeading(r.reference_heading),
    windText: `${fmtHeading(r.wind_from)} / ${fmtQuantity(r.wind_speed, 0)}`,
    angleOffText: fmtQuantity(r.angle_off, 0),
    headwindText: fmtSigned(r.headwind, 1),
    crosswindText: `${fmtQuantity(r.crosswind, 1)} from the ${r.side}`,
    side: r.side,
    clockFractionText:
      clock === null ? null : `${fmtNumber(clock.result.fraction.value, 2)} of wind speed`,
    clockCrosswindText: clock === null ? null : fmtQuantity(clock.result.crosswind, 1),
    triangle:
      tri === null
        ? null
        : {
            headingText: fmtHeading(tri.result.heading),
            wcaText: fmtSigned(tri.result.wind_correction, 1),
            gsText: fmtQuantity(tri.result.ground_speed, 1),
          },
    vector: {
      runwayDeg: r.reference_heading.value,
      windFromDeg: r.wind_from.value,
      windSpeed: r.wind_speed.value,
    },
  }
}

// ------------------------------------------------------------- rendering

const VIEW = 260
const CENTRE = VIEW / 2

// Runway strip drawn runway-up; the wind arrow is rotated by the angle
// between wind direction and runway heading.  Rotation is drawing
// geometry; the numbers beside the sketch all come from the view model.
export function renderWindSketch(svg: SVGSVGElement, vm: WindViewModel) {
  clearChildren(svg)
  svg.setAttribute("viewBox", `0 0 ${VIEW} ${VIEW}`)

  createSvgNode(svg, "rect", {
    class: "runway",
    x: CENTRE - 14,
    y: 40,
    width: 28,
    height: VIEW - 80,
    rx: 3,
  })
  // centreline
  createSvgNode(svg, "line", {
    class: "centreline",
    x1: CENTRE,
    y1: 46,
    x2: CENTRE,
    y2: VIEW - 46,
  })
  svgText(svg, vm.runwayText, {
    class: "sketch-label",
    x: CENTRE,
    y: VIEW - 16,
    "text-anchor": "middle",
  })

  // rotation of the arrow group relative to the runway-up sketch
  const relative = vm.vector.windFromDeg - vm.vector.runwayDeg
  const arrow = createSvgNode(svg, "g", {
    class: "wind-arrow",
    transform: `rotate(${relative.toFixed(1)} ${CENTRE} ${CENTRE})`,
  })
  // arrow flies from the wind source towards the runway
  createSvgNode(arrow, "line", { x1: CENTRE, y1: 28, x2: CENTRE, y2: 86 })
  createSvgNode(arrow, "polygon", {
    points: `${CENTRE - 5},86 ${CENTRE + 5},86 ${CENTRE},98`,
  })
  svgText(svg, vm.windText, { class: "sketch-label", x: 8, y: 18 })
}
