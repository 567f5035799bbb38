// Holding panel: racetrack sketch, entry classification, wind-corrected
// headings and the procedural step list.

import type { CalcSuccess, HoldPlanResult } from "../api"
import { fmtHeading, fmtQuantity, fmtSigned } from "../format"
import { clearChildren, createSvgNode, svgText } from "../svg"

export interface HoldingViewModel {
  entryLabel: string
  inboundCourseText: string
  inboundHeadingText: string
  wcaText: string
  gsText: string
  outboundHeadingText: string
  outboundTimeText: string
  legTimeText: string
  steps: string[]
  geometry: { inboundCourseDeg: number; turns: string }
}

export function buildHoldingView(env: CalcSuccess<HoldPlanResult>): HoldingViewModel {
  const r = env.result
  const entry = r.entry.charAt(0).toUpperCase() + r.entry.slice(1)
  return {
    entryLabel: `${entry} entry, ${r.turns} turns`,
    inboundCourseText: fmtHeading(r.inbound_course),
    inboundHeadingText: fmtHeading(r.inbound_heading),
    wcaText: fmtSigned(r.inbound_wind_correction, 1),
    gsText: fmtQuantity(r.inbound_ground_speed, 1),
    outboundHeadingText: fmtHeading(r.outbound_heading),
    outboundTimeText: fmtQuantity(r.outbound_time, 1),
    legTimeText: fmtQuantity(r.leg_time, 0),
    steps: r.steps,
    geometry: { inboundCourseDeg: r.inbound_course.value, turns: r.turns },
  }
}

// ------------------------------------------------------------- rendering

const VIEW = 260
const CENTRE = VIEW / 2

// The racetrack is drawn with the inbound leg pointing up and the whole
// sketch rotated to the inbound course; a right-turn pattern puts the
// outbound leg to the right of the inbound track, and the turns run
// clockwise on screen.
export function renderHoldingSketch(svg: SVGSVGElement, vm: HoldingViewModel) {
  clearChildren(svg)
  svg.setAttribute("viewBox", `0 0 ${VIEW} ${VIEW}`)

  const legLen = 90
  const halfGap = 28
  const side = vm.geometry.turns === "right" ? 1 : -1
  const group = createSvgNode(svg, "g", {
    transform: `rotate(${vm.geometry.inboundCourseDeg.toFixed(1)} ${CENTRE} ${CENTRE})`,
  })

  const top = CENTRE - legLen / 2
  const bottom = CENTRE + legLen / 2
  const xIn = CENTRE - side * halfGap
  const xOut = CENTRE + side * halfGap
  const track = createSvgNode(group, "g", { class: "racetrack" })
  // inbound leg towards the fix, outbound leg parallel
  createSvgNode(track, "line", { x1: xIn, y1: bottom, x2: xIn, y2: top })
  createSvgNode(track, "line", { x1: xOut, y1: top, x2: xOut, y2: bottom })
  const r = Math.abs(xOut - xIn) / 2
  const sweep = vm.geometry.turns === "right" ? 1 : 0
  createSvgNode(track, "path", {
    d: `M ${xIn} ${top} A ${r} ${r} 0 0 ${sweep} ${xOut} ${top}`,
  })
  createSvgNode(track, "path", {
    d: `M ${xOut} ${bottom} A ${r} ${r} 0 0 ${sweep} ${xIn} ${bottom}`,
  })
  // the fix sits at the end of the inbound leg
  createSvgNode(group, "circle", { class: "fix", cx: xIn, cy: top, r: 4 })

  svgText(svg, `Inbound ${vm.inboundHeadingText}`, { class: "sketch-label", x: 8, y: 18 })
  svgText(svg, `Outbound ${vm.outboundHeadingText}`, {
    class: "sketch-label",
    x: 8,
    y: VIEW - 10,
  })
}

export function renderHoldingSteps(list: HTMLOListElement, vm: HoldingViewModel) {
  clearChildren(list)
  for (const step of vm.steps) {
    const li = document.createElement("li")
    li.textContent = step
    list.appendChild(li)
  }
}
