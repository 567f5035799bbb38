// Weight & balance panel: loading table, CG plot with envelope polygon,
// the four phase points and the fuel-burn track.
//
// buildWbView is pure and carries every number that ends up on screen,
// already formatted; the renderer only places those strings and draws.

import type { AircraftInfo, CalcSuccess, WbResult } from "../api"
import { fmtNumber, fmtQuantity } from "../format"
import { clearChildren, createSvgNode, linearScale, polylinePoints, svgText } from "../svg"

export interface WbPhaseRow {
  phase: string
  label: string
  weightText: string
  armText: string
  fuelText: string
  verdict: string
  marginText: string
  point: { arm: number; weight: number }
}

export interface WbViewModel {
  profile: string
  envelopeName: string
  rows: WbPhaseRow[]
  flags: string[]
  polygon: { arm: number; weight: number }[]
  trackPoints: { arm: number; weight: number }[]
  anyOutside: boolean
  firstViolationText: string | null
}

const PHASE_LABELS: Record<string, string> = {
  ramp: "Ramp",
  takeoff: "Take-off",
  landing: "Landing",
  zero_fuel: "Zero fuel",
}

export function buildWbView(env: CalcSuccess<WbResult>, aircraft: AircraftInfo): WbViewModel {
  const result = env.result
  const rows = result.phases.map((p) => ({
    phase: p.phase,
    label: PHASE_LABELS[p.phase] ?? p.phase,
    weightText: fmtQuantity(p.weight, 1),
    armText: fmtQuantity(p.cg_arm, 2),
    fuelText: fmtQuantity(p.fuel, 1),
    verdict: p.verdict,
    marginText: fmtNumber(p.margin.value, 3),
    point: { arm: p.cg_arm.value, weight: p.weight.value },
  }))
  const vertices = aircraft.envelopes[result.envelope] ?? []
  const fv = result.track.first_violation
  return {
    profile: result.profile,
    envelopeName: result.envelope,
    rows,
    flags: result.flags,
    polygon: vertices.map((v) => ({ arm: v.arm.value, weight: v.weight.value })),
    trackPoints: result.track.samples.map((s) => ({
      arm: s.cg_arm.value,
      weight: s.weight.value,
    })),
    anyOutside: rows.some((r) => r.verdict === "outside"),
    firstViolationText:
      fv === null
        ? null
        : `CG track leaves the envelope at burn fraction ${fmtNumber(fv.value, 2)}`,
  }
}

// ------------------------------------------------------------- rendering

const PLOT_W = 420
const PLOT_H = 300
const PAD = 36

export function renderWbPlot(svg: SVGSVGElement, vm: WbViewModel) {
  clearChildren(svg)
  setViewBox(svg, PLOT_W, PLOT_H)
  const arms = vm.polygon.map((p) => p.arm).concat(vm.rows.map((r) => r.point.arm))
  const weights = vm.polygon.map((p) => p.weight).concat(vm.rows.map((r) => r.point.weight))
  if (arms.length === 0) {
    return
  }
  const margin = 0.08
  const aSpan = Math.max(...arms) - Math.min(...arms) || 1
  const wSpan = Math.max(...weights) - Math.min(...weights) || 1
  const x = linearScale(
    Math.min(...arms) - margin * aSpan,
    Math.max(...arms) + margin * aSpan,
    PAD,
    PLOT_W - 8,
  )
  const y = linearScale(
    Math.min(...weights) - margin * wSpan,
    Math.max(...weights) + margin * wSpan,
    PLOT_H - PAD,
    12,
  )

  // envelope polygon
  createSvgNode(svg, "polygon", {
    class: "envelope",
    points: polylinePoints(vm.polygon.map((p) => [x(p.arm), y(p.weight)])),
  })

  // certification corners double as the axis labels, so every figure on
  // the plot is a service value
  for (const v of vm.polygon) {
    svgText(svg, fmtNumber(v.arm, 1), {
      class: "tick",
      x: x(v.arm),
      y: PLOT_H - PAD + 14,
      "text-anchor": "middle",
    })
    svgText(svg, fmtNumber(v.weight, 0), {
      class: "tick",
      x: PAD - 4,
      y: y(v.weight) + 3,
      "text-anchor": "end",
    })
  }

  // fuel-burn track from take-off to landing
  if (vm.trackPoints.length > 1) {
    createSvgNode(svg, "polyline", {
      class: "track",
      points: polylinePoints(vm.trackPoints.map((p) => [x(p.arm), y(p.weight)])),
    })
  }

  // phase points
  for (const row of vm.rows) {
    const cls = row.verdict === "outside" ? "phase-point outside" : "phase-point"
    createSvgNode(svg, "circle", {
      class: cls,
      cx: x(row.point.arm),
      cy: y(row.point.weight),
      r: 4,
    })
    svgText(svg, row.label, {
      class: "point-label",
      x: x(row.point.arm) + 7,
      y: y(row.point.weight) - 5,
    })
  }
}

export function renderWbTable(table: HTMLTableElement, vm: WbViewModel) {
  clearChildren(table)
  const head = table.createTHead().insertRow()
  for (const text of ["Phase", "Weight", "CG arm", "Fuel", "Margin"]) {
    const th = document.createElement("th")
    th.textContent = text
    head.appendChild(th)
  }
  const body = table.createTBody()
  for (const row of vm.rows) {
    const tr = body.insertRow()
    if (row.verdict === "outside") {
      tr.className = "outside"
    }
    for (const text of [row.label, row.weightText, row.armText, row.fuelText, row.marginText]) {
      tr.insertCell().textContent = text
    }
  }
}

export function renderWbFlags(list: HTMLElement, vm: WbViewModel) {
  clearChildren(list)
  const notes = vm.flags.slice()
  if (vm.firstViolationText !== null) {
    notes.push(vm.firstViolationText)
  }
  for (const flag of notes) {
    const li = document.createElement("li")
    li.textContent = flag
    list.appendChild(li)
  }
  list.classList.toggle("hidden", notes.length === 0)
}

function setViewBox(svg: SVGSVGElement, w: number, h: number) {
  svg.setAttribute("viewBox", `0 0 ${w} ${h}`)
}
