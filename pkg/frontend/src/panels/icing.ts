// Carburettor icing panel: the category grid as a coloured chart with the
// saturation line, the user's point, and the per-point assessment.

import type { CalcSuccess, CarbIcingResult, RiskGridResult } from "../api"
import { fmtQuantity } from "../format"
import { clearChildren, createSvgNode, linearScale, svgText } from "../svg"

export interface IcingViewModel {
  oatCentres: number[]
  dewCentres: number[]
  cruise: (string | null)[][]
  descent: (string | null)[][]
  categories: string[]
  disclaimer: string
  point: { oat: number; dewPoint: number } | null
  oatText: string | null
  dewPointText: string | null
  rhText: string | null
  spreadText: string | null
  cruiseCategory: string | null
  descentCategory: string | null
  saturated: boolean
}

export function buildIcingView(
  grid: CalcSuccess<RiskGridResult>,
  point: CalcSuccess<CarbIcingResult> | null,
): IcingViewModel {
  const g = grid.result
  const p = point === null ? null : point.result
  return {
    oatCentres: g.oat_centres.map((c) => c.value),
    dewCentres: g.dew_point_centres.map((c) => c.value),
    cruise: g.cruise,
    descent: g.descent,
    categories: g.categories,
    disclaimer: g.disclaimer,
    point: p === null ? null : { oat: p.oat.value, dewPoint: p.dew_point.value },
    oatText: p === null ? null : fmtQuantity(p.oat, 1),
    dewPointText: p === null ? null : fmtQuantity(p.dew_point, 1),
    rhText: p === null ? null : fmtQuantity(p.relative_humidity, 1),
    spreadText: p === null ? null : fmtQuantity(p.spread, 1),
    cruiseCategory: p === null ? null : p.cruise,
    descentCategory: p === null ? null : p.descent,
    saturated: p === null ? false : p.saturated,
  }
}

// ------------------------------------------------------------- rendering

const CHART_W = 250
const CHART_H = 230
const PAD_L = 30
const PAD_B = 26

// One chart per power context, cells coloured by category; the empty
// wedge above the diagonal is the impossible region (dew point > OAT),
// its edge the saturation line.
export function renderIcingChart(
  svg: SVGSVGElement,
  vm: IcingViewModel,
  context: "cruise" | "descent",
) {
  clearChildren(svg)
  svg.setAttribute("viewBox", `0 0 ${CHART_W} ${CHART_H}`)
  const cells = context === "cruise" ? vm.cruise : vm.descent
  const n = vm.oatCentres.length
  if (n < 2 || vm.dewCentres.length < 2) {
    return
  }
  const oStep = vm.oatCentres[1] - vm.oatCentres[0]
  const dStep = vm.dewCentres[1] - vm.dewCentres[0]
  const oLo = vm.oatCentres[0] - oStep / 2
  const oHi = vm.oatCentres[n - 1] + oStep / 2
  const dLo = vm.dewCentres[0] - dStep / 2
  const dHi = vm.dewCentres[vm.dewCentres.length - 1] + dStep / 2
  const x = linearScale(oLo, oHi, PAD_L, CHART_W - 4)
  const y = linearScale(dLo, dHi, CHART_H - PAD_B, 6)

  for (let j = 0; j < vm.dewCentres.length; j++) {
    for (let i = 0; i < n; i++) {
      const category = cells[j][i]
      if (category === null) {
        continue
      }
      const cx = vm.oatCentres[i]
      const cy = vm.dewCentres[j]
      createSvgNode(svg, "rect", {
        class: `cell risk-${category}`,
        x: x(cx - oStep / 2),
        y: y(cy + dStep / 2),
        width: x(cx + oStep / 2) - x(cx - oStep / 2),
        height: y(cy - dStep / 2) - y(cy + dStep / 2),
      })
    }
  }

  // saturation line: dew point equal to OAT
  const satLo = Math.max(oLo, dLo)
  const satHi = Math.min(oHi, dHi)
  createSvgNode(svg, "line", {
    class: "saturation",
    x1: x(satLo),
    y1: y(satLo),
    x2: x(satHi),
    y2: y(satHi),
  })

  // axis labels every few cell centres, values straight off the grid
  for (let i = 0; i < n; i += 6) {
    svgText(svg, vm.oatCentres[i].toFixed(0), {
      class: "tick",
      x: x(vm.oatCentres[i]),
      y: CHART_H - PAD_B + 12,
      "text-anchor": "middle",
    })
  }
  for (let j = 0; j < vm.dewCentres.length; j += 6) {
    svgText(svg, vm.dewCentres[j].toFixed(0), {
      class: "tick",
      x: PAD_L - 4,
      y: y(vm.dewCentres[j]) + 3,
      "text-anchor": "end",
    })
  }
  svgText(svg, "OAT °C", {
    class: "axis-label",
    x: (PAD_L + CHART_W) / 2,
    y: CHART_H - 4,
    "text-anchor": "middle",
  })
  svgText(svg, context === "cruise" ? "Cruise power" : "Descent power", {
    class: "chart-title",
    x: CHART_W - 6,
    y: 14,
    "text-anchor": "end",
  })

  if (vm.point !== null) {
    createSvgNode(svg, "circle", {
      class: "user-point",
      cx: x(vm.point.oat),
      cy: y(vm.point.dewPoint),
      r: 5,
    })
  }
}

export function renderIcingAssessment(container: HTMLElement, vm: IcingViewModel) {
  container.textContent = ""
  if (vm.rhText === null) {
    return
  }
  const dl = document.createElement("dl")
  addPair(dl, "Relative humidity", vm.rhText)
  addPair(dl, "Temperature / dew-point spread", vm.spreadText ?? "")
  addPair(dl, "Cruise power risk", vm.cruiseCategory ?? "", true)
  addPair(dl, "Descent power risk", vm.descentCategory ?? "", true)
  container.appendChild(dl)
  if (vm.saturated) {
    const p = document.createElement("p")
    p.className = "warning"
    p.textContent = "Air is saturated."
    container.appendChild(p)
  }
}

function addPair(dl: HTMLDListElement, label: string, value: string, isCategory = false) {
  const dt = document.createElement("dt")
  dt.textContent = label
  const dd = document.createElement("dd")
  dd.textContent = value
  if (isCategory) {
    dd.className = `risk-${value}`
  }
  dl.appendChild(dt)
  dl.appendChild(dd)
}
