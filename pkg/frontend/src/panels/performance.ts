// Take-off / landing performance panel: the explicit factor chain from
// flight-manual distance to factored distance.

import type { CalcSuccess, PerfResult } from "../api"
import { fmtFactor, fmtQuantity, fmtTag } from "../format"

export interface PerfRow {
  name: string
  label: string
  inputText: string
  factorText: string
}

export interface PerfViewModel {
  phase: string
  phaseLabel: string
  modeLabel: string
  baseText: string
  rows: PerfRow[]
  environmentalFactorText: string
  environmentalDistanceText: string
  safetyFactorText: string | null
  finalDistanceText: string
  totalFactorText: string
  warnings: string[]
}

const ROW_LABELS: Record<string, string> = {
  weight: "Weight above reference",
  elevation: "Field elevation",
  temperature: "Temperature above ISA",
  wind: "Wind component",
  slope: "Runway slope",
  surface: "Surface",
}

export function buildPerfView(env: CalcSuccess<PerfResult>): PerfViewModel {
  const r = env.result
  return {
    phase: r.phase,
    phaseLabel: r.phase === "takeoff" ? "Take-off distance required" : "Landing distance required",
    modeLabel: r.mode === "stepped" ? "stepped factors" : "continuous factors",
    baseText: fmtQuantity(r.base_distance, 0),
    rows: r.entries.map((e) => ({
      name: e.name,
      label: ROW_LABELS[e.name] ?? e.name.replace(/_/g, " "),
      inputText: fmtTag(e.input, 1),
      factorText: fmtFactor(e.factor),
    })),
    environmentalFactorText: fmtFactor(r.environmental_factor),
    environmentalDistanceText: fmtQuantity(r.environmental_distance, 0),
    safetyFactorText: r.general_safety_factor === null ? null : fmtFactor(r.general_safety_factor),
    finalDistanceText: fmtQuantity(r.final_distance, 0),
    totalFactorText: fmtFactor(r.total_factor),
    warnings: env.warnings,
  }
}

export function renderPerfChain(container: HTMLElement, vm: PerfViewModel) {
  container.textContent = ""
  const title = document.createElement("h3")
  title.textContent = `${vm.phaseLabel} (${vm.modeLabel})`
  container.appendChild(title)

  const table = document.createElement("table")
  table.className = "chain"
  addRow(table, "Flight-manual distance", "", vm.baseText, "base")
  for (const row of vm.rows) {
    addRow(table, row.label, row.inputText, row.factorText, "")
  }
  addRow(table, "Environmental factor", "", vm.environmentalFactorText, "subtotal")
  addRow(table, "Environmental distance", "", vm.environmentalDistanceText, "subtotal")
  if (vm.safetyFactorText !== null) {
    addRow(table, "General safety factor", "", vm.safetyFactorText, "")
  }
  addRow(table, "Factored distance", vm.totalFactorText, vm.finalDistanceText, "final")
  container.appendChild(table)

  for (const warning of vm.warnings) {
    const p = document.createElement("p")
    p.className = "warning"
    p.textContent = warning
    container.appendChild(p)
  }
}

function addRow(table: HTMLTableElement, label: string, middle: string, right: string, cls: string) {
  const tr = table.insertRow()
  if (cls) {
    tr.className = cls
  }
  const name = tr.insertCell()
  name.textContent = label
  const mid = tr.insertCell()
  mid.textContent = middle
  const val = tr.insertCell()
  val.textContent = right
  val.className = "num"
}
