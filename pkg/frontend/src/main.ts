// Planner wiring: reads the forms, asks the service, renders the answers.
//
// Each panel refresh is guarded by a RequestGate so only the newest
// response is ever applied, and any network failure raises the offline
// banner while leaving every input exactly as typed.

import type {
  AircraftInfo,
  CalcEnvelope,
  CalcSuccess,
  CarbIcingResult,
  ClockCodeResult,
  ConvertResult,
  HoldPlanResult,
  PerfResult,
  ProfilesResult,
  RiskGridResult,
  UnitsResult,
  WbResult,
  WindComponentsResult,
  WindTriangleResult,
} from "./api"
import { getHealth, postCalc } from "./api"
import { fmtQuantity, registerUnits } from "./format"
import { RequestGate, defaultState, loadFromStorage, saveToStorage } from "./session"
import { buildWbView, renderWbFlags, renderWbPlot, renderWbTable } from "./panels/wb"
import { buildPerfView, renderPerfChain } from "./panels/performance"
import { buildWindView, renderWindSketch } from "./panels/wind"
import { buildHoldingView, renderHoldingSketch, renderHoldingSteps } from "./panels/holding"
import { buildIcingView, renderIcingAssessment, renderIcingChart } from "./panels/icing"

const state = loadFromStorage() ?? defaultState()

const gates = {
  wb: new RequestGate(),
  performance: new RequestGate(),
  wind: new RequestGate(),
  holding: new RequestGate(),
  icing: new RequestGate(),
}

let aircraftList: AircraftInfo[] = []
let riskGridEnv: CalcSuccess<RiskGridResult> | null = null
let offline = false

// example load for the default aircraft so the first view shows a
// realistic case rather than an empty aeroplane
const DEFAULT_WB_LOADS: Record<string, string> = { seats: "340", baggage1: "50" }

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id)
  if (node === null) {
    throw new Error(`missing element #${id}`)
  }
  return node as T
}

function num(id: string): number | null {
  const raw = el<HTMLInputElement>(id).value.trim()
  if (raw === "") {
    return null
  }
  const v = Number(raw)
  return Number.isFinite(v) ? v : null
}

function setOffline(flag: boolean) {
  const wasOffline = offline
  offline = flag
  el("offline-banner").classList.toggle("hidden", !flag)
  if (wasOffline && !flag) {
    refreshAll()
  }
}

function showError(id: string, message: string | null) {
  const node = el(id)
  node.textContent = message ?? ""
  node.classList.toggle("hidden", message === null)
}

function persist() {
  saveToStorage(state)
}

function rememberInput(panel: keyof typeof state.panels, target: EventTarget | null) {
  if (target instanceof HTMLInputElement || target instanceof HTMLSelectElement) {
    if (target.id !== "" && target.type !== "radio") {
      state.panels[panel][target.id] = target.value
      persist()
    }
  }
}

function restoredValue(panel: keyof typeof state.panels, id: string): string | null {
  const value = state.panels[panel][id]
  return value === undefined ? null : value
}

function restoreStaticInputs() {
  for (const panel of Object.keys(state.panels) as (keyof typeof state.panels)[]) {
    for (const [id, value] of Object.entries(state.panels[panel])) {
      const node = document.getElementById(id)
      if (node instanceof HTMLInputElement || node instanceof HTMLSelectElement) {
        node.value = value
      }
    }
  }
  const radio = document.querySelector<HTMLInputElement>(
    `input[name="perf-units"][value="${state.units}"]`,
  )
  if (radio) {
    radio.checked = true
  }
  el<HTMLSpanElement>("perf-base-unit").textContent = state.units === "metric" ? "m" : "ft"
}

// --------------------------------------------------------------- aircraft

function currentAircraft(): AircraftInfo | null {
  const ident = el<HTMLSelectElement>("wb-aircraft").value
  return aircraftList.find((a) => a.ident === ident) ?? null
}

function populateAircraftSelect() {
  const select = el<HTMLSelectElement>("wb-aircraft")
  select.textContent = ""
  for (const aircraft of aircraftList) {
    const option = document.createElement("option")
    option.value = aircraft.ident
    option.textContent = aircraft.name
    select.appendChild(option)
  }
}

function populateEnvelopeSelect(aircraft: AircraftInfo) {
  const select = el<HTMLSelectElement>("wb-envelope")
  select.textContent = ""
  for (const name of Object.keys(aircraft.envelopes)) {
    const option = document.createElement("option")
    option.value = name
    option.textContent = name
    select.appendChild(option)
  }
  const stored = restoredValue("wb", "wb-envelope")
  select.value = stored !== null && stored in aircraft.envelopes ? stored : aircraft.default_envelope
}

function buildStationInputs(aircraft: AircraftInfo) {
  const container = el("wb-stations")
  container.textContent = ""
  for (const station of aircraft.stations) {
    const id = `wb-st-${station.name}`
    const row = document.createElement("div")
    row.className = "station"

    const name = document.createElement("span")
    name.className = "name"
    name.textContent = `${station.name.replace(/_/g, " ")} · arm ${fmtQuantity(station.arm, 1)}`
    row.appendChild(name)

    const number = document.createElement("input")
    number.type = "number"
    number.id = id
    number.min = "0"
    number.step = "1"
    number.value = restoredValue("wb", id) ?? DEFAULT_WB_LOADS[station.name] ?? "0"

    if (station.max_load !== null) {
      const slider = document.createElement("input")
      slider.type = "range"
      slider.id = `${id}-range`
      slider.min = "0"
      slider.max = String(station.max_load.value)
      slider.step = "1"
      slider.value = number.value
      slider.addEventListener("input", () => {
        number.value = slider.value
      })
      number.addEventListener("input", () => {
        slider.value = number.value
      })
      row.appendChild(slider)
    }

    row.appendChild(number)
    const unit = document.createElement("span")
    unit.className = "name"
    unit.textContent = aircraft.weight_unit
    row.appendChild(unit)
    container.appendChild(row)
  }
}

// --------------------------------------------------------------- refresh

function refreshWb() {
  const aircraft = currentAircraft()
  if (aircraft === null) {
    return
  }
  const loads: Record<string, number> = {}
  for (const station of aircraft.stations) {
    const v = num(`wb-st-${station.name}`)
    if (v !== null && v !== 0) {
      loads[station.name] = v
    }
  }
  const inputs: Record<string, unknown> = {
    profile: aircraft.ident,
    loads,
    envelope: el<HTMLSelectElement>("wb-envelope").value,
  }
  const fuel = num("wb-fuel")
  const taxi = num("wb-taxi")
  const trip = num("wb-trip")
  if (fuel !== null) {
    inputs.fuel = fuel
  }
  if (taxi !== null) {
    inputs.taxi_fuel = taxi
  }
  if (trip !== null) {
    inputs.trip_fuel = trip
  }
  const token = gates.wb.begin()
  postCalc<WbResult>("wb", inputs)
    .then((env) => {
      if (!gates.wb.isCurrent(token)) {
        return
      }
      setOffline(false)
      if (env.ok) {
        const vm = buildWbView(env, aircraft)
        renderWbPlot(el("wb-plot") as unknown as SVGSVGElement, vm)
        renderWbTable(el<HTMLTableElement>("wb-table"), vm)
        renderWbFlags(el("wb-flags"), vm)
        showError("wb-error", null)
      } else {
        showError("wb-error", env.error.message)
      }
    })
    .catch(() => setOffline(true))
}

function refreshPerformance() {
  const base = num("perf-base")
  if (base === null) {
    return
  }
  const op = el<HTMLSelectElement>("perf-phase").value === "landing" ? "ldr" : "todr"
  const inputs: Record<string, unknown> = {
    base_distance: state.units === "imperial" ? { value: base, unit: "ft" } : base,
    surface: el<HTMLSelectElement>("perf-surface").value,
    mode: el<HTMLSelectElement>("perf-mode").value,
  }
  const optional: [string, number | null][] = [
    ["weight_ratio", num("perf-ratio")],
    ["elevation", num("perf-elevation")],
    ["oat", num("perf-oat")],
    ["headwind", num("perf-headwind")],
    ["tailwind", num("perf-tailwind")],
    ["v_lo", num("perf-vlo")],
    ["slope", num("perf-slope")],
  ]
  for (const [key, value] of optional) {
    if (value !== null) {
      inputs[key] = value
    }
  }
  const token = gates.performance.begin()
  postCalc<PerfResult>(op, inputs)
    .then((env) => {
      if (!gates.performance.isCurrent(token)) {
        return
      }
      setOffline(false)
      if (env.ok) {
        renderPerfChain(el("perf-chain"), buildPerfView(env))
        showError("perf-error", null)
      } else {
        showError("perf-error", env.error.message)
      }
    })
    .catch(() => setOffline(true))
}

function refreshWind() {
  const runway = num("wind-runway")
  const windFrom = num("wind-from")
  const windSpeed = num("wind-speed")
  if (runway === null || windFrom === null || windSpeed === null) {
    return
  }
  const course = num("wind-course")
  const tas = num("wind-tas")
  const token = gates.wind.begin()
  postCalc<WindComponentsResult>("wind-components", {
    direction: runway,
    wind_from: windFrom,
    wind_speed: windSpeed,
  })
    .then(async (comp) => {
      if (!comp.ok) {
        return { comp, clock: null, tri: null }
      }
      // the clock-code comparison reuses the service's own angle-off
      const clock = await postCalc<ClockCodeResult>("clock-code", {
        angle_off: comp.result.angle_off.value,
        wind_speed: windSpeed,
      })
      let tri: CalcEnvelope<WindTriangleResult> | null = null
      if (course !== null && tas !== null) {
        tri = await postCalc<WindTriangleResult>("wind-triangle", {
          course,
          tas,
          wind_from: windFrom,
          wind_speed: windSpeed,
        })
      }
      return { comp, clock, tri }
    })
    .then(({ comp, clock, tri }) => {
      if (!gates.wind.isCurrent(token)) {
        return
      }
      setOffline(false)
      if (!comp.ok) {
        showError("wind-error", comp.error.message)
        return
      }
      const vm = buildWindView(
        comp,
        clock !== null && clock.ok ? clock : null,
        tri !== null && tri.ok ? tri : null,
      )
      renderWindSketch(el("wind-sketch") as unknown as SVGSVGElement, vm)
      renderWindValues(vm)
      showError("wind-error", null)
    })
    .catch(() => setOffline(true))
}

function renderWindValues(vm: ReturnType<typeof buildWindView>) {
  const dl = el<HTMLDListElement>("wind-values")
  dl.textContent = ""
  const pairs: [string, string][] = [
    ["Runway", vm.runwayText],
    ["Wind", vm.windText],
    ["Angle off", vm.angleOffText],
    ["Headwind", vm.headwindText],
    ["Crosswind", vm.crosswindText],
  ]
  if (vm.clockFractionText !== null && vm.clockCrosswindText !== null) {
    pairs.push(["Clock code", vm.clockFractionText])
    pairs.push(["Clock-code crosswind", vm.clockCrosswindText])
  }
  if (vm.triangle !== null) {
    pairs.push(["Course heading", vm.triangle.headingText])
    pairs.push(["Wind correction", vm.triangle.wcaText])
    pairs.push(["Ground speed", vm.triangle.gsText])
  }
  for (const [label, value] of pairs) {
    const dt = document.createElement("dt")
    dt.textContent = label
    const dd = document.createElement("dd")
    dd.textContent = value
    dl.appendChild(dt)
    dl.appendChild(dd)
  }
}

function refreshHolding() {
  const course = num("hold-course")
  const heading = num("hold-heading")
  const tas = num("hold-tas")
  if (course === null || heading === null || tas === null) {
    return
  }
  const inputs: Record<string, unknown> = {
    inbound_course: course,
    heading,
    turns: el<HTMLSelectElement>("hold-turns").value,
    tas,
  }
  const windFrom = num("hold-wind-from")
  const windSpeed = num("hold-wind-speed")
  const leg = num("hold-leg")
  if (windFrom !== null) {
    inputs.wind_from = windFrom
  }
  if (windSpeed !== null) {
    inputs.wind_speed = windSpeed
  }
  if (leg !== null) {
    inputs.leg_time = leg
  }
  const token = gates.holding.begin()
  postCalc<HoldPlanResult>("hold-plan", inputs)
    .then((env) => {
      if (!gates.holding.isCurrent(token)) {
        return
      }
      setOffline(false)
      if (!env.ok) {
        showError("hold-error", env.error.message)
        return
      }
      const vm = buildHoldingView(env)
      el("hold-entry-label").textContent = vm.entryLabel
      renderHoldingSketch(el("hold-sketch") as unknown as SVGSVGElement, vm)
      renderHoldingValues(vm)
      renderHoldingSteps(el<HTMLOListElement>("hold-steps"), vm)
      showError("hold-error", null)
    })
    .catch(() => setOffline(true))
}

function renderHoldingValues(vm: ReturnType<typeof buildHoldingView>) {
  const dl = el<HTMLDListElement>("hold-values")
  dl.textContent = ""
  const pairs: [string, string][] = [
    ["Inbound course", vm.inboundCourseText],
    ["Inbound heading", vm.inboundHeadingText],
    ["Wind correction", vm.wcaText],
    ["Ground speed", vm.gsText],
    ["Outbound heading", vm.outboundHeadingText],
    ["Outbound time", vm.outboundTimeText],
    ["Still-air leg", vm.legTimeText],
  ]
  for (const [label, value] of pairs) {
    const dt = document.createElement("dt")
    dt.textContent = label
    const dd = document.createElement("dd")
    dd.textContent = value
    dl.appendChild(dt)
    dl.appendChild(dd)
  }
}

function refreshIcing() {
  const oat = num("icing-oat")
  const dew = num("icing-dew")
  const token = gates.icing.begin()
  const gridPromise: Promise<CalcEnvelope<RiskGridResult>> =
    riskGridEnv !== null
      ? Promise.resolve(riskGridEnv)
      : postCalc<RiskGridResult>("risk-grid", {})
  const pointPromise: Promise<CalcEnvelope<CarbIcingResult> | null> =
    oat !== null && dew !== null
      ? postCalc<CarbIcingResult>("carb-icing", { oat, dew_point: dew })
      : Promise.resolve(null)
  Promise.all([gridPromise, pointPromise])
    .then(([grid, point]) => {
      if (!gates.icing.isCurrent(token)) {
        return
      }
      setOffline(false)
      if (!grid.ok) {
        showError("icing-error", grid.error.message)
        return
      }
      riskGridEnv = grid
      const pointOk = point !== null && point.ok ? point : null
      const vm = buildIcingView(grid, pointOk)
      renderIcingChart(el("icing-cruise") as unknown as SVGSVGElement, vm, "cruise")
      renderIcingChart(el("icing-descent") as unknown as SVGSVGElement, vm, "descent")
      renderIcingAssessment(el("icing-assessment"), vm)
      renderIcingLegend(vm.categories)
      el("icing-disclaimer").textContent = vm.disclaimer
      showError("icing-error", point !== null && !point.ok ? point.error.message : null)
    })
    .catch(() => setOffline(true))
}

function renderIcingLegend(categories: string[]) {
  const legend = el("icing-legend")
  legend.textContent = ""
  for (const category of categories) {
    const item = document.createElement("span")
    const swatch = document.createElement("span")
    swatch.className = `swatch risk-${category}`
    item.appendChild(swatch)
    item.appendChild(document.createTextNode(category))
    legend.appendChild(item)
  }
}

function refreshAll() {
  refreshWb()
  refreshPerformance()
  refreshWind()
  refreshHolding()
  refreshIcing()
}

// ------------------------------------------------------------ unit toggle

async function onUnitsToggle(next: "metric" | "imperial") {
  if (next === state.units) {
    return
  }
  const from = state.units === "metric" ? "m" : "ft"
  const to = next === "metric" ? "m" : "ft"
  const base = num("perf-base")
  if (base !== null) {
    try {
      const env = await postCalc<ConvertResult>("convert", { value: base, from, to })
      if (env.ok) {
        el<HTMLInputElement>("perf-base").value = String(env.result.output.value)
        state.panels.performance["perf-base"] = el<HTMLInputElement>("perf-base").value
      }
    } catch {
      setOffline(true)
      const radio = document.querySelector<HTMLInputElement>(
        `input[name="perf-units"][value="${state.units}"]`,
      )
      if (radio) {
        radio.checked = true
      }
      return
    }
  }
  state.units = next
  el<HTMLSpanElement>("perf-base-unit").textContent = next === "metric" ? "m" : "ft"
  persist()
  refreshPerformance()
}

// ----------------------------------------------------------------- wiring

function debounce(fn: () => void, ms: number): () => void {
  let timer = 0
  return () => {
    clearTimeout(timer)
    timer = window.setTimeout(fn, ms)
  }
}

function wireEvents() {
  const hooks: [string, keyof typeof state.panels, () => void][] = [
    ["wb-form", "wb", refreshWb],
    ["perf-form", "performance", refreshPerformance],
    ["wind-form", "wind", refreshWind],
    ["hold-form", "holding", refreshHolding],
    ["icing-form", "icing", refreshIcing],
  ]
  for (const [formId, panel, refresh] of hooks) {
    const debounced = debounce(refresh, 150)
    const handler = (event: Event) => {
      rememberInput(panel, event.target)
      debounced()
    }
    el(formId).addEventListener("input", handler)
    el(formId).addEventListener("change", handler)
  }

  el<HTMLSelectElement>("wb-aircraft").addEventListener("change", () => {
    const aircraft = currentAircraft()
    if (aircraft !== null) {
      populateEnvelopeSelect(aircraft)
      buildStationInputs(aircraft)
    }
  })

  for (const radio of document.querySelectorAll<HTMLInputElement>('input[name="perf-units"]')) {
    radio.addEventListener("change", () => {
      if (radio.checked) {
        void onUnitsToggle(radio.value === "imperial" ? "imperial" : "metric")
      }
    })
  }
}

function pollHealth() {
  getHealth()
    .then(() => setOffline(false))
    .catch(() => setOffline(true))
}

async function boot() {
  try {
    const units = await postCalc<UnitsResult>("list-units", {})
    if (units.ok) {
      registerUnits(units.result.units)
    }
    const profiles = await postCalc<ProfilesResult>("profiles", {})
    if (profiles.ok) {
      aircraftList = profiles.result.aircraft
    }
    setOffline(false)
  } catch {
    setOffline(true)
  }
  populateAircraftSelect()
  restoreStaticInputs()
  const aircraft = currentAircraft()
  if (aircraft !== null) {
    populateEnvelopeSelect(aircraft)
    buildStationInputs(aircraft)
  }
  wireEvents()
  refreshAll()
  window.setInterval(pollHealth, 5000)
}

void boot()
