// Typed client for the local flightcalc JSON service.
//
// Every calculator answers POST /api/v1/calc/<name> with the same envelope
// shape.  The planner never does aeronautical arithmetic of its own: each
// number on screen is a field of one of these responses, run through the
// display formatters in format.ts.

export const API_ROOT = "/api/v1"

export interface Quantity {
  value: number
  unit: string
}

// Factor-chain inputs may carry a string instead of a number (e.g. the
// runway surface name), so they get the looser shape.
export interface Tag {
  value: number | string
  unit: string
}

export interface CalcError {
  code: string
  message: string
}

export interface CalcSuccess<T> {
  ok: true
  operation: string
  result: T
  warnings: string[]
  assumptions: string[]
}

export interface CalcFailure {
  ok: false
  operation: string
  error: CalcError
}

export type CalcEnvelope<T> = CalcSuccess<T> | CalcFailure

// ---------------------------------------------------------------- results

export interface ConvertResult {
  category: string
  input: Quantity
  output: Quantity
}

export interface UnitEntry {
  ident: string
  display: string
  category: string
  canonical: boolean
}

export interface UnitsResult {
  units: UnitEntry[]
}

export interface WindComponentsResult {
  reference_heading: Quantity
  wind_from: Quantity
  wind_speed: Quantity
  angle_off: Quantity
  headwind: Quantity
  crosswind: Quantity
  side: string
}

export interface WindTriangleResult {
  course: Quantity
  tas: Quantity
  wind_from: Quantity
  wind_speed: Quantity
  wind_correction: Quantity
  heading: Quantity
  ground_speed: Quantity
}

export interface ClockCodeResult {
  angle_off: Quantity
  wind_speed: Quantity
  fraction: Quantity
  crosswind: Quantity
}

export interface HoldPlanResult {
  entry: string
  turns: string
  inbound_course: Quantity
  inbound_heading: Quantity
  inbound_wind_correction: Quantity
  inbound_ground_speed: Quantity
  outbound_heading: Quantity
  outbound_time: Quantity
  leg_time: Quantity
  steps: string[]
}

export interface FactorEntry {
  name: string
  input: Tag
  factor: Quantity
}

export interface PerfResult {
  phase: string
  mode: string
  base_distance: Quantity
  entries: FactorEntry[]
  environmental_factor: Quantity
  environmental_distance: Quantity
  general_safety_factor: Quantity | null
  final_distance: Quantity
  total_factor: Quantity
}

export interface WbPhase {
  phase: string
  weight: Quantity
  moment: Quantity
  cg_arm: Quantity
  fuel: Quantity
  verdict: string
  margin: Quantity
}

export interface WbTrackSample {
  fraction: Quantity
  weight: Quantity
  cg_arm: Quantity
  verdict: string
}

export interface WbResult {
  profile: string
  envelope: string
  phases: WbPhase[]
  flags: string[]
  track: {
    first_violation: Quantity | null
    samples: WbTrackSample[]
  }
}

export interface CarbIcingResult {
  oat: Quantity
  dew_point: Quantity
  relative_humidity: Quantity
  spread: Quantity
  saturated: boolean
  cruise: string
  descent: string
  disclaimer: string
}

// Grid rows follow the dew-point axis, columns the OAT axis; cells above
// the saturation line (dew point > OAT) are null.
export interface RiskGridResult {
  oat_centres: Quantity[]
  dew_point_centres: Quantity[]
  cruise: (string | null)[][]
  descent: (string | null)[][]
  categories: string[]
  disclaimer: string
}

export interface StationInfo {
  name: string
  arm: Quantity
  max_load: Quantity | null
}

export interface AircraftInfo {
  ident: string
  name: string
  weight_unit: string
  arm_unit: string
  moment_unit: string
  empty_weight: Quantity
  empty_arm: Quantity
  stations: StationInfo[]
  fuel: {
    arm: Quantity
    usable_capacity: Quantity
    density: Quantity
  }
  limits: Record<string, Quantity>
  envelopes: Record<string, { arm: Quantity; weight: Quantity }[]>
  default_envelope: string
}

export interface ProfilesResult {
  bundles: { ident: string; kind: string; name: string }[]
  aircraft: AircraftInfo[]
}

export interface Health {
  ok: boolean
  service: string
  version: string
}

// ----------------------------------------------------------------- client

export async function postCalc<T>(
  op: string,
  inputs: Record<string, unknown>,
): Promise<CalcEnvelope<T>> {
  const resp = await fetch(`${API_ROOT}/calc/${op}`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(inputs),
  })
  return (await resp.json()) as CalcEnvelope<T>
}

export async function getHealth(): Promise<Health> {
  const resp = await fetch(`${API_ROOT}/health`)
  if (!resp.ok) {
    throw new Error(`health check failed: ${resp.status}`)
  }
  return (await resp.json()) as Health
}
