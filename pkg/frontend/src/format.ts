// Display formatting for tagged quantities.
//
// This is the only "maths" the planner performs: rounding service values
// for display and attaching unit labels.  The labels themselves come from
// the service's unit registry so the two sides cannot drift apart.

import type { Quantity, Tag, UnitEntry } from "./api"

const unitLabels: Record<string, string> = {}

export function registerUnits(units: UnitEntry[]) {
  for (const u of units) {
    unitLabels[u.ident] = u.display
  }
}

export function unitLabel(ident: string): string {
  const label = unitLabels[ident]
  return label === undefined ? ident : label
}

export function fmtNumber(value: number, digits: number): string {
  let text = value.toFixed(digits)
  if (text === "-" + (0).toFixed(digits)) {
    text = text.slice(1) // avoid "-0.0"
  }
  return text
}

export function fmtQuantity(q: Quantity, digits = 1): string {
  const label = unitLabel(q.unit)
  const num = fmtNumber(q.value, digits)
  return label === "" ? num : `${num} ${label}`
}

// Tags from factor chains may hold a string (e.g. a surface name).
export function fmtTag(t: Tag, digits = 1): string {
  if (typeof t.value === "string") {
    return t.value.replace(/_/g, " ")
  }
  return fmtQuantity({ value: t.value, unit: t.unit }, digits)
}

// Headings and bearings render as the usual three digits.
export function fmtHeading(q: Quantity): string {
  return q.value.toFixed(0).padStart(3, "0") + "°"
}

// Signed angles such as wind-correction keep an explicit sign.
export function fmtSigned(q: Quantity, digits = 1): string {
  const text = fmtQuantity(q, digits)
  return q.value >= 0 ? `+${text}` : text
}

export function fmtFactor(q: Quantity): string {
  return `× ${q.value.toFixed(3)}`
}
