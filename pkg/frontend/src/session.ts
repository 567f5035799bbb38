// Planner session state: per-panel form inputs plus the display-unit
// choice.  The whole thing serialises to JSON so a session can be stored
// and restored; localStorage is used when available but never required.

export type PanelId = "wb" | "performance" | "wind" | "holding" | "icing"

export const PANEL_IDS: PanelId[] = ["wb", "performance", "wind", "holding", "icing"]

export interface PlannerState {
  version: 1
  units: "metric" | "imperial"
  panels: Record<PanelId, Record<string, string>>
}

export function defaultState(): PlannerState {
  return {
    version: 1,
    units: "metric",
    panels: { wb: {}, performance: {}, wind: {}, holding: {}, icing: {} },
  }
}

export function serialiseSession(state: PlannerState): string {
  return JSON.stringify(state)
}

export function restoreSession(text: string): PlannerState | null {
  let raw: unknown
  try {
    raw = JSON.parse(text)
  } catch {
    return null
  }
  if (typeof raw !== "object" || raw === null) {
    return null
  }
  const obj = raw as Partial<PlannerState>
  if (obj.version !== 1 || typeof obj.panels !== "object" || obj.panels === null) {
    return null
  }
  const state = defaultState()
  if (obj.units === "imperial") {
    state.units = "imperial"
  }
  for (const id of PANEL_IDS) {
    const panel = (obj.panels as Record<string, unknown>)[id]
    if (typeof panel !== "object" || panel === null) {
      continue
    }
    for (const [key, value] of Object.entries(panel)) {
      if (typeof value === "string") {
        state.panels[id][key] = value
      }
    }
  }
  return state
}

const STORAGE_KEY = "flightcalc-planner"

export function saveToStorage(state: PlannerState) {
  try {
    localStorage.setItem(STORAGE_KEY, serialiseSession(state))
  } catch {
    // storage may be unavailable (private mode etc.); the session just
    // won't persist
  }
}

export function loadFromStorage(): PlannerState | null {
  try {
    const text = localStorage.getItem(STORAGE_KEY)
    return text === null ? null : restoreSession(text)
  } catch {
    return null
  }
}

// One gate per panel keeps a single request in flight logically: every
// refresh takes a new token and only the latest token's response is
// applied, so a slow older reply can never overwrite a newer one.
export class RequestGate {
  private latest = 0

  begin(): number {
    this.latest += 1
    return this.latest
  }

  isCurrent(token: number): boolean {
    return token === this.latest
  }
}
