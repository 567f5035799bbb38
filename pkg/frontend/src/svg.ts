// Small helpers for building SVG scenes.
//
// All panel graphics are plain SVG so they stay sharp at any size.  The
// scales here map service values onto pixel coordinates; they are drawing
// geometry only and never produce a number shown to the user.

export type SvgAttrs = Record<string, string | number>

export function setSvgAttributes(node: SVGElement, attrs: SvgAttrs) {
  for (const [name, value] of Object.entries(attrs)) {
    node.setAttribute(name, String(value))
  }
}

export function createSvgNode<T extends keyof SVGElementTagNameMap>(
  parent: SVGElement | null,
  tag: T,
  attrs: SvgAttrs = {},
): SVGElementTagNameMap[T] {
  const node = document.createElementNS("http://www.w3.org/2000/svg", tag)
  setSvgAttributes(node, attrs)
  if (parent) {
    parent.appendChild(node)
  }
  return node
}

export function svgText(parent: SVGElement, text: string, attrs: SvgAttrs = {}): SVGTextElement {
  const node = createSvgNode(parent, "text", attrs)
  node.textContent = text
  return node
}

export function clearChildren(node: Element) {
  while (node.firstChild) {
    node.removeChild(node.firstChild)
  }
}

// Linear map from a data interval onto a pixel interval.
export function linearScale(d0: number, d1: number, r0: number, r1: number) {
  const span = d1 - d0
  const k = span === 0 ? 0 : (r1 - r0) / span
  return (v: number) => r0 + (v - d0) * k
}

export function polylinePoints(points: [number, number][]): string {
  return points.map(([x, y]) => `${x.toFixed(2)},${y.toFixed(2)}`).join(" ")
}
