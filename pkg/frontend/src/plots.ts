/**
 * SVG plot primitives: stem plots for coefficient/magnitude vectors and
 * line traces for time-domain segments.
 *
 * Coordinate mapping here is pure layout. The payload numbers ride along
 * unchanged as data-value / data-values bindings on each mark, and the
 * binding tests read those back to prove nothing was recomputed.
 */

const SVG_NS = "http://www.w3.org/2000/svg";

// fixed color convention: blue for the standard transform, magenta for the
// optimized one
export const BASELINE_COLOR = "#2255cc";
export const OPTIMIZED_COLOR = "#cc22bb";
export const SPECTRUM_COLOR = "#556066";

const PAD = 10;

export interface StemSeries {
  cls: string;
  color: string;
  values: number[];
}

export interface TraceSeries {
  cls: string;
  color: string;
  values: number[];
  fill?: boolean;
}

function make(name: string, attrs: Record<string, string | number>): SVGElement {
  const node = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, String(value));
  }
  return node;
}

function plotSize(svg: SVGSVGElement): { width: number; height: number } {
  const box = (svg.getAttribute("viewBox") ?? "0 0 360 120").split(/\s+/).map(Number);
  return { width: box[2] || 360, height: box[3] || 120 };
}

// shared vertical extent across all series so overlaid marks are comparable
function valueRange(series: number[][], includeZero: boolean): { lo: number; hi: number } {
  let lo = includeZero ? 0 : Infinity;
  let hi = includeZero ? 0 : -Infinity;
  for (const values of series) {
    for (const v of values) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }
  if (!Number.isFinite(lo) || !Number.isFinite(hi)) {
    lo = 0;
    hi = 1;
  }
  if (hi === lo) {
    hi = lo + 1;
  }
  return { lo, hi };
}

export function clearPlot(svg: SVGSVGElement): void {
  while (svg.firstChild) {
    svg.removeChild(svg.firstChild);
  }
}

/** Centered message instead of marks (missing trace, empty selection). */
export function renderPlaceholder(svg: SVGSVGElement, message: string): void {
  clearPlot(svg);
  const { width, height } = plotSize(svg);
  const text = make("text", {
    class: "placeholder",
    x: width / 2,
    y: height / 2,
    "text-anchor": "middle",
    fill: "#777",
    "font-size": 12,
  });
  text.textContent = message;
  svg.appendChild(text);
}

/**
 * Draws one stem (vertical line from the zero axis plus a head marker) per
 * bin for each series, all sharing the x layout and y extent. Later series
 * paint over earlier ones, so identical vectors coincide exactly.
 */
export function renderStems(svg: SVGSVGElement, series: StemSeries[]): void {
  clearPlot(svg);
  const { width, height } = plotSize(svg);
  const nBins = Math.max(...series.map((s) => s.values.length), 1);
  const { lo, hi } = valueRange(series.map((s) => s.values), true);
  const yOf = (v: number) => height - PAD - ((v - lo) / (hi - lo)) * (height - 2 * PAD);
  const xOf = (bin: number) => PAD + ((bin + 0.5) / nBins) * (width - 2 * PAD);
  const y0 = yOf(0);

  svg.appendChild(make("line", {
    class: "axis",
    x1: PAD,
    y1: y0,
    x2: width - PAD,
    y2: y0,
    stroke: "#bbb",
    "stroke-width": 1,
  }));

  for (const s of series) {
    for (let bin = 0; bin < s.values.length; bin++) {
      const v = s.values[bin];
      const x = xOf(bin);
      const tip = yOf(v);
      const stem = make("line", {
        class: s.cls,
        x1: x,
        y1: y0,
        x2: x,
        y2: tip,
        stroke: s.color,
        "stroke-width": 1.5,
        "data-bin": bin,
      });
      stem.setAttribute("data-value", String(v));
      svg.appendChild(stem);
      svg.appendChild(make("circle", {
        class: `${s.cls}-head`,
        cx: x,
        cy: tip,
        r: 2.2,
        fill: s.color,
      }));
    }
  }
}

/**
 * Draws each series as a polyline over sample index; fill adds a closed
 * polygon down to the bottom edge behind the stroke.
 */
export function renderTraces(svg: SVGSVGElement, traces: TraceSeries[]): void {
  clearPlot(svg);
  const { width, height } = plotSize(svg);
  const nPoints = Math.max(...traces.map((t) => t.values.length), 2);
  const { lo, hi } = valueRange(traces.map((t) => t.values), false);
  const yOf = (v: number) => height - PAD - ((v - lo) / (hi - lo)) * (height - 2 * PAD);
  const xOf = (i: number) => PAD + (i / (nPoints - 1)) * (width - 2 * PAD);

  for (const t of traces) {
    const points = t.values.map((v, i) => `${xOf(i)},${yOf(v)}`).join(" ");
    if (t.fill) {
      const lastX = xOf(t.values.length - 1);
      const polygon = make("polygon", {
        class: `${t.cls}-fill`,
        points: `${PAD},${height - PAD} ${points} ${lastX},${height - PAD}`,
        fill: t.color,
        "fill-opacity": 0.18,
        stroke: "none",
      });
      svg.appendChild(polygon);
    }
    const line = make("polyline", {
      class: t.cls,
      points,
      fill: "none",
      stroke: t.color,
      "stroke-width": 1.4,
    });
    line.setAttribute("data-values", JSON.stringify(t.values));
    svg.appendChild(line);
  }
}
