import { Series } from "./chart";

export interface Tick {
  value: number;
  position: number;
}

export interface Layout {
  width: number;
  height: number;
  left: number;
  right: number;
  top: number;
  bottom: number;
  xTicks: Tick[];
  yTicks: Tick[];
  toX(value: number): number;
  toY(value: number): number;
}

/** Largest "nice" step (1/2/5 times a power of ten) not above the raw step. */
function niceStep(rawStep: number): number {
  const power = Math.pow(10, Math.floor(Math.log10(rawStep)));
  for (const m of [5, 2, 1]) {
    if (m * power <= rawStep) {
      return m * power;
    }
  }
  return power;
}

function ticksFor(min: number, max: number, toPixel: (v: number) => number): Tick[] {
  const step = niceStep((max - min) / 5);
  const ticks: Tick[] = [];
  for (let v = Math.ceil(min / step) * step; v <= max + 1e-12; v += step) {
    const value = Math.abs(v) < step * 1e-9 ? 0 : v;
    ticks.push({ value, position: toPixel(value) });
  }
  return ticks;
}

export function computeLayout(series: Series[], width = 800, height = 500): Layout {
  const left = 70;
  const right = 24;
  const top = 40;
  const bottom = 52;

  let xMin = Infinity;
  let xMax = -Infinity;
  let yMin = 0;
  let yMax = -Infinity;
  for (const s of series) {
    for (const [x, y] of s.points) {
      xMin = Math.min(xMin, x);
      xMax = Math.max(xMax, x);
      yMin = Math.min(yMin, y);
      yMax = Math.max(yMax, y);
    }
  }
  if (xMax === xMin) {
    xMax = xMin + 1;
  }
  if (yMax <= yMin) {
    yMax = yMin + 1;
  }
  const pad = 0.05 * (yMax - yMin);
  yMax += pad;

  const toX = (v: number) => left + ((v - xMin) / (xMax - xMin)) * (width - left - right);
  const toY = (v: number) => height - bottom - ((v - yMin) / (yMax - yMin)) * (height - top - bottom);

  return {
    width,
    height,
    left,
    right,
    top,
    bottom,
    xTicks: ticksFor(xMin, xMax, toX),
    yTicks: ticksFor(yMin, yMax, toY),
    toX,
    toY,
  };
}
