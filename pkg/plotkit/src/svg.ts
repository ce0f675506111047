import { Series } from "./chart";
import { Layout } from "./layout";

const AXIS_COLOR = "#333333";
const GRID_COLOR = "#dddddd";

function fmt(value: number): string {
  return value.toFixed(2);
}

function tickLabel(value: number): string {
  const text = value.toPrecision(3);
  return String(Number(text));
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export interface SvgOptions {
  title: string;
  xLabel: string;
  yLabel: string;
  legend: boolean;
}

/** Assemble a complete standalone SVG line chart as a string. */
export function renderSvg(series: Series[], layout: Layout, opts: SvgOptions): string {
  const { width, height, left, right, top, bottom } = layout;
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  parts.push(
    `<text x="${fmt(width / 2)}" y="22" text-anchor="middle" font-size="15">` +
      `${escapeXml(opts.title)}</text>`,
  );

  for (const tick of layout.yTicks) {
    parts.push(
      `<line x1="${fmt(left)}" y1="${fmt(tick.position)}" x2="${fmt(width - right)}" ` +
        `y2="${fmt(tick.position)}" stroke="${GRID_COLOR}" stroke-width="1"/>`,
    );
    parts.push(
      `<text x="${fmt(left - 8)}" y="${fmt(tick.position + 4)}" text-anchor="end" ` +
        `font-size="11" fill="${AXIS_COLOR}">${tickLabel(tick.value)}</text>`,
    );
  }
  for (const tick of layout.xTicks) {
    parts.push(
      `<line x1="${fmt(tick.position)}" y1="${fmt(height - bottom)}" x2="${fmt(tick.position)}" ` +
        `y2="${fmt(height - bottom + 5)}" stroke="${AXIS_COLOR}" stroke-width="1"/>`,
    );
    parts.push(
      `<text x="${fmt(tick.position)}" y="${fmt(height - bottom + 18)}" text-anchor="middle" ` +
        `font-size="11" fill="${AXIS_COLOR}">${tickLabel(tick.value)}</text>`,
    );
  }

  // plot frame
  parts.push(
    `<rect x="${fmt(left)}" y="${fmt(top)}" width="${fmt(width - left - right)}" ` +
      `height="${fmt(height - top - bottom)}" fill="none" stroke="${AXIS_COLOR}" stroke-width="1"/>`,
  );

  for (const s of series) {
    const coords = s.points
      .map(([x, y]) => `${fmt(layout.toX(x))},${fmt(layout.toY(y))}`)
      .join(" ");
    parts.push(
      `<polyline data-series="${escapeXml(s.key)}" points="${coords}" fill="none" ` +
        `stroke="${s.color}" stroke-width="1.6"/>`,
    );
  }

  if (opts.legend && series.length > 1) {
    const x0 = width - right - 150;
    let y0 = top + 14;
    for (const s of series) {
      parts.push(
        `<line x1="${fmt(x0)}" y1="${fmt(y0 - 4)}" x2="${fmt(x0 + 24)}" y2="${fmt(y0 - 4)}" ` +
          `stroke="${s.color}" stroke-width="2"/>`,
      );
      parts.push(
        `<text x="${fmt(x0 + 30)}" y="${fmt(y0)}" font-size="12" fill="${AXIS_COLOR}">` +
          `${escapeXml(s.label)}</text>`,
      );
      y0 += 17;
    }
  }

  parts.push(
    `<text x="${fmt((left + width - right) / 2)}" y="${fmt(height - 12)}" text-anchor="middle" ` +
      `font-size="13" fill="${AXIS_COLOR}">${escapeXml(opts.xLabel)}</text>`,
  );
  parts.push(
    `<text x="18" y="${fmt((top + height - bottom) / 2)}" text-anchor="middle" font-size="13" ` +
      `fill="${AXIS_COLOR}" transform="rotate(-90 18 ${fmt((top + height - bottom) / 2)})">` +
      `${escapeXml(opts.yLabel)}</text>`,
  );
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
