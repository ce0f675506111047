import { mkdirSync, writeFileSync } from "fs";
import { dirname, join } from "path";

import { extractSeries, FigureSpec, Series } from "./chart";
import { computeLayout } from "./layout";
import { renderPng } from "./png";
import { renderSvg } from "./svg";

export type ImageFormat = "svg" | "png";

export interface SeriesSummary {
  key: string;
  label: string;
  color: string;
  final: number;
  min: number;
  max: number;
  points: Array<[number, number]>;
}

/**
 * Render one figure to its output image and write a sidecar JSON next
 * to it carrying the plotted data (per-series points and final values),
 * so downstream checks never have to scrape pixels.
 */
export function render(spec: FigureSpec, format: ImageFormat = "svg"): string {
  const series = extractSeries(spec);
  const layout = computeLayout(series);

  mkdirSync(dirname(spec.outputImage), { recursive: true });
  if (format === "svg") {
    const svg = renderSvg(series, layout, {
      title: spec.title,
      xLabel: spec.xLabel,
      yLabel: spec.yLabel,
      legend: spec.groupColumn !== "none",
    });
    writeFileSync(spec.outputImage, svg, "utf-8");
  } else {
    writeFileSync(spec.outputImage, renderPng(series, layout));
  }

  const sidecar = spec.outputImage.replace(/\.(svg|png)$/, "") + ".json";
  const summary = {
    input: spec.inputCsv,
    yColumn: spec.yColumn,
    groupColumn: spec.groupColumn,
    series: series.map(
      (s: Series): SeriesSummary => ({
        key: s.key,
        label: s.label,
        color: s.color,
        final: s.points[s.points.length - 1][1],
        min: Math.min(...s.points.map(([, y]) => y)),
        max: Math.max(...s.points.map(([, y]) => y)),
        points: s.points,
      }),
    ),
  };
  writeFileSync(sidecar, JSON.stringify(summary, null, 1) + "\n", "utf-8");
  return spec.outputImage;
}

/** The four standard figure datasets produced by `ptqubit figures`. */
export function figureSpecs(inputDir: string, outputDir: string, format: ImageFormat): FigureSpec[] {
  const ext = format === "svg" ? "svg" : "png";
  const xLabel = "γ₀ t";
  return [
    {
      inputCsv: join(inputDir, "fig1.csv"),
      yColumn: "c_l1",
      groupColumn: "omega",
      title: "l1 coherence, coupling sweep from an incoherent start",
      xLabel,
      yLabel: "C_l1",
      outputImage: join(outputDir, `fig1.${ext}`),
    },
    {
      inputCsv: join(inputDir, "fig2.csv"),
      yColumn: "c_l1",
      groupColumn: "drive",
      title: "l1 coherence, three drive kinds",
      xLabel,
      yLabel: "C_l1",
      outputImage: join(outputDir, `fig2.${ext}`),
    },
    {
      inputCsv: join(inputDir, "fig3.csv"),
      yColumn: "c_re",
      groupColumn: "omega",
      title: "relative entropy of coherence, coupling sweep",
      xLabel,
      yLabel: "C_re (bits)",
      outputImage: join(outputDir, `fig3.${ext}`),
    },
    {
      inputCsv: join(inputDir, "fig4.csv"),
      yColumn: "c_re",
      groupColumn: "drive",
      title: "relative entropy of coherence, three drive kinds",
      xLabel,
      yLabel: "C_re (bits)",
      outputImage: join(outputDir, `fig4.${ext}`),
    },
  ];
}

/** Render fig1..fig4 from inputDir into outputDir; returns image paths. */
export function renderAll(
  inputDir: string,
  outputDir: string,
  format: ImageFormat = "svg",
): string[] {
  return figureSpecs(inputDir, outputDir, format).map((spec) => render(spec, format));
}
