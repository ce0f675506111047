import { deflateSync } from "zlib";

import { Series } from "./chart";
import { Layout } from "./layout";

/** Minimal RGBA canvas with just enough drawing for line charts. */
export class Raster {
  readonly width: number;
  readonly height: number;
  readonly data: Uint8Array;

  constructor(width: number, height: number) {
    this.width = width;
    this.height = height;
    this.data = new Uint8Array(width * height * 4).fill(255);
  }

  set(x: number, y: number, rgb: [number, number, number]): void {
    const xi = Math.round(x);
    const yi = Math.round(y);
    if (xi < 0 || yi < 0 || xi >= this.width || yi >= this.height) {
      return;
    }
    const at = (yi * this.width + xi) * 4;
    this.data[at] = rgb[0];
    this.data[at + 1] = rgb[1];
    this.data[at + 2] = rgb[2];
    this.data[at + 3] = 255;
  }

  /** Stamp a small square so strokes read as ~2px wide. */
  dot(x: number, y: number, rgb: [number, number, number]): void {
    this.set(x, y, rgb);
    this.set(x + 1, y, rgb);
    this.set(x, y + 1, rgb);
    this.set(x + 1, y + 1, rgb);
  }

  line(x0: number, y0: number, x1: number, y1: number, rgb: [number, number, number]): void {
    const steps = Math.max(1, Math.ceil(Math.max(Math.abs(x1 - x0), Math.abs(y1 - y0))));
    for (let i = 0; i <= steps; i++) {
      const t = i / steps;
      this.dot(x0 + t * (x1 - x0), y0 + t * (y1 - y0), rgb);
    }
  }
}

function parseColor(hex: string): [number, number, number] {
  return [
    parseInt(hex.slice(1, 3), 16),
    parseInt(hex.slice(3, 5), 16),
    parseInt(hex.slice(5, 7), 16),
  ];
}

const CRC_TABLE = (() => {
  const table = new Uint32Array(256);
  for (let n = 0; n < 256; n++) {
    let c = n;
    for (let k = 0; k < 8; k++) {
      c = c & 1 ? 0xedb88320 ^ (c >>> 1) : c >>> 1;
    }
    table[n] = c >>> 0;
  }
  return table;
})();

function crc32(data: Uint8Array): number {
  let crc = 0xffffffff;
  for (const byte of data) {
    crc = CRC_TABLE[(crc ^ byte) & 0xff] ^ (crc >>> 8);
  }
  return (crc ^ 0xffffffff) >>> 0;
}

function chunk(type: string, body: Uint8Array): Buffer {
  const head = Buffer.alloc(8);
  head.writeUInt32BE(body.length, 0);
  head.write(type, 4, "ascii");
  const crcInput = Buffer.concat([head.subarray(4), body]);
  const tail = Buffer.alloc(4);
  tail.writeUInt32BE(crc32(crcInput), 0);
  return Buffer.concat([head, body, tail]);
}

/** Encode the raster as an 8-bit RGBA PNG (filter 0 scanlines, zlib). */
export function encodePng(raster: Raster): Buffer {
  const { width, height, data } = raster;
  const ihdr = Buffer.alloc(13);
  ihdr.writeUInt32BE(width, 0);
  ihdr.writeUInt32BE(height, 4);
  ihdr[8] = 8; // bit depth
  ihdr[9] = 6; // RGBA
  const scanlines = Buffer.alloc(height * (1 + width * 4));
  for (let y = 0; y < height; y++) {
    const rowStart = y * (1 + width * 4);
    scanlines[rowStart] = 0;
    scanlines.set(data.subarray(y * width * 4, (y + 1) * width * 4), rowStart + 1);
  }
  return Buffer.concat([
    Buffer.from([0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a]),
    chunk("IHDR", ihdr),
    chunk("IDAT", deflateSync(scanlines, { level: 9 })),
    chunk("IEND", new Uint8Array(0)),
  ]);
}

const AXIS_RGB: [number, number, number] = [51, 51, 51];
const GRID_RGB: [number, number, number] = [221, 221, 221];

/** Rasterize the chart geometry (frame, ticks, series) without text. */
export function renderPng(series: Series[], layout: Layout): Buffer {
  const raster = new Raster(layout.width, layout.height);
  const { width, height, left, right, top, bottom } = layout;

  for (const tick of layout.yTicks) {
    raster.line(left, tick.position, width - right, tick.position, GRID_RGB);
  }
  for (const tick of layout.xTicks) {
    raster.line(tick.position, height - bottom, tick.position, height - bottom + 5, AXIS_RGB);
  }
  raster.line(left, top, width - right, top, AXIS_RGB);
  raster.line(left, height - bottom, width - right, height - bottom, AXIS_RGB);
  raster.line(left, top, left, height - bottom, AXIS_RGB);
  raster.line(width - right, top, width - right, height - bottom, AXIS_RGB);

  for (const s of series) {
    const rgb = parseColor(s.color);
    for (let i = 1; i < s.points.length; i++) {
      const [xa, ya] = s.points[i - 1];
      const [xb, yb] = s.points[i];
      raster.line(layout.toX(xa), layout.toY(ya), layout.toX(xb), layout.toY(yb), rgb);
    }
  }
  return encodePng(raster);
}
