#!/usr/bin/env node
import { ImageFormat, renderAll } from "./render";

const USAGE = "usage: plotkit <input_dir> <output_dir> [--format=svg|png]";

export function main(argv: string[]): number {
  const positional: string[] = [];
  let format: ImageFormat = "svg";
  for (const arg of argv) {
    if (arg.startsWith("--format=")) {
      const value = arg.slice("--format=".length);
      if (value !== "svg" && value !== "png") {
        console.error(`unknown format "${value}"; expected svg or png`);
        return 1;
      }
      format = value;
    } else if (arg === "--help" || arg === "-h") {
      console.log(USAGE);
      return 0;
    } else if (arg.startsWith("-")) {
      console.error(`unknown option "${arg}"\n${USAGE}`);
      return 1;
    } else {
      positional.push(arg);
    }
  }
  if (positional.length !== 2) {
    console.error(USAGE);
    return 1;
  }
  try {
    for (const path of renderAll(positional[0], positional[1], format)) {
      console.log(path);
    }
  } catch (err) {
    console.error(err instanceof Error ? `${err.name}: ${err.message}` : String(err));
    return 1;
  }
  return 0;
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
