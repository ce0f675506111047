export interface CsvTable {
  header: string[];
  rows: string[][];
}

/**
 * Parse a simple comma-separated table: first non-comment line is the
 * header, '#'-prefixed lines (the producer's summary blocks) and blank
 * lines are skipped.  Values are never quoted in these files.
 */
export function parseCsv(text: string): CsvTable {
  const lines = text
    .split("\n")
    .map((line) => line.trimEnd())
    .filter((line) => line.length > 0 && !line.startsWith("#"));
  if (lines.length === 0) {
    return { header: [], rows: [] };
  }
  const header = lines[0].split(",");
  const rows = lines.slice(1).map((line) => line.split(","));
  return { header, rows };
}
