/** Strict CSV reading for the experiment output schemas. */

import * as fs from "node:fs";
import * as path from "node:path";

export interface Table {
  readonly file: string;
  readonly header: string[];
  readonly rows: string[][];
}

export function parseCsv(text: string, file = "<memory>"): Table {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) throw new Error(`empty CSV: ${file}`);
  const header = lines[0].split(",");
  const rows = lines.slice(1).map((line) => line.split(","));
  for (const row of rows) {
    if (row.length !== header.length) {
      throw new Error(`ragged row in ${file}: expected ${header.length} cells, got ${row.length}`);
    }
  }
  return { file, header, rows };
}

export function readCsv(file: string): Table {
  return parseCsv(fs.readFileSync(file, "utf-8"), file);
}

/** Column accessor; raises naming the column when absent. */
export function column(table: Table, name: string): number[] {
  const idx = table.header.indexOf(name);
  if (idx < 0) {
    throw new Error(`missing column "${name}" in ${table.file}`);
  }
  return table.rows.map((row) => Number(row[idx]));
}

export function hasColumn(table: Table, name: string): boolean {
  return table.header.includes(name);
}

export interface Sidecar {
  schema_version?: number;
  kind?: string;
  params?: Record<string, unknown>;
  [key: string]: unknown;
}

/** Sidecar JSON next to a CSV; absent sidecars are tolerated (hand-written
 * inputs), but a sidecar with an unexpected schema version is an error. */
export function checkSidecar(csvFile: string): Sidecar | null {
  const sidecarPath = csvFile.replace(/\.csv$/, ".json");
  if (!fs.existsSync(sidecarPath)) return null;
  const sidecar = JSON.parse(fs.readFileSync(sidecarPath, "utf-8")) as Sidecar;
  if (sidecar.schema_version !== undefined && sidecar.schema_version !== 1) {
    throw new Error(`unsupported schema_version ${sidecar.schema_version} in ${sidecarPath}`);
  }
  return sidecar;
}

export function listCsvFiles(dir: string, prefix: string): string[] {
  const out: string[] = [];
  const walk = (d: string) => {
    for (const entry of fs.readdirSync(d, { withFileTypes: true }).sort((a, b) =>
      a.name.localeCompare(b.name),
    )) {
      const full = path.join(d, entry.name);
      if (entry.isDirectory()) walk(full);
      else if (entry.name.startsWith(prefix) && entry.name.endsWith(".csv")) out.push(full);
    }
  };
  walk(dir);
  return out;
}
