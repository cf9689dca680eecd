#!/usr/bin/env node
/**
 * Figure renderer CLI.
 *
 *   render clustering-grid --in <dir> --out <file.png> [--dpi 200]
 *   render avg-panels      --in <dir> --out <dir>      [--dpi 200]
 *
 * Exit 0 on success (including omitted-panel warnings), 1 on errors such as
 * missing columns.
 */

import * as fs from "node:fs";
import * as path from "node:path";

import { renderAvgPanels } from "./avgPanels.js";
import { renderClusteringGrid } from "./clusteringGrid.js";
import { listCsvFiles, readCsv } from "./csv.js";
import { encodePng } from "./png.js";

interface Args {
  command: string;
  inDir: string;
  out: string;
  dpi: number;
}

function parseArgs(argv: string[]): Args {
  const [command, ...rest] = argv;
  if (!command || !["clustering-grid", "avg-panels"].includes(command)) {
    throw new Error("usage: render <clustering-grid|avg-panels> --in <dir> --out <path> [--dpi N]");
  }
  let inDir = "";
  let out = "";
  let dpi = 200;
  for (let i = 0; i < rest.length; i += 2) {
    const flag = rest[i];
    const value = rest[i + 1];
    if (value === undefined) throw new Error(`flag ${flag} needs a value`);
    if (flag === "--in") inDir = value;
    else if (flag === "--out") out = value;
    else if (flag === "--dpi") dpi = Number(value);
    else throw new Error(`unknown flag ${flag}`);
  }
  if (!inDir || !out) throw new Error("--in and --out are required");
  return { command, inDir, out, dpi };
}

export function runClusteringGrid(inDir: string, outFile: string, dpi: number): void {
  const { surface, cells, columns, rows } = renderClusteringGrid(inDir, dpi);
  fs.mkdirSync(path.dirname(path.resolve(outFile)), { recursive: true });
  fs.writeFileSync(outFile, encodePng(surface.pixels, surface.width, surface.height, dpi));
  const warned = cells.filter((c) => c.warnings.length > 0);
  for (const cell of warned) {
    console.warn(`warning: panel n=${cell.n} alpha=${cell.alpha}: ${cell.warnings.join("; ")}`);
  }
  console.log(`wrote ${outFile}: ${rows}x${columns} grid, ${cells.length} panel(s)`);
}

export function runAvgPanels(inDir: string, outDir: string, dpi: number): void {
  const summaries = listCsvFiles(inDir, "summary_");
  if (summaries.length === 0) throw new Error(`no summary_*.csv under ${inDir}`);
  fs.mkdirSync(outDir, { recursive: true });
  for (const summaryFile of summaries) {
    const stem = path.basename(summaryFile, ".csv");
    const table = readCsv(summaryFile);
    for (const { name, result } of renderAvgPanels(table)) {
      for (const warning of result.warnings) console.warn(`warning: ${stem}/${name}: ${warning}`);
      if (result.skipped) {
        console.warn(`warning: ${stem}/${name}: panel omitted`);
        continue;
      }
      const outFile = path.join(outDir, `${stem}_${name}.png`);
      fs.writeFileSync(
        outFile,
        encodePng(result.surface.pixels, result.surface.width, result.surface.height, dpi),
      );
      console.log(`wrote ${outFile}`);
    }
  }
}

export function main(argv: string[]): number {
  try {
    const args = parseArgs(argv);
    if (args.command === "clustering-grid") {
      runClusteringGrid(args.inDir, args.out, args.dpi);
    } else {
      runAvgPanels(args.inDir, args.out, args.dpi);
    }
    return 0;
  } catch (error) {
    console.error(`error: ${error instanceof Error ? error.message : error}`);
    return 1;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  (import.meta.url === `file://${process.argv[1]}` ||
    import.meta.url === `file://${fs.realpathSync(process.argv[1])}`);
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
