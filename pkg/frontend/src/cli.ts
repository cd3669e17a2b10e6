#!/usr/bin/env node
import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { ReportColumn } from "./csv.js";
import { FigureKind } from "./figure.js";
import { renderFile } from "./render.js";

export async function main(argv: string[]): Promise<number> {
  let failed = false;
  await yargs(argv)
    .command(
      "plot",
      "render a semilog figure from a multishep CSV report",
      (y) =>
        y
          .option("spec", {
            choices: ["pointwise", "mean-vs-d", "cond-vs-d"] as const,
            demandOption: true,
            describe: "figure kind",
          })
          .option("csv", { type: "string", demandOption: true })
          .option("out", { type: "string", demandOption: true })
          .option("series", {
            type: "string",
            describe: "column whose values become separate curves",
          }),
      (args) => {
        try {
          renderFile(args.csv, args.out, {
            kind: args.spec as FigureKind,
            series: args.series as ReportColumn | undefined,
          });
        } catch (err) {
          process.stderr.write(`error: ${(err as Error).message}\n`);
          failed = true;
        }
      },
    )
    .demandCommand(1)
    .strict()
    .fail((msg) => {
      process.stderr.write(`error: ${msg}\n`);
      failed = true;
    })
    .parseAsync();
  return failed ? 1 : 0;
}

const invokedDirectly = process.argv[1]?.endsWith("cli.js");
if (invokedDirectly) {
  main(hideBin(process.argv)).then((code) => {
    process.exitCode = code;
  });
}
