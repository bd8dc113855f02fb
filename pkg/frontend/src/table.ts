import type { Customization } from "./state.js";
import type { CellValue, ComparePayload, PropertyRow } from "./types.js";

/** Rows shown to the user: server-visible, not client-hidden, in the
 * customized order (unordered ids keep their payload position). */
export function visibleRows(payload: ComparePayload, custom: Customization): PropertyRow[] {
  const rows = payload.properties.filter((p) => p.visible && !custom.hidden.has(p.id));
  if (!custom.order) {
    return rows;
  }
  const rank = new Map(custom.order.map((id, i) => [id, i]));
  return [...rows].sort(
    (a, b) => (rank.get(a.id) ?? Number.MAX_SAFE_INTEGER) - (rank.get(b.id) ?? Number.MAX_SAFE_INTEGER),
  );
}

export function cellText(values: CellValue[]): string {
  if (values.length === 0) {
    return "-";
  }
  return values.map((v) => v.display).join("; ");
}

/** The rendered grid: header row first, transposition applied last. */
export function toGrid(payload: ComparePayload, custom: Customization): string[][] {
  const header = ["Property", ...payload.papers.map((p) => p.title)];
  const grid = [header];
  for (const row of visibleRows(payload, custom)) {
    const cells = payload.papers.map((paper) =>
      cellText(payload.values[row.id]?.[paper.contributions[0]] ?? []),
    );
    grid.push([row.label, ...cells]);
  }
  if (!custom.transposed) {
    return grid;
  }
  return grid[0].map((_, col) => grid.map((line) => line[col]));
}

function csvField(value: string): string {
  if (/[",\r\n]/.test(value)) {
    return '"' + value.replaceAll('"', '""') + '"';
  }
  return value;
}

/** RFC 4180 serialization of the customized grid, CRLF line endings. */
export function toCsv(grid: string[][]): string {
  return grid.map((row) => row.map(csvField).join(",") + "\r\n").join("");
}
