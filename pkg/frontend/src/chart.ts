// Spot-price line chart as a plain SVG string: price series, a vertical
// marker at the pre/post split date, a dashed line at the pre-split mean,
// the latest quote labeled, and the doubling-ratio annotation. Geometry
// is computed in pure functions so tests can pin coordinates.

import type { PricesPayload } from "./types.js";

export type ChartPoint = { x: number; y: number; date: string; display: string };

export type ChartModel = {
  width: number;
  height: number;
  points: ChartPoint[];
  polyline: string;
  markerX: number | null;
  preMeanY: number | null;
  preMeanLabel: string;
  ratioLabel: string;
  lastLabel: string;
  yMin: number;
  yMax: number;
};

const PAD = { left: 44, right: 76, top: 18, bottom: 26 };

export function linearScale(
  d0: number,
  d1: number,
  r0: number,
  r1: number
): (v: number) => number {
  const span = d1 - d0;
  if (span === 0) return () => (r0 + r1) / 2;
  return (v: number) => r0 + ((v - d0) / span) * (r1 - r0);
}

const dayNumber = (iso: string): number => Date.parse(`${iso}T00:00:00Z`) / 86_400_000;

export function chartModel(
  payload: PricesPayload,
  width = 680,
  height = 260
): ChartModel | null {
  if (payload.quotes.length === 0) return null;

  const days = payload.quotes.map((q) => dayNumber(q.date));
  const prices = payload.quotes.map((q) => Number(q.price_eur_mwh));
  const yMin = Math.floor(Math.min(...prices) * 0.9);
  const yMax = Math.ceil(Math.max(...prices) * 1.05);
  const x = linearScale(days[0]!, days[days.length - 1]!, PAD.left, width - PAD.right);
  const y = linearScale(yMin, yMax, height - PAD.bottom, PAD.top);

  const points = payload.quotes.map((q, i) => ({
    x: x(days[i]!),
    y: y(prices[i]!),
    date: q.date,
    display: q.display,
  }));
  const polyline = points.map((p) => `${p.x.toFixed(1)},${p.y.toFixed(1)}`).join(" ");

  const stats = payload.stats;
  const splitDay = stats ? dayNumber(stats.split_date) : null;
  const markerX =
    splitDay !== null && splitDay >= days[0]! && splitDay <= days[days.length - 1]!
      ? x(splitDay)
      : null;

  return {
    width,
    height,
    points,
    polyline,
    markerX,
    preMeanY: stats ? y(Number(stats.pre_mean.raw)) : null,
    preMeanLabel: stats ? `pre-war mean ${stats.pre_mean.display}` : "",
    ratioLabel: stats ? stats.ratio.display : "",
    lastLabel: points[points.length - 1]!.display,
    yMin,
    yMax,
  };
}

export function chartSvg(model: ChartModel): string {
  const last = model.points[model.points.length - 1]!;
  const parts: string[] = [
    `<svg viewBox="0 0 ${model.width} ${model.height}" role="img" aria-label="gas spot prices">`,
    `<line x1="${PAD.left}" y1="${model.height - PAD.bottom}" x2="${model.width - PAD.right}" y2="${model.height - PAD.bottom}" class="axis"/>`,
    `<text x="${PAD.left - 6}" y="${model.height - PAD.bottom}" class="tick" text-anchor="end">${model.yMin}</text>`,
    `<text x="${PAD.left - 6}" y="${PAD.top + 4}" class="tick" text-anchor="end">${model.yMax}</text>`,
    `<polyline points="${model.polyline}" class="price-line" fill="none"/>`,
  ];
  if (model.preMeanY !== null) {
    parts.push(
      `<line x1="${PAD.left}" y1="${model.preMeanY}" x2="${model.width - PAD.right}" y2="${model.preMeanY}" class="mean-line"/>`,
      `<text x="${PAD.left + 4}" y="${model.preMeanY - 5}" class="annotation">${model.preMeanLabel}</text>`
    );
  }
  if (model.markerX !== null) {
    parts.push(
      `<line x1="${model.markerX}" y1="${PAD.top}" x2="${model.markerX}" y2="${model.height - PAD.bottom}" class="war-marker"/>`,
      `<text x="${model.markerX + 4}" y="${PAD.top + 10}" class="annotation">war start</text>`
    );
  }
  if (model.ratioLabel) {
    parts.push(
      `<text x="${last.x - 8}" y="${last.y + 18}" class="ratio" text-anchor="end">${model.ratioLabel}</text>`
    );
  }
  parts.push(
    `<circle cx="${last.x}" cy="${last.y}" r="3.5" class="last-point"/>`,
    `<text x="${last.x + 6}" y="${last.y + 4}" class="last-label">${model.lastLabel}</text>`,
    `</svg>`
  );
  return parts.join("");
}

export function renderChart(target: HTMLElement, payload: PricesPayload): void {
  const model = chartModel(payload);
  if (model === null) {
    target.innerHTML = `<p class="placeholder">no data</p>`;
    return;
  }
  target.innerHTML = chartSvg(model);
}
