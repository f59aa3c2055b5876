import { describe, expect, it } from "vitest";

import { chartModel, chartSvg, linearScale, renderChart } from "../src/chart.js";
import { EMPTY_PRICES, PRICES } from "./fixtures.js";

describe("linearScale", () => {
  it("maps domain endpoints onto range endpoints", () => {
    const scale = linearScale(0, 10, 100, 200);
    expect(scale(0)).toBe(100);
    expect(scale(10)).toBe(200);
    expect(scale(5)).toBe(150);
  });

  it("degenerates to the range midpoint for a single-point domain", () => {
    expect(linearScale(3, 3, 0, 10)(3)).toBe(5);
  });
});

describe("chartModel", () => {
  it("is null for an empty series", () => {
    expect(chartModel(EMPTY_PRICES)).toBeNull();
  });

  it("places the war marker between the surrounding quotes", () => {
    const model = chartModel(PRICES)!;
    const x = Object.fromEntries(model.points.map((p) => [p.date, p.x]));
    expect(model.markerX).not.toBeNull();
    expect(model.markerX!).toBeGreaterThan(x["2022-02-22"]!);
    expect(model.markerX!).toBeLessThanOrEqual(x["2022-02-24"]!);
  });

  it("labels the final point with the API display string", () => {
    const model = chartModel(PRICES)!;
    expect(model.lastLabel).toBe("160.0 EUR/MWh");
  });

  it("annotates the doubling ratio and the pre-war mean", () => {
    const model = chartModel(PRICES)!;
    expect(model.ratioLabel).toBe("×2.0");
    expect(model.preMeanLabel).toContain("80.0 EUR/MWh");
    expect(model.preMeanY).not.toBeNull();
  });

  it("keeps the price line inside the plot area", () => {
    const model = chartModel(PRICES)!;
    for (const point of model.points) {
      expect(point.x).toBeGreaterThanOrEqual(0);
      expect(point.x).toBeLessThanOrEqual(model.width);
      expect(point.y).toBeGreaterThanOrEqual(0);
      expect(point.y).toBeLessThanOrEqual(model.height);
    }
  });
});

describe("rendering", () => {
  it("draws line, marker, and annotations into the target", () => {
    const target = document.createElement("div");
    renderChart(target, PRICES);
    const svg = target.innerHTML;
    expect(svg).toContain("<polyline");
    expect(svg).toContain("war start");
    expect(svg).toContain("×2.0");
    expect(svg).toContain("160.0 EUR/MWh");
  });

  it("falls back to a placeholder without data", () => {
    const target = document.createElement("div");
    renderChart(target, EMPTY_PRICES);
    expect(target.textContent).toContain("no data");
  });

  it("chartSvg is valid enough for the DOM to parse", () => {
    const target = document.createElement("div");
    target.innerHTML = chartSvg(chartModel(PRICES)!);
    expect(target.querySelector("svg")).not.toBeNull();
    expect(target.querySelectorAll("line").length).toBeGreaterThanOrEqual(3);
  });
});
