// Wires the controls to the API. Flow: any input change updates the
// local UiState, echoes the slider position into its label, and schedules
// a debounced latest-wins round of one estimate request plus one
// heating-season scenario request. Responses land verbatim in the DOM;
// failures raise the error banner and leave the last results in place.

import { getEstimate, getPrices, postScenario } from "./api.js";
import { renderChart } from "./chart.js";
import { LatestWins } from "./scheduler.js";
import {
  BOUNDS,
  DEFAULT_STATE,
  SEASON_DAYS,
  UiState,
  clamp,
  estimateQuery,
  nationalContextBody,
  seasonScenarioBody,
} from "./state.js";
import type { EstimatePayload, NationalPayload, ScenarioPayload } from "./types.js";

export const DEBOUNCE_MS = 150;

const $ = <T extends HTMLElement>(root: ParentNode, selector: string): T => {
  const el = root.querySelector<T>(selector);
  if (!el) throw new Error(`missing element ${selector}`);
  return el;
};

export function initApp(root: Document | HTMLElement = document): UiState {
  const state: UiState = { ...DEFAULT_STATE };

  const area = $<HTMLInputElement>(root, "#area");
  const areaLabel = $(root, "#area-label");
  const temp = $<HTMLInputElement>(root, "#temp");
  const tempLabel = $(root, "#temp-label");
  const showers = $<HTMLInputElement>(root, "#showers");
  const persons = $<HTMLInputElement>(root, "#persons");
  const personsLabel = $(root, "#persons-label");
  const priceOverride = $<HTMLInputElement>(root, "#price-override");

  const payment = $(root, "#payment");
  const savings = $(root, "#savings");
  const showerSavings = $(root, "#shower-savings");
  const consumption = $(root, "#consumption");
  const season = $(root, "#season");
  const priceUsed = $(root, "#price-used");
  const errorBanner = $(root, "#banner-error");
  const staleBanner = $(root, "#banner-stale");
  const chart = $(root, "#chart");
  const national = $(root, "#national");

  area.min = String(BOUNDS.area.min);
  area.max = String(BOUNDS.area.max);
  area.step = String(BOUNDS.area.step);
  area.value = String(state.areaM2);
  temp.min = String(BOUNDS.temp.min);
  temp.max = String(BOUNDS.temp.max);
  temp.step = String(BOUNDS.temp.step);
  temp.value = String(state.tempReductionC);
  persons.min = String(BOUNDS.persons.min);
  persons.max = String(BOUNDS.persons.max);
  persons.value = String(state.persons);

  const scheduler = new LatestWins(DEBOUNCE_MS);

  function echoLabels(): void {
    areaLabel.textContent = `${state.areaM2} m²`;
    tempLabel.textContent = `−${state.tempReductionC} °C`;
    personsLabel.textContent = String(state.persons);
  }

  function applyResults(estimate: EstimatePayload, scenario: ScenarioPayload): void {
    errorBanner.classList.add("hidden");
    payment.textContent = estimate.breakdown.payment_eur_per_day.display;
    savings.textContent = estimate.breakdown.savings_eur_per_day.display;
    showerSavings.textContent = estimate.breakdown.shower_savings_eur_per_day.display;
    consumption.textContent = estimate.breakdown.consumption_kwh_per_day.display;
    priceUsed.textContent = estimate.price_eur_mwh.display;
    season.textContent = scenario.cumulative_savings_eur.display;
    staleBanner.classList.toggle("hidden", !estimate.stale);
  }

  function refresh(): void {
    scheduler.schedule(
      async (signal) => {
        const estimate = await getEstimate(estimateQuery(state), signal);
        const scenario = await postScenario(seasonScenarioBody(state), signal);
        return { estimate, scenario };
      },
      ({ estimate, scenario }) => applyResults(estimate, scenario),
      () => errorBanner.classList.remove("hidden")
    );
  }

  area.addEventListener("input", () => {
    state.areaM2 = clamp(Number(area.value), BOUNDS.area.min, BOUNDS.area.max);
    echoLabels();
    refresh();
  });
  temp.addEventListener("input", () => {
    state.tempReductionC = clamp(Number(temp.value), BOUNDS.temp.min, BOUNDS.temp.max);
    echoLabels();
    refresh();
  });
  showers.addEventListener("change", () => {
    state.coldShowers = showers.checked;
    refresh();
  });
  persons.addEventListener("input", () => {
    state.persons = clamp(Number(persons.value), BOUNDS.persons.min, BOUNDS.persons.max);
    echoLabels();
    refresh();
  });
  priceOverride.addEventListener("change", () => {
    const value = priceOverride.value.trim();
    state.priceOverride = value === "" ? null : value;
    refresh();
  });

  void loadPriceChart(chart, staleBanner);
  void loadNationalCard(national);

  echoLabels();
  refresh();
  return state;
}

async function loadPriceChart(chart: HTMLElement, staleBanner: HTMLElement): Promise<void> {
  try {
    const prices = await getPrices();
    renderChart(chart, prices);
    if (prices.stale) staleBanner.classList.remove("hidden");
  } catch {
    chart.innerHTML = `<p class="placeholder">no data</p>`;
  }
}

async function loadNationalCard(card: HTMLElement): Promise<void> {
  try {
    const scenario = await postScenario(nationalContextBody());
    const daily = scenario.daily as NationalPayload;
    card.innerHTML = [
      `<p><strong>${daily.gas_heated_households.display}</strong> gas-heated households`,
      `consume <strong>${daily.total_consumption_twh_per_day.display}</strong> per heating day`,
      `and pay <strong>${daily.total_payment_eur_per_day.display}</strong> of it to Russian suppliers.</p>`,
      `<p>2 °C less room temperature nationwide keeps <strong>${daily.total_savings_eur_per_day.display}</strong>`,
      `per day out of that bill.</p>`,
    ].join(" ");
  } catch {
    card.innerHTML = `<p class="placeholder">national context unavailable</p>`;
  }
}

export { SEASON_DAYS };
