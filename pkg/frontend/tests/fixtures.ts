// Canned API payloads captured verbatim from the gastab service (fixture
// store, price 160 EUR/MWh). Tests assert against these display strings,
// so any drift from the real server shapes shows up here first.

import type { EstimatePayload, PricesPayload, ScenarioPayload } from "../src/types.js";

export const EST92: EstimatePayload = {
  profile: { area_m2: "92.0000", temp_reduction_c: "2.0000", cold_showers: false, persons: 1 },
  price_eur_mwh: { raw: "160.0000", display: "160.0 EUR/MWh" },
  breakdown: {
    kind: "household",
    consumption_kwh_per_day: { raw: "71.5556", display: "72 kWh" },
    payment_eur_per_day: { raw: "5.7244", display: "€5.72" },
    savings_eur_per_day: { raw: "0.6869", display: "€0.69" },
    shower_savings_eur_per_day: { raw: "0.0000", display: "€0.00" },
  },
  stale: false,
  notes: [],
};

export const EST120: EstimatePayload = {
  profile: { area_m2: "120.0000", temp_reduction_c: "2.0000", cold_showers: false, persons: 1 },
  price_eur_mwh: { raw: "160.0000", display: "160.0 EUR/MWh" },
  breakdown: {
    kind: "household",
    consumption_kwh_per_day: { raw: "93.3333", display: "93 kWh" },
    payment_eur_per_day: { raw: "7.4667", display: "€7.47" },
    savings_eur_per_day: { raw: "0.8960", display: "€0.90" },
    shower_savings_eur_per_day: { raw: "0.0000", display: "€0.00" },
  },
  stale: false,
  notes: [],
};

export const SEASON92: ScenarioPayload = {
  label: "heating season",
  daily: EST92.breakdown,
  daily_savings_eur: { raw: "0.6869", display: "€0.69" },
  cumulative_savings_eur: { raw: "123.6480", display: "€123.65" },
  assumptions: {
    price_eur_mwh: { raw: "160.0000", display: "160.0 EUR/MWh" },
    days_remaining: 180,
    europe_multiplier: "1.0000",
    stale: false,
  },
  notes: [],
};

export const SEASON120: ScenarioPayload = {
  ...SEASON92,
  daily: EST120.breakdown,
  daily_savings_eur: { raw: "0.8960", display: "€0.90" },
  cumulative_savings_eur: { raw: "161.2800", display: "€161.28" },
};

export const NATIONAL: ScenarioPayload = {
  label: "national context",
  daily: {
    kind: "national",
    gas_heated_households: { raw: "20400000.0000", display: "20.4 Mio." },
    total_consumption_twh_per_day: { raw: "1.4688", display: "1.47 TWh" },
    total_payment_eur_per_day: { raw: "117504000.0000", display: "€117 Mio." },
    total_savings_eur_per_day: { raw: "14100480.0000", display: "€14 Mio." },
  },
  daily_savings_eur: { raw: "14100480.0000", display: "€14 Mio." },
  cumulative_savings_eur: { raw: "380712960.0000", display: "€380 Mio." },
  assumptions: {
    price_eur_mwh: { raw: "160.0000", display: "160.0 EUR/MWh" },
    days_remaining: 27,
    europe_multiplier: "1.0000",
    stale: false,
  },
  notes: [],
};

export const PRICES: PricesPayload = {
  source_label: "fixture",
  stale: false,
  quotes: [
    { date: "2022-02-21", price_eur_mwh: "80.5000", display: "80.5 EUR/MWh" },
    { date: "2022-02-22", price_eur_mwh: "75.5000", display: "75.5 EUR/MWh" },
    { date: "2022-02-24", price_eur_mwh: "110.0000", display: "110.0 EUR/MWh" },
    { date: "2022-02-25", price_eur_mwh: "121.5000", display: "121.5 EUR/MWh" },
    { date: "2022-03-03", price_eur_mwh: "160.0000", display: "160.0 EUR/MWh" },
  ],
  stats: {
    split_date: "2022-02-24",
    pre_mean: { raw: "80.0000", display: "80.0 EUR/MWh" },
    post_latest: { raw: "160.0000", display: "160.0 EUR/MWh" },
    ratio: { raw: "2.0000", display: "×2.0" },
  },
};

export const EMPTY_PRICES: PricesPayload = {
  source_label: "fixture",
  stale: false,
  quotes: [],
  stats: null,
};
