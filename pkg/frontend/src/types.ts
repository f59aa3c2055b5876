// Shapes of /api/v1 responses. Every quantity arrives twice: `raw` is a
// 4-decimal fixed-point string, `display` is the server-side rounding.
// The UI renders `display` verbatim and never re-rounds.

export type MoneyField = { raw: string; display: string };

export type QuotePayload = {
  date: string;
  price_eur_mwh: string;
  display: string;
};

export type StatsPayload = {
  split_date: string;
  pre_mean: MoneyField;
  post_latest: MoneyField;
  ratio: MoneyField;
};

export type PricesPayload = {
  source_label: string;
  stale: boolean;
  quotes: QuotePayload[];
  stats: StatsPayload | null;
};

export type BreakdownPayload = {
  kind: "household";
  consumption_kwh_per_day: MoneyField;
  payment_eur_per_day: MoneyField;
  savings_eur_per_day: MoneyField;
  shower_savings_eur_per_day: MoneyField;
};

export type NationalPayload = {
  kind: "national";
  gas_heated_households: MoneyField;
  total_consumption_twh_per_day: MoneyField;
  total_payment_eur_per_day: MoneyField;
  total_savings_eur_per_day: MoneyField;
};

export type EstimatePayload = {
  profile: {
    area_m2: string;
    temp_reduction_c: string;
    cold_showers: boolean;
    persons: number;
  };
  price_eur_mwh: MoneyField;
  breakdown: BreakdownPayload;
  stale: boolean;
  notes: string[];
};

export type ScenarioPayload = {
  label: string;
  daily: BreakdownPayload | NationalPayload;
  daily_savings_eur: MoneyField;
  cumulative_savings_eur: MoneyField;
  assumptions: {
    price_eur_mwh: MoneyField;
    days_remaining: number;
    europe_multiplier: string;
    stale: boolean;
  };
  notes: string[];
};

export type ApiError = { code: string; message: string; detail?: unknown };
