// UI state and its mapping onto API requests. The state holds input
// positions only; every number shown to the user comes back from the API.

export type UiState = {
  areaM2: number;
  tempReductionC: number;
  coldShowers: boolean;
  persons: number;
  priceOverride: string | null;
};

export const DEFAULT_STATE: UiState = {
  areaM2: 92,
  tempReductionC: 2,
  coldShowers: false,
  persons: 1,
  priceOverride: null,
};

export const BOUNDS = {
  area: { min: 20, max: 200, step: 1 },
  temp: { min: 0, max: 5, step: 0.5 },
  persons: { min: 1, max: 6, step: 1 },
} as const;

export const SEASON_DAYS = 180;

export function estimateQuery(state: UiState): string {
  const params = new URLSearchParams({
    area_m2: String(state.areaM2),
    temp_reduction_c: String(state.tempReductionC),
    cold_showers: state.coldShowers ? "true" : "false",
    persons: String(state.persons),
  });
  if (state.priceOverride) params.set("price_eur_mwh", state.priceOverride);
  return params.toString();
}

export function seasonScenarioBody(state: UiState): object {
  const body: Record<string, unknown> = {
    label: "heating season",
    area_m2: state.areaM2,
    temp_reduction_c: state.tempReductionC,
    cold_showers: state.coldShowers,
    persons: state.persons,
    days_remaining: SEASON_DAYS,
  };
  if (state.priceOverride) body.price_eur_mwh = Number(state.priceOverride);
  return body;
}

export function nationalContextBody(): object {
  return { label: "national context", national: true, temp_reduction_c: 2 };
}

export function clamp(value: number, min: number, max: number): number {
  return Math.min(max, Math.max(min, value));
}
