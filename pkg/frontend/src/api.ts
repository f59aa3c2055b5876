import { BUILD_API_BASE } from "./config.js";
import type { EstimatePayload, PricesPayload, ScenarioPayload } from "./types.js";

export function apiBase(): string {
  const global = globalThis as { GASTAB_API_BASE?: unknown };
  if (typeof global.GASTAB_API_BASE === "string") {
    return global.GASTAB_API_BASE;
  }
  if (typeof location !== "undefined" && location.search) {
    const fromQuery = new URLSearchParams(location.search).get("api");
    if (fromQuery) return fromQuery;
  }
  return BUILD_API_BASE;
}

async function asJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let message = `status ${response.status}`;
    try {
      const body = await response.json();
      if (body && typeof body.message === "string") message = body.message;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new Error(message);
  }
  return (await response.json()) as T;
}

export async function getPrices(signal?: AbortSignal): Promise<PricesPayload> {
  return asJson(await fetch(`${apiBase()}/api/v1/prices`, { signal }));
}

export async function getEstimate(
  query: string,
  signal?: AbortSignal
): Promise<EstimatePayload> {
  return asJson(await fetch(`${apiBase()}/api/v1/estimate?${query}`, { signal }));
}

export async function postScenario(
  body: object,
  signal?: AbortSignal
): Promise<ScenarioPayload> {
  return asJson(
    await fetch(`${apiBase()}/api/v1/scenario`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    })
  );
}
