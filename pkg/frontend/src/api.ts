/**
 * Typed client for the analysis service.
 *
 * Every number the explorer plots is lifted verbatim from these payloads;
 * the client never recomputes coefficients, spectra, or error measures.
 * Failures (HTTP errors, network faults, aborts) come back as ordinary
 * values so callers can decide what survives on screen.
 */

export interface RecordSummary {
  id: string;
  label: string;
  n_samples: number;
  n_peaks: number;
  fs_hz: number | null;
}

export interface RecordListing {
  records: RecordSummary[];
  warnings: string[];
}

/** One entry of GET /api/records/{id}/peaks; values missing when the
 * window around the annotated peak runs past the record edge. */
export interface PeakPreview {
  peak_index: number;
  values?: number[];
  out_of_bounds?: boolean;
}

/** Transform result at one (tau, delta) cell. */
export interface HtResult {
  delta: number;
  tau: number;
  l1: number;
  coeffs: number[];
}

export interface SearchWindow {
  delta0: number;
  delta_max: number;
  delta_step: number;
  tau_min: number;
  tau_max: number;
}

export interface TauMeasure {
  tau: number;
  best_delta: number;
  min_l1: number;
}

export interface GridCell {
  tau: number;
  delta: number;
  l1: number | null;
  admissible: boolean;
}

export interface OptimizationReport {
  spec: SearchWindow;
  measure_vector_L: TauMeasure[];
  best: HtResult;
  baseline: HtResult | null;
  full_grid?: GridCell[];
}

export interface Spectrum {
  magnitudes: number[];
  l1: number;
  l1_over_l2: number | null;
}

export interface DomainConcentration {
  l1: number;
  l1_over_l2: number | null;
}

export interface ConcentrationReport {
  degenerate?: string;
  ht: DomainConcentration;
  ft: DomainConcentration;
  top_k: { ht: number[] | null; ft: number[] | null };
}

export interface QualityMetrics {
  prd_percent: number;
  max_abs_err: number;
  retained_m: number;
}

/** Body of POST /api/analyze. */
export interface AnalyzePayload {
  record_id: string;
  label: string;
  peak_index: number;
  window: number;
  segment: number[];
  standard: HtResult | null;
  optimization: OptimizationReport;
  spectrum: Spectrum;
  concentration: ConcentrationReport;
  prd_top2: QualityMetrics | null;
  display_shifted_segment: number[] | null;
  display_tau: number;
  display_out_of_bounds?: boolean;
}

export interface AnalyzeRequest {
  record_id: string;
  peak_index: number;
  window: number;
  delta0: number;
  delta_max: number;
  delta_step: number;
  tau_min: number;
  tau_max: number;
  tau_display: number;
}

export type ApiResult<T> =
  | { ok: true; value: T }
  | { ok: false; status: number; error: string; field: string | null };

// status 0 marks failures that never produced a response (aborted or
// network-level); callers treat those differently from real 4xx bodies
async function request<T>(url: string, init?: RequestInit): Promise<ApiResult<T>> {
  let res: Response;
  try {
    res = await fetch(url, init);
  } catch (err) {
    const name = err instanceof DOMException ? err.name : "";
    if (name === "AbortError") {
      return { ok: false, status: 0, error: "request aborted", field: null };
    }
    return { ok: false, status: 0, error: `network error: ${String(err)}`, field: null };
  }
  let body: unknown;
  try {
    body = await res.json();
  } catch {
    return { ok: false, status: res.status, error: `unreadable response (HTTP ${res.status})`, field: null };
  }
  if (!res.ok) {
    const e = (body ?? {}) as { error?: string; field?: string | null };
    return {
      ok: false,
      status: res.status,
      error: e.error ?? `request failed (HTTP ${res.status})`,
      field: e.field ?? null,
    };
  }
  return { ok: true, value: body as T };
}

export function fetchRecords(): Promise<ApiResult<RecordListing>> {
  return request<RecordListing>("/api/records");
}

export function fetchPreviews(
  recordId: string,
  window: number,
  signal?: AbortSignal,
): Promise<ApiResult<PeakPreview[]>> {
  const url = `/api/records/${encodeURIComponent(recordId)}/peaks?window=${window}`;
  return request<PeakPreview[]>(url, { signal });
}

export function postAnalyze(
  req: AnalyzeRequest,
  signal?: AbortSignal,
): Promise<ApiResult<AnalyzePayload>> {
  return request<AnalyzePayload>("/api/analyze", {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(req),
    signal,
  });
}
