/**
 * Client-side mirror of the service's request checks.
 *
 * Update is blocked while any field fails, so the service never sees a
 * request it would reject with 400. Messages match the service wording so
 * the same rule reads the same whichever side reports it.
 */

export interface ParamValues {
  window: number;
  delta0: number;
  delta_max: number;
  delta_step: number;
  tau_min: number;
  tau_max: number;
  tau_display: number;
}

export interface FieldError {
  field: string;
  message: string;
}

interface FieldSpec {
  name: keyof ParamValues;
  integer: boolean;
}

const FIELDS: FieldSpec[] = [
  { name: "window", integer: true },
  { name: "delta0", integer: false },
  { name: "delta_max", integer: false },
  { name: "delta_step", integer: false },
  { name: "tau_min", integer: true },
  { name: "tau_max", integer: true },
  { name: "tau_display", integer: true },
];

/**
 * Parses raw form text and applies the request rules. Returns all field
 * errors at once (the service stops at the first; showing every problem
 * inline saves round trips). values is null whenever errors is non-empty.
 */
export function validateParams(raw: Record<string, string>): {
  values: ParamValues | null;
  errors: FieldError[];
} {
  const errors: FieldError[] = [];
  const got: Partial<Record<keyof ParamValues, number>> = {};

  for (const spec of FIELDS) {
    const text = (raw[spec.name] ?? "").trim();
    if (text === "") {
      errors.push({ field: spec.name, message: "required" });
      continue;
    }
    const value = Number(text);
    if (!Number.isFinite(value)) {
      errors.push({ field: spec.name, message: spec.integer ? "must be an integer" : "must be a number" });
      continue;
    }
    if (spec.integer && !Number.isInteger(value)) {
      errors.push({ field: spec.name, message: "must be an integer" });
      continue;
    }
    got[spec.name] = value;
  }

  const { window, delta0, delta_max, delta_step, tau_min, tau_max, tau_display } = got;

  if (window !== undefined && (window % 2 === 0 || window < 3)) {
    errors.push({ field: "window", message: "window must be odd and >= 3" });
  }
  if (delta0 !== undefined && delta0 <= 0) {
    errors.push({ field: "delta0", message: "delta0 must be positive" });
  }
  if (delta_step !== undefined && delta_step <= 0) {
    errors.push({ field: "delta_step", message: "delta_step must be positive" });
  }
  if (delta_max !== undefined && delta0 !== undefined && delta_max < delta0) {
    errors.push({ field: "delta_max", message: "delta_max must be >= delta0" });
  }
  if (tau_max !== undefined && tau_min !== undefined && tau_max < tau_min) {
    errors.push({ field: "tau_max", message: "tau_max must be >= tau_min" });
  }
  if (
    tau_display !== undefined &&
    window !== undefined &&
    window % 2 === 1 &&
    window >= 3 &&
    Math.abs(tau_display) > window
  ) {
    errors.push({
      field: "tau_display",
      message: `tau_display must lie in [-${window}, ${window}]`,
    });
  }

  if (errors.length > 0) {
    return { values: null, errors };
  }
  return { values: got as ParamValues, errors: [] };
}
