/** The shared parameter strip above the two panels. */

import { validateParams } from "./validate";
import type { FieldError, ParamValues } from "./validate";

export class ParamForm {
  private root: HTMLElement;

  constructor(root: HTMLElement) {
    this.root = root;
  }

  rawValue(name: string): string {
    const input = this.root.querySelector<HTMLInputElement>(`input[name="${name}"]`);
    return input ? input.value : "";
  }

  rawValues(): Record<string, string> {
    const out: Record<string, string> = {};
    for (const input of this.root.querySelectorAll<HTMLInputElement>("input[name]")) {
      out[input.name] = input.value;
    }
    return out;
  }

  /** Validates the fields, paints inline messages, returns values when clean. */
  read(): ParamValues | null {
    const { values, errors } = validateParams(this.rawValues());
    this.paint(errors);
    return values;
  }

  set(name: string, value: string): void {
    const input = this.root.querySelector<HTMLInputElement>(`input[name="${name}"]`);
    if (input) {
      input.value = value;
    }
  }

  private paint(errors: FieldError[]): void {
    const byField = new Map<string, string>();
    for (const e of errors) {
      if (!byField.has(e.field)) {
        byField.set(e.field, e.message);
      }
    }
    for (const span of this.root.querySelectorAll<HTMLElement>(".field-error")) {
      const field = span.getAttribute("data-for") ?? "";
      span.textContent = byField.get(field) ?? "";
    }
  }
}
