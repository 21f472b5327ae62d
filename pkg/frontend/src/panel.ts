/**
 * One explorer panel (Healthy or Diseased).
 *
 * A panel owns its record choice, peak position, plots, and request
 * sequencing; the two panels on a page share nothing but the parameter
 * form, which each one reads at the moment its own Update fires, so
 * interacting with one panel never touches the other.
 *
 * Each outgoing request carries a per-panel sequence number and only the
 * newest one is applied when responses land. A burst of Update clicks
 * therefore settles on the last click's result no matter the arrival
 * order, and superseded requests are additionally aborted so at most one
 * analysis is truly in flight per panel.
 */

import { fetchPreviews, postAnalyze } from "./api";
import type { AnalyzePayload, AnalyzeRequest, PeakPreview, RecordSummary } from "./api";
import type { ParamForm } from "./form";
import {
  BASELINE_COLOR,
  OPTIMIZED_COLOR,
  SPECTRUM_COLOR,
  clearPlot,
  renderPlaceholder,
  renderStems,
  renderTraces,
} from "./plots";

const DEFAULT_PREVIEW_WINDOW = 31;

// display-only rounding for captions; exact values stay in data attributes
function fmt(v: number | null | undefined): string {
  if (v === null || v === undefined) {
    return "n/a";
  }
  if (Number.isInteger(v)) {
    return String(v);
  }
  return String(Number(v.toPrecision(6)));
}

interface PanelElements {
  title: HTMLElement;
  select: HTMLSelectElement;
  prev: HTMLButtonElement;
  next: HTMLButtonElement;
  update: HTMLButtonElement;
  peakLabel: HTMLElement;
  error: HTMLElement;
  signalPlot: SVGSVGElement;
  signalNote: HTMLElement;
  htBanner: HTMLElement;
  htUpper: SVGSVGElement;
  overlayNote: HTMLElement;
  htLower: SVGSVGElement;
  htCaption: HTMLElement;
  ftPlot: SVGSVGElement;
}

export class Panel {
  readonly label: string;
  readonly root: HTMLElement;

  peakIndex = 0;
  previews: PeakPreview[] = [];
  lastPayload: AnalyzePayload | null = null;
  pending = false;

  private form: ParamForm;
  private records: RecordSummary[] = [];
  private els: PanelElements;

  private previewSeq = 0;
  private analyzeSeq = 0;
  private previewAbort: AbortController | null = null;
  private analyzeAbort: AbortController | null = null;

  constructor(host: HTMLElement, template: HTMLTemplateElement, label: string, form: ParamForm) {
    this.label = label;
    this.form = form;
    host.appendChild(template.content.cloneNode(true));
    this.root = host;

    const q = <T extends Element>(sel: string): T => {
      const node = host.querySelector<T>(sel);
      if (!node) {
        throw new Error(`panel template is missing ${sel}`);
      }
      return node;
    };
    this.els = {
      title: q(".panel-title"),
      select: q(".record-select"),
      prev: q(".prev-btn"),
      next: q(".next-btn"),
      update: q(".update-btn"),
      peakLabel: q(".peak-label"),
      error: q(".panel-error"),
      signalPlot: q(".signal-plot"),
      signalNote: q(".signal-note"),
      htBanner: q(".ht-banner"),
      htUpper: q(".ht-upper"),
      overlayNote: q(".overlay-note"),
      htLower: q(".ht-lower"),
      htCaption: q(".ht-caption"),
      ftPlot: q(".ft-plot"),
    };
    this.els.title.textContent = label;
    this.els.select.addEventListener("change", () => {
      void this.selectRecord(this.els.select.value);
    });
    this.els.prev.addEventListener("click", () => {
      void this.stepPeak(-1);
    });
    this.els.next.addEventListener("click", () => {
      void this.stepPeak(1);
    });
    this.els.update.addEventListener("click", () => {
      void this.update();
    });
    this.setNavState();
  }

  get currentRecord(): RecordSummary | null {
    const id = this.els.select.value;
    return this.records.find((r) => r.id === id) ?? null;
  }

  /** Installs the records of this panel's label and selects the first. */
  async setRecords(all: RecordSummary[]): Promise<void> {
    this.records = all.filter((r) => r.label === this.label);
    const select = this.els.select;
    select.textContent = "";
    for (const rec of this.records) {
      const option = document.createElement("option");
      option.value = rec.id;
      option.textContent = `${rec.id} (${rec.n_peaks} peaks)`;
      select.appendChild(option);
    }
    if (this.records.length === 0) {
      renderPlaceholder(this.els.signalPlot, `no ${this.label} records in the dataset`);
      this.setNavState();
      return;
    }
    await this.selectRecord(this.records[0].id);
  }

  async selectRecord(id: string): Promise<void> {
    this.els.select.value = id;
    this.peakIndex = 0;
    await this.refreshPreview();
  }

  async stepPeak(step: number): Promise<void> {
    const rec = this.currentRecord;
    if (!rec) {
      return;
    }
    const next = this.peakIndex + step;
    if (next < 0 || next >= rec.n_peaks) {
      return; // buttons are disabled at the ends; keep the index in range regardless
    }
    this.peakIndex = next;
    await this.refreshPreview();
  }

  async update(): Promise<void> {
    const rec = this.currentRecord;
    if (!rec) {
      return;
    }
    const params = this.form.read();
    if (params === null) {
      return; // field messages are already painted; nothing goes out
    }
    const req: AnalyzeRequest = {
      record_id: rec.id,
      peak_index: this.peakIndex,
      ...params,
    };
    const seq = ++this.analyzeSeq;
    this.analyzeAbort?.abort();
    this.analyzeAbort = new AbortController();
    this.pending = true;
    const res = await postAnalyze(req, this.analyzeAbort.signal);
    if (seq !== this.analyzeSeq) {
      return; // superseded by a later Update; the newest response wins
    }
    this.pending = false;
    if (!res.ok) {
      // real service rejections show up inline; the previous plots stay
      if (res.status > 0 || !res.error.startsWith("request aborted")) {
        this.showError(res.error, res.field);
      }
      return;
    }
    this.clearError();
    this.lastPayload = res.value;
    this.renderAnalysis(res.value);
  }

  // ---- signal view ------------------------------------------------------

  private previewWindow(): number {
    // track the form width when it is usable so the preview matches what
    // Update would analyze; fall back to the service default otherwise
    const raw = Number(this.form.rawValue("window"));
    if (Number.isInteger(raw) && raw >= 3 && raw % 2 === 1) {
      return raw;
    }
    return DEFAULT_PREVIEW_WINDOW;
  }

  private async refreshPreview(): Promise<void> {
    const rec = this.currentRecord;
    if (!rec) {
      return;
    }
    this.setNavState();
    const seq = ++this.previewSeq;
    this.previewAbort?.abort();
    this.previewAbort = new AbortController();
    const res = await fetchPreviews(rec.id, this.previewWindow(), this.previewAbort.signal);
    if (seq !== this.previewSeq) {
      return; // a newer navigation superseded this fetch
    }
    if (!res.ok) {
      if (res.status > 0) {
        this.showError(res.error, res.field);
      }
      return;
    }
    this.clearError();
    this.previews = res.value;
    this.renderSignalView();
  }

  private renderSignalView(): void {
    const preview = this.previews[this.peakIndex];
    const note = this.els.signalNote;
    if (!preview) {
      renderPlaceholder(this.els.signalPlot, "no peaks in this record");
      note.hidden = true;
      this.setNavState();
      return;
    }
    if (preview.out_of_bounds || !preview.values) {
      clearPlot(this.els.signalPlot);
      note.hidden = false;
      note.textContent =
        "the window around this peak runs past the record edge, so there is no trace to draw";
    } else {
      note.hidden = true;
      renderTraces(this.els.signalPlot, [
        { cls: "signal", color: BASELINE_COLOR, values: preview.values, fill: true },
      ]);
    }
    this.setNavState();
  }

  private setNavState(): void {
    const rec = this.currentRecord;
    const n = rec ? rec.n_peaks : 0;
    this.els.prev.disabled = n <= 1 || this.peakIndex <= 0;
    this.els.next.disabled = n <= 1 || this.peakIndex >= n - 1;
    this.els.peakLabel.textContent = rec ? `peak ${this.peakIndex + 1} of ${n}` : "";
    this.els.update.disabled = rec === null;
  }

  // ---- analysis views ---------------------------------------------------

  /** Redraws every plot in the panel from one analysis payload. */
  private renderAnalysis(p: AnalyzePayload): void {
    this.els.signalNote.hidden = true;
    renderTraces(this.els.signalPlot, [
      { cls: "signal", color: BASELINE_COLOR, values: p.segment, fill: true },
    ]);

    const banner = this.els.htBanner;
    if (p.concentration.degenerate !== undefined) {
      banner.hidden = false;
      banner.textContent = `degenerate: ${p.concentration.degenerate}`;
      clearPlot(this.els.htUpper);
      clearPlot(this.els.htLower);
      this.els.overlayNote.hidden = true;
    } else {
      banner.hidden = true;
      const traces = [
        { cls: "ht-signal", color: BASELINE_COLOR, values: p.segment, fill: true },
      ];
      if (p.display_shifted_segment !== null) {
        traces.push({
          cls: "ht-overlay",
          color: OPTIMIZED_COLOR,
          values: p.display_shifted_segment,
          fill: false,
        });
      }
      renderTraces(this.els.htUpper, traces);
      const overlayNote = this.els.overlayNote;
      if (p.display_out_of_bounds) {
        overlayNote.hidden = false;
        overlayNote.textContent = `shift by ${p.display_tau} leaves the record, overlay omitted`;
      } else {
        overlayNote.hidden = true;
      }

      const stems = [];
      if (p.optimization.baseline !== null) {
        stems.push({
          cls: "stem-baseline",
          color: BASELINE_COLOR,
          values: p.optimization.baseline.coeffs,
        });
      }
      stems.push({
        cls: "stem-optimized",
        color: OPTIMIZED_COLOR,
        values: p.optimization.best.coeffs,
      });
      renderStems(this.els.htLower, stems);
    }
    this.renderCaption(p);
    renderStems(this.els.ftPlot, [
      { cls: "ft-mag", color: SPECTRUM_COLOR, values: p.spectrum.magnitudes },
    ]);
  }

  private renderCaption(p: AnalyzePayload): void {
    const best = p.optimization.best;
    const base = p.optimization.baseline;
    const cap = this.els.htCaption;
    cap.hidden = false;
    cap.textContent =
      `δ* = ${fmt(best.delta)}, τ* = ${fmt(best.tau)}, ` +
      `baseline ℓ1 = ${fmt(base ? base.l1 : null)}, optimized ℓ1 = ${fmt(best.l1)}`;
    cap.setAttribute("data-delta-star", String(best.delta));
    cap.setAttribute("data-tau-star", String(best.tau));
    cap.setAttribute("data-baseline-l1", base !== null ? String(base.l1) : "");
    cap.setAttribute("data-optimized-l1", String(best.l1));
  }

  private showError(message: string, field: string | null = null): void {
    this.els.error.hidden = false;
    this.els.error.textContent = field !== null ? `${field}: ${message}` : message;
  }

  private clearError(): void {
    this.els.error.hidden = true;
    this.els.error.textContent = "";
  }
}
