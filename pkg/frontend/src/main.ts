/** Page bootstrap: load the record listing and build the two panels. */

import "./style.css";
import { fetchRecords } from "./api";
import { ParamForm } from "./form";
import { Panel } from "./panel";

//--- GUI components ---

let form: ParamForm;
let healthyPanel: Panel;
let diseasedPanel: Panel;

function mustGet(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`page is missing #${id}`);
  }
  return node;
}

async function startup(): Promise<void> {
  const statusLine = mustGet("dataset-status");
  const template = mustGet("panel-template") as HTMLTemplateElement;
  form = new ParamForm(mustGet("param-form"));
  healthyPanel = new Panel(mustGet("panel-healthy"), template, "healthy", form);
  diseasedPanel = new Panel(mustGet("panel-diseased"), template, "diseased", form);

  const res = await fetchRecords();
  if (!res.ok) {
    statusLine.textContent = `failed to load records: ${res.error}`;
    return;
  }
  const { records, warnings } = res.value;
  statusLine.textContent =
    `${records.length} records loaded` +
    (warnings.length > 0 ? `, ${warnings.length} file(s) skipped (see console)` : "");
  for (const w of warnings) {
    console.warn(w);
  }
  await Promise.all([healthyPanel.setRecords(records), diseasedPanel.setRecords(records)]);
}

void startup();
