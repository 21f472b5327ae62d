/** Shared DOM and fetch scaffolding for the explorer tests. */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { vi } from "vitest";

const here = dirname(fileURLToPath(import.meta.url));

/** Installs the real index.html markup (minus scripts) into jsdom. */
export function mountPage(): void {
  const html = readFileSync(join(here, "..", "index.html"), "utf-8");
  const body = /<body>([\s\S]*)<\/body>/.exec(html);
  if (!body) {
    throw new Error("index.html has no body");
  }
  document.body.innerHTML = body[1].replace(/<script[\s\S]*?<\/script>/g, "");
}

export function panelTemplate(): HTMLTemplateElement {
  return document.getElementById("panel-template") as HTMLTemplateElement;
}

type Body = unknown;
export interface Reply {
  status: number;
  body: Body;
}

function asReply(value: Reply | Body): Reply {
  if (value !== null && typeof value === "object" && "status" in value && "body" in value) {
    return value as Reply;
  }
  return { status: 200, body: value };
}

/**
 * In-memory stand-in for the analysis service behind global fetch.
 *
 * Handlers may return a body, a {status, body} pair, or a promise of
 * either; promise handlers let tests hold a response open and resolve it
 * out of order. Responses are plain objects with the ok/status/json surface
 * the client uses, which keeps the stub independent of any Response
 * implementation the test runtime happens to ship.
 */
export class FakeService {
  records: Reply | Body = { records: [], warnings: [] };
  previews = new Map<string, Reply | Body>();
  analyze: (req: Record<string, unknown>) => Reply | Body | Promise<Reply | Body> = () => {
    throw new Error("no analyze handler installed");
  };
  calls: { method: string; url: string; body?: Record<string, unknown> }[] = [];

  install(): void {
    vi.stubGlobal(
      "fetch",
      vi.fn(async (input: unknown, init?: { method?: string; body?: string }) => {
        const url = String(input);
        const method = init?.method ?? "GET";
        const reqBody = init?.body ? (JSON.parse(init.body) as Record<string, unknown>) : undefined;
        this.calls.push({ method, url, body: reqBody });

        let reply: Reply;
        const previewMatch = /^\/api\/records\/([^/]+)\/peaks/.exec(url);
        if (previewMatch) {
          const id = decodeURIComponent(previewMatch[1]);
          const entry = this.previews.get(id);
          reply = entry !== undefined
            ? asReply(entry)
            : { status: 404, body: { error: `unknown record '${id}'`, field: null } };
        } else if (url === "/api/records") {
          reply = asReply(this.records);
        } else if (url === "/api/analyze" && method === "POST") {
          reply = asReply(await this.analyze(reqBody ?? {}));
        } else {
          reply = { status: 404, body: { error: `no route for ${url}`, field: null } };
        }
        return {
          ok: reply.status >= 200 && reply.status < 300,
          status: reply.status,
          json: async () => reply.body,
        };
      }),
    );
  }

  analyzeCalls(): Record<string, unknown>[] {
    return this.calls.filter((c) => c.url === "/api/analyze").map((c) => c.body ?? {});
  }
}

export function deferred<T>(): { promise: Promise<T>; resolve: (v: T) => void } {
  let resolve!: (v: T) => void;
  const promise = new Promise<T>((r) => {
    resolve = r;
  });
  return { promise, resolve };
}

/** Lets every pending microtask and queued promise callback run. */
export async function settle(): Promise<void> {
  for (let i = 0; i < 10; i++) {
    await Promise.resolve();
  }
}

// ---- DOM readback -------------------------------------------------------

/** Bound values of every stem of one class, in bin order. */
export function stemValues(svg: Element, cls: string): number[] {
  return [...svg.querySelectorAll(`line.${cls}`)].map((line) =>
    Number(line.getAttribute("data-value")),
  );
}

/** Bound sample vector of one polyline trace, or null when absent. */
export function traceValues(svg: Element, cls: string): number[] | null {
  const line = svg.querySelector(`polyline.${cls}`);
  const data = line?.getAttribute("data-values");
  return data ? (JSON.parse(data) as number[]) : null;
}

export function stemGeometry(svg: Element, cls: string): string[] {
  return [...svg.querySelectorAll(`line.${cls}`)].map((line) =>
    ["x1", "y1", "x2", "y2"].map((a) => line.getAttribute(a)).join(" "),
  );
}
