import { defineConfig } from "vitest/config";

// Dev server proxies /api to a locally running analysis service; the
// production bundle is served by the service itself (--ui-dist), so all
// requests are same-origin there.
export default defineConfig({
  server: {
    proxy: { "/api": "http://127.0.0.1:8000" },
  },
  build: {
    outDir: "dist",
  },
  test: {
    environment: "jsdom",
    include: ["tests/**/*.test.ts"],
  },
});
