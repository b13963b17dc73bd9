import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

/** Load the real page markup into jsdom so tests exercise the shipped DOM. */
export function mountPage(): void {
  const here = dirname(fileURLToPath(import.meta.url));
  const html = readFileSync(join(here, "..", "index.html"), "utf-8");
  const body = html.match(/<body>([\s\S]*)<\/body>/)![1];
  document.body.innerHTML = body.replace(/<script[\s\S]*?<\/script>/g, "");
}

export function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

export const FIXTURE_MANIFEST = {
  sentence: "I am happy",
  tense: "Present" as const,
  keywords: ["i", "happy"],
  entries: [
    {
      kind: "TenseMarker" as const,
      value: "Now",
      asset_uri: "/api/assets/tensemarker-now",
      label: "Now",
    },
    {
      kind: "Word" as const,
      value: "i",
      asset_uri: "/api/assets/word-i",
      label: "i",
    },
    {
      kind: "Word" as const,
      value: "happy",
      asset_uri: "/api/assets/word-happy",
      label: "happy",
    },
  ],
};
