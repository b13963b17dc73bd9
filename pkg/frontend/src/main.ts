import { ApiClient } from "./api.js";
import { DashboardApp, collectElements } from "./app.js";

// build-time API base; same-origin by default
const API_BASE =
  (globalThis as Record<string, unknown>)["HANDSPEAK_API_BASE"] as string ??
  window.location.origin;

new DashboardApp(collectElements(document), new ApiClient(API_BASE));
