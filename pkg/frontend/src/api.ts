/**
 * Typed client for the handspeak service. Every endpoint string lives in
 * this module; the rest of the app talks to the server exclusively through
 * these functions.
 */

export interface PlaylistEntry {
  kind: "Word" | "Letter" | "Digit" | "TenseMarker";
  value: string;
  asset_uri: string;
  label: string;
}

export interface PlaylistManifest {
  sentence: string;
  tense: "Past" | "Present" | "Future" | "None";
  keywords: string[];
  entries: PlaylistEntry[];
}

export interface LexiconEntry {
  gloss: string;
  kind: string;
  asset_id: string;
}

export interface LexiconListing {
  version: number;
  entries: LexiconEntry[];
}

export interface RecognitionMessage {
  label?: string;
  t?: number;
  error?: string;
}

export interface HandPayload {
  handedness: "Left" | "Right";
  points: number[][];
}

export interface LandmarkFramePayload {
  t: number;
  hands: HandPayload[];
  label?: string;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    detail: string,
  ) {
    super(detail);
  }
}

async function readDetail(res: Response): Promise<string> {
  try {
    const body = await res.json();
    if (body && typeof body.detail === "string") return body.detail;
  } catch {
    /* non-JSON error body */
  }
  return `request failed with status ${res.status}`;
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private token: string | null = null,
    private readonly fetchFn: typeof fetch = (...args) => fetch(...args),
  ) {}

  get authenticated(): boolean {
    return this.token !== null;
  }

  get sessionToken(): string | null {
    return this.token;
  }

  logout(): void {
    this.token = null;
  }

  private headers(json = true): Record<string, string> {
    const h: Record<string, string> = {};
    if (json) h["Content-Type"] = "application/json";
    if (this.token) h["Authorization"] = `Bearer ${this.token}`;
    return h;
  }

  private async post(path: string, body: unknown): Promise<Response> {
    const res = await this.fetchFn(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: this.headers(),
      body: JSON.stringify(body),
    });
    if (!res.ok) throw new ApiError(res.status, await readDetail(res));
    return res;
  }

  async signup(username: string, password: string): Promise<void> {
    await this.post("/api/signup", { username, password });
  }

  async login(username: string, password: string): Promise<void> {
    const res = await this.post("/api/login", { username, password });
    const body = (await res.json()) as { token: string };
    this.token = body.token;
  }

  async translate(text: string): Promise<PlaylistManifest> {
    const res = await this.post("/api/translate", { text });
    return (await res.json()) as PlaylistManifest;
  }

  async listLexicon(): Promise<LexiconListing> {
    const res = await this.fetchFn(`${this.baseUrl}/api/lexicon`, {
      headers: this.headers(false),
    });
    if (!res.ok) throw new ApiError(res.status, await readDetail(res));
    return (await res.json()) as LexiconListing;
  }

  /**
   * URL for a video asset. The token rides in the query string because
   * <video> elements cannot attach headers.
   */
  assetUrl(assetUri: string): string {
    const sep = assetUri.includes("?") ? "&" : "?";
    return `${this.baseUrl}${assetUri}${sep}token=${this.token ?? ""}`;
  }

  /** URL for the hello demo clip shown on the home page. */
  demoAssetUrl(): string {
    return this.assetUrl("/api/assets/word-hello");
  }

  /** ws:// or wss:// URL for the streaming recognition endpoint. */
  recognitionSocketUrl(): string {
    const ws = this.baseUrl.replace(/^http/, "ws");
    return `${ws}/ws/recognize?token=${this.token ?? ""}`;
  }
}
