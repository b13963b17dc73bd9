/**
 * Live recognition feed. Streams landmark frames to the recognition socket
 * and renders each emitted label exactly once per server emission; the
 * server's smoother guarantees one emission per steady gesture segment.
 * Drops reconnect automatically with a visible status line.
 */

import type { LandmarkFramePayload, RecognitionMessage } from "./api.js";

export type SocketFactory = (url: string) => WebSocket;

export interface FeedOptions {
  socketUrl: () => string;
  createSocket?: SocketFactory;
  reconnectDelayMs?: number;
  maxFeedRows?: number;
}

export class RecognitionFeed {
  private socket: WebSocket | null = null;
  private closedByUser = false;
  private reconnectTimer: ReturnType<typeof setTimeout> | null = null;
  private readonly createSocket: SocketFactory;
  private readonly reconnectDelayMs: number;
  private readonly maxFeedRows: number;

  constructor(
    private readonly feedEl: HTMLElement,
    private readonly statusEl: HTMLElement,
    private readonly options: FeedOptions,
  ) {
    this.createSocket = options.createSocket ?? ((url) => new WebSocket(url));
    this.reconnectDelayMs = options.reconnectDelayMs ?? 1000;
    this.maxFeedRows = options.maxFeedRows ?? 50;
  }

  get connected(): boolean {
    return this.socket !== null && this.socket.readyState === WebSocket.OPEN;
  }

  connect(): void {
    this.closedByUser = false;
    this.setStatus("connecting");
    const socket = this.createSocket(this.options.socketUrl());
    this.socket = socket;
    socket.addEventListener("open", () => this.setStatus("live"));
    socket.addEventListener("message", (ev) => this.onMessage(ev));
    socket.addEventListener("close", () => this.onClose());
  }

  disconnect(): void {
    this.closedByUser = true;
    if (this.reconnectTimer !== null) clearTimeout(this.reconnectTimer);
    this.reconnectTimer = null;
    this.socket?.close();
    this.socket = null;
    this.setStatus("stopped");
  }

  sendFrame(frame: LandmarkFramePayload): void {
    if (!this.connected) return;
    this.socket!.send(JSON.stringify(frame));
  }

  /** Replay a recorded landmark session (e.g. parsed from a JSONL file). */
  replaySession(frames: LandmarkFramePayload[]): void {
    for (const frame of frames) this.sendFrame(frame);
  }

  private onMessage(ev: MessageEvent): void {
    let msg: RecognitionMessage;
    try {
      msg = JSON.parse(String(ev.data));
    } catch {
      return;
    }
    if (msg.error) {
      this.setStatus(`server error: ${msg.error}`);
      return;
    }
    if (typeof msg.label !== "string") return;
    this.appendRow(msg.label, msg.t ?? null);
  }

  private onClose(): void {
    this.socket = null;
    if (this.closedByUser) return;
    this.setStatus("reconnecting");
    this.reconnectTimer = setTimeout(() => this.connect(), this.reconnectDelayMs);
  }

  private appendRow(label: string, t: number | null): void {
    const row = document.createElement("div");
    row.className = label === "none" ? "feed-row feed-none" : "feed-row";
    row.dataset.label = label;
    row.textContent = t === null ? label : `${label} @ ${t} ms`;
    this.feedEl.appendChild(row);
    while (this.feedEl.children.length > this.maxFeedRows) {
      this.feedEl.removeChild(this.feedEl.firstChild!);
    }
  }

  private setStatus(text: string): void {
    this.statusEl.textContent = text;
  }
}

/** Parse a landmark session in JSONL form, skipping malformed lines. */
export function parseSessionJsonl(text: string): LandmarkFramePayload[] {
  const frames: LandmarkFramePayload[] = [];
  for (const line of text.split("\n")) {
    const trimmed = line.trim();
    if (!trimmed) continue;
    try {
      const doc = JSON.parse(trimmed);
      if (typeof doc.t === "number" && Array.isArray(doc.hands)) {
        frames.push(doc as LandmarkFramePayload);
      }
    } catch {
      /* skip malformed line */
    }
  }
  return frames;
}
