/**
 * Recognition feed: a replayed landmark JSONL session must surface each
 * smoothed label exactly once per steady gesture segment. The mock server
 * reimplements the service's smoothing contract (5-frame window, 3
 * agreeing frames, mean confidence >= 0.7, message per state transition)
 * so the test replays real wire traffic end to end.
 */

import { afterEach, describe, expect, it, vi } from "vitest";

import type { LandmarkFramePayload } from "../src/api.js";
import { RecognitionFeed, parseSessionJsonl } from "../src/feed.js";

const WINDOW = 5;
const MIN_AGREE = 3;
const MIN_CONF = 0.7;

class ReferenceSmoother {
  private window: Array<{ label: string; conf: number }> = [];
  current = "none";

  /** Returns the new stable label when it transitions, else null. */
  push(label: string, conf: number): string | null {
    this.window.push({ label, conf });
    if (this.window.length > WINDOW) this.window.shift();
    const counts = new Map<string, number>();
    for (const p of this.window) {
      counts.set(p.label, (counts.get(p.label) ?? 0) + 1);
    }
    let candidate = "none";
    let best = 0;
    for (const [lab, n] of counts) {
      if (n > best) {
        candidate = lab;
        best = n;
      }
    }
    let stable = "none";
    if (best >= MIN_AGREE) {
      const agreeing = this.window.filter((p) => p.label === candidate);
      const mean =
        agreeing.reduce((s, p) => s + p.conf, 0) / agreeing.length;
      if (mean >= MIN_CONF) stable = candidate;
    }
    if (stable !== this.current) {
      this.current = stable;
      return stable;
    }
    return null;
  }
}

type Listener = (ev: { data?: string }) => void;

class MockSocket {
  static instances: MockSocket[] = [];
  readyState = WebSocket.CONNECTING;
  private listeners = new Map<string, Listener[]>();
  private smoother = new ReferenceSmoother();

  constructor(public readonly url: string) {
    MockSocket.instances.push(this);
  }

  addEventListener(type: string, fn: Listener): void {
    const list = this.listeners.get(type) ?? [];
    list.push(fn);
    this.listeners.set(type, list);
  }

  private emit(type: string, ev: { data?: string } = {}): void {
    for (const fn of this.listeners.get(type) ?? []) fn(ev);
  }

  open(): void {
    this.readyState = WebSocket.OPEN;
    this.emit("open");
  }

  send(data: string): void {
    const frame = JSON.parse(data) as LandmarkFramePayload & {
      conf?: number;
    };
    // the test session encodes the per-frame prediction in the label field
    const transition = this.smoother.push(frame.label ?? "none",
                                          frame.conf ?? 0.9);
    if (transition !== null) {
      this.emit("message", {
        data: JSON.stringify({ label: transition, t: frame.t }),
      });
    }
  }

  close(): void {
    this.readyState = WebSocket.CLOSED;
    this.emit("close");
  }

  dropConnection(): void {
    this.readyState = WebSocket.CLOSED;
    this.emit("close");
  }
}

function makeFeed(reconnectDelayMs = 5) {
  document.body.innerHTML =
    '<div id="feed"></div><p id="status"></p>';
  MockSocket.instances = [];
  const feed = new RecognitionFeed(
    document.getElementById("feed")!,
    document.getElementById("status")!,
    {
      socketUrl: () => "ws://svc.test/ws/recognize?token=t",
      createSocket: (url) => new MockSocket(url) as unknown as WebSocket,
      reconnectDelayMs,
    },
  );
  feed.connect();
  const socket = MockSocket.instances[0];
  socket.open();
  return { feed, socket };
}

function session(
  segments: Array<{ label: string; conf: number; frames: number }>,
): LandmarkFramePayload[] {
  const out: Array<LandmarkFramePayload & { conf: number }> = [];
  let t = 0;
  for (const seg of segments) {
    for (let i = 0; i < seg.frames; i++) {
      out.push({ t, hands: [], label: seg.label, conf: seg.conf });
      t += 33;
    }
  }
  return out;
}

function feedLabels(): string[] {
  return Array.from(document.querySelectorAll("#feed .feed-row")).map(
    (r) => (r as HTMLElement).dataset.label!,
  );
}

afterEach(() => {
  vi.useRealTimers();
});

describe("recognition feed", () => {
  it("renders each steady-segment label exactly once", () => {
    const { feed } = makeFeed();
    const frames = session([
      { label: "Hello there", conf: 0.9, frames: 8 },
      { label: "rest", conf: 0.2, frames: 6 },
      { label: "Please", conf: 0.9, frames: 6 },
      { label: "rest", conf: 0.2, frames: 6 },
      { label: "Hello there", conf: 0.9, frames: 6 },
    ]);
    feed.replaySession(frames);
    const emitted = feedLabels().filter((l) => l !== "none");
    expect(emitted).toEqual(["Hello there", "Please", "Hello there"]);
  });

  it("shows a none placeholder between gestures, styled as such", () => {
    const { feed } = makeFeed();
    feed.replaySession(
      session([
        { label: "Stop it", conf: 0.9, frames: 6 },
        { label: "rest", conf: 0.2, frames: 6 },
      ]),
    );
    const rows = Array.from(document.querySelectorAll("#feed .feed-row"));
    expect(feedLabels()).toEqual(["Stop it", "none"]);
    expect(rows[1].classList.contains("feed-none")).toBe(true);
  });

  it("low-confidence frames never surface a label", () => {
    const { feed } = makeFeed();
    feed.replaySession(
      session([{ label: "Why are you crying?", conf: 0.4, frames: 10 }]),
    );
    expect(feedLabels()).toEqual([]);
  });

  it("a replayed JSONL file round-trips through the parser", () => {
    const { feed } = makeFeed();
    const frames = session([{ label: "Be careful", conf: 0.9, frames: 6 }]);
    const jsonl =
      frames.map((f) => JSON.stringify(f)).join("\n") + "\nnot json\n\n";
    const parsed = parseSessionJsonl(jsonl);
    expect(parsed).toHaveLength(6);
    feed.replaySession(parsed);
    expect(feedLabels()).toEqual(["Be careful"]);
  });

  it("reconnects automatically after a dropped socket", () => {
    vi.useFakeTimers();
    const { feed, socket } = makeFeed(10);
    expect(feed.connected).toBe(true);
    socket.dropConnection();
    expect(document.getElementById("status")!.textContent).toBe("reconnecting");
    vi.advanceTimersByTime(20);
    expect(MockSocket.instances).toHaveLength(2);
    MockSocket.instances[1].open();
    expect(feed.connected).toBe(true);
  });

  it("does not reconnect after a user-initiated stop", () => {
    vi.useFakeTimers();
    const { feed } = makeFeed(10);
    feed.disconnect();
    vi.advanceTimersByTime(50);
    expect(MockSocket.instances).toHaveLength(1);
    expect(document.getElementById("status")!.textContent).toBe("stopped");
  });
});
