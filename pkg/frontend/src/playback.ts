/**
 * Sequential playlist playback over a manifest. One <video> element per
 * entry; entries advance on "ended", and an entry whose asset fails gets a
 * warning badge and is skipped so the rest of the playlist still plays.
 */

import type { PlaylistManifest } from "./api.js";

export type AssetResolver = (assetUri: string) => string;

export class PlaybackEngine {
  private entries: HTMLVideoElement[] = [];
  private rows: HTMLElement[] = [];
  private index = 0;
  private playing = false;

  constructor(
    private readonly container: HTMLElement,
    private readonly resolveAsset: AssetResolver,
  ) {}

  get cursor(): number {
    return this.index;
  }

  get isPlaying(): boolean {
    return this.playing;
  }

  get entryCount(): number {
    return this.entries.length;
  }

  load(manifest: PlaylistManifest): void {
    this.stopCurrent();
    this.container.textContent = "";
    this.entries = [];
    this.rows = [];
    this.index = 0;
    this.playing = false;

    manifest.entries.forEach((entry, i) => {
      const row = document.createElement("div");
      row.className = "playlist-entry";
      row.dataset.index = String(i);

      const caption = document.createElement("span");
      caption.className = "entry-label";
      caption.textContent = `${entry.kind}: ${entry.label}`;
      row.appendChild(caption);

      const video = document.createElement("video");
      video.preload = "none";
      video.src = this.resolveAsset(entry.asset_uri);
      video.addEventListener("ended", () => this.onEntryDone(i));
      video.addEventListener("error", () => this.onEntryFailed(i));
      row.appendChild(video);

      this.container.appendChild(row);
      this.entries.push(video);
      this.rows.push(row);
    });
    this.markCurrent();
  }

  play(): void {
    if (this.entries.length === 0 || this.index >= this.entries.length) return;
    this.playing = true;
    this.startCurrent();
  }

  pause(): void {
    if (!this.playing) return;
    this.playing = false;
    this.entries[this.index]?.pause();
  }

  replay(): void {
    this.stopCurrent();
    this.index = 0;
    this.markCurrent();
    this.play();
  }

  private startCurrent(): void {
    const video = this.entries[this.index];
    if (!video) return;
    this.markCurrent();
    // jsdom and some browsers reject play() without user gesture; playback
    // state is still tracked through the media events
    try {
      const p = video.play();
      if (p && typeof p.catch === "function") p.catch(() => undefined);
    } catch {
      /* media playback unavailable in this environment */
    }
  }

  private stopCurrent(): void {
    this.entries[this.index]?.pause();
    this.playing = false;
  }

  private onEntryDone(i: number): void {
    if (i !== this.index || !this.playing) return;
    this.advance();
  }

  private onEntryFailed(i: number): void {
    this.badge(i);
    if (i === this.index && this.playing) this.advance();
  }

  private advance(): void {
    this.index += 1;
    if (this.index >= this.entries.length) {
      // end of playlist: stop; replay() starts over from entry 0
      this.index = this.entries.length;
      this.playing = false;
      this.rows.forEach((r) => r.classList.remove("current"));
      return;
    }
    this.startCurrent();
  }

  private badge(i: number): void {
    const row = this.rows[i];
    if (!row || row.querySelector(".badge-failed")) return;
    const badge = document.createElement("span");
    badge.className = "badge-failed";
    badge.textContent = "asset unavailable";
    row.appendChild(badge);
  }

  private markCurrent(): void {
    this.rows.forEach((row, i) =>
      row.classList.toggle("current", i === this.index),
    );
  }
}

/** Render keyword chips in manifest order; strings come verbatim from the server. */
export function renderKeywords(container: HTMLElement, keywords: string[]): void {
  container.textContent = "";
  for (const word of keywords) {
    const chip = document.createElement("span");
    chip.className = "keyword-chip";
    chip.textContent = word;
    container.appendChild(chip);
  }
}
