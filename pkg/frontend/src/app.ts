/**
 * Dashboard wiring: auth panel, sentence input (typed or dictated),
 * keyword chips, sequential sign playback, and the live recognition feed.
 */

import { ApiClient, ApiError } from "./api.js";
import { RecognitionFeed } from "./feed.js";
import { PlaybackEngine, renderKeywords } from "./playback.js";
import { SpeechInput, bindMicButton } from "./speech.js";

interface Elements {
  authPanel: HTMLElement;
  dashboard: HTMLElement;
  username: HTMLInputElement;
  password: HTMLInputElement;
  signupBtn: HTMLButtonElement;
  loginBtn: HTMLButtonElement;
  authMessage: HTMLElement;
  sentence: HTMLInputElement;
  submitBtn: HTMLButtonElement;
  micBtn: HTMLButtonElement;
  micStatus: HTMLElement;
  inputMessage: HTMLElement;
  keywords: HTMLElement;
  tense: HTMLElement;
  playlist: HTMLElement;
  playBtn: HTMLButtonElement;
  pauseBtn: HTMLButtonElement;
  replayBtn: HTMLButtonElement;
  demoVideo: HTMLVideoElement;
  feed: HTMLElement;
  feedStatus: HTMLElement;
  feedToggle: HTMLButtonElement;
  sessionFile: HTMLInputElement;
}

function el<T extends HTMLElement>(root: ParentNode, id: string): T {
  const found = root.querySelector(`#${id}`);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

export function collectElements(root: ParentNode): Elements {
  return {
    authPanel: el(root, "auth-panel"),
    dashboard: el(root, "dashboard"),
    username: el(root, "username"),
    password: el(root, "password"),
    signupBtn: el(root, "signup-btn"),
    loginBtn: el(root, "login-btn"),
    authMessage: el(root, "auth-message"),
    sentence: el(root, "sentence"),
    submitBtn: el(root, "submit-btn"),
    micBtn: el(root, "mic-btn"),
    micStatus: el(root, "mic-status"),
    inputMessage: el(root, "input-message"),
    keywords: el(root, "keywords"),
    tense: el(root, "tense"),
    playlist: el(root, "playlist"),
    playBtn: el(root, "play-btn"),
    pauseBtn: el(root, "pause-btn"),
    replayBtn: el(root, "replay-btn"),
    demoVideo: el(root, "demo-video"),
    feed: el(root, "feed"),
    feedStatus: el(root, "feed-status"),
    feedToggle: el(root, "feed-toggle"),
    sessionFile: el(root, "session-file"),
  };
}

export class DashboardApp {
  readonly playback: PlaybackEngine;
  readonly feed: RecognitionFeed;
  readonly speech: SpeechInput;

  constructor(
    private readonly ui: Elements,
    private readonly api: ApiClient,
  ) {
    this.playback = new PlaybackEngine(ui.playlist, (uri) => api.assetUrl(uri));
    this.feed = new RecognitionFeed(ui.feed, ui.feedStatus, {
      socketUrl: () => api.recognitionSocketUrl(),
    });
    this.speech = new SpeechInput({
      onTranscript: (text) => {
        ui.sentence.value = text;
        ui.micStatus.textContent = "transcript ready — press Translate to send";
      },
      onStateChange: (state, detail) => {
        if (state === "listening") ui.micStatus.textContent = "listening…";
        else if (state === "denied")
          ui.micStatus.textContent = detail ?? "microphone denied";
        else if (detail) ui.micStatus.textContent = detail;
      },
    });
    this.bind();
  }

  private bind(): void {
    const { ui } = this;
    ui.signupBtn.addEventListener("click", () => void this.signup());
    ui.loginBtn.addEventListener("click", () => void this.login());
    ui.submitBtn.addEventListener("click", () => void this.submitSentence());
    ui.playBtn.addEventListener("click", () => this.playback.play());
    ui.pauseBtn.addEventListener("click", () => this.playback.pause());
    ui.replayBtn.addEventListener("click", () => this.playback.replay());
    ui.feedToggle.addEventListener("click", () => this.toggleFeed());
    ui.sessionFile.addEventListener("change", () => void this.replayFile());
    bindMicButton(ui.micBtn, ui.micStatus, this.speech);
  }

  async signup(): Promise<void> {
    const { ui } = this;
    try {
      await this.api.signup(ui.username.value, ui.password.value);
      ui.authMessage.textContent = "account created — log in to continue";
    } catch (err) {
      ui.authMessage.textContent =
        err instanceof ApiError ? err.message : "signup failed";
    }
  }

  async login(): Promise<void> {
    const { ui } = this;
    try {
      await this.api.login(ui.username.value, ui.password.value);
      ui.authMessage.textContent = "";
      ui.authPanel.hidden = true;
      ui.dashboard.hidden = false;
      // home-page demo slot: the lexicon's "hello" clip
      ui.demoVideo.src = this.api.demoAssetUrl();
    } catch (err) {
      ui.authMessage.textContent =
        err instanceof ApiError ? err.message : "login failed";
    }
  }

  private showLogin(message: string): void {
    const { ui } = this;
    this.api.logout();
    ui.dashboard.hidden = true;
    ui.authPanel.hidden = false;
    ui.authMessage.textContent = message;
  }

  async submitSentence(): Promise<void> {
    const { ui } = this;
    const text = ui.sentence.value.trim();
    if (!text) {
      ui.inputMessage.textContent = "type or dictate a sentence first";
      return;
    }
    ui.inputMessage.textContent = "";
    try {
      const manifest = await this.api.translate(text);
      renderKeywords(ui.keywords, manifest.keywords);
      ui.tense.textContent =
        manifest.tense === "None" ? "" : `tense: ${manifest.tense}`;
      this.playback.load(manifest);
    } catch (err) {
      if (err instanceof ApiError && err.status === 401) {
        this.showLogin("session expired — log in again");
      } else {
        ui.inputMessage.textContent =
          err instanceof ApiError ? err.message : "translation failed";
      }
    }
  }

  private toggleFeed(): void {
    if (this.feed.connected) {
      this.feed.disconnect();
      this.ui.feedToggle.textContent = "Start recognition";
    } else {
      this.feed.connect();
      this.ui.feedToggle.textContent = "Stop recognition";
    }
  }

  private async replayFile(): Promise<void> {
    const file = this.ui.sessionFile.files?.[0];
    if (!file) return;
    const { parseSessionJsonl } = await import("./feed.js");
    this.feed.replaySession(parseSessionJsonl(await file.text()));
  }
}
