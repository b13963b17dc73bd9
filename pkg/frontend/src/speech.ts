/**
 * Microphone dictation via the browser speech recognizer. The transcript
 * only fills the input field — submitting stays an explicit user action so
 * mis-recognitions can be corrected first.
 */

interface SpeechRecognitionLike {
  lang: string;
  interimResults: boolean;
  maxAlternatives: number;
  onresult: ((ev: { results: { 0: { 0: { transcript: string } } } }) => void) | null;
  onerror: ((ev: { error: string }) => void) | null;
  onend: (() => void) | null;
  start(): void;
  stop(): void;
}

type SpeechRecognitionCtor = new () => SpeechRecognitionLike;

export type SpeechState = "unsupported" | "idle" | "listening" | "denied";

export interface SpeechInputOptions {
  onTranscript: (text: string) => void;
  onStateChange?: (state: SpeechState, detail?: string) => void;
  recognizerCtor?: SpeechRecognitionCtor | null;
}

function builtinRecognizer(): SpeechRecognitionCtor | null {
  const w = globalThis as Record<string, unknown>;
  return (
    (w["SpeechRecognition"] as SpeechRecognitionCtor | undefined) ??
    (w["webkitSpeechRecognition"] as SpeechRecognitionCtor | undefined) ??
    null
  );
}

export class SpeechInput {
  private state: SpeechState;
  private readonly ctor: SpeechRecognitionCtor | null;
  private active: SpeechRecognitionLike | null = null;

  constructor(private readonly options: SpeechInputOptions) {
    this.ctor =
      options.recognizerCtor !== undefined
        ? options.recognizerCtor
        : builtinRecognizer();
    this.state = this.ctor ? "idle" : "unsupported";
    this.notify();
  }

  get currentState(): SpeechState {
    return this.state;
  }

  get available(): boolean {
    return this.state !== "unsupported";
  }

  start(): void {
    if (!this.ctor || this.state === "listening") return;
    const recognizer = new this.ctor();
    recognizer.lang = "en-US";
    recognizer.interimResults = false;
    recognizer.maxAlternatives = 1;
    recognizer.onresult = (ev) => {
      const transcript = ev.results[0][0].transcript;
      // fills the field only; the user presses submit themselves
      this.options.onTranscript(transcript);
    };
    recognizer.onerror = (ev) => {
      if (ev.error === "not-allowed" || ev.error === "service-not-allowed") {
        this.setState("denied", "microphone permission denied");
      } else {
        this.setState("idle", `speech error: ${ev.error}`);
      }
    };
    recognizer.onend = () => {
      if (this.state === "listening") this.setState("idle");
      this.active = null;
    };
    this.active = recognizer;
    this.setState("listening");
    recognizer.start();
  }

  stop(): void {
    this.active?.stop();
  }

  private setState(state: SpeechState, detail?: string): void {
    this.state = state;
    this.notify(detail);
  }

  private notify(detail?: string): void {
    this.options.onStateChange?.(this.state, detail);
  }
}

/** Wire a mic button + status element to a SpeechInput. */
export function bindMicButton(
  button: HTMLButtonElement,
  statusEl: HTMLElement,
  speech: SpeechInput,
): void {
  if (!speech.available) {
    button.disabled = true;
    button.title = "speech recognition is not supported in this browser";
    statusEl.textContent = "speech input unavailable — type your sentence";
    return;
  }
  button.addEventListener("click", () => {
    if (speech.currentState === "listening") speech.stop();
    else speech.start();
  });
}
