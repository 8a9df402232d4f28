// Session state machine: socket lifecycle, acked-weight tracking, jitter
// buffer and A/B source selection. Pure logic; the WebSocket is injected
// so tests can drive it without a browser.

import {
  AudioChunk,
  decodeAudioChunk,
  parseServerMessage,
  ServerMessage,
  setWeightMessage,
  StartMessage,
  TelemetryMessage,
} from "./protocol.js";

export interface SocketLike {
  send(data: string): void;
  close(): void;
  onopen: (() => void) | null;
  onclose: (() => void) | null;
  onerror: (() => void) | null;
  onmessage: ((ev: { data: string | ArrayBuffer }) => void) | null;
}

export type SocketFactory = (url: string) => SocketLike;

export type AudioSource = "enhanced" | "noisy";

export interface SessionEvents {
  onStart?: (msg: StartMessage) => void;
  onTelemetry?: (msg: TelemetryMessage) => void;
  onAckedWeight?: (weight: number, appliesAt: number) => void;
  onAudio?: (samples: Float32Array) => void;
  onError?: (reason: string) => void;
  onClose?: () => void;
}

export const JITTER_CHUNKS = 4; // 40 ms of buffering against network jitter

export class TunerSession {
  private socket: SocketLike | null = null;
  private queue: AudioChunk[] = [];
  private buffering = true;
  private source: AudioSource = "enhanced";
  // slider truth: only ever the last server-acked value
  ackedWeight: number | null = null;
  started = false;

  constructor(
    private url: string,
    private events: SessionEvents,
    private makeSocket: SocketFactory,
  ) {}

  connect(): void {
    const ws = this.makeSocket(this.url);
    this.socket = ws;
    ws.onmessage = (ev) => this.handleMessage(ev.data);
    ws.onerror = () => this.events.onError?.("connection");
    ws.onclose = () => {
      this.started = false;
      this.events.onClose?.();
    };
  }

  close(): void {
    this.socket?.close();
    this.socket = null;
  }

  requestWeight(weight: number): void {
    if (!this.socket) throw new Error("session not connected");
    this.socket.send(setWeightMessage(weight));
  }

  setSource(source: AudioSource): void {
    // takes effect on the next emitted chunk, no rebuffering needed
    this.source = source;
  }

  getSource(): AudioSource {
    return this.source;
  }

  pendingChunks(): number {
    return this.queue.length;
  }

  private handleMessage(data: string | ArrayBuffer): void {
    if (typeof data !== "string") {
      this.enqueue(decodeAudioChunk(data));
      return;
    }
    const msg = parseServerMessage(data);
    if (msg === null) return;
    this.dispatch(msg);
  }

  private dispatch(msg: ServerMessage): void {
    if ("error" in msg && msg.error !== undefined) {
      this.events.onError?.(msg.error);
      return;
    }
    switch (msg.type) {
      case "start":
        this.started = true;
        this.ackedWeight = msg.weight;
        this.events.onStart?.(msg);
        break;
      case "ack":
        this.ackedWeight = msg.weight;
        this.events.onAckedWeight?.(msg.weight, msg.applies_at);
        break;
      case "telemetry":
        this.events.onTelemetry?.(msg);
        break;
    }
  }

  private enqueue(chunk: AudioChunk): void {
    this.queue.push(chunk);
    if (this.buffering && this.queue.length < JITTER_CHUNKS) return;
    this.buffering = false;
    while (this.queue.length > 0) {
      const next = this.queue.shift()!;
      this.events.onAudio?.(
        this.source === "enhanced" ? next.enhanced : next.noisy,
      );
    }
  }
}
