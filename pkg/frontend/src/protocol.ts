// Wire protocol shared with the streaming service.
//
// Text frames are JSON control/telemetry messages; binary frames carry one
// hop of noisy samples followed by one hop of enhanced samples, both
// little-endian float32.

export interface StartMessage {
  type: "start";
  sample_rate: number;
  frame_len: number;
  hop: number;
  weight: number;
}

export interface AckMessage {
  type: "ack";
  weight: number;
  applies_at: number;
}

export interface TelemetryMessage {
  type: "telemetry";
  frame: number;
  mean_gk: number;
  mean_gcoh: number;
  weight: number;
  vad: boolean;
}

export interface ErrorMessage {
  type?: "error";
  error: string;
  weight?: number;
}

export type ServerMessage =
  | StartMessage
  | AckMessage
  | TelemetryMessage
  | ErrorMessage;

export interface AudioChunk {
  noisy: Float32Array;
  enhanced: Float32Array;
}

export function parseServerMessage(text: string): ServerMessage | null {
  let payload: unknown;
  try {
    payload = JSON.parse(text);
  } catch {
    return null;
  }
  if (typeof payload !== "object" || payload === null) return null;
  const msg = payload as Record<string, unknown>;
  if (
    msg.type === "start" ||
    msg.type === "ack" ||
    msg.type === "telemetry" ||
    msg.type === "error" ||
    typeof msg.error === "string"
  ) {
    return payload as ServerMessage;
  }
  return null;
}

export function decodeAudioChunk(data: ArrayBuffer): AudioChunk {
  if (data.byteLength % 8 !== 0) {
    throw new Error(`audio chunk of ${data.byteLength} bytes is not 2*hop floats`);
  }
  const all = new Float32Array(data);
  const hop = all.length / 2;
  return {
    noisy: all.subarray(0, hop),
    enhanced: all.subarray(hop),
  };
}

export function setWeightMessage(weight: number): string {
  if (!(weight >= 0 && weight <= 1)) {
    throw new Error("weight must be in [0,1]");
  }
  return JSON.stringify({ set_weight: weight });
}
