// Page wiring: demo list, upload, slider, A/B toggle, telemetry strip.

import { ChunkPlayer } from "./player.js";
import { SocketLike, TunerSession } from "./session.js";
import { drawStrip, TelemetryHistory } from "./telemetry.js";

const SERVICE = `${location.protocol}//${location.host}`;
const WS_BASE = SERVICE.replace(/^http/, "ws");

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const banner = el<HTMLDivElement>("banner");
const demoSelect = el<HTMLSelectElement>("demos");
const uploadInput = el<HTMLInputElement>("upload");
const startBtn = el<HTMLButtonElement>("start");
const retryBtn = el<HTMLButtonElement>("retry");
const abToggle = el<HTMLInputElement>("ab");
const slider = el<HTMLInputElement>("weight");
const sliderLabel = el<HTMLSpanElement>("weight-value");
const strip = el<HTMLCanvasElement>("strip");

let session: TunerSession | null = null;
let player: ChunkPlayer | null = null;
const history = new TelemetryHistory();

function showBanner(text: string): void {
  banner.textContent = text;
  banner.style.display = "block";
  retryBtn.style.display = "inline-block";
}

function hideBanner(): void {
  banner.style.display = "none";
  retryBtn.style.display = "none";
}

async function loadDemos(): Promise<void> {
  try {
    const res = await fetch(`${SERVICE}/demos`);
    const body = (await res.json()) as {
      demos: { name: string; theta: number; snr_db: number }[];
    };
    demoSelect.innerHTML = "";
    for (const demo of body.demos) {
      const opt = document.createElement("option");
      opt.value = demo.name;
      opt.textContent = `${demo.name} (θ=${demo.theta}°, ${demo.snr_db} dB)`;
      demoSelect.appendChild(opt);
    }
    hideBanner();
  } catch {
    showBanner("service unreachable");
  }
}

async function uploadFile(file: File): Promise<string | null> {
  const res = await fetch(`${SERVICE}/upload`, {
    method: "POST",
    body: await file.arrayBuffer(),
  });
  const body = await res.json();
  if (!res.ok) {
    showBanner(`upload rejected: ${body.error}`);
    return null;
  }
  return body.id as string;
}

async function startSession(): Promise<void> {
  session?.close();
  await player?.close();
  let url: string;
  if (uploadInput.files && uploadInput.files.length > 0) {
    const id = await uploadFile(uploadInput.files[0]);
    if (id === null) return;
    url = `${WS_BASE}/session?upload=${id}`;
  } else {
    url = `${WS_BASE}/session?demo=${demoSelect.value}`;
  }

  session = new TunerSession(
    url,
    {
      onStart: (msg) => {
        hideBanner();
        player = new ChunkPlayer(msg.sample_rate);
        void player.resume();
        slider.value = String(msg.weight);
        sliderLabel.textContent = msg.weight.toFixed(2);
      },
      onAudio: (samples) => player?.play(samples),
      onAckedWeight: (weight) => {
        // the displayed value is always the last acked one
        slider.value = String(weight);
        sliderLabel.textContent = weight.toFixed(2);
      },
      onTelemetry: (msg) => {
        history.push(msg);
        drawStrip(strip, history);
      },
      onError: (reason) => showBanner(`service error: ${reason}`),
      onClose: () => showBanner("session closed"),
    },
    (wsUrl) => {
      const ws = new WebSocket(wsUrl);
      ws.binaryType = "arraybuffer";
      const adapter: SocketLike = {
        send: (d) => ws.send(d),
        close: () => ws.close(),
        onopen: null,
        onclose: null,
        onerror: null,
        onmessage: null,
      };
      ws.onopen = () => adapter.onopen?.();
      ws.onclose = () => adapter.onclose?.();
      ws.onerror = () => adapter.onerror?.();
      ws.onmessage = (ev) =>
        adapter.onmessage?.({ data: ev.data as string | ArrayBuffer });
      return adapter;
    },
  );
  session.connect();
}

startBtn.addEventListener("click", () => void startSession());
retryBtn.addEventListener("click", () => {
  void loadDemos();
  void startSession();
});
slider.addEventListener("input", () => {
  // optimistic display is forbidden: show the request transiently only in
  // the numeric label, the slider snaps to the ack
  session?.requestWeight(Number(slider.value));
});
abToggle.addEventListener("change", () => {
  session?.setSource(abToggle.checked ? "noisy" : "enhanced");
});

void loadDemos();
