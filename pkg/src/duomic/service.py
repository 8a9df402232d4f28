"""Streaming service: one enhancement engine per WebSocket session.

Endpoints:
  GET  /demos            list built-in demo scenes
  POST /upload           raw stereo WAV body -> {"id": ...}
  WS   /session          ?demo=<name> or ?upload=<id>; optional
                         &weight=<0..1> and &pace=0 (tests run unpaced)

Session protocol: server sends a JSON "start" message, then per frame one
binary message (hop noisy float32 samples followed by hop enhanced float32
samples, little-endian) and one JSON "telemetry" message. The client may
send {"set_weight": w} at any time; the ack echoes the applied value and
the frame index at which it takes effect (the next processed frame).
"""

from __future__ import annotations

import asyncio
import io
import json
import uuid

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from starlette.websockets import WebSocket, WebSocketDisconnect

from .config import EnhanceConfig, SceneConfig
from .errors import FormatError
from .pipeline import Enhancer
from .signals import synthetic_speech, white_noise
from .simulate import make_scene
from .wavio import read_wav

DEMO_SPECS = {
    "white_theta90_snr0": SceneConfig(theta=90.0, snr_db=0.0),
    "white_theta45_snr5": SceneConfig(theta=45.0, snr_db=5.0),
    "white_theta135_snr-5": SceneConfig(theta=135.0, snr_db=-5.0),
}


def _demo_scene(cfg: SceneConfig) -> np.ndarray:
    speech = synthetic_speech(4.0, cfg.fs, seed=7)
    noise = white_noise(4.0, cfg.fs, seed=11)
    scene = make_scene(speech, noise, cfg)
    return np.stack([scene.ch1, scene.ch2], axis=1)


def create_app() -> FastAPI:
    app = FastAPI(title="duomic stream service")
    app.state.uploads = {}
    app.state.demo_cache = {}

    def demo_audio(name: str) -> np.ndarray:
        if name not in app.state.demo_cache:
            app.state.demo_cache[name] = _demo_scene(DEMO_SPECS[name])
        return app.state.demo_cache[name]

    @app.get("/demos")
    def demos():
        return {"demos": [
            {"name": name, "theta": cfg.theta, "snr_db": cfg.snr_db}
            for name, cfg in DEMO_SPECS.items()]}

    @app.post("/upload")
    async def upload(request: Request):
        body = await request.body()
        try:
            rate, data = read_wav(io.BytesIO(body))
        except FormatError:
            return JSONResponse({"error": "format"}, status_code=400)
        if rate != 16000:
            return JSONResponse({"error": "sample_rate"}, status_code=400)
        if data.ndim != 2 or data.shape[1] != 2:
            return JSONResponse({"error": "channels"}, status_code=400)
        upload_id = uuid.uuid4().hex
        app.state.uploads[upload_id] = data
        return {"id": upload_id, "samples": int(data.shape[0])}

    @app.websocket("/session")
    async def session(ws: WebSocket):
        await ws.accept()
        params = ws.query_params
        demo = params.get("demo")
        upload_id = params.get("upload")
        if demo is not None and demo in DEMO_SPECS:
            stereo = demo_audio(demo)
        elif upload_id is not None and upload_id in app.state.uploads:
            stereo = app.state.uploads[upload_id]
        else:
            await ws.send_json({"error": "source"})
            await ws.close()
            return
        paced = params.get("pace", "1") != "0"
        cfg = EnhanceConfig()
        engine = Enhancer(cfg)
        try:
            w0 = float(params.get("weight", cfg.combiner.weight))
        except ValueError:
            w0 = cfg.combiner.weight
        if 0.0 <= w0 <= 1.0:
            engine.weight = w0

        frame_len, hop = cfg.stft.frame_len, cfg.stft.hop
        fs = cfg.stft.sample_rate
        await ws.send_json({"type": "start", "sample_rate": fs,
                            "frame_len": frame_len, "hop": hop,
                            "weight": engine.weight})

        control: asyncio.Queue = asyncio.Queue()
        closed = asyncio.Event()

        async def recv_loop():
            try:
                while True:
                    msg = await ws.receive_text()
                    try:
                        control.put_nowait(json.loads(msg))
                    except json.JSONDecodeError:
                        control.put_nowait({"_malformed": True})
            except WebSocketDisconnect:
                closed.set()
            except Exception:
                closed.set()

        recv_task = asyncio.create_task(recv_loop())
        loop = asyncio.get_running_loop()
        period = hop / fs
        next_deadline = loop.time() + period
        start = 0
        n = stereo.shape[0]
        try:
            while not closed.is_set():
                while not control.empty():
                    msg = control.get_nowait()
                    if "set_weight" in msg:
                        w = msg["set_weight"]
                        if isinstance(w, (int, float)) and 0.0 <= w <= 1.0:
                            engine.weight = float(w)
                            await ws.send_json({
                                "type": "ack", "weight": float(w),
                                "applies_at": engine.frame_index})
                        else:
                            await ws.send_json({
                                "type": "error", "error": "weight",
                                "weight": engine.weight})
                if start + frame_len > n:
                    start = 0          # loop the source
                seg = stereo[start: start + frame_len]
                noisy = seg[:hop, 0]    # aligned with the emitted OLA chunk
                enhanced = engine.process_frame(seg[:, 0], seg[:, 1])
                payload = np.concatenate([noisy, enhanced]).astype("<f4")
                await ws.send_bytes(payload.tobytes())
                t = engine.telemetry
                await ws.send_json({
                    "type": "telemetry", "frame": t.frame_index,
                    "mean_gk": round(t.mean_gk, 5),
                    "mean_gcoh": round(t.mean_gcoh, 5),
                    "weight": t.weight, "vad": t.vad_speech})
                start += hop
                if paced:
                    delay = next_deadline - loop.time()
                    if delay > 0:
                        await asyncio.sleep(delay)
                    next_deadline += period
                else:
                    # unpaced sessions still yield so tests cannot be flooded
                    await asyncio.sleep(0.001)
        except (WebSocketDisconnect, RuntimeError):
            pass
        finally:
            recv_task.cancel()

    return app


app = create_app()
