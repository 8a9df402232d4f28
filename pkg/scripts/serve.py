#!/usr/bin/env python3
"""Run the streaming service for the tuner UI.

Usage: python3 scripts/serve.py [--host 127.0.0.1] [--port 8000]
"""

import argparse
from pathlib import Path

import uvicorn
from starlette.staticfiles import StaticFiles

from duomic.service import create_app


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--host", default="127.0.0.1")
    ap.add_argument("--port", type=int, default=8000)
    args = ap.parse_args()
    app = create_app()
    frontend = Path(__file__).resolve().parent.parent / "frontend"
    if (frontend / "dist").exists():
        app.mount("/ui", StaticFiles(directory=frontend, html=True),
                  name="ui")
        print(f"tuner UI at http://{args.host}:{args.port}/ui/")
    uvicorn.run(app, host=args.host, port=args.port)


if __name__ == "__main__":
    main()
