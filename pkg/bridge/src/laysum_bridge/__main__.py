"""Serve the bridge: `laysum-bridge --port 8099 --mock` (or `python -m laysum_bridge`)."""

from __future__ import annotations

import argparse
import sys

import uvicorn

from .app import create_app
from .backends import BackendConfigError, RealBackends


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="laysum-bridge", description=__doc__)
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8099)
    parser.add_argument(
        "--mock", action="store_true", help="deterministic key-free mock backends"
    )
    args = parser.parse_args(argv)

    if args.mock:
        app = create_app(mock=True)
    else:
        try:
            backends = RealBackends.from_env()
        except BackendConfigError as exc:
            print(f"laysum-bridge: {exc}", file=sys.stderr)
            return 1
        app = create_app(mock=False, backends=backends)

    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


if __name__ == "__main__":
    sys.exit(main())
