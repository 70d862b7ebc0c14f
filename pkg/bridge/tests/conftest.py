import socket
import threading
import time

import pytest
import uvicorn
from fastapi.testclient import TestClient

from laysum_bridge import create_app


@pytest.fixture(scope="session")
def client():
    return TestClient(create_app(mock=True))


def free_port() -> int:
    with socket.socket() as sock:
        sock.bind(("127.0.0.1", 0))
        return sock.getsockname()[1]


@pytest.fixture(scope="session")
def live_bridge_url():
    """A real uvicorn server in a daemon thread, for clients that speak raw HTTP."""
    port = free_port()
    config = uvicorn.Config(
        create_app(mock=True), host="127.0.0.1", port=port, log_level="error"
    )
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    deadline = time.time() + 10
    while not server.started:
        if time.time() > deadline:
            raise RuntimeError("bridge server did not start in time")
        time.sleep(0.02)
    yield f"http://127.0.0.1:{port}"
    server.should_exit = True
    thread.join(timeout=5)
