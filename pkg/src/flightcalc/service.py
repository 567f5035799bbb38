"""Local stateless calculation service.

A small HTTP wrapper over :func:`flightcalc.api.dispatch` for use by the
browser planner or any other local client:

* ``POST /api/v1/calc/<operation>`` with a JSON body of inputs (either
  the inputs object itself or ``{"inputs": {...}}``) returns the same
  response envelope the CLI prints with ``--json``.
* ``GET /api/v1/catalogue`` describes every operation and bundled data.
* ``GET /api/v1/health`` is a liveness probe.

The server is stateless and side-effect free: identical requests give
byte-identical responses.  It binds to loopback unless told otherwise
and can optionally serve a static UI directory alongside the API.
"""

from __future__ import annotations

import json
import mimetypes
import os
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import urlparse

from flightcalc import __version__, api

API_PREFIX = "/api/v1/"
MAX_BODY_BYTES = 1_000_000

_STATUS_BY_CODE = {
    "validation": 400,
    "unit": 400,
    "unsolvable": 400,
    "unknown_operation": 404,
    "internal": 500,
}


def _status_for(response: dict) -> int:
    if response["ok"]:
        return 200
    return _STATUS_BY_CODE.get(response["error"]["code"], 500)


def _error_envelope(operation: str, code: str, message: str) -> dict:
    return {
        "ok": False,
        "operation": operation,
        "error": {"code": code, "message": message},
    }


class CalcRequestHandler(BaseHTTPRequestHandler):
    server_version = "flightcalc/" + __version__
    protocol_version = "HTTP/1.1"

    # ------------------------------------------------------------------
    def _send_cors(self) -> None:
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def _send_json(self, status: int, payload: dict) -> None:
        body = json.dumps(payload, indent=2, sort_keys=True).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self._send_cors()
        self.end_headers()
        self.wfile.write(body)

    def _send_bytes(self, status: int, content_type: str, body: bytes) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self._send_cors()
        self.end_headers()
        self.wfile.write(body)

    # ------------------------------------------------------------------
    def do_OPTIONS(self) -> None:  # noqa: N802 - http.server naming
        self.send_response(204)
        self.send_header("Content-Length", "0")
        self._send_cors()
        self.end_headers()

    def do_GET(self) -> None:  # noqa: N802
        path = urlparse(self.path).path
        if path == API_PREFIX + "catalogue":
            self._send_json(200, api.catalogue())
            return
        if path == API_PREFIX + "health":
            self._send_json(
                200, {"ok": True, "service": "flightcalc", "version": __version__}
            )
            return
        if path.startswith(API_PREFIX):
            self._send_json(
                404, _error_envelope(path, "unknown_operation", f"no resource at {path}")
            )
            return
        self._serve_static(path)

    def do_POST(self) -> None:  # noqa: N802
        path = urlparse(self.path).path
        if not path.startswith(API_PREFIX + "calc/"):
            self._send_json(
                404, _error_envelope(path, "unknown_operation", f"no resource at {path}")
            )
            return
        operation = path[len(API_PREFIX + "calc/"):]
        try:
            length = int(self.headers.get("Content-Length", "0"))
        except ValueError:
            length = -1
        if length < 0 or length > MAX_BODY_BYTES:
            # Drain (bounded) so the client finishes sending and can read
            # the rejection instead of hitting a reset mid-upload.
            remaining = min(length, 8 * MAX_BODY_BYTES) if length > 0 else 0
            while remaining > 0:
                chunk = self.rfile.read(min(remaining, 65536))
                if not chunk:
                    break
                remaining -= len(chunk)
            self.close_connection = True
            self._send_json(
                400,
                _error_envelope(
                    operation, "validation",
                    f"request body must be 0-{MAX_BODY_BYTES} bytes with a valid "
                    "Content-Length",
                ),
            )
            return
        raw = self.rfile.read(length) if length else b""
        if raw.strip():
            try:
                doc = json.loads(raw)
            except json.JSONDecodeError as exc:
                self._send_json(
                    400,
                    _error_envelope(
                        operation, "validation", f"request body is not valid JSON: {exc}"
                    ),
                )
                return
        else:
            doc = {}
        inputs = doc.get("inputs", doc) if isinstance(doc, dict) else doc
        response = api.dispatch(operation, inputs)
        self._send_json(_status_for(response), response)

    # ------------------------------------------------------------------
    def _serve_static(self, path: str) -> None:
        root = getattr(self.server, "static_dir", None)
        if root is None:
            self._send_json(
                404,
                _error_envelope(
                    path, "unknown_operation",
                    f"no resource at {path}; the API lives under {API_PREFIX}",
                ),
            )
            return
        root = Path(root).resolve()
        rel = path.lstrip("/") or "index.html"
        target = (root / rel).resolve()
        inside = target == root or str(target).startswith(str(root) + os.sep)
        if inside and target.is_dir():
            target = target / "index.html"
        if not inside or not target.is_file():
            self._send_bytes(404, "text/plain; charset=utf-8", b"not found\n")
            return
        content_type = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
        self._send_bytes(200, content_type, target.read_bytes())

    def log_message(self, format: str, *args) -> None:  # noqa: A002
        pass  # quiet by default; this is a local tool, not an access-logged server


def create_server(
    host: str = "127.0.0.1", port: int = 8424, static_dir: str | None = None
) -> ThreadingHTTPServer:
    """Bound, ready-to-serve server; port 0 picks a free port."""
    server = ThreadingHTTPServer((host, port), CalcRequestHandler)
    server.static_dir = static_dir
    return server


def run(host: str = "127.0.0.1", port: int = 8424, static_dir: str | None = None) -> int:
    server = create_server(host, port, static_dir)
    shown_host, shown_port = server.server_address[0], server.server_address[1]
    print(f"flightcalc service listening on http://{shown_host}:{shown_port}{API_PREFIX}")
    if static_dir is not None:
        print(f"serving static UI from {static_dir}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0
