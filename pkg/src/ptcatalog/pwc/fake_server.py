"""A faithful fake of the external catalog API, used by the hermetic tests.

Protocol: form-based login issuing a session cookie, then JSON
POST /api/datasets and PATCH /api/datasets/{slug}, plus a name lookup via
GET /api/datasets?name=... . Every protocol request is recorded and
exposed at GET /debug/calls so tests can assert on the exact call
sequence; /debug endpoints themselves are not recorded.
"""

from __future__ import annotations

import re
import secrets
from urllib.parse import parse_qs

import click
import uvicorn
from fastapi import Body, FastAPI, Query, Request
from fastapi.responses import JSONResponse


def slugify(name: str) -> str:
    slug = re.sub(r"[^a-z0-9]+", "-", name.lower()).strip("-")
    return slug or "dataset"


def create_fake_pwc_app(username: str = "liaad", password: str = "letmein") -> FastAPI:
    app = FastAPI(title="fake external catalog")
    state = {"datasets": {}, "sessions": set(), "calls": []}
    app.state.fake = state

    @app.middleware("http")
    async def record_calls(request: Request, call_next):
        if not request.url.path.startswith("/debug"):
            state["calls"].append({"method": request.method, "path": request.url.path})
        return await call_next(request)

    def authed(request: Request) -> bool:
        return request.cookies.get("session") in state["sessions"]

    @app.post("/login")
    async def login(request: Request):
        form = parse_qs((await request.body()).decode())
        supplied_user = (form.get("username") or [""])[0]
        supplied_password = (form.get("password") or [""])[0]
        if supplied_user != username or supplied_password != password:
            return JSONResponse(status_code=401, content={"detail": "bad credentials"})
        session = secrets.token_hex(16)
        state["sessions"].add(session)
        response = JSONResponse({"detail": "ok"})
        response.set_cookie("session", session)
        return response

    @app.get("/api/datasets")
    def list_datasets(request: Request, name: str | None = Query(None)):
        if not authed(request):
            return JSONResponse(status_code=401, content={"detail": "login required"})
        records = [
            {"id": slug, **payload} for slug, payload in state["datasets"].items()
            if name is None or payload.get("name") == name
        ]
        return records

    @app.post("/api/datasets")
    def create_dataset(request: Request, payload: dict = Body(...)):
        if not authed(request):
            return JSONResponse(status_code=401, content={"detail": "login required"})
        name = str(payload.get("name") or "")
        if not name.strip():
            return JSONResponse(status_code=422, content={"detail": "name must be non-empty"})
        slug = slugify(name)
        if slug in state["datasets"]:
            return JSONResponse(status_code=409, content={"detail": f"dataset exists: {slug}"})
        state["datasets"][slug] = payload
        return JSONResponse(status_code=201, content={"id": slug, **payload})

    @app.patch("/api/datasets/{slug}")
    def update_dataset(slug: str, request: Request, payload: dict = Body(...)):
        if not authed(request):
            return JSONResponse(status_code=401, content={"detail": "login required"})
        if slug not in state["datasets"]:
            return JSONResponse(status_code=404, content={"detail": f"unknown dataset: {slug}"})
        name = str(payload.get("name") or "")
        if not name.strip():
            return JSONResponse(status_code=422, content={"detail": "name must be non-empty"})
        state["datasets"][slug] = payload
        return {"id": slug, **payload}

    @app.get("/debug/calls")
    def debug_calls():
        return {"calls": list(state["calls"])}

    @app.get("/debug/datasets")
    def debug_datasets():
        return {"datasets": dict(state["datasets"])}

    return app


@click.command()
@click.option("--port", default=9000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--username", default="liaad", show_default=True)
@click.option("--password", default="letmein", show_default=True)
def main(port, host, username, password):
    """Run the fake external catalog server."""
    uvicorn.run(create_fake_pwc_app(username, password), host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
