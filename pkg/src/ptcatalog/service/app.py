"""HTTP wiring of the registry store.

Reads are public; every mutating endpoint requires a bearer token. Bodies
and responses use the canonical serialized form of the core types.
"""

from __future__ import annotations

from fastapi import Body, Depends, FastAPI, Header, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from ptcatalog.core.model import Dataset, NLPTask, ParseError
from ptcatalog.core.validation import Violation
from ptcatalog.service.errors import AuthFailure, Conflict, NotFound, ValidationFailed
from ptcatalog.service.store import RegistryStore

REVISION_HEADER = "X-Expected-Revision"


def create_app(store: RegistryStore) -> FastAPI:
    app = FastAPI(title="ptcatalog registry", version="0.1.0")
    app.state.store = store

    # The web UI is served from its own origin and talks to this API directly.
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
        expose_headers=[REVISION_HEADER],
    )

    def require_token(authorization: str | None = Header(None)) -> None:
        if not authorization or not authorization.startswith("Bearer "):
            raise AuthFailure("missing bearer token")
        if not store.is_authorized(authorization[len("Bearer "):]):
            raise AuthFailure("invalid or revoked token")

    authed = Depends(require_token)

    # ------------------------------------------------------------------
    # error translation

    @app.exception_handler(AuthFailure)
    async def on_auth_failure(request: Request, exc: AuthFailure):
        return JSONResponse(status_code=401, content={"detail": str(exc), "violations": []})

    @app.exception_handler(NotFound)
    async def on_not_found(request: Request, exc: NotFound):
        return JSONResponse(status_code=404, content={"detail": str(exc), "violations": []})

    @app.exception_handler(Conflict)
    async def on_conflict(request: Request, exc: Conflict):
        return JSONResponse(status_code=409, content={"detail": str(exc), "violations": []})

    @app.exception_handler(ValidationFailed)
    async def on_validation_failed(request: Request, exc: ValidationFailed):
        return JSONResponse(
            status_code=422,
            content={
                "detail": "validation failed",
                "violations": [v.to_dict() for v in exc.violations],
            },
        )

    @app.exception_handler(ParseError)
    async def on_parse_error(request: Request, exc: ParseError):
        return JSONResponse(
            status_code=422,
            content={
                "detail": "validation failed",
                "violations": [Violation(exc.field, exc.message).to_dict()],
            },
        )

    # ------------------------------------------------------------------
    # health & tokens

    @app.get("/health")
    def health():
        return {"status": "ok", "revision": store.revision}

    @app.post("/api/tokens", status_code=201)
    def issue_token(payload: dict = Body(...)):
        token = store.issue_token(
            label=str(payload.get("label") or ""),
            admin_secret=str(payload.get("admin_secret") or ""),
        )
        return token.to_dict()

    @app.delete("/api/tokens/{token_value}", status_code=204)
    def revoke_token(token_value: str, x_admin_secret: str | None = Header(None)):
        store.revoke_token(token_value, x_admin_secret or "")
        return Response(status_code=204)

    # ------------------------------------------------------------------
    # NLP tasks

    @app.get("/api/nlp-tasks")
    def list_tasks():
        return [t.to_dict() for t in store.list_tasks()]

    @app.get("/api/nlp-tasks/{task_id}")
    def get_task(task_id: str):
        return store.get_task(task_id).to_dict()

    @app.post("/api/nlp-tasks", status_code=201, dependencies=[authed])
    def create_task(payload: dict = Body(...)):
        return store.create_task(NLPTask.from_dict(payload)).to_dict()

    @app.put("/api/nlp-tasks/{task_id}", dependencies=[authed])
    def update_task(task_id: str, payload: dict = Body(...)):
        return store.update_task(task_id, NLPTask.from_dict(payload)).to_dict()

    @app.delete("/api/nlp-tasks/{task_id}", status_code=204, dependencies=[authed])
    def delete_task(task_id: str):
        store.delete_task(task_id)
        return Response(status_code=204)

    # ------------------------------------------------------------------
    # datasets

    @app.get("/api/datasets")
    def list_datasets(
        task: str | None = Query(None),
        variety: str | None = Query(None),
        policy: str | None = Query(None),
    ):
        return [d.to_dict() for d in store.list_datasets(task, variety, policy)]

    @app.get("/api/datasets/by-name/{english_name}")
    def get_dataset_by_name(english_name: str):
        return store.get_dataset_by_name(english_name).to_dict()

    @app.get("/api/datasets/{dataset_id}")
    def get_dataset(dataset_id: str):
        return store.get_dataset(dataset_id).to_dict()

    @app.post("/api/datasets", status_code=201, dependencies=[authed])
    def create_dataset(payload: dict = Body(...)):
        return store.create_dataset(Dataset.from_dict(payload)).to_dict()

    @app.put("/api/datasets/{dataset_id}", dependencies=[authed])
    def update_dataset(
        dataset_id: str,
        payload: dict = Body(...),
        x_expected_revision: int | None = Header(None, alias=REVISION_HEADER),
    ):
        return store.update_dataset(
            dataset_id, Dataset.from_dict(payload), expected_revision=x_expected_revision
        ).to_dict()

    @app.delete("/api/datasets/{dataset_id}", status_code=204, dependencies=[authed])
    def delete_dataset(dataset_id: str):
        store.delete_dataset(dataset_id)
        return Response(status_code=204)

    return app
