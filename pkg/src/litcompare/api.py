"""HTTP facade over the comparison pipeline.

Endpoints:
  GET  /similar/{contribution}?k=       ranked similar contributions
  GET  /compare?contributions=a,b&...   full comparison payload
  POST /comparisons                     publish a snapshot
  GET  /comparisons/{id}                load a snapshot
  GET  /comparisons/{id}/export?format= csv | latex | rdf-meta | rdf-cube
  GET  /resources/{id}/statements       statements for the resource popup

Errors use a uniform envelope {code, message, details}.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse

from .alignment import EmbeddingProvider
from .config import (
    DEFAULT_MAX_DEPTH,
    DEFAULT_MIN_SHARED,
    DEFAULT_SIMILARITY_THRESHOLD,
    DEFAULT_TOP_K,
    ComparisonConfig,
)
from .errors import NotFoundError, RetractedError, ValidationError
from .graph import GraphStore, Resource
from .payload import compare_payload
from .publish import SnapshotStore
from .similarity import build_index
from .table import (
    ComparisonTable,
    build_table,
    hide_group,
    render_csv,
    render_latex,
    reorder_groups,
    transpose,
)


def _error(status: int, code: str, message: str, details=None) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"code": code, "message": message, "details": details},
    )


def create_app(
    store: GraphStore,
    snapshots: SnapshotStore,
    provider: EmbeddingProvider | None = None,
) -> FastAPI:
    app = FastAPI(title="litcompare")
    provider = provider or EmbeddingProvider.empty()
    app.state.store = store
    app.state.snapshots = snapshots
    app.state.provider = provider
    app.state.index = build_index(store) if store.contribution_ids() else None

    def reindex() -> None:
        # new index swapped in atomically; readers keep the one they grabbed
        app.state.index = build_index(store) if store.contribution_ids() else None

    app.state.reindex = reindex

    @app.exception_handler(ValidationError)
    async def _validation(request: Request, exc: ValidationError):
        return _error(400, "validation_error", str(exc))

    @app.exception_handler(NotFoundError)
    async def _not_found(request: Request, exc: NotFoundError):
        return _error(404, "not_found", str(exc))

    @app.exception_handler(RetractedError)
    async def _retracted(request: Request, exc: RetractedError):
        return _error(410, "data_retracted", str(exc), details=exc.metadata.to_dict())

    @app.exception_handler(RequestValidationError)
    async def _bad_request(request: Request, exc: RequestValidationError):
        return _error(400, "validation_error", "invalid request parameters", details=exc.errors())

    @app.get("/similar/{contribution_id}")
    def similar(contribution_id: str, k: int = Query(DEFAULT_TOP_K, ge=1)):
        index = app.state.index
        if index is None:
            raise NotFoundError(f"contribution {contribution_id} not indexed")
        hits = index.find_similar(contribution_id, k)
        return [
            {"contribution": h.contribution, "score": h.score, "percentage": h.display_percentage}
            for h in hits
        ]

    @app.get("/compare")
    def compare(
        contributions: str,
        tau: float = Query(DEFAULT_SIMILARITY_THRESHOLD, gt=0, le=1),
        alpha: int = Query(DEFAULT_MIN_SHARED, ge=1),
        delta: int = Query(DEFAULT_MAX_DEPTH, ge=1),
    ):
        ids = [c for c in contributions.split(",") if c]
        if len(ids) < 2:
            raise ValidationError("at least two contribution ids are required")
        config = ComparisonConfig(min_shared=alpha, threshold=tau, max_depth=delta)
        table = build_table(store, ids, config, provider)
        return compare_payload(table)

    @app.post("/comparisons", status_code=201)
    def publish(body: dict):
        if not isinstance(body, dict) or ("table" not in body and "contributions" not in body):
            raise ValidationError("body must contain a table state or a contribution list")
        title = body.get("title") or ""
        if "table" in body:
            table = ComparisonTable.from_dict(body["table"])
        else:
            # thin clients send contribution ids plus their client-side
            # customization; the table is rebuilt deterministically here
            ids = [str(c) for c in body["contributions"]]
            cfg = body.get("config") or {}
            config = ComparisonConfig(
                min_shared=int(cfg.get("alpha", DEFAULT_MIN_SHARED)),
                threshold=float(cfg.get("tau", DEFAULT_SIMILARITY_THRESHOLD)),
                max_depth=int(cfg.get("delta", DEFAULT_MAX_DEPTH)),
            )
            table = build_table(store, ids, config, provider)
            if cfg.get("rowOrder"):
                table = reorder_groups(table, tuple(cfg["rowOrder"]))
            for gid in cfg.get("hiddenGroups", ()):
                table = hide_group(table, gid)
            if cfg.get("transposed"):
                table = transpose(table)
        snapshot_id = snapshots.save(
            table, title, body.get("description"), body.get("creator")
        )
        return {"id": snapshot_id, "permalink": snapshots.permalink(snapshot_id)}

    @app.get("/comparisons/{snapshot_id}")
    def get_comparison(snapshot_id: str):
        snapshot = snapshots.load(snapshot_id)
        return {
            "id": snapshot.id,
            "metadata": snapshot.metadata.to_dict(),
            "table": snapshot.table.to_dict(),
            "payload": compare_payload(snapshot.table),
        }

    @app.get("/comparisons/{snapshot_id}/export")
    def export_comparison(snapshot_id: str, format: str = Query(...)):
        if format not in ("csv", "latex", "rdf-meta", "rdf-cube"):
            raise ValidationError(f"unknown export format {format!r}")
        if format == "rdf-meta":
            return PlainTextResponse(snapshots.export_metadata_rdf(snapshot_id), media_type="text/turtle")
        snapshot = snapshots.load(snapshot_id)
        if format == "csv":
            return PlainTextResponse(render_csv(snapshot.table), media_type="text/csv")
        if format == "latex":
            latex, bibtex = render_latex(snapshot.table, snapshots.permalink(snapshot_id))
            return {"latex": latex, "bibtex": bibtex}
        return PlainTextResponse(snapshots.export_datacube_rdf(snapshot_id), media_type="text/turtle")

    @app.get("/resources/{resource_id}/statements")
    def resource_statements(resource_id: str):
        resource = store.resource(resource_id)
        statements = []
        for stmt in store.statements_by_subject(resource_id):
            obj = stmt.object
            statements.append(
                {
                    "id": stmt.id,
                    "predicate": store.predicate(stmt.predicate).label,
                    "object": obj.label if isinstance(obj, Resource) else obj.value,
                    "kind": "resource" if isinstance(obj, Resource) else "literal",
                }
            )
        return {"id": resource.id, "label": resource.label, "statements": statements}

    return app


def app_from_env() -> FastAPI:
    """Build an app from STORE_PATH / SNAPSHOT_PATH / EMBEDDINGS_PATH."""
    from .state import load_store

    store_path = os.environ.get("STORE_PATH")
    store = load_store(store_path) if store_path and os.path.exists(store_path) else GraphStore()
    snapshots = SnapshotStore(os.environ.get("SNAPSHOT_PATH", "snapshots"))
    embeddings = os.environ.get("EMBEDDINGS_PATH")
    provider = EmbeddingProvider.from_file(embeddings) if embeddings else None
    return create_app(store, snapshots, provider)
