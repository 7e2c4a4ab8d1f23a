"""HTTP surface: one POST endpoint per operation.

Error mapping: malformed input is 400 (pydantic's own validation is 422 as
usual for FastAPI), violated mathematical preconditions are 422, and the
combinatorial guardrail is 413.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import (
    CyclographError,
    GuardrailExceeded,
    InputError,
    PreconditionError,
)
from . import handlers
from . import schemas as s


def create_app() -> FastAPI:
    app = FastAPI(
        title="cyclograph",
        version=__version__,
        description="Exact Hermitian Laplacian analysis of oriented graphs "
                    "over cyclotomic fields.",
    )

    @app.exception_handler(CyclographError)
    async def _cyclograph_error(_: Request, exc: CyclographError):
        if isinstance(exc, InputError):
            status = 400
        elif isinstance(exc, GuardrailExceeded):
            status = 413
        elif isinstance(exc, PreconditionError):
            status = 422
        else:
            status = 500
        return JSONResponse(
            status_code=status,
            content={"error": type(exc).__name__, "detail": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/minor", response_model=s.MinorResponse)
    def minor(req: s.MinorRequest) -> s.MinorResponse:
        return handlers.run_minor(req)

    @app.post("/expand", response_model=s.ExpandResponse)
    def expand(req: s.ExpandRequest) -> s.ExpandResponse:
        return handlers.run_expand(req)

    @app.post("/census", response_model=s.CensusResponse, response_model_by_alias=True)
    def census(req: s.CensusRequest) -> s.CensusResponse:
        return handlers.run_census(req)

    @app.post("/count-ab", response_model=s.CountABResponse)
    def count_ab(req: s.CountABRequest) -> s.CountABResponse:
        return handlers.run_count_ab(req)

    @app.post("/count-galois", response_model=s.GaloisResponse)
    def count_galois(req: s.GaloisRequest) -> s.GaloisResponse:
        return handlers.run_count_galois(req)

    @app.post("/triangles", response_model=s.TriangleResponse)
    def triangles(req: s.TriangleRequest) -> s.TriangleResponse:
        return handlers.run_triangles(req)

    @app.post("/count4", response_model=s.Count4Response)
    def count4(req: s.Count4Request) -> s.Count4Response:
        return handlers.run_count4(req)

    @app.post("/spanning-trees", response_model=s.SpanningTreesResponse)
    def spanning_trees(req: s.SpanningTreesRequest) -> s.SpanningTreesResponse:
        return handlers.run_spanning_trees(req)

    return app


app = create_app()
