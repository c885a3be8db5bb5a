"""FastAPI application exposing the analysis operations.

Domain errors become HTTP 400 with a payload naming the error class, so a
remote client can rebuild the same exception local execution would have
raised:

    {"kind": "InsufficientDataError", "detail": "series 'GBP_3M' has ..."}
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import CecpError
from . import operations
from .schemas import (
    AnalyzeRequest,
    AnalyzeResponse,
    BoundsRequest,
    BoundsResponse,
    GenerateRequest,
    GenerateResponse,
    HealthResponse,
    QuantifyRequest,
    QuantifyResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="cecp",
        version=__version__,
        description="Ordinal-pattern complexity analysis of time series",
    )

    @app.exception_handler(CecpError)
    async def domain_error(request: Request, exc: CecpError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"kind": type(exc).__name__, "detail": str(exc)},
        )

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/analyze", response_model=AnalyzeResponse)
    def analyze(request: AnalyzeRequest) -> AnalyzeResponse:
        return operations.run_analysis(request)

    @app.post("/bounds", response_model=BoundsResponse)
    def bounds(request: BoundsRequest) -> BoundsResponse:
        return operations.run_bounds(request)

    @app.post("/generate", response_model=GenerateResponse)
    def generate(request: GenerateRequest) -> GenerateResponse:
        return operations.run_generate(request)

    @app.post("/quantify", response_model=QuantifyResponse)
    def quantify(request: QuantifyRequest) -> QuantifyResponse:
        return operations.run_quantify(request)

    return app


app = create_app()
