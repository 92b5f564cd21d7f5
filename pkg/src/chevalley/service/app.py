"""FastAPI application exposing every verification command as a POST endpoint.

Request bodies are the models in schemas.py; responses carry version + seed.
Domain violations (bad rank, invalid modulus pair, non-Weyl word) map to 400;
malformed bodies are FastAPI's native 422.
"""

from __future__ import annotations

from typing import Callable, TypeVar

from fastapi import FastAPI, HTTPException

from .. import __version__
from . import ops
from . import schemas as sc

R = TypeVar("R")


def _run(handler: Callable[..., R], *args) -> R:
    try:
        return handler(*args)
    except (ValueError, AssertionError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))


def create_app() -> FastAPI:
    app = FastAPI(
        title="chevalley",
        version=__version__,
        description="Exact verification of Chevalley group structure over Q",
    )

    @app.get("/health", response_model=sc.HealthResponse)
    def health() -> sc.HealthResponse:
        return sc.HealthResponse()

    @app.post("/roots", response_model=sc.RootsResponse)
    def roots(req: sc.RootsRequest) -> sc.RootsResponse:
        return _run(ops.roots_op, req)

    @app.post("/weyl-scan", response_model=sc.WeylScanResponse)
    def weyl_scan(req: sc.WeylScanRequest) -> sc.WeylScanResponse:
        return _run(ops.weyl_scan_op, req)

    @app.post("/relations", response_model=sc.RelationsResponse)
    def relations(req: sc.RelationsRequest) -> sc.RelationsResponse:
        return _run(ops.relations_op, req)

    @app.post("/rgd-check", response_model=sc.RgdCheckResponse)
    def rgd_check(req: sc.RgdCheckRequest) -> sc.RgdCheckResponse:
        return _run(ops.rgd_check_op, req)

    @app.post("/vrgd-check", response_model=sc.VrgdCheckResponse)
    def vrgd_check(req: sc.VrgdCheckRequest) -> sc.VrgdCheckResponse:
        return _run(ops.vrgd_check_op, req)

    @app.post("/torsion", response_model=sc.TorsionResponse)
    def torsion(req: sc.TorsionRequest) -> sc.TorsionResponse:
        return _run(ops.torsion_op, req)

    @app.post("/torsion-scan", response_model=sc.TorsionScanResponse)
    def torsion_scan(req: sc.TorsionScanRequest) -> sc.TorsionScanResponse:
        return _run(ops.torsion_scan_op, req)

    @app.post("/congruence-probe", response_model=sc.CongruenceProbeResponse)
    def congruence_probe(req: sc.CongruenceProbeRequest) -> sc.CongruenceProbeResponse:
        return _run(ops.congruence_probe_op, req)

    @app.post("/approx", response_model=sc.ApproxResponse)
    def approx(req: sc.ApproxRequest) -> sc.ApproxResponse:
        return _run(ops.approx_op, req)

    return app


app = create_app()
