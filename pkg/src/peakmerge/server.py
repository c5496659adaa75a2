"""JSON-over-HTTP API backing the interactive decision-graph panel."""

import json
import threading
from typing import Optional

import numpy as np
from fastapi import FastAPI, HTTPException, Response
from pydantic import BaseModel, Field

from . import pipeline
from .dataset import DcResolutionError, PointSet, pairwise_distance, resolve_dc
from .density import compute_profile, decision_graph
from .merge import Termination


class ClusterRequest(BaseModel):
    centers: Optional[list[int]] = None
    count: Optional[int] = Field(default=None, description="auto center count")
    k: int = Field(ge=1)
    beta: Optional[float] = None
    n_neighbor: Optional[int] = None
    dc: Optional[str] = None
    dc_mode: Optional[str] = None


def create_app(
    ps: PointSet,
    default_dc: str = "2%",
    default_dc_mode: str = "max-rho",
    default_k_neighbors: int = 10,
    default_beta: float = 2.0,
) -> FastAPI:
    """App with the distance matrix and per-dc density profiles cached.

    Clustering requests are serialized by a lock; everything cached is
    read-only after it is first computed.
    """
    from .cli import parse_dc  # local import to avoid a module cycle

    app = FastAPI(title="peakmerge")
    dm = pairwise_distance(ps)
    profiles: dict[float, tuple] = {}
    lock = threading.Lock()

    def resolve(dc: Optional[str], dc_mode: Optional[str]) -> float:
        spec = parse_dc(dc or default_dc, dc_mode or default_dc_mode)
        try:
            return resolve_dc(dm, spec)
        except (DcResolutionError, ValueError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    def profile_for(dc_abs: float):
        if dc_abs not in profiles:
            prof = compute_profile(dm, dc_abs)
            profiles[dc_abs] = (prof, decision_graph(prof.rho, prof.delta))
        return profiles[dc_abs]

    @app.get("/points")
    def points():
        return {
            "points": ps.points.tolist(),
            "truth_labels": ps.truth_labels.tolist() if ps.truth_labels is not None else None,
        }

    @app.get("/decision-graph")
    def decision_graph_endpoint():
        with lock:
            _, dg = profile_for(resolve(None, None))
        # serialize through the same path as the CLI export so the bytes match
        return Response(content=dg.to_json(), media_type="application/json")

    def run_clustering(req: ClusterRequest, centers: Optional[list[int]], count: Optional[int]):
        if req.k > ps.n:
            raise HTTPException(status_code=422, detail=f"k={req.k} exceeds n={ps.n}")
        with lock:
            try:
                result = pipeline.run(
                    ps,
                    parse_dc(req.dc or default_dc, req.dc_mode or default_dc_mode),
                    n_neighbor=req.n_neighbor or default_k_neighbors,
                    beta=req.beta if req.beta is not None else default_beta,
                    termination=Termination.target_count(req.k),
                    centers=centers,
                    initial_centers=count,
                    dm=dm,
                )
            except (ValueError, DcResolutionError) as exc:
                raise HTTPException(status_code=422, detail=str(exc))
        payload = json.dumps(
            {
                "labels": [int(x) for x in result.final.label],
                "trace": json.loads(result.trace.to_json()),
            }
        )
        return Response(content=payload, media_type="application/json")

    @app.post("/cluster")
    def cluster(req: ClusterRequest):
        if not req.centers:
            raise HTTPException(status_code=422, detail="centers must be a nonempty list")
        bad = [c for c in req.centers if not 0 <= c < ps.n]
        if bad:
            raise HTTPException(status_code=422, detail=f"center indices out of range: {bad}")
        return run_clustering(req, centers=req.centers, count=None)

    @app.post("/auto")
    def auto(req: ClusterRequest):
        if req.count is not None and not 1 <= req.count <= ps.n:
            raise HTTPException(status_code=422, detail=f"count must be in 1..{ps.n}")
        return run_clustering(req, centers=None, count=req.count)

    return app
