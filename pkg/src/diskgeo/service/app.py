"""FastAPI application wrapping the diskgeo core.

Domain errors surface as HTTP 400 with a structured body; malformed requests
are FastAPI's usual 422.  All computation is delegated to the pure core
modules, so the app holds no mutable state beyond their memo caches.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse

from .. import catalog, curvature, dot, flow, poincare_hopf, sheets, topology
from ..complexes import SimplicialComplex, barycentric
from ..errors import DiskGeoError
from ..rational import frac_str
from . import models as m


def _resolve(cin: m.ComplexIn) -> SimplicialComplex:
    if cin.name is not None:
        return catalog.catalog_complex(cin.name)
    if cin.facets is not None:
        return catalog.complex_from_facets(cin.facets)
    assert cin.graph is not None
    return catalog.complex_from_graph(cin.graph.vertices,
                                      [list(e) for e in cin.graph.edges])


def create_app() -> FastAPI:
    app = FastAPI(title="diskgeo", version="1")

    @app.exception_handler(DiskGeoError)
    async def _domain_error(_: Request, exc: DiskGeoError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"error": {"type": type(exc).__name__, "message": str(exc)}},
        )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "schema": m.SCHEMA}

    @app.get("/v1/catalog", response_model=m.CatalogResponse, response_model_exclude_none=True)
    def catalog_list() -> m.CatalogResponse:
        entries = [
            m.CatalogEntryOut(
                name=e.name, construction=e.construction,
                f_vector=list(e.expected_f) if e.expected_f else None,
                euler=e.expected_euler, manifold_dim=e.manifold_dim,
                aliases=list(e.aliases))
            for e in catalog.catalog_entries()
        ]
        return m.CatalogResponse(entries=entries)

    @app.post("/v1/info", response_model=m.InfoResponse, response_model_exclude_none=True)
    def info(req: m.InfoRequest) -> m.InfoResponse:
        c = _resolve(req.complex)
        fv = c.f_vector()
        return m.InfoResponse(
            f_vector=list(fv.counts), euler=fv.euler, dimension=c.dimension,
            pure=c.is_pure, simplices=len(c), vertices=len(c.vertices))

    @app.post("/v1/check", response_model=m.CheckResponse, response_model_exclude_none=True)
    def check(req: m.CheckRequest) -> m.CheckResponse:
        c = _resolve(req.complex)
        ready = topology.geodesic_readiness(c)
        q = c.dimension
        manifold = topology.is_manifold(c, q, fast=req.fast, ceiling=req.ceiling)
        sphere = topology.is_sphere(c, q, fast=req.fast, ceiling=req.ceiling)
        return m.CheckResponse(
            pure=c.is_pure, dimension=q, manifold=manifold, sphere=sphere,
            geodesic_ready=ready.kind == "geodesic_ready",
            boundary_walls=len(ready.boundary_walls))

    @app.post("/v1/flow", response_model=m.FlowResponse, response_model_exclude_none=True)
    def flow_endpoint(req: m.FlowRequest) -> m.FlowResponse:
        c = _resolve(req.complex)
        bundle = flow.frame_bundle_size(c)
        orbit_out = None
        dot_out = None
        if req.start is not None:
            o = flow.orbit(c, tuple(req.start))
            orbit_out = [list(f) for f in o.frames]
            if req.dot:
                dot_out = dot.orbit_dot(o)
        if req.all or req.start is None:
            part = flow.orbit_partition(c)
            orbits = part.orbits
            ergodic = part.ergodic
        else:
            orbits = (o,)
            ergodic = o.period == bundle
        cycles = [m.CycleOut(period=o.period, boundary=o.boundary_touching)
                  for o in orbits]
        billiard = None
        if req.billiard_stats:
            billiard = {
                "boundary_cycles": sum(1 for o in orbits if o.boundary_touching),
                "interior_cycles": sum(1 for o in orbits if not o.boundary_touching),
                "longest_period": max((o.period for o in orbits), default=0),
            }
        return m.FlowResponse(
            bundle_size=bundle, cycles=cycles, ergodic=ergodic,
            orbit=orbit_out, billiard=billiard, dot=dot_out)

    @app.post("/v1/sectional", response_model=m.SectionalResponse,
              response_model_exclude_none=True)
    def sectional(req: m.SectionalRequest) -> m.SectionalResponse:
        c = _resolve(req.complex)
        rep = sheets.sectional_spectrum(c, threads=req.threads)
        lines = [m.SpectrumLine(value=frac_str(v), count=n) for v, n in rep.spectrum()]
        return m.SectionalResponse(spectrum=lines, total=frac_str(rep.total), euler=rep.euler)

    @app.post("/v1/sheets", response_model=m.SheetsResponse, response_model_exclude_none=True)
    def sheets_endpoint(req: m.SheetsRequest) -> m.SheetsResponse:
        c = _resolve(req.complex)
        bone = tuple(req.bone)
        ordering = tuple(req.ordering) if req.ordering else None
        patch = sheets.local_disk(c, bone, ordering)
        k = sheets.sectional_curvature(c, bone, ordering)
        sheet_out = None
        dot_out = None
        if req.grow:
            sheet = sheets.grow_sheet(c, bone, ordering, max_patches=req.max_patches)
            sheet_out = m.SheetOut(
                patches=len(sheet.patches), closed=sheet.closed,
                facet_count=len(sheet.facet_set),
                immersed_facet_count=sum(sheet.facet_multiset.values()))
            if req.dot:
                dot_out = dot.sheet_dot(sheet)
        return m.SheetsResponse(
            bone=list(bone), m=patch.m, petals=list(patch.petal_numbers),
            curvature=frac_str(k), sheet=sheet_out, dot=dot_out)

    @app.post("/v1/curvature", response_model=m.CurvatureResponse,
              response_model_exclude_none=True)
    def curvature_endpoint(req: m.CurvatureRequest) -> m.CurvatureResponse:
        c = _resolve(req.complex)
        if req.mode == "per-vertex":
            rep = curvature.gauss_bonnet_2m(c)
        elif req.mode == "per-triangle":
            rep = curvature.triangle_curvature_report(c)
        else:
            values = {(v,): curvature.first_order_curvature(c, v, req.kind)
                      for v in c.vertices}
            rep = curvature.CurvatureReport(
                values, sum(values.values(), Fraction(0)), c.euler)
        return m.CurvatureResponse(
            mode=req.mode,
            values={",".join(map(str, site)): frac_str(k) for site, k in rep.values.items()},
            value_set=[frac_str(v) for v in rep.value_set()],
            total=frac_str(rep.total), euler=rep.euler)

    @app.post("/v1/partitions", response_model=m.PartitionsResponse,
              response_model_exclude_none=True)
    def partitions(req: m.PartitionsRequest) -> m.PartitionsResponse:
        if req.verify_31 or req.n_max is not None:
            report = curvature.threshold_verify(max(req.n_max or 33, 33))
            rows = [m.ThresholdRow(
                n=n, minimum=frac_str(mn) if mn is not None else None,
                zeros=[list(p) for p in zs], negatives=[list(p) for p in ngs])
                for n, mn, zs, ngs in report.rows]
            return m.PartitionsResponse(rows=rows, verified=report.ok,
                                        failures=list(report.failures))
        scan = curvature.partition_scan(req.n, min_part=req.min_part,
                                        exclude_part=req.exclude_part)
        return m.PartitionsResponse(
            partitions=[m.PartitionLine(partition=list(p), curvature=frac_str(k))
                        for p, k in scan])

    @app.post("/v1/ph", response_model=m.PhResponse, response_model_exclude_none=True)
    def ph(req: m.PhRequest) -> m.PhResponse:
        c = _resolve(req.complex)
        make = (poincare_hopf.random_rule if req.rule == "choice"
                else poincare_hopf.min_rule_from_seed)
        trials = []
        divisor = None
        rule = None
        for k in range(max(req.trials, 1)):
            rule = make(c, req.seed + k)
            divisor = poincare_hopf.push_energy(c, rule)
            trials.append(m.PhTrial(
                seed=req.seed + k,
                divisor={str(v): n for v, n in sorted(divisor.indices.items())},
                total=divisor.total))
        census = None
        dot_out = None
        if req.emit_map:
            sm = poincare_hopf.vertex_self_map(c, rule)
            census = sm.census
            dot_out = dot.self_map_dot(sm)
        return m.PhResponse(
            divisor=trials[-1].divisor, total=divisor.total, euler=c.euler,
            trials=trials if req.trials > 1 else None, census=census, dot=dot_out)

    @app.post("/v1/refine", response_model=m.RefineResponse, response_model_exclude_none=True)
    def refine(req: m.RefineRequest) -> m.RefineResponse:
        if req.depth < 1:
            raise HTTPException(status_code=422, detail="depth must be >= 1")
        c = barycentric(_resolve(req.complex), req.depth)
        fv = c.f_vector()
        return m.RefineResponse(f_vector=list(fv.counts), euler=fv.euler,
                                facets=[list(f) for f in c.facets()])

    @app.post("/v1/export", response_model=m.ExportResponse, response_model_exclude_none=True)
    def export(req: m.ExportRequest) -> m.ExportResponse:
        c = _resolve(req.complex)
        if req.target == "dual-graph":
            text = dot.dual_graph_dot(c)
        elif req.target == "orbit":
            if req.start is None:
                raise HTTPException(status_code=422, detail="orbit export needs start")
            text = dot.orbit_dot(flow.orbit(c, tuple(req.start)))
        elif req.target == "sheet":
            if req.bone is None:
                raise HTTPException(status_code=422, detail="sheet export needs bone")
            text = dot.sheet_dot(sheets.grow_sheet(c, tuple(req.bone),
                                                   max_patches=req.max_patches))
        else:
            rule = poincare_hopf.random_rule(c, req.seed)
            text = dot.self_map_dot(poincare_hopf.vertex_self_map(c, rule))
        return m.ExportResponse(target=req.target, dot=text)

    return app


app = create_app()
