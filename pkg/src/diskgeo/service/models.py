"""Pydantic request and response models for the diskgeo service.

All exact values travel as "p/q" strings; every response carries the report
schema tag "diskgeo/1".
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

SCHEMA = "diskgeo/1"


class GraphIn(BaseModel):
    vertices: list[int] = Field(default_factory=list)
    edges: list[tuple[int, int]]


class ComplexIn(BaseModel):
    """Exactly one of: a catalog name, a facet list, or a graph (clique complex)."""

    name: Optional[str] = None
    facets: Optional[list[list[int]]] = None
    graph: Optional[GraphIn] = None

    @model_validator(mode="after")
    def _exactly_one(self):
        given = [x is not None for x in (self.name, self.facets, self.graph)]
        if sum(given) != 1:
            raise ValueError("provide exactly one of name, facets or graph")
        return self


class InfoRequest(BaseModel):
    complex: ComplexIn


class InfoResponse(BaseModel):
    schema_: str = Field(SCHEMA, alias="schema")
    f_vector: list[int]
    euler: int
    dimension: int
    pure: bool
    simplices: int
    vertices: int

    model_config = {"populate_by_name": True}


class CheckRequest(BaseModel):
    complex: ComplexIn
    fast: bool = False
    ceiling: int = 50_000


class CheckResponse(BaseModel):
    schema_: str = Field(SCHEMA, alias="schema")
    pure: bool
    dimension: int
    manifold: bool
    sphere: bool
    geodesic_ready: bool
    boundary_walls: int

    model_config = {"populate_by_name": True}


class FlowRequest(BaseModel):
    complex: ComplexIn
    start: Optional[list[int]] = None
    all: bool = False
    billiard_stats: bool = False
    dot: bool = False


class CycleOut(BaseModel):
    period: int
    boundary: bool


class FlowResponse(BaseModel):
    schema_: str = Field(SCHEMA, alias="schema")
    bundle_size: int
    cycles: list[CycleOut]
    ergodic: bool
    orbit: Optional[list[list[int]]] = None
    billiard: Optional[dict[str, int]] = None
    dot: Optional[str] = None

    model_config = {"populate_by_name": True}


class SectionalRequest(BaseModel):
    complex: ComplexIn
    threads: int = 1


class SpectrumLine(BaseModel):
    value: str
    count: int


class SectionalResponse(BaseModel):
    schema_: str = Field(SCHEMA, alias="schema")
    spectrum: list[SpectrumLine]
    total: str
    euler: int

    model_config = {"populate_by_name": True}


class SheetsRequest(BaseModel):
    complex: ComplexIn
    bone: list[int]
    ordering: Optional[list[int]] = None
    grow: bool = False
    max_patches: int = 10_000
    dot: bool = False


class SheetOut(BaseModel):
    patches: int
    closed: bool
    facet_count: int
    immersed_facet_count: int


class SheetsResponse(BaseModel):
    schema_: str = Field(SCHEMA, alias="schema")
    bone: list[int]
    m: int
    petals: list[int]
    curvature: str
    sheet: Optional[SheetOut] = None
    dot: Optional[str] = None

    model_config = {"populate_by_name": True}


class CurvatureRequest(BaseModel):
    complex: ComplexIn
    mode: Literal["per-vertex", "per-triangle", "first-order"] = "per-vertex"
    kind: Literal["eberhard", "levitt"] = "eberhard"


class CurvatureResponse(BaseModel):
    schema_: str = Field(SCHEMA, alias="schema")
    mode: str
    values: dict[str, str]
    value_set: list[str]
    total: str
    euler: int

    model_config = {"populate_by_name": True}


class PartitionsRequest(BaseModel):
    n: Optional[int] = None
    n_max: Optional[int] = None
    min_part: int = 4
    exclude_part: Optional[int] = None
    verify_31: bool = False

    @model_validator(mode="after")
    def _target(self):
        if self.n is None and self.n_max is None:
            raise ValueError("provide n or n_max")
        return self


class PartitionLine(BaseModel):
    partition: list[int]
    curvature: str


class ThresholdRow(BaseModel):
    n: int
    minimum: Optional[str]
    zeros: list[list[int]]
    negatives: list[list[int]]


class PartitionsResponse(BaseModel):
    schema_: str = Field(SCHEMA, alias="schema")
    partitions: Optional[list[PartitionLine]] = None
    rows: Optional[list[ThresholdRow]] = None
    verified: Optional[bool] = None
    failures: Optional[list[str]] = None

    model_config = {"populate_by_name": True}


class PhRequest(BaseModel):
    complex: ComplexIn
    seed: int = 0
    trials: int = 1
    rule: Literal["choice", "min"] = "choice"
    emit_map: bool = False


class PhTrial(BaseModel):
    seed: int
    divisor: dict[str, int]
    total: int


class PhResponse(BaseModel):
    schema_: str = Field(SCHEMA, alias="schema")
    divisor: dict[str, int]
    total: int
    euler: int
    trials: Optional[list[PhTrial]] = None
    census: Optional[dict[str, int]] = None
    dot: Optional[str] = None

    model_config = {"populate_by_name": True}


class RefineRequest(BaseModel):
    complex: ComplexIn
    depth: int


class RefineResponse(BaseModel):
    schema_: str = Field(SCHEMA, alias="schema")
    f_vector: list[int]
    euler: int
    facets: list[list[int]]

    model_config = {"populate_by_name": True}


class ExportRequest(BaseModel):
    complex: ComplexIn
    target: Literal["dual-graph", "orbit", "sheet", "self-map"]
    start: Optional[list[int]] = None
    bone: Optional[list[int]] = None
    max_patches: int = 10_000
    seed: int = 0


class ExportResponse(BaseModel):
    schema_: str = Field(SCHEMA, alias="schema")
    target: str
    dot: str

    model_config = {"populate_by_name": True}


class CatalogEntryOut(BaseModel):
    name: str
    construction: str
    f_vector: Optional[list[int]]
    euler: Optional[int]
    manifold_dim: Optional[int]
    aliases: list[str]


class CatalogResponse(BaseModel):
    schema_: str = Field(SCHEMA, alias="schema")
    entries: list[CatalogEntryOut]

    model_config = {"populate_by_name": True}
