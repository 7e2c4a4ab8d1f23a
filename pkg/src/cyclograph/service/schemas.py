"""Pydantic request/response models shared by the HTTP service and the CLI.

Every numeric field is either an exact serialized field value (order plus
rational coefficient strings) or a plain integer; decimal previews are
explicitly labeled approximate.  Field order is fixed so identical inputs
serialize byte-identically.
"""

from __future__ import annotations

from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from ..cyclotomic import CycloNum, RootParam
from ..errors import ParameterError
from ..graph import OrientedGraph


class GraphModel(BaseModel):
    """Graph wire format: explicit vertex list plus [tail, head] pairs.
    Vertices may be omitted, in which case they are inferred from the edges
    in first-appearance order."""

    vertices: Optional[list[int]] = None
    edges: list[tuple[int, int]]

    def to_graph(self) -> OrientedGraph:
        return OrientedGraph.from_json(self.model_dump())

    @classmethod
    def from_graph(cls, graph: OrientedGraph) -> "GraphModel":
        return cls(vertices=list(graph.vertices),
                   edges=[(u, v) for u, v in graph.edges])


class OrderPower(BaseModel):
    order: int
    power: int


ParamSpec = Union[str, OrderPower]


def resolve_param(spec: ParamSpec) -> RootParam:
    if isinstance(spec, OrderPower):
        try:
            return RootParam.make(spec.order, spec.power)
        except ParameterError:
            raise
    return RootParam.parse(spec)


class ExactValue(BaseModel):
    """A field element: exact order/coefficients, polynomial text and an
    approximate decimal preview."""

    order: int
    coeffs: list[str]
    text: str
    approx: str = Field(description="decimal preview, approximate")

    @classmethod
    def from_cyclo(cls, x: CycloNum) -> "ExactValue":
        data = x.to_json()
        z = x.to_complex()
        if abs(z.imag) < 1e-9:
            approx = f"{z.real:.10g}"
        else:
            approx = f"{z.real:.10g}{z.imag:+.10g}i"
        return cls(order=data["order"], coeffs=data["coeffs"],
                   text=str(x), approx=approx)

    def to_cyclo(self) -> CycloNum:
        return CycloNum.from_json({"order": self.order, "coeffs": self.coeffs})


class ValueReport(BaseModel):
    param: str
    exact: ExactValue


# -- requests ---------------------------------------------------------------


class MinorRequest(BaseModel):
    graph: GraphModel
    vset: list[int]
    params: list[ParamSpec] = Field(default_factory=lambda: ["1"])


class ExpandRequest(BaseModel):
    graph: GraphModel
    vset: list[int]
    param: ParamSpec = "1"
    force: bool = False


class CensusRequest(BaseModel):
    graph: GraphModel
    vset: list[int]
    param: Optional[ParamSpec] = None
    force: bool = False


class SubstructureRequest(BaseModel):
    """Substructure input for the counting methods; omitted vset/eset mean
    the whole vertex/edge set."""

    graph: GraphModel
    vset: Optional[list[int]] = None
    eset: Optional[list[int]] = None


class CountABRequest(SubstructureRequest):
    pass


class GaloisRequest(SubstructureRequest):
    p: int


class TriangleRequest(BaseModel):
    graph: GraphModel
    vset: list[int]
    verify: bool = True


class Count4Request(BaseModel):
    graph: GraphModel
    vset: list[int]
    verify: bool = True


class SpanningTreesRequest(BaseModel):
    graph: GraphModel
    param: ParamSpec = "1"
    vertex: Optional[int] = None
    force: bool = False


# -- responses ---------------------------------------------------------------


class MinorResponse(BaseModel):
    vset: list[int]
    values: list[ValueReport]


class ExpandResponse(BaseModel):
    vset: list[int]
    param: str
    subsets: int
    exact: ExactValue


class CensusEntryModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    kind: str = Field(alias="class")
    n: Optional[int]
    k: Optional[int]
    g: Optional[int]
    count: int
    components: Optional[list[list[int]]] = None
    forest_order: Optional[int] = None
    contribution: Optional[ExactValue] = None


class CensusResponse(BaseModel):
    vset: list[int]
    param: Optional[str] = None
    entries: list[CensusEntryModel]


class CountABResponse(BaseModel):
    n_alpha: int
    n_beta: int
    n_star: int
    determinants: list[ValueReport]


class GaloisResponse(BaseModel):
    p: int
    n_star: int
    determinants: list[ValueReport]


class TriangleResponse(BaseModel):
    vset: list[int]
    triangles: int
    rootless_trees: int
    minor_at_minus_one: int
    minor_at_i: int


class Count4Response(BaseModel):
    vset: list[int]
    c440: int
    c441: int
    tu330: int
    tu331: int
    f4: int
    determinants: list[ValueReport]


class SpanningTreesResponse(BaseModel):
    count: int
    condition_holds: bool
    parameter: OrderPower
    deleted_vertex: int
