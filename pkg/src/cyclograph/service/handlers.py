"""Shared operation handlers: request model in, response model out.

The FastAPI routes and the CLI both call these, so the wire behavior is
identical whether the package runs as a service or as a command-line tool.
Handlers raise the library's exceptions; the callers map them to HTTP
statuses or exit codes.
"""

from __future__ import annotations

from .. import decomposition, enumeration, hermitian, matrixtree
from .._parallel import map_ordered
from ..cyclotomic import RootParam
from ..graph import Substructure
from . import schemas as s


def run_minor(req: s.MinorRequest) -> s.MinorResponse:
    graph = req.graph.to_graph()
    params = [s.resolve_param(p) for p in req.params]
    values = map_ordered(
        lambda p: hermitian.laplacian_minor(graph, p, req.vset), params)
    return s.MinorResponse(
        vset=sorted(set(req.vset)),
        values=[s.ValueReport(param=str(p), exact=s.ExactValue.from_cyclo(v))
                for p, v in zip(params, values)])


def run_expand(req: s.ExpandRequest) -> s.ExpandResponse:
    graph = req.graph.to_graph()
    param = s.resolve_param(req.param)
    value = decomposition.cauchy_binet_expand(
        graph, param, req.vset, force=req.force)
    size = len(set(req.vset))
    from math import comb
    return s.ExpandResponse(
        vset=sorted(set(req.vset)),
        param=str(param),
        subsets=comb(len(graph.edges), size) if size <= len(graph.edges) else 0,
        exact=s.ExactValue.from_cyclo(value))


def run_census(req: s.CensusRequest) -> s.CensusResponse:
    graph = req.graph.to_graph()
    param = s.resolve_param(req.param) if req.param is not None else None
    entries = decomposition.census(graph, req.vset, force=req.force)
    models = []
    for entry in entries:
        obj = entry.to_json(param)
        contribution = None
        if param is not None:
            contribution = s.ExactValue.from_cyclo(entry.contribution(param))
        models.append(s.CensusEntryModel(
            kind=obj["class"], n=obj["n"], k=obj["k"], g=obj["g"],
            count=obj["count"], components=obj.get("components"),
            forest_order=obj.get("forest_order"), contribution=contribution))
    return s.CensusResponse(
        vset=sorted(set(req.vset)),
        param=str(param) if param is not None else None,
        entries=models)


def _substructure(req: s.SubstructureRequest) -> Substructure:
    graph = req.graph.to_graph()
    return Substructure(graph, req.vset, req.eset)


def run_count_ab(req: s.CountABRequest) -> s.CountABResponse:
    sub = _substructure(req)
    counts = enumeration.count_alpha_beta(sub)
    params = [RootParam(5, 1), RootParam(5, 2)]
    dets = [decomposition.structural_determinant(sub, p) for p in params]
    return s.CountABResponse(
        n_alpha=counts.n_alpha, n_beta=counts.n_beta, n_star=counts.n_star,
        determinants=[
            s.ValueReport(param=str(p), exact=s.ExactValue.from_cyclo(d))
            for p, d in zip(params, dets)])


def run_count_galois(req: s.GaloisRequest) -> s.GaloisResponse:
    sub = _substructure(req)
    counts = enumeration.galois_count(sub, req.p)
    params = [RootParam.make(req.p, q) for q in range(1, (req.p - 1) // 2 + 1)]
    dets = [decomposition.structural_determinant(sub, p) for p in params]
    return s.GaloisResponse(
        p=req.p, n_star=counts.n_star,
        determinants=[
            s.ValueReport(param=str(p), exact=s.ExactValue.from_cyclo(d))
            for p, d in zip(params, dets)])


def run_triangles(req: s.TriangleRequest) -> s.TriangleResponse:
    graph = req.graph.to_graph()
    counts = enumeration.triangle_count(graph, req.vset, verify=req.verify)
    m2 = hermitian.laplacian_minor(graph, RootParam(2, 1), req.vset)
    m4 = hermitian.laplacian_minor(graph, RootParam(4, 1), req.vset)
    return s.TriangleResponse(
        vset=sorted(set(req.vset)),
        triangles=counts.triangles,
        rootless_trees=counts.rootless_trees,
        minor_at_minus_one=m2.as_integer(),
        minor_at_i=m4.as_integer())


def run_count4(req: s.Count4Request) -> s.Count4Response:
    graph = req.graph.to_graph()
    counts = enumeration.four_vertex_count(graph, req.vset, verify=req.verify)
    system = enumeration.four_vertex_system()
    dets = [hermitian.laplacian_minor(graph, p, req.vset)
            for p in system.parameters]
    return s.Count4Response(
        vset=sorted(set(req.vset)),
        c440=counts.c440, c441=counts.c441,
        tu330=counts.tu330, tu331=counts.tu331, f4=counts.f4,
        determinants=[
            s.ValueReport(param=str(p), exact=s.ExactValue.from_cyclo(d))
            for p, d in zip(system.parameters, dets)])


def run_spanning_trees(req: s.SpanningTreesRequest) -> s.SpanningTreesResponse:
    graph = req.graph.to_graph()
    param = s.resolve_param(req.param)
    vertex = req.vertex if req.vertex is not None else (
        graph.vertices[0] if graph.vertices else None)
    report = matrixtree.spanning_trees_via_cofactor(
        graph, param, vertex, force=req.force)
    return s.SpanningTreesResponse(
        count=report.count,
        condition_holds=report.condition_holds,
        parameter=s.OrderPower(order=param.order, power=param.power),
        deleted_vertex=report.deleted_vertex)
