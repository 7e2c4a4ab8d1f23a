"""Command-line client over the shared service handlers.

Each subcommand builds the same request model the HTTP service accepts and
calls the same handler in-process, then renders the response as JSON or
text.  Exit codes: 1 for parse/validation problems, 2 for violated method
preconditions (vanishing components, non-prime p, ...), 3 when a
combinatorial guardrail trips without --force.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import click
from pydantic import ValidationError

from .cyclotomic import CycloNum
from .errors import (
    CyclographError,
    GuardrailExceeded,
    InputError,
    NotInSubfield,
    PreconditionError,
)
from .graph import OrientedGraph
from .service import handlers
from .service import schemas as s


def _load_graph(path: str) -> s.GraphModel:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise InputError(f"cannot read graph file {path}: {exc}") from exc
    if text.lstrip().startswith("{"):
        graph = OrientedGraph.from_json(text)
    else:
        graph = OrientedGraph.from_text(text)
    return s.GraphModel.from_graph(graph)


def _ints(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}")


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_value(x: CycloNum) -> str:
    """Text rendering: 'a + b√5' inside Q(sqrt5), polynomial form otherwise,
    always with an approximate decimal tail."""
    try:
        a, b = x.as_sqrt5_pair()
        if b == 0:
            core = _frac(a)
        else:
            babs = abs(b)
            btxt = "√5" if babs == 1 else f"{_frac(babs)}√5"
            if a == 0:
                core = btxt if b > 0 else f"-{btxt}"
            else:
                core = f"{_frac(a)} {'+' if b > 0 else '-'} {btxt}"
    except NotInSubfield:
        core = str(x)
    return f"{core} (~ {_approx(x)})"


def _approx(x: CycloNum) -> str:
    z = x.to_complex()
    if abs(z.imag) < 1e-9:
        return f"{z.real:.10g}"
    return f"{z.real:.10g}{z.imag:+.10g}i"


def _exact_text(v: s.ExactValue) -> str:
    return format_value(v.to_cyclo())


def _emit(response, output: str, text_renderer):
    if output == "json":
        click.echo(response.model_dump_json(indent=2, by_alias=True))
    else:
        for line in text_renderer(response):
            click.echo(line)


output_option = click.option(
    "--output", type=click.Choice(["json", "text"]), default="text",
    show_default=True, help="Report format.")
vset_option = click.option(
    "--vset", required=True, help="Comma-separated vertex ids.")
force_option = click.option(
    "--force", is_flag=True, help="Override the combinatorial guardrail.")


@click.group()
def cli():
    """Exact Hermitian Laplacian analysis of oriented graphs.

    GRAPH arguments accept a path or '-' for stdin, in either the text
    format (one 'u v' edge per line, '#' comments) or the JSON format
    {"vertices": [...], "edges": [[u, v], ...]}.
    """


@cli.command()
@click.argument("graph_file")
@click.option("--param", "params", multiple=True, default=("1",),
              show_default=True,
              help="Parameter shorthand (repeatable): 1, -1, i, w5, w5^2, 5/2.")
@vset_option
@output_option
def minor(graph_file, params, vset, output):
    """Exact principal minor of the Laplacian at each parameter."""
    req = s.MinorRequest(graph=_load_graph(graph_file),
                         vset=_ints(vset), params=list(params))
    resp = handlers.run_minor(req)

    def render(r: s.MinorResponse):
        yield "vset: " + " ".join(str(v) for v in r.vset)
        for item in r.values:
            yield f"minor({item.param}) = {_exact_text(item.exact)}"

    _emit(resp, output, render)


@cli.command()
@click.argument("graph_file")
@click.option("--param", default="1", show_default=True,
              help="Parameter shorthand.")
@vset_option
@force_option
@output_option
def expand(graph_file, param, vset, force, output):
    """Brute-force Cauchy-Binet expansion over all edge subsets."""
    req = s.ExpandRequest(graph=_load_graph(graph_file), vset=_ints(vset),
                          param=param, force=force)
    resp = handlers.run_expand(req)

    def render(r: s.ExpandResponse):
        yield "vset: " + " ".join(str(v) for v in r.vset)
        yield f"param: {r.param}"
        yield f"subsets: {r.subsets}"
        yield f"value = {_exact_text(r.exact)}"

    _emit(resp, output, render)


@cli.command()
@click.argument("graph_file")
@vset_option
@click.option("--param", default=None,
              help="Optional parameter for per-class contributions.")
@force_option
@output_option
def census(graph_file, vset, param, force, output):
    """Tally all-regular substructure classes on a vertex subset."""
    req = s.CensusRequest(graph=_load_graph(graph_file), vset=_ints(vset),
                          param=param, force=force)
    resp = handlers.run_census(req)

    def render(r: s.CensusResponse):
        yield "vset: " + " ".join(str(v) for v in r.vset)
        if not r.entries:
            yield "no all-regular substructures"
        for e in r.entries:
            parts = [f"class={e.kind}"]
            if e.n is not None:
                parts.append(f"n={e.n}")
            if e.k is not None:
                parts.append(f"k={e.k} g={e.g}")
            if e.components:
                parts.append("components=" + ";".join(
                    ",".join(str(x) for x in c) for c in e.components))
            parts.append(f"count={e.count}")
            if e.contribution is not None:
                parts.append(f"contribution={_exact_text(e.contribution)}")
            yield "  ".join(parts)

    _emit(resp, output, render)


def _subset_options(fn):
    fn = click.option("--eset", default=None,
                      help="Comma-separated edge ids (default: all edges).")(fn)
    fn = click.option("--vset", default=None,
                      help="Comma-separated vertex ids (default: all vertices).")(fn)
    return fn


@cli.command("count-ab")
@click.argument("graph_file")
@_subset_options
@output_option
def count_ab(graph_file, vset, eset, output):
    """Recover (n_alpha, n_beta) from the two fifth-root determinants."""
    req = s.CountABRequest(
        graph=_load_graph(graph_file),
        vset=_ints(vset) if vset is not None else None,
        eset=_ints(eset) if eset is not None else None)
    resp = handlers.run_count_ab(req)

    def render(r: s.CountABResponse):
        yield f"n_alpha = {r.n_alpha}"
        yield f"n_beta = {r.n_beta}"
        yield f"n_star = {r.n_star}"
        for item in r.determinants:
            yield f"det({item.param}) = {_exact_text(item.exact)}"

    _emit(resp, output, render)


@cli.command("count-galois")
@click.argument("graph_file")
@click.option("--p", "prime", type=int, required=True,
              help="Odd prime parameter order.")
@_subset_options
@output_option
def count_galois(graph_file, prime, vset, eset, output):
    """Count non-p-vanishing unicyclic components via conjugate products."""
    req = s.GaloisRequest(
        graph=_load_graph(graph_file), p=prime,
        vset=_ints(vset) if vset is not None else None,
        eset=_ints(eset) if eset is not None else None)
    resp = handlers.run_count_galois(req)

    def render(r: s.GaloisResponse):
        yield f"p = {r.p}"
        yield f"n_star = {r.n_star}"
        for item in r.determinants:
            yield f"det({item.param}) = {_exact_text(item.exact)}"

    _emit(resp, output, render)


@cli.command()
@click.argument("graph_file")
@vset_option
@click.option("--verify/--no-verify", default=True, show_default=True,
              help="Cross-check against the census oracle (small graphs).")
@output_option
def triangles(graph_file, vset, verify, output):
    """Count triangles and rootless trees spanned by a 3-vertex subset."""
    req = s.TriangleRequest(graph=_load_graph(graph_file), vset=_ints(vset),
                            verify=verify)
    resp = handlers.run_triangles(req)

    def render(r: s.TriangleResponse):
        yield "vset: " + " ".join(str(v) for v in r.vset)
        yield f"triangles = {r.triangles}"
        yield f"rootless_trees = {r.rootless_trees}"
        yield f"minor(-1) = {r.minor_at_minus_one}"
        yield f"minor(i) = {r.minor_at_i}"

    _emit(resp, output, render)


@cli.command()
@click.argument("graph_file")
@vset_option
@click.option("--verify/--no-verify", default=True, show_default=True,
              help="Cross-check against the census oracle (small graphs).")
@output_option
def count4(graph_file, vset, verify, output):
    """Count the five 4-vertex all-regular classes on a 4-vertex subset."""
    req = s.Count4Request(graph=_load_graph(graph_file), vset=_ints(vset),
                          verify=verify)
    resp = handlers.run_count4(req)

    def render(r: s.Count4Response):
        yield "vset: " + " ".join(str(v) for v in r.vset)
        yield f"c440 = {r.c440}"
        yield f"c441 = {r.c441}"
        yield f"tu330 = {r.tu330}"
        yield f"tu331 = {r.tu331}"
        yield f"f4 = {r.f4}"
        for item in r.determinants:
            yield f"det({item.param}) = {_exact_text(item.exact)}"

    _emit(resp, output, render)


@cli.command("spanning-trees")
@click.argument("graph_file")
@click.option("--param", default="1", show_default=True,
              help="Parameter shorthand.")
@click.option("--vertex", type=int, default=None,
              help="Vertex to delete (default: first vertex).")
@force_option
@output_option
def spanning_trees(graph_file, param, vertex, force, output):
    """Spanning-tree count via the Laplacian cofactor."""
    req = s.SpanningTreesRequest(graph=_load_graph(graph_file), param=param,
                                 vertex=vertex, force=force)
    resp = handlers.run_spanning_trees(req)

    def render(r: s.SpanningTreesResponse):
        yield f"count = {r.count}"
        yield f"condition_holds = {str(r.condition_holds).lower()}"
        yield f"parameter = order {r.parameter.order} power {r.parameter.power}"
        yield f"deleted_vertex = {r.deleted_vertex}"

    _emit(resp, output, render)


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("cyclograph.service.app:app", host=host, port=port)


def main(argv=None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.Abort:
        return 1
    except ValidationError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except GuardrailExceeded as exc:
        click.echo(f"error: GuardrailExceeded: {exc}", err=True)
        return 3
    except InputError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        return 1
    except PreconditionError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        return 2
    except CyclographError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())
