"""The HTTP facade over the core package.

Every endpoint is stateless and pure; errors from the core map onto two
status codes so thin clients can translate them to exit codes: 422 for
anything unparsable or ill-typed, 400 for rig and shape mismatches.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .. import __version__
from ..axioms import run_axiom_suite
from ..errors import (
    ArityError, ConfigError, DomainError, MatpropError, NotComparableError,
    ParseError, RigMismatchError, ShapeError,
)
from .. import finite, matrices, rewrite, semantics, syntax
from ..rigs import RIGS, get_rig
from ..terms import arity_of
from . import schemas

_UNPROCESSABLE = (ParseError, ArityError, NotComparableError, ConfigError)
_MISMATCH = (RigMismatchError, ShapeError, DomainError)


def _error_payload(exc: MatpropError) -> dict:
    kind = {
        ParseError: "parse",
        ArityError: "arity",
        NotComparableError: "not-comparable",
        ConfigError: "config",
        RigMismatchError: "rig-mismatch",
        ShapeError: "shape",
        DomainError: "domain",
    }.get(type(exc), "error")
    payload = {"kind": kind, "message": str(exc)}
    span = getattr(exc, "span", None)
    if span is not None:
        payload["start"], payload["end"] = span.start, span.end
    return payload


def create_app() -> FastAPI:
    app = FastAPI(title="matprop", version=__version__)

    @app.exception_handler(MatpropError)
    async def matprop_error(request, exc: MatpropError):
        status = 422 if isinstance(exc, _UNPROCESSABLE) else 400
        return JSONResponse(status_code=status, content={"detail": _error_payload(exc)})

    def parse_with_rig(rig_name: str, text: str):
        rig, term = syntax.parse_term_source(text, get_rig(rig_name))
        return rig, term

    @app.get("/", response_model=schemas.ServiceInfo)
    def info():
        return schemas.ServiceInfo(
            name="matprop",
            version=__version__,
            rigs=[schemas.RigInfo(name=r.name, flags=sorted(r.flags)) for r in RIGS.values()],
        )

    @app.get("/rigs", response_model=list[schemas.RigInfo])
    def rigs():
        return [schemas.RigInfo(name=r.name, flags=sorted(r.flags)) for r in RIGS.values()]

    @app.post("/check", response_model=schemas.CheckResponse)
    def check(req: schemas.TermRequest):
        _, term = parse_with_rig(req.rig, req.term)
        a = arity_of(term)
        return schemas.CheckResponse(dom=a.dom, cod=a.cod, term=syntax.print_term(term))

    @app.post("/eval", response_model=schemas.MatrixResponse)
    def eval_endpoint(req: schemas.TermRequest):
        rig, term = parse_with_rig(req.rig, req.term)
        m = semantics.eval_term(term, rig)
        rows = [
            [rig.show(v) for v in m.row_values(i)] for i in range(m.cod)
        ]
        return schemas.MatrixResponse(
            rig=rig.name, dom=m.dom, cod=m.cod, rows=rows, text=matrices.format_matrix(m)
        )

    @app.post("/equal", response_model=schemas.EqualResponse)
    def equal(req: schemas.EqualRequest):
        rig = get_rig(req.rig)
        lrig, left = syntax.parse_term_source(req.left, rig)
        rrig, right = syntax.parse_term_source(req.right, rig)
        if lrig is not rrig:
            raise RigMismatchError(
                f"terms over different rigs: {lrig.name} and {rrig.name}"
            )
        return schemas.EqualResponse(equal=semantics.equal_terms(left, right, lrig))

    @app.post("/decompose", response_model=schemas.TermResponse)
    def decompose(req: schemas.DecomposeRequest):
        m = matrices.parse_matrix(req.matrix)
        term = semantics.decompose(m)
        return schemas.TermResponse(
            rig=m.rig.name, dom=m.dom, cod=m.cod, term=syntax.print_term(term)
        )

    @app.post("/normalize", response_model=schemas.TermResponse)
    def normalize(req: schemas.TermRequest):
        rig, term = parse_with_rig(req.rig, req.term)
        out = semantics.normalize(term, rig)
        a = arity_of(out)
        return schemas.TermResponse(
            rig=rig.name, dom=a.dom, cod=a.cod, term=syntax.print_term(out)
        )

    @app.post("/rewrite", response_model=schemas.RewriteResponse)
    def rewrite_endpoint(req: schemas.RewriteRequest):
        rig, term = parse_with_rig(req.rig, req.term)
        rs = rewrite.ruleset_for(rig, req.rules)
        result = rewrite.rewrite_bounded(term, rs, req.bound, rig)
        return schemas.RewriteResponse(
            rig=rig.name,
            term=syntax.print_term(result.term),
            steps=len(result.steps),
            trace=result.trace_lines(),
            bound_reached=result.bound_reached,
        )

    @app.post("/render", response_model=schemas.RenderResponse)
    def render(req: schemas.TermRequest):
        _, term = parse_with_rig(req.rig, req.term)
        return schemas.RenderResponse(dot=syntax.render_dot(term))

    @app.post("/convert", response_model=schemas.ConvertResponse)
    def convert(req: schemas.ConvertRequest):
        if req.kind == "rel2mat":
            out = matrices.format_matrix(finite.rel_to_matrix(finite.parse_relation(req.data)))
        elif req.kind == "mat2rel":
            out = finite.format_relation(finite.matrix_to_rel(matrices.parse_matrix(req.data)))
        elif req.kind == "span2mat":
            out = matrices.format_matrix(finite.span_to_matrix(finite.parse_span(req.data)))
        else:
            out = finite.format_span(finite.matrix_to_span(matrices.parse_matrix(req.data)))
        return schemas.ConvertResponse(output=out)

    @app.post("/axioms", response_model=schemas.AxiomsResponse)
    def axioms(req: schemas.AxiomsRequest):
        rig = get_rig(req.rig)
        checks = run_axiom_suite(rig, samples=req.samples)
        return schemas.AxiomsResponse(
            rig=rig.name,
            checks=[schemas.AxiomResult(name=c.name, holds=c.holds) for c in checks],
            all_hold=all(c.holds for c in checks),
        )

    return app


app = create_app()
