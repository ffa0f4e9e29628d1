"""FastAPI application exposing the calculus over HTTP."""

from fastapi import FastAPI, HTTPException

from . import api, schemas

_STATUS = {"not_found": 404, "bad_request": 400}


def _run(fn, *args):
    try:
        return fn(*args)
    except api.ApiError as exc:
        raise HTTPException(status_code=_STATUS[exc.code], detail=exc.message)


def create_app():
    app = FastAPI(
        title="cosetpdo",
        description=("Fourier calculus, operator quantization and trace "
                     "identities on quotients of finite groups"),
        version="0.1.0")

    @app.get("/groups", response_model=schemas.GroupListResponse)
    def groups_list():
        return api.list_groups()

    @app.get("/groups/{name}", response_model=schemas.GroupDetail)
    def groups_show(name: str):
        return _run(api.show_group, name)

    @app.post("/groups/validate", response_model=schemas.GroupDocumentReport)
    def groups_validate(doc: dict):
        return _run(api.validate_group_document, doc)

    @app.post("/transform/forward", response_model=schemas.TransformForwardResponse)
    def transform_forward(req: schemas.TransformForwardRequest):
        return _run(api.transform_forward, req)

    @app.post("/transform/inverse", response_model=schemas.TransformInverseResponse)
    def transform_inverse(req: schemas.TransformInverseRequest):
        return _run(api.transform_inverse, req)

    @app.post("/operators/symbol", response_model=schemas.SymbolDumpResponse)
    def operators_symbol(req: schemas.OperatorSpec):
        return _run(api.symbol_dump, req)

    @app.post("/operators/schatten", response_model=schemas.SchattenResponse)
    def operators_schatten(req: schemas.SchattenRequest):
        return _run(api.schatten_report, req)

    @app.post("/operators/trace", response_model=schemas.TraceResponse)
    def operators_trace(req: schemas.OperatorSpec):
        return _run(api.trace_report, req)

    @app.post("/operators/nuclearity", response_model=schemas.NuclearityResponse)
    def operators_nuclearity(req: schemas.NuclearityRequest):
        return _run(api.nuclearity, req)

    @app.post("/heat/trace", response_model=schemas.HeatTraceResponse)
    def heat_trace(req: schemas.HeatTraceRequest):
        return _run(api.heat_trace_sweep, req)

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify(req: schemas.VerifyRequest):
        return _run(api.verify, req)

    return app


app = create_app()
