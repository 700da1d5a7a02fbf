"""HTTP service wrapping the core package.

Every computation is a pure function of its request payload, so the
service is stateless: algebras and modules travel as the same text
formats the CLI uses, and responses mirror the report records.  The CLI
is a thin client of these endpoint functions (in-process by default,
over HTTP with --server).
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import __version__, findim, reps
from .enumeration import enumerate_modules
from .errors import HypothesisFailed, LayerlenError
from .functors import (
    INFINITE,
    QuotOf,
    layer_length,
    parse_functor,
    radical_layer_length,
    socle_layer_length,
)
from .textio import parse_algebra, parse_module, print_module
from .verify import DEFAULT_SEED, VerifyConfig, verify_comparison

app = FastAPI(title="layerlen", version=__version__)


class AlgebraRequest(BaseModel):
    algebra: str
    length_cap: int = 12
    name: str | None = None


class CheckResponse(BaseModel):
    name: str
    p: int
    vertices: list[str]
    dimension: int
    basis: list[str]
    loewy_length: int
    nil_index: int


class FunctorEvalRequest(AlgebraRequest):
    module: str
    functor: str


class FunctorEvalResponse(BaseModel):
    functor: str
    dims: dict[str, int]
    total_dim: int


class LayerRequest(AlgebraRequest):
    module: str
    alpha: str
    beta: str | None = None
    mode: str = "radical"  # radical | socle | general


class LayerResponse(BaseModel):
    alpha: str
    beta: str | None
    mode: str
    finite: bool
    value: int | None


class VerifyRequest(AlgebraRequest):
    theorem: str
    samples: int = 40
    max_dim: int = 4
    seed: int = DEFAULT_SEED
    simples: list[list[str]] | None = None
    pd_cap: int = 20


class VerifyResponse(BaseModel):
    theorem: str
    algebra: str
    status: str
    checks: int
    enumerated: int
    random: int
    hypothesis_violations: int
    failures: list[dict]
    notes: dict
    seed: int
    elapsed: float


class PsiRequest(AlgebraRequest):
    module: str
    pd_cap: int = 20


class PsiResponse(BaseModel):
    dims: list[int]
    phi: int
    psi: int
    rank_table: list[int]
    indecomposables: list[list[int]]
    tail: list[dict]
    pd: dict
    pd_cap: int
    heuristic: bool


class BoundRequest(AlgebraRequest):
    simples: list[str] = []
    ell: int = 0
    enum_bound: int = 3
    pd_cap: int = 20
    mode: str = "bigteo"  # bigteo | mhlm2 | radcube


class BoundResponse(BaseModel):
    mode: str
    algebra: str
    simples: list[str]
    ell: int | None
    status: str
    hypotheses: list[dict]
    bound: int | None
    beta: int | None
    psi_dim: int | None
    flags: list[str]
    brute_findim_lower_bound: int | None
    detail: dict
    elapsed: float


class EnumerateRequest(AlgebraRequest):
    max_dim: int = 3


class ModuleRecord(BaseModel):
    dims: dict[str, int]
    total_dim: int
    text: str


class EnumerateResponse(BaseModel):
    count: int
    modules: list[ModuleRecord]


class DecomposeRequest(AlgebraRequest):
    module: str


class SummandRecord(BaseModel):
    dims: dict[str, int]
    multiplicity: int
    certificate: str
    text: str


class DecomposeResponse(BaseModel):
    summands: list[SummandRecord]
    witness_ok: bool
    heuristic: bool


@app.exception_handler(LayerlenError)
async def _layerlen_error(request: Request, exc: LayerlenError):
    return JSONResponse(
        status_code=400, content={"error": {"code": exc.code, "detail": str(exc)}}
    )


def _algebra(req: AlgebraRequest):
    return parse_algebra(req.algebra, length_cap=req.length_cap, name=req.name)


def _dims_dict(A, dims) -> dict[str, int]:
    return {A.quiver.vertices[v]: int(d) for v, d in enumerate(dims)}


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/check", response_model=CheckResponse)
def check(req: AlgebraRequest) -> CheckResponse:
    A = _algebra(req)
    lam = reps.regular_module(A)
    from .functors import loewy_length

    return CheckResponse(
        name=A.name,
        p=A.p,
        vertices=list(A.quiver.vertices),
        dimension=A.dim,
        basis=A.basis_texts(),
        loewy_length=int(loewy_length(lam)),
        nil_index=A.nil_index,
    )


@app.post("/functor-eval", response_model=FunctorEvalResponse)
def functor_eval(req: FunctorEvalRequest) -> FunctorEvalResponse:
    A = _algebra(req)
    M = parse_module(req.module, A)
    f = parse_functor(req.functor, A)
    value = f.value(M)
    return FunctorEvalResponse(
        functor=f.describe(),
        dims=_dims_dict(A, value.dims),
        total_dim=value.total_dim,
    )


@app.post("/layer", response_model=LayerResponse)
def layer(req: LayerRequest) -> LayerResponse:
    A = _algebra(req)
    M = parse_module(req.module, A)
    alpha = parse_functor(req.alpha, A)
    beta_desc = None
    if req.beta is not None:
        beta = parse_functor(req.beta, A)
        beta_desc = beta.describe()
        value = layer_length(alpha, beta, M)
        mode = "general"
    elif req.mode == "socle":
        value = socle_layer_length(alpha, M)
        mode = "socle"
    else:
        value = radical_layer_length(alpha, M)
        mode = "radical"
    finite = value != INFINITE
    return LayerResponse(
        alpha=alpha.describe(),
        beta=beta_desc,
        mode=mode,
        finite=finite,
        value=int(value) if finite else None,
    )


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    A = _algebra(req)
    cfg = VerifyConfig(
        max_dim=req.max_dim,
        n_random=req.samples,
        seed=req.seed,
        simples=tuple(tuple(g) for g in req.simples) if req.simples is not None else None,
        pd_cap=req.pd_cap,
    )
    report = verify_comparison(req.theorem, A, cfg)
    return VerifyResponse(**report.to_record())


@app.post("/psi", response_model=PsiResponse)
def psi_endpoint(req: PsiRequest) -> PsiResponse:
    A = _algebra(req)
    M = parse_module(req.module, A)
    report = findim.psi(M, req.pd_cap)
    return PsiResponse(**report.to_record())


@app.post("/findim-bound", response_model=BoundResponse)
def findim_bound(req: BoundRequest) -> BoundResponse:
    A = _algebra(req)
    try:
        if req.mode == "bigteo":
            report = findim.bigteo_bound(
                A,
                req.simples,
                req.ell,
                enum_bound=req.enum_bound,
                pd_cap=req.pd_cap,
                algebra_name=A.name,
            )
        elif req.mode in ("mhlm2", "radcube"):
            report = findim.mhlm2_bound(
                A,
                req.simples,
                pd_cap=req.pd_cap,
                algebra_name=A.name,
                mode=req.mode,
                enum_bound=req.enum_bound,
            )
        else:
            raise LayerlenError(f"unknown bound mode {req.mode!r}")
    except HypothesisFailed as exc:
        if exc.report is None:
            raise
        report = exc.report
    return BoundResponse(**report.to_record())


@app.post("/enumerate", response_model=EnumerateResponse)
def enumerate_endpoint(req: EnumerateRequest) -> EnumerateResponse:
    A = _algebra(req)
    modules = enumerate_modules(A, req.max_dim)
    return EnumerateResponse(
        count=len(modules),
        modules=[
            ModuleRecord(
                dims=_dims_dict(A, M.dims),
                total_dim=M.total_dim,
                text=print_module(M),
            )
            for M in modules
        ],
    )


@app.post("/decompose", response_model=DecomposeResponse)
def decompose_endpoint(req: DecomposeRequest) -> DecomposeResponse:
    A = _algebra(req)
    M = parse_module(req.module, A)
    dec = findim.decompose(M)
    return DecomposeResponse(
        summands=[
            SummandRecord(
                dims=_dims_dict(A, rep.dims),
                multiplicity=mult,
                certificate=cert,
                text=print_module(rep),
            )
            for rep, mult, cert in dec.summands
        ],
        witness_ok=dec.witness_ok,
        heuristic=dec.heuristic,
    )
