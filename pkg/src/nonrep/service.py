"""FastAPI service wrapping the colouring, verification, bound and
structure operations.  Every computational endpoint returns a
certificate plus the exit code a batch client should propagate
(0 pass, 2 verification counterexample); malformed inputs are HTTP 400,
which clients map to exit code 1.
"""
from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .bounds import bound_report
from .certificates import build_certificate
from .colouring import Colouring
from .graphs import Graph, InputError, parse_graph, path_graph
from .planar import (colour_genus, colour_planar, compute_product_structure,
                     parse_product_structure, serialize_product_structure,
                     validate_product_structure)
from .treedecomp import exact_treewidth, parse_td, validate_td, width
from .twcolour import strongly_nonrepetitive_colouring
from .verify import find_bad_lazy_walk, find_repetitive_path, is_proper
from .words import path_colouring_4, verify_boring

app = FastAPI(title="nonrep", version=__version__)

DEFAULT_MAX_ORDER = 12
DEFAULT_MAX_WALK = 10


class GraphPayload(BaseModel):
    text: str
    format: Literal["edgelist", "graph6"] = "edgelist"


class ColourPathRequest(BaseModel):
    n: int = Field(ge=1)
    max_walk: int = DEFAULT_MAX_WALK


class ColourTwRequest(BaseModel):
    graph: GraphPayload
    td: str
    max_order: int = DEFAULT_MAX_ORDER
    max_walk: int = DEFAULT_MAX_WALK


class ColourPlanarRequest(BaseModel):
    graph: GraphPayload
    structure: Optional[str] = None
    compute_structure: bool = False
    max_order: int = DEFAULT_MAX_ORDER
    max_walk: int = DEFAULT_MAX_WALK


class ColourGenusRequest(BaseModel):
    graph: GraphPayload
    structure: str
    max_order: int = DEFAULT_MAX_ORDER
    max_walk: int = DEFAULT_MAX_WALK


class VerifyRequest(BaseModel):
    graph: GraphPayload
    colouring: str
    max_order: int = DEFAULT_MAX_ORDER
    max_walk: int = DEFAULT_MAX_WALK


class BoundsRequest(BaseModel):
    formula: str
    g: Optional[int] = None
    k: Optional[int] = None
    r: Optional[int] = None
    c: Optional[int] = None
    c_prime: Optional[int] = None


class StructureValidateRequest(BaseModel):
    graph: GraphPayload
    structure: str


class StructureComputeRequest(BaseModel):
    graph: GraphPayload


class CertificateResponse(BaseModel):
    certificate: dict
    exit_code: int


def _fail(exc: InputError):
    raise HTTPException(status_code=400, detail=str(exc))


def _graph(payload: GraphPayload) -> Graph:
    return parse_graph(payload.text, payload.format)


def _colouring_verdicts(g: Graph, col: Colouring, max_order: int, max_walk: int) -> dict:
    return {
        "proper": is_proper(g, col),
        "repetitive_path": find_repetitive_path(g, col, max_order),
        "bad_lazy_walk": find_bad_lazy_walk(g, col, max_walk),
    }


def _respond(cert: dict) -> CertificateResponse:
    return CertificateResponse(certificate=cert, exit_code=cert["exit_code"])


@app.get("/healthz")
def healthz():
    return {"status": "ok", "version": __version__}


@app.post("/colour/path", response_model=CertificateResponse)
def colour_path(req: ColourPathRequest):
    try:
        col = path_colouring_4(req.n)
        verdicts = {
            "proper": is_proper(path_graph(req.n), col),
            "boring_walks": verify_boring(col, req.max_walk),
        }
        cert = build_certificate(
            "colour path", {"n": req.n, "max_walk": req.max_walk},
            colouring=col, verdicts=verdicts,
            bound={"claimed": 4, "certified": True})
    except InputError as exc:
        _fail(exc)
    return _respond(cert)


@app.post("/colour/tw", response_model=CertificateResponse)
def colour_tw(req: ColourTwRequest):
    try:
        g = _graph(req.graph)
        td = parse_td(req.td)
        err = validate_td(g, td)
        if err is not None:
            raise InputError(f"decomposition does not fit the graph: {err}")
        col = strongly_nonrepetitive_colouring(g, td)
        w = width(td) if g.m else 0
        cert = build_certificate(
            "colour tw",
            {"max_order": req.max_order, "max_walk": req.max_walk, "width": w},
            inputs={"graph": req.graph.text, "td": req.td},
            colouring=col,
            verdicts=_colouring_verdicts(g, col, req.max_order, req.max_walk),
            bound={"claimed": 4 ** w, "certified": True})
    except InputError as exc:
        _fail(exc)
    return _respond(cert)


@app.post("/colour/planar", response_model=CertificateResponse)
def colour_planar_ep(req: ColourPlanarRequest):
    try:
        g = _graph(req.graph)
        if req.compute_structure:
            structure = compute_product_structure(g)
        elif req.structure is not None:
            structure = parse_product_structure(req.structure)
        else:
            raise InputError("provide a structure or set compute_structure")
        res = colour_planar(g, structure)
        inputs = {"graph": req.graph.text}
        if req.structure is not None:
            inputs["structure"] = req.structure
        cert = build_certificate(
            "colour planar",
            {"max_order": req.max_order, "max_walk": req.max_walk,
             "compute_structure": req.compute_structure},
            inputs=inputs,
            colouring=res.colouring,
            verdicts=_colouring_verdicts(g, res.colouring, req.max_order, req.max_walk),
            bound={"claimed": res.claimed_bound, "certified": res.certified,
                   "h_width": res.h_width},
            extra={"structure": _structure_dict(structure)})
    except InputError as exc:
        _fail(exc)
    return _respond(cert)


@app.post("/colour/genus", response_model=CertificateResponse)
def colour_genus_ep(req: ColourGenusRequest):
    try:
        g = _graph(req.graph)
        structure = parse_product_structure(req.structure)
        res = colour_genus(g, structure)
        cert = build_certificate(
            "colour genus",
            {"max_order": req.max_order, "max_walk": req.max_walk,
             "ell": structure.ell},
            inputs={"graph": req.graph.text, "structure": req.structure},
            colouring=res.colouring,
            verdicts=_colouring_verdicts(g, res.colouring, req.max_order, req.max_walk),
            bound={"claimed": res.claimed_bound, "certified": res.certified,
                   "h_width": res.h_width})
    except InputError as exc:
        _fail(exc)
    return _respond(cert)


@app.post("/verify", response_model=CertificateResponse)
def verify_ep(req: VerifyRequest):
    try:
        g = _graph(req.graph)
        col = Colouring.from_json(req.colouring)
        cert = build_certificate(
            "verify",
            {"max_order": req.max_order, "max_walk": req.max_walk},
            inputs={"graph": req.graph.text, "colouring": req.colouring},
            colouring=col,
            verdicts=_colouring_verdicts(g, col, req.max_order, req.max_walk))
    except InputError as exc:
        _fail(exc)
    return _respond(cert)


@app.post("/bounds", response_model=CertificateResponse)
def bounds_ep(req: BoundsRequest):
    try:
        report = bound_report(req.formula, g=req.g, k=req.k, r=req.r,
                              c=req.c, c_prime=req.c_prime)
        cert = build_certificate("bounds", {"formula": req.formula},
                                 bound=report.to_dict())
    except InputError as exc:
        _fail(exc)
    return _respond(cert)


@app.post("/structure/validate", response_model=CertificateResponse)
def structure_validate_ep(req: StructureValidateRequest):
    try:
        g = _graph(req.graph)
        structure = parse_product_structure(req.structure)
        violation = validate_product_structure(g, structure)
        verdict = {
            "passed": violation is None,
            "kind": "product-structure",
            "counterexample": None if violation is None else list(_jsonable(violation)),
            "caps": {},
            "complete": True,
        }
        cert = build_certificate(
            "structure validate", {},
            inputs={"graph": req.graph.text, "structure": req.structure},
            verdicts={"structure": verdict})
    except InputError as exc:
        _fail(exc)
    return _respond(cert)


@app.post("/structure/compute", response_model=CertificateResponse)
def structure_compute_ep(req: StructureComputeRequest):
    try:
        g = _graph(req.graph)
        structure = compute_product_structure(g)
        w = width(structure.h_td)
        extra = {"structure": _structure_dict(structure),
                 "h_width": w}
        if structure.h.n <= 30:
            extra["h_treewidth"] = exact_treewidth(structure.h)
        cert = build_certificate(
            "structure compute", {},
            inputs={"graph": req.graph.text},
            extra=extra)
    except InputError as exc:
        _fail(exc)
    return _respond(cert)


def _structure_dict(structure) -> dict:
    import json
    return json.loads(serialize_product_structure(structure))


def _jsonable(violation):
    kind, payload = violation
    return (kind, payload if isinstance(payload, int) else list(payload))
