"""HTTP wrapper: one endpoint per package operation, domain errors
mapped to 400 with a structured detail body."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..complexes import (
    chain_lattice,
    complex_from_dict,
    ideal_meet,
    validate_complex,
)
from ..errors import NCMorseError
from ..homology import IntegerMatrix, homology_profile, verify_collapse
from ..morse import (
    critical_chains,
    generate_morse,
    is_acyclic_matching,
    is_modified_morse,
    matching_from_function,
    morse_from_dict,
    morse_to_dict,
)
from ..nccw import (
    commutative_nccw,
    descriptor_from_dict,
    nccw_from_morse,
    pullback_dimension,
    validate_descriptor,
)
from ..topology import closure, is_absorbing, poset_from_dict
from .schemas import (
    ChainsResponse,
    ClosureRequest,
    ClosureResponse,
    CollapseResponse,
    ComplexDoc,
    CriticalRequest,
    CriticalResponse,
    DescriptorDoc,
    DescriptorValidationResponse,
    GenerateRequest,
    HealthResponse,
    HomologyResponse,
    MatchingResponse,
    MatrixModel,
    MeetRequest,
    MeetResponse,
    MorseCheckResponse,
    MorseRequest,
    MorseValuesResponse,
    NCCWMorseRequest,
    PullbackRequest,
    PullbackResponse,
    ValidationResponse,
)


def _complex(doc: ComplexDoc):
    return complex_from_dict(doc.model_dump())


def _morse(doc):
    return morse_from_dict(doc.model_dump())


def _matrix(m: MatrixModel) -> IntegerMatrix:
    rows = m.rows if m.rows is not None else len(m.entries)
    cols = m.cols if m.cols is not None else (len(m.entries[0]) if m.entries else 0)
    return IntegerMatrix(rows, cols, tuple(tuple(r) for r in m.entries))


def create_app() -> FastAPI:
    app = FastAPI(
        title="ncmorse",
        version=__version__,
        description="Chain lattices, Morse collapse and homology checks over JSON",
    )

    @app.exception_handler(NCMorseError)
    async def domain_error(request: Request, exc: NCMorseError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"detail": {"error": type(exc).__name__, "message": str(exc)}},
        )

    @app.get("/health", response_model=HealthResponse)
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/complex/validate", response_model=ValidationResponse)
    def complex_validate(doc: ComplexDoc):
        return validate_complex(_complex(doc)).to_dict()

    @app.post("/complex/chains", response_model=ChainsResponse)
    def complex_chains(doc: ComplexDoc):
        return chain_lattice(_complex(doc)).to_dict()

    @app.post("/complex/homology", response_model=HomologyResponse)
    def complex_homology(doc: ComplexDoc):
        return homology_profile(_complex(doc)).to_dict()

    @app.post("/complex/meet", response_model=MeetResponse)
    def complex_meet(req: MeetRequest):
        lattice = chain_lattice(_complex(req.complex))
        support = ideal_meet(lattice, req.chains)
        index = {cell: i for i, cell in enumerate(lattice.cell_order)}
        return {"support": sorted(support, key=index.__getitem__)}

    @app.post("/morse/check", response_model=MorseCheckResponse)
    def morse_check(req: MorseRequest):
        lattice = chain_lattice(_complex(req.complex))
        return is_modified_morse(lattice, _morse(req.morse)).to_dict()

    @app.post("/morse/critical", response_model=CriticalResponse)
    def morse_critical(req: CriticalRequest):
        lattice = chain_lattice(_complex(req.complex))
        return critical_chains(lattice, _morse(req.morse), req.convention).to_dict()

    @app.post("/morse/matching", response_model=MatchingResponse)
    def morse_matching(req: MorseRequest):
        lattice = chain_lattice(_complex(req.complex))
        matching = matching_from_function(lattice, _morse(req.morse))
        payload = matching.to_dict()
        payload["acyclic"] = is_acyclic_matching(lattice, matching)
        return payload

    @app.post("/morse/generate", response_model=MorseValuesResponse)
    def morse_generate(req: GenerateRequest):
        lattice = chain_lattice(_complex(req.complex))
        return morse_to_dict(generate_morse(lattice, req.seed))

    @app.post("/morse/collapse", response_model=CollapseResponse)
    def morse_collapse(req: MorseRequest):
        return verify_collapse(_complex(req.complex), _morse(req.morse)).to_dict()

    @app.post("/nccw/commutative", response_model=DescriptorDoc)
    def nccw_commutative(doc: ComplexDoc):
        return commutative_nccw(_complex(doc)).to_dict()

    @app.post("/nccw/from-morse", response_model=DescriptorDoc)
    def nccw_from_morse_endpoint(req: NCCWMorseRequest):
        descriptor = nccw_from_morse(_complex(req.complex), _morse(req.morse), req.convention)
        return descriptor.to_dict()

    @app.post("/nccw/validate", response_model=DescriptorValidationResponse)
    def nccw_validate(doc: DescriptorDoc):
        descriptor = descriptor_from_dict(doc.model_dump(by_alias=True, exclude_none=True))
        return validate_descriptor(descriptor).to_dict()

    @app.post("/nccw/pullback", response_model=PullbackResponse)
    def nccw_pullback(req: PullbackRequest):
        dim, basis = pullback_dimension(_matrix(req.alpha1), _matrix(req.alpha2))
        return {"dimension": dim, "basis": [[str(x) for x in vec] for vec in basis]}

    @app.post("/poset/closure", response_model=ClosureResponse)
    def poset_closure(req: ClosureRequest):
        poset = poset_from_dict(req.poset.model_dump())
        closed = closure(poset, req.subset)
        return {"closure": closed.sorted(), "absorbing": is_absorbing(poset, req.subset)}

    return app
