"""Request and response bodies for the HTTP service."""

from __future__ import annotations

from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field


class BoundaryEntryModel(BaseModel):
    cell: str
    deg: int


class CellModel(BaseModel):
    id: str
    dim: int
    boundary: list[BoundaryEntryModel] = Field(default_factory=list)


class ComplexDoc(BaseModel):
    cells: list[CellModel]


class MorseDoc(BaseModel):
    values: dict[str, Union[str, int]]


class PosetDoc(BaseModel):
    elements: list[str]
    covers: list[tuple[str, str]] = Field(default_factory=list)


class LevelModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    k: int
    fiber: list[int]
    lam: int = Field(alias="lambda")
    attaching: dict[str, list[str]] = Field(default_factory=dict)
    maps: dict[str, str] = Field(default_factory=dict)


class DescriptorDoc(BaseModel):
    levels: list[LevelModel]
    algebras: Optional[list[str]] = None


class MatrixModel(BaseModel):
    entries: list[list[int]]
    rows: Optional[int] = None
    cols: Optional[int] = None


class MorseRequest(BaseModel):
    complex: ComplexDoc
    morse: MorseDoc


class CriticalRequest(MorseRequest):
    convention: str = "paper-nonstrict"


class NCCWMorseRequest(MorseRequest):
    convention: str = "paper-nonstrict"


class GenerateRequest(BaseModel):
    complex: ComplexDoc
    seed: int = 0


class MeetRequest(BaseModel):
    complex: ComplexDoc
    chains: list[str]


class ClosureRequest(BaseModel):
    poset: PosetDoc
    subset: list[str]


class PullbackRequest(BaseModel):
    alpha1: MatrixModel
    alpha2: MatrixModel


class HealthResponse(BaseModel):
    status: str
    version: str


class ValidationResponse(BaseModel):
    valid: bool
    errors: list[str]
    regular: bool
    dimension: int
    cell_counts: list[int]


class ChainModel(BaseModel):
    id: str
    order: int
    generator: str
    support: list[str]


class ChainsResponse(BaseModel):
    chains: list[ChainModel]
    ideals: dict[str, str]
    hasse: list[tuple[str, str]]
    counts: list[int]


class ViolationModel(BaseModel):
    chain: str
    kind: str
    neighbors: list[str]


class MorseCheckResponse(BaseModel):
    valid: bool
    violations: list[ViolationModel]
    double_exceptions: list[str]


class CriticalResponse(BaseModel):
    convention: str
    critical: list[list[str]]
    counts: list[int]


class MatchingResponse(BaseModel):
    pairs: list[tuple[str, str]]
    unmatched: list[str]
    acyclic: bool


class MorseValuesResponse(BaseModel):
    values: dict[str, str]


class HomologyResponse(BaseModel):
    betti: list[int]
    torsion: list[list[int]]
    euler: int


class CollapsedProfile(BaseModel):
    betti: list[int]
    torsion: list[list[int]]


class CollapseResponse(BaseModel):
    betti: list[int]
    torsion: list[list[int]]
    euler: int
    morse_counts: list[int]
    checks: dict[str, bool]
    collapsed: CollapsedProfile
    evidence: str
    note: str


class DescriptorValidationResponse(BaseModel):
    valid: bool
    errors: list[str]
    note: str


class PullbackResponse(BaseModel):
    dimension: int
    basis: list[list[str]]


class ClosureResponse(BaseModel):
    closure: list[str]
    absorbing: bool


class MeetResponse(BaseModel):
    support: list[str]
