"""Request and response schemas for the compute service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

SCHEMA = "invschub/1"

Notation = Literal["one-line", "cycles", "word"]


class PermRequest(BaseModel):
    value: str
    notation: Notation = "one-line"


class InvRequest(BaseModel):
    value: str
    notation: Notation = "cycles"
    guard: int = Field(default=12, gt=0)


class SchubertRequest(PermRequest):
    pass


class InvSchubertRequest(InvRequest):
    method: Literal["recursion", "atom-sum"] = "recursion"


class PolynomialTerm(BaseModel):
    exponents: list[int]
    coeff: int


class PolynomialResponse(BaseModel):
    schema_version: str = SCHEMA
    input: str
    text: str
    degree: int
    terms: list[PolynomialTerm]


class ExpandRequest(InvRequest):
    basis: Literal["P", "Q"] = "P"


class ExpandFRequest(PermRequest):
    pass


class ExpansionTerm(BaseModel):
    shape: list[int]
    coeff: int


class ExpansionResponse(BaseModel):
    schema_version: str = SCHEMA
    input: str
    basis: str
    terms: list[ExpansionTerm]


class TreeRequest(BaseModel):
    kind: Literal["involution", "classical"] = "involution"
    value: str
    # resolved per kind: cycles for involutions, one-line for permutations
    notation: Optional[Notation] = None
    guard: int = Field(default=16, gt=0)
    layout: Literal["indented", "edges"] = "indented"


class TreeResponse(BaseModel):
    schema_version: str = SCHEMA
    input: str
    kind: str
    node_count: int
    leaves: list[str]
    text: Optional[str] = None
    edges: Optional[list[tuple[str, str]]] = None


class InsertRequest(BaseModel):
    word: list[int]
    algorithm: Literal["sh", "ick"] = "sh"
    trace: bool = False


class TableauPayload(BaseModel):
    rows: list[list[str]]
    shape: list[int]
    text: str


class InsertResponse(BaseModel):
    schema_version: str = SCHEMA
    word: list[int]
    algorithm: str
    insertion: TableauPayload
    recording: TableauPayload
    trace: Optional[list[tuple[TableauPayload, TableauPayload]]] = None


class ClassifyRequest(InvRequest):
    property: Literal["p-vexillary", "q-vexillary", "i-grassmannian", "dominant"]
    method: str = "default"


class ClassifyResponse(BaseModel):
    schema_version: str = SCHEMA
    input: str
    property: str
    value: bool
    witness: Optional[dict] = None


class VerifyRequest(BaseModel):
    check: Literal[
        "pfaffian",
        "schur-p-pfaffian",
        "transition",
        "triangularity",
        "insertion-agreement",
    ]
    max_n: int = Field(default=4, gt=0)
    width: int = Field(default=6, gt=0)
    jobs: int = Field(default=1, gt=0)


class VerifyResponse(BaseModel):
    schema_version: str = SCHEMA
    check: str
    ok: bool
    cases: int
    witness: Optional[str] = None


class CountRequest(BaseModel):
    sequence: Literal["r", "rhat", "g", "v"]
    start: int = Field(default=1, gt=0)
    stop: int = Field(gt=0)
    # words are guarded by length: reduced words at 16, involution words at 12
    guard: Optional[int] = Field(default=None, gt=0)


class CountResponse(BaseModel):
    schema_version: str = SCHEMA
    sequence: str
    start: int
    stop: int
    values: list[int]


class ErrorBody(BaseModel):
    code: Literal["usage", "guard", "falsification", "internal"]
    message: str
