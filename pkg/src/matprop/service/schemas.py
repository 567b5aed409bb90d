"""Request and response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class RigInfo(BaseModel):
    name: str
    flags: list[str]


class ServiceInfo(BaseModel):
    name: str
    version: str
    rigs: list[RigInfo]


class TermRequest(BaseModel):
    rig: str = "nat"
    term: str


class CheckResponse(BaseModel):
    dom: int
    cod: int
    term: str


class MatrixResponse(BaseModel):
    rig: str
    dom: int
    cod: int
    rows: list[list[str]]
    text: str


class EqualRequest(BaseModel):
    rig: str = "nat"
    left: str
    right: str


class EqualResponse(BaseModel):
    equal: bool


class DecomposeRequest(BaseModel):
    matrix: str


class TermResponse(BaseModel):
    rig: str
    dom: int
    cod: int
    term: str


class RewriteRequest(BaseModel):
    rig: str = "nat"
    term: str
    bound: int = Field(default=100, ge=0)
    rules: str = "auto"


class RewriteResponse(BaseModel):
    rig: str
    term: str
    steps: int
    trace: list[str]
    bound_reached: bool


class RenderResponse(BaseModel):
    dot: str


class ConvertRequest(BaseModel):
    kind: Literal["rel2mat", "mat2rel", "span2mat", "mat2span"]
    data: str


class ConvertResponse(BaseModel):
    output: str


class AxiomsRequest(BaseModel):
    rig: str = "nat"
    samples: int = Field(default=100, ge=1)


class AxiomResult(BaseModel):
    name: str
    holds: bool


class AxiomsResponse(BaseModel):
    rig: str
    checks: list[AxiomResult]
    all_hold: bool
