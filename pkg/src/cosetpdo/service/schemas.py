"""Pydantic request/response models for the service and the CLI's structured output.

Complex scalars are [re, im] pairs; matrices are nested lists of pairs.
Reports carry no timing fields so that identical requests serialize to
identical bytes.
"""

from typing import List, Optional

from pydantic import BaseModel, Field

ComplexPair = List[float]          # [re, im]
ComplexMatrix = List[List[ComplexPair]]


class IrrepInfo(BaseModel):
    label: str
    dim: int
    character: List[ComplexPair]


class GroupSummary(BaseModel):
    name: str
    order: int
    subgroups: List[str]
    irrep_dims: List[int]


class GroupDetail(BaseModel):
    name: str
    order: int
    subgroups: dict
    irreps: List[IrrepInfo]
    laplacian_generators: List[int]


class GroupListResponse(BaseModel):
    groups: List[GroupSummary]


class GroupDocumentReport(BaseModel):
    name: str
    order: int
    n_subgroups: int
    n_irreps: int
    valid: bool = True


class PairRequest(BaseModel):
    group: str
    subgroup: str


class TransformForwardRequest(PairRequest):
    values: List[ComplexPair]


class CoefficientBlock(BaseModel):
    label: str
    dim: int
    matrix: ComplexMatrix


class TransformForwardResponse(BaseModel):
    classes: List[CoefficientBlock]


class TransformInverseRequest(PairRequest):
    classes: List[CoefficientBlock]


class TransformInverseResponse(BaseModel):
    values: List[ComplexPair]


class OperatorSpec(PairRequest):
    """An operator given by an explicit kernel or by a seeded random draw."""
    kernel: Optional[ComplexMatrix] = None
    seed: Optional[int] = None
    random_kind: str = Field(default="pdo", pattern="^(pdo|convolution|kernel)$")


class SymbolClassBlocks(BaseModel):
    label: str
    dim: int
    projection_rank: int
    blocks: List[ComplexMatrix]


class SymbolDumpResponse(BaseModel):
    group: str
    subgroup: str
    n_cosets: int
    classes: List[SymbolClassBlocks]
    consistency_residual: float


class SchattenRequest(OperatorSpec):
    r: float


class SchattenResponse(BaseModel):
    r: float
    quasi_norm: float
    symbol_side: float
    residual: float


class TraceResponse(BaseModel):
    trace_kernel: ComplexPair
    trace_symbol: ComplexPair
    trace_eigen: ComplexPair
    residual_symbol: float
    residual_eigen: float


class NuclearityRequest(OperatorSpec):
    r: float = 1.0
    p1: float = 2.0
    p2: float = 2.0


class NuclearityResponse(BaseModel):
    r: float
    p1: float
    p2: float
    functional: float
    cost: float
    trace_kernel: ComplexPair
    trace_symbol: ComplexPair
    trace_eigen: ComplexPair
    residual_symbol: float
    residual_eigen: float


class HeatTraceRequest(PairRequest):
    tmin: float = 0.0
    tmax: float = 2.0
    steps: int = 9
    generators: Optional[List[int]] = None


class HeatTraceRow(BaseModel):
    t: float
    trace_formula: float
    trace_oracle: float
    residual: float


class HeatTraceResponse(BaseModel):
    group: str
    subgroup: str
    generators: List[int]
    rows: List[HeatTraceRow]


class VerifyRequest(PairRequest):
    suite: str = "all"
    tol: Optional[float] = None
    seed: int = 0


class CheckRecord(BaseModel):
    check_id: str
    suite: str
    max_residual: float
    tolerance: float
    passed: bool


class VerifyResponse(BaseModel):
    group: str
    subgroup: str
    suite: str
    seed: int
    passed: bool
    n_passed: int
    n_failed: int
    checks: List[CheckRecord]
