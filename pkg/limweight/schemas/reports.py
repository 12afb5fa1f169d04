from typing import Dict, List, Optional

from pydantic import BaseModel


class FiniteRankReport(BaseModel):
    rank: int
    weight: str
    central_character: str
    finite_dimensional: bool
    cuspidal: bool
    locally_finite_roots: int
    infinite_roots: int
    identification: Optional[str] = None


class ClassifyReport(BaseModel):
    algebra: str
    module: str
    family: str
    integrable: bool
    five_type: Optional[str] = None
    minuscule: bool
    annihilator: str
    finite_rank: Optional[FiniteRankReport] = None


class SupportReport(BaseModel):
    algebra: str
    module: str
    weight: str
    member: bool


class SummandReport(BaseModel):
    k: Optional[int] = None
    representative: str
    charge: str
    support_sample: List[str] = []


class BranchReport(BaseModel):
    family: str
    mu: str
    summands: List[SummandReport]
    checked: int
    discrepancies: List[Dict[str, str]] = []
    ok: bool


class DegreeReport(BaseModel):
    weight: str
    dim: int
    deg: int
    weyl_dim: int
    argmax_weights: List[str] = []
    multiplicity: Optional[int] = None
    nu: Optional[str] = None


class BoundResult(BaseModel):
    lemma: str
    arguments: List[str]
    lhs: Optional[int] = None
    rhs: int
    holds: bool
    witness: Optional[str] = None
    window_size: Optional[int] = None


class HwReport(BaseModel):
    algebra: str
    module: str
    borel: str
    status: str
    weight: Optional[str] = None
    side: Optional[str] = None
    i0: Optional[int] = None
    a: Optional[str] = None
    detail: str = ""


class IsoReport(BaseModel):
    algebra: str
    first: str
    second: str
    isomorphic: bool


class AnnihilatorReport(BaseModel):
    algebra: str
    module: str
    label: str


class ParseReport(BaseModel):
    kind: str
    text: str


class CheckOutcome(BaseModel):
    suite: str
    name: str
    ok: bool
    cases: int = 0
    detail: Optional[str] = None
    counterexample: Optional[Dict[str, str]] = None


class VerifyReport(BaseModel):
    suites: List[str]
    seed: int
    budget: float
    passed: int
    failed: int
    outcomes: List[CheckOutcome]

    @property
    def ok(self) -> bool:
        return self.failed == 0
